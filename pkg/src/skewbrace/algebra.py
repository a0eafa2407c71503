"""Nilpotent associative F_p-algebras given by structure constants.

Vectors of F_p^d are indexed base-p little-endian: ``(v_0, ..., v_{d-1})``
sits at ``v_0 + v_1 p + ... + v_{d-1} p^{d-1}``, so the zero vector is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .brace import SkewBrace, make_brace
from .errors import BadParams, NotAssociative, NotNilpotent, NotPrime
from .groups import GroupTable, Subgroup, check_cap, subgroups, validate_group_table

MAX_P = 13
MAX_DIM = 4


@dataclass(frozen=True, eq=False)
class NilpotentAlgebra:
    p: int
    dim: int
    constants: np.ndarray  # [i, j, k]: coefficient of e_k in e_i e_j

    @property
    def size(self) -> int:
        return self.p ** self.dim

    @cached_property
    def vectors(self) -> np.ndarray:
        """All vectors, row ``i`` being the vector with index ``i``."""
        idx = np.arange(self.size)
        return np.stack([(idx // self.p ** k) % self.p for k in range(self.dim)], axis=1)

    def index(self, v) -> int:
        return int(sum((int(c) % self.p) * self.p ** k for k, c in enumerate(v)))

    def vector(self, i: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.vectors[i])

    def _encode(self, arr: np.ndarray) -> np.ndarray:
        weights = self.p ** np.arange(self.dim)
        return (arr % self.p) @ weights

    def mul(self, u, v) -> tuple[int, ...]:
        w = np.einsum("i,j,ijk->k", np.asarray(u), np.asarray(v), self.constants) % self.p
        return tuple(int(c) for c in w)

    def circle(self, u, v) -> tuple[int, ...]:
        w = (np.asarray(u) + np.asarray(v) + np.asarray(self.mul(u, v))) % self.p
        return tuple(int(c) for c in w)

    @cached_property
    def product_table(self) -> np.ndarray:
        """``[x, y] -> index of x y``."""
        V = self.vectors
        prod = np.einsum("xi,yj,ijk->xyk", V, V, self.constants)
        return self._encode(prod)

    def to_json(self) -> dict:
        return {"p": self.p, "dim": self.dim, "mul": self.constants.tolist()}

    @classmethod
    def from_json(cls, data: dict) -> NilpotentAlgebra:
        return make_algebra(int(data["p"]), int(data["dim"]), data["mul"])


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % q for q in range(2, int(n ** 0.5) + 1))


def _rank_gf(rows: np.ndarray, p: int) -> int:
    m = [list(map(int, r)) for r in rows % p]
    rank, col, ncols = 0, 0, len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        pivot = next((r for r in range(rank, len(m)) if m[r][col] % p), None)
        if pivot is None:
            col += 1
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def _power_chain_dims(c: np.ndarray, p: int) -> list[int]:
    """Dimensions of A, A^2, A^3, ... until the chain stabilizes."""
    d = c.shape[0]
    basis = np.eye(d, dtype=np.int64)
    dims = [d]
    for _ in range(d + 1):
        # spans of (A^k) A: products of the current basis with every e_j
        prods = np.einsum("ri,ijk->rjk", basis, c).reshape(-1, d) % p
        prods = prods[prods.any(axis=1)]
        r = _rank_gf(prods, p) if len(prods) else 0
        dims.append(r)
        if r == 0 or r == dims[-2]:
            break
        basis = _row_basis(prods, p)
    return dims


def _row_basis(rows: np.ndarray, p: int) -> np.ndarray:
    out: list[np.ndarray] = []
    for r in rows:
        cand = np.array(out + [r])
        if _rank_gf(cand, p) > len(out):
            out.append(r)
    return np.array(out, dtype=np.int64)


def make_algebra(p: int, dim: int, constants) -> NilpotentAlgebra:
    """Validate structure constants: p prime, associativity, nilpotency."""
    p, dim = int(p), int(dim)
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p > MAX_P or not 1 <= dim <= MAX_DIM:
        raise BadParams(f"need p <= {MAX_P} and 1 <= dim <= {MAX_DIM}, got p={p}, dim={dim}")
    c = np.array(constants, dtype=np.int64)
    if c.shape != (dim, dim, dim):
        raise BadParams(f"structure constants must have shape {(dim, dim, dim)}, got {c.shape}")
    c %= p
    # (e_i e_j) e_k vs e_i (e_j e_k)
    lhs = np.einsum("ijm,mkl->ijkl", c, c) % p
    rhs = np.einsum("jkm,iml->ijkl", c, c) % p
    if not np.array_equal(lhs, rhs):
        i, j, k, _ = np.argwhere(lhs != rhs)[0]
        raise NotAssociative(f"(e_{i} e_{j}) e_{k} != e_{i} (e_{j} e_{k})")
    dims = _power_chain_dims(c, p)
    if dims[-1] != 0:
        raise NotNilpotent(f"powers of the algebra stall at dimension {dims[-1]}")
    c.setflags(write=False)
    return NilpotentAlgebra(p, dim, c)


def additive_group(a: NilpotentAlgebra) -> GroupTable:
    V = a.vectors
    return validate_group_table(a._encode(V[:, None, :] + V[None, :, :]))


def circle_group(a: NilpotentAlgebra, max_order: int | None = None) -> GroupTable:
    """``u o v = u + v + u v`` on all of F_p^d."""
    check_cap(a.size, max_order)
    V = a.vectors
    prod = np.einsum("xi,yj,ijk->xyk", V, V, a.constants)
    return validate_group_table(a._encode(V[:, None, :] + V[None, :, :] + prod))


def circle_power(a: NilpotentAlgebra, v, r: int) -> tuple[int, ...]:
    out = tuple([0] * a.dim)
    for _ in range(r):
        out = a.circle(out, v)
    return out


def left_ideals(a: NilpotentAlgebra, max_order: int | None = None) -> list[Subgroup]:
    """Additive subgroups closed under left multiplication by each basis vector."""
    check_cap(a.size, max_order)
    prod = a.product_table
    basis = [a.index(row) for row in np.eye(a.dim, dtype=np.int64)]
    out = []
    for s in subgroups(additive_group(a), max_order):
        inside = np.zeros(a.size, dtype=bool)
        inside[list(s.members)] = True
        if all(inside[prod[e, list(s.members)]].all() for e in basis):
            out.append(s)
    return out


def brace_from_algebra(a: NilpotentAlgebra, max_order: int | None = None) -> SkewBrace:
    return make_brace(additive_group(a), circle_group(a, max_order))
