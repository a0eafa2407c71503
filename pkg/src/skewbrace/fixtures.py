"""Named groups, algebras and braces used throughout the tests and the CLI."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .algebra import NilpotentAlgebra, brace_from_algebra, make_algebra
from .brace import SkewBrace, make_brace, trivial_brace
from .constructors import (
    ExactFactorization,
    FpfPair,
    brace_from_exact_factorization,
    brace_from_fpf_pair,
    make_exact_factorization,
    make_fpf_pair,
)
from .errors import BadParams, UnknownFixture
from .groups import GroupTable, table_from_op, validate_group_table

# groups

@lru_cache(maxsize=None)
def cyclic_group(n: int) -> GroupTable:
    return validate_group_table([[(i + j) % n for j in range(n)] for i in range(n)])


@lru_cache(maxsize=None)
def elementary_abelian(p: int, d: int) -> GroupTable:
    """(F_p^d, +) with base-p little-endian indices."""
    vecs = [tuple((i // p ** k) % p for k in range(d)) for i in range(p ** d)]
    return table_from_op(vecs, lambda u, v: tuple((x + y) % p for x, y in zip(u, v)))


D4_LABELS = ("e", "c", "c2", "c3", "s", "sc", "sc2", "sc3")


@lru_cache(maxsize=None)
def dihedral_d4() -> GroupTable:
    """``<c, s | c^4 = s^2 = e, cs = sc^3>`` with ``s^i c^j`` at index ``4i + j``."""
    def op(x, y):
        (i, j), (k, l) = x, y
        return ((i + k) % 2, ((-j if k else j) + l) % 4)

    return table_from_op([(i, j) for i in range(2) for j in range(4)], op)


@lru_cache(maxsize=None)
def symmetric_group_table(n: int) -> tuple[GroupTable, tuple[tuple[int, ...], ...]]:
    """S_n on lexicographically sorted permutations; ``(p q)(x) = p(q(x))``."""
    perms = list(itertools.permutations(range(n)))
    return table_from_op(perms, lambda p, q: tuple(p[i] for i in q)), tuple(perms)


def _is_even(perm: tuple[int, ...]) -> bool:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return inversions % 2 == 0


@lru_cache(maxsize=None)
def heisenberg(p: int) -> GroupTable:
    """Unitriangular 3x3 matrices over F_p, ``[[1, a, c], [0, 1, b], [0, 0, 1]]`` stored as ``(a, b, c)``."""
    _check_prime(p)
    vecs = [(i % p, (i // p) % p, i // p ** 2) for i in range(p ** 3)]

    def op(u, v):
        a, b, c = u
        a2, b2, c2 = v
        return ((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)

    return table_from_op(vecs, op)


def heis_index(p: int, a: int, b: int, c: int) -> int:
    return a % p + p * (b % p) + p * p * (c % p)


def _primitive_root(p: int) -> int:
    for g in range(2, p):
        if len({pow(g, k, p) for k in range(1, p)}) == p - 1:
            return g
    return 1


def _mult_order(b: int, p: int) -> int:
    k, x = 1, b % p
    while x != 1:
        x = x * b % p
        k += 1
    return k


@lru_cache(maxsize=None)
def zp_semidirect(p: int, b: int | None = None) -> GroupTable:
    """``Z_p x| Delta`` with ``Delta = <b>`` in Z_p^x; ``a^r delta^s`` at index ``r + p s``."""
    _check_prime(p)
    b = _primitive_root(p) if b is None else b % p
    if b in (0, 1):
        raise BadParams(f"b must generate a nontrivial subgroup of Z_{p}^x, got {b}")
    k = _mult_order(b, p)
    elems = [(r, s) for s in range(k) for r in range(p)]
    return table_from_op(elems, lambda x, y: ((x[0] + pow(b, x[1], p) * y[0]) % p, (x[1] + y[1]) % k))


# algebras

def _check_prime(p: int, odd: bool = False) -> None:
    if not isinstance(p, int) or p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise BadParams(f"p must be prime, got {p}")
    if odd and p == 2:
        raise BadParams("p must be an odd prime")


@lru_cache(maxsize=None)
def a35(p: int) -> NilpotentAlgebra:
    """Basis x, y, z with ``xy = z``, ``yx = -z``, all other products zero."""
    _check_prime(p, odd=True)
    c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    c[0][1][2] = 1
    c[1][0][2] = p - 1
    return make_algebra(p, 3, c)


@lru_cache(maxsize=None)
def a34(p: int, delta: int = 0) -> NilpotentAlgebra:
    """Basis x, y, z with ``x^2 = z``, ``y^2 = delta z``, ``xy = z``, ``yx = 0``."""
    _check_prime(p, odd=True)
    if not 0 <= delta < p:
        raise BadParams(f"delta must lie in 0..{p - 1}, got {delta}")
    c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    c[0][0][2] = 1
    c[1][1][2] = delta
    c[0][1][2] = 1
    return make_algebra(p, 3, c)


# braces

RUMP_ADDITION = (
    "e   c   c2  c3  s   sc  sc2 sc3",
    "c   e   sc2 sc  sc3 c3  c2  s",
    "c2  sc2 e   s   c3  sc3 c   sc",
    "c3  sc  s   e   c2  c   sc3 sc2",
    "s   sc3 c3  c2  e   sc2 sc  c",
    "sc  c3  sc3 c   sc2 e   s   c2",
    "sc2 c2  c   sc3 sc  s   e   c3",
    "sc3 s   sc  sc2 c   c2  c3  e",
)

RUMP_BINARY = {
    "e": "000", "c": "011", "c2": "001", "c3": "101",
    "s": "100", "sc": "110", "sc2": "010", "sc3": "111",
}


def rump8_addition() -> GroupTable:
    pos = {name: i for i, name in enumerate(D4_LABELS)}
    return validate_group_table([[pos[name] for name in row.split()] for row in RUMP_ADDITION])


@lru_cache(maxsize=None)
def rump8() -> SkewBrace:
    """The order-8 left brace on the labels e, c, ..., sc3 with the addition table above.

    The circle group is D4 with ``x o y = y x`` in :func:`dihedral_d4`, i.e.
    the label ``sc^j`` names ``c^j o s``. With ``x o y = x y`` the addition
    table fails the brace axiom at ``(c, c, c2)``.
    """
    return make_brace(rump8_addition(), validate_group_table(dihedral_d4().table.T))


@lru_cache(maxsize=None)
def heis_fpf_pair(p: int) -> FpfPair:
    """``f_l(a, b, c) = (0, b, c)`` and ``f_r(a, b, c) = (-a, 0, 0)`` from (F_p^3, +) to Heis_3(F_p)."""
    _check_prime(p)
    gamma = elementary_abelian(p, 3)
    n = p ** 3
    coords = [(i % p, (i // p) % p, i // p ** 2) for i in range(n)]
    f_l = [heis_index(p, 0, b, c) for a, b, c in coords]
    f_r = [heis_index(p, -a, 0, 0) for a, b, c in coords]
    return make_fpf_pair(gamma, heisenberg(p), f_l, f_r)


@lru_cache(maxsize=None)
def heis_fpf(p: int) -> SkewBrace:
    return brace_from_fpf_pair(heis_fpf_pair(p))


@lru_cache(maxsize=None)
def sn_exact_factorization(n: int) -> ExactFactorization:
    """``S_n = A_n <(0 1)>``."""
    if not isinstance(n, int) or n < 2:
        raise BadParams(f"n must be an integer >= 2, got {n}")
    g, perms = symmetric_group_table(n)
    h = [i for i, q in enumerate(perms) if _is_even(q)]
    swap = tuple([1, 0] + list(range(2, n)))
    j = [0, perms.index(swap)]
    return make_exact_factorization(g, h, j)


@lru_cache(maxsize=None)
def zp_exact_factorization(p: int, b: int | None = None) -> ExactFactorization:
    """``Z_p x| Delta = Z_p Delta``."""
    g = zp_semidirect(p, b)
    return make_exact_factorization(g, range(p), range(0, g.order, p))


@lru_cache(maxsize=None)
def sn_factorization(n: int) -> SkewBrace:
    return brace_from_exact_factorization(sn_exact_factorization(n))[0]


@lru_cache(maxsize=None)
def zp_hol(p: int, b: int | None = None) -> SkewBrace:
    return brace_from_exact_factorization(zp_exact_factorization(p, b))[0]


FIXTURES = ("a35", "a34", "heisenberg", "rump8", "heis_fpf", "sn_factorization", "zp_hol")


def builtin_fixture(name: str, p: int | None = None, delta: int | None = None,
                    n: int | None = None, b: int | None = None):
    """Look up a fixture by name; missing parameters fall back to the defaults
    ``p = 3``, ``delta = 0``, ``n = 5``."""
    name = name.replace("-", "_")
    p = 3 if p is None else p
    if name == "a35":
        return a35(p)
    if name == "a34":
        return a34(p, 0 if delta is None else delta)
    if name == "heisenberg":
        return heisenberg(p)
    if name == "rump8":
        return rump8()
    if name == "heis_fpf":
        return heis_fpf(p)
    if name == "sn_factorization":
        return sn_factorization(5 if n is None else n)
    if name == "zp_hol":
        return zp_hol(p, b)
    raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")


def fixture_brace(name: str, **params) -> SkewBrace:
    """Like :func:`builtin_fixture`, coercing algebras to their braces and
    groups to the trivial brace."""
    obj = builtin_fixture(name, **params)
    if isinstance(obj, NilpotentAlgebra):
        return brace_from_algebra(obj)
    if isinstance(obj, GroupTable):
        return trivial_brace(obj)
    return obj
