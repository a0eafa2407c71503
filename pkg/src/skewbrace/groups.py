"""Finite groups given by Cayley tables on ``0..n-1``.

Element 0 is always the identity. Tables are stored as read-only numpy arrays;
row ``x`` of the table is the left translation by ``x``.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import (
    MissingInverse,
    NoIdentity,
    NotASubgroup,
    NotAssociative,
    NotLatinSquare,
    OrderCapExceeded,
)
from .perm import Permutation, PermGroup

DEFAULT_MAX_ORDER = 512


def resolve_max_order(max_order: int | None = None) -> int:
    """Explicit cap, else ``BRACE_MAX_ORDER`` from the environment, else 512."""
    if max_order is not None:
        return int(max_order)
    env = os.environ.get("BRACE_MAX_ORDER")
    if env:
        return int(env)
    return DEFAULT_MAX_ORDER


def check_cap(n: int, max_order: int | None = None) -> None:
    cap = resolve_max_order(max_order)
    if n > cap:
        raise OrderCapExceeded(f"order {n} exceeds cap {cap}")


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A validated Cayley table. Build through :func:`validate_group_table`."""

    table: np.ndarray

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupTable):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"GroupTable(order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @cached_property
    def rows(self) -> list[list[int]]:
        """The table as nested Python lists, for tight scalar loops."""
        return self.table.tolist()

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.argmin(self.table, axis=1)  # position of the 0 in each row
        inv.setflags(write=False)
        return inv

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        rows = self.rows
        out = 0
        for _ in range(k):
            out = rows[out][a]
        return out

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        rows = self.rows
        orders = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = rows[x][a]
                k += 1
            orders.append(k)
        return tuple(orders)

    def element_order(self, a: int) -> int:
        return self.element_orders[a]

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def center(self) -> tuple[int, ...]:
        t = self.table
        return tuple(int(z) for z in range(self.order) if np.array_equal(t[z, :], t[:, z]))

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.element_orders)

    def left_translation(self, g: int) -> Permutation:
        return Permutation(tuple(self.rows[g]))

    def right_translation(self, g: int) -> Permutation:
        """``x -> x * g^-1``; with this convention ``g -> rho(g)`` is a homomorphism."""
        return Permutation(tuple(int(x) for x in self.table[:, self.inv(g)]))

    def to_json(self) -> dict:
        return {"order": self.order, "table": self.table.tolist()}

    @classmethod
    def from_json(cls, data: dict) -> GroupTable:
        table = data["table"]
        if "order" in data and int(data["order"]) != len(table):
            raise NotLatinSquare(f"declared order {data['order']} but table has {len(table)} rows")
        return validate_group_table(table)


def validate_group_table(raw: Sequence[Sequence[int]] | np.ndarray) -> GroupTable:
    """Check the group axioms on a square table and wrap it.

    Raises the error for the first failed axiom, in the order: Latin square,
    identity at 0, associativity, inverses.
    """
    try:
        t = np.array(raw, dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise NotLatinSquare(f"table is not a rectangular integer array: {exc}") from None
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotLatinSquare(f"table must be a non-empty square array, got shape {t.shape}")
    n = t.shape[0]
    full = np.arange(n)
    if t.min() < 0 or t.max() >= n:
        raise NotLatinSquare(f"entries must lie in 0..{n - 1}")
    for i in range(n):
        if not np.array_equal(np.sort(t[i]), full):
            raise NotLatinSquare(f"row {i} is not a permutation")
        if not np.array_equal(np.sort(t[:, i]), full):
            raise NotLatinSquare(f"column {i} is not a permutation")
    if not (np.array_equal(t[0], full) and np.array_equal(t[:, 0], full)):
        raise NoIdentity("element 0 is not a two-sided identity")
    for a in range(n):
        # (a b) c  vs  a (b c), over all b, c at once
        lhs = t[t[a]]
        rhs = t[a][t]
        if not np.array_equal(lhs, rhs):
            b, c = np.argwhere(lhs != rhs)[0]
            raise NotAssociative(f"(x*y)*z != x*(y*z) at {(a, int(b), int(c))}")
    for x in range(n):
        if not (t[x] == 0).any():
            raise MissingInverse(f"element {x} has no inverse")
    t.setflags(write=False)
    return GroupTable(t)


def table_from_op(elements: Sequence, op) -> GroupTable:
    """Tabulate ``op`` on a list of hashable elements whose first entry is the identity."""
    index = {e: i for i, e in enumerate(elements)}
    return validate_group_table([[index[op(a, b)] for b in elements] for a in elements])


# subgroups

@dataclass(frozen=True, order=False)
class Subgroup:
    """A subgroup as a strictly increasing tuple of element indices."""

    parent_order: int
    members: tuple[int, ...]
    _set: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_set", frozenset(self.members))

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self._set

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.members), self.members)

    def __lt__(self, other: Subgroup) -> bool:
        return self.sort_key() < other.sort_key()

    def as_set(self) -> frozenset[int]:
        return self._set

    @property
    def mask(self) -> int:
        return _mask(self.members)


def _mask(members: Iterable[int]) -> int:
    m = 0
    for x in members:
        m |= 1 << x
    return m


def _members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def is_subgroup(g: GroupTable, members: Iterable[int]) -> bool:
    s = set(members)
    if 0 not in s or any(not 0 <= x < g.order for x in s):
        return False
    rows = g.rows
    inv = g.inverse
    return all(rows[a][b] in s for a in s for b in s) and all(int(inv[a]) in s for a in s)


def make_subgroup(g: GroupTable, members: Iterable[int]) -> Subgroup:
    s = sorted(set(int(x) for x in members))
    if not is_subgroup(g, s):
        raise NotASubgroup(f"{s} is not a subgroup")
    return Subgroup(g.order, tuple(s))


def whole_group(g: GroupTable) -> Subgroup:
    return Subgroup(g.order, tuple(range(g.order)))


def trivial_subgroup(g: GroupTable) -> Subgroup:
    return Subgroup(g.order, (0,))


def _closure(rows: list[list[int]], gens: Sequence[int], start: Sequence[int] = (0,)) -> tuple[list[int], int]:
    """Elements (and bitmask) of the subgroup generated by ``start`` and ``gens``.

    ``start`` must already be closed under ``gens``-free products, e.g. a
    subgroup; the walk multiplies on the right by the generators only.
    """
    elems = list(start)
    mask = _mask(elems)
    i = 0
    while i < len(elems):
        row = rows[elems[i]]
        for s in gens:
            y = row[s]
            if not mask >> y & 1:
                mask |= 1 << y
                elems.append(y)
        i += 1
    return elems, mask


def generated_subgroup(g: GroupTable, gens: Iterable[int]) -> Subgroup:
    elems, _ = _closure(g.rows, list(gens))
    return Subgroup(g.order, tuple(sorted(elems)))


def cyclic_subgroups(g: GroupTable) -> list[Subgroup]:
    seen: dict[int, int] = {}
    rows = g.rows
    for x in range(g.order):
        _, mask = _closure(rows, [x])
        seen.setdefault(mask, x)
    return sorted(Subgroup(g.order, _members(m)) for m in seen)


def subgroups(g: GroupTable, max_order: int | None = None) -> list[Subgroup]:
    """Every subgroup of ``g``, sorted by (size, members).

    Starts from the cyclic subgroups and keeps joining newly found subgroups
    with cyclic ones until nothing new appears. Since every subgroup is a
    join of cyclic subgroups, the fixed point is the full lattice.
    """
    check_cap(g.order, max_order)
    rows = g.rows
    cyclic_gen: dict[int, int] = {}
    for x in range(g.order):
        _, mask = _closure(rows, [x])
        cyclic_gen.setdefault(mask, x)
    cyclics = list(cyclic_gen.items())

    # mask -> (elements, generators)
    found: dict[int, tuple[list[int], list[int]]] = {}
    for mask, x in cyclics:
        elems, _ = _closure(rows, [x])
        found[mask] = (elems, [x] if x else [])
    frontier = list(found)
    while frontier:
        new = []
        for smask in frontier:
            selems, sgens = found[smask]
            for cmask, x in cyclics:
                if cmask & ~smask == 0:
                    continue
                gens = sgens + [x]
                elems, jmask = _closure(rows, gens, selems)
                if jmask not in found:
                    found[jmask] = (elems, gens)
                    new.append(jmask)
        frontier = new
    return sorted(Subgroup(g.order, _members(m)) for m in found)


# automorphisms and isomorphisms

def generating_set(g: GroupTable) -> list[int]:
    """A small generating set, chosen greedily from elements of largest order."""
    rows = g.rows
    candidates = sorted(range(1, g.order), key=lambda x: (-g.element_orders[x], x))
    gens: list[int] = []
    elems, mask = [0], 1
    for x in candidates:
        if len(elems) == g.order:
            break
        if not mask >> x & 1:
            gens.append(x)
            elems, mask = _closure(rows, gens)
    return gens


def _extend(src: GroupTable, dst: GroupTable, gens: Sequence[int], images: Sequence[int]) -> dict[int, int] | None:
    """Extend ``gens[i] -> images[i]`` to an injective homomorphism on the
    subgroup generated by ``gens``, or return None if that is impossible."""
    srows, drows = src.rows, dst.rows
    phi = {0: 0}
    used = {0}
    queue = [0]
    i = 0
    while i < len(queue):
        x = queue[i]
        fx = phi[x]
        for s, t in zip(gens, images):
            y = srows[x][s]
            fy = drows[fx][t]
            if y in phi:
                if phi[y] != fy:
                    return None
            else:
                if fy in used:
                    return None
                phi[y] = fy
                used.add(fy)
                queue.append(y)
        i += 1
    return phi


def isomorphisms(src: GroupTable, dst: GroupTable) -> Iterator[tuple[int, ...]]:
    """Yield every isomorphism ``src -> dst`` as an image array.

    Backtracks over the images of a greedy generating set of ``src``,
    pruning as soon as the partial map fails to extend.
    """
    if src.order != dst.order:
        return
    gens = generating_set(src)
    by_order: dict[int, list[int]] = {}
    for y, k in enumerate(dst.element_orders):
        by_order.setdefault(k, []).append(y)
    candidates = [by_order.get(src.element_orders[s], []) for s in gens]

    def search(level: int, images: list[int]) -> Iterator[tuple[int, ...]]:
        if level == len(gens):
            phi = _extend(src, dst, gens, images)
            if phi is not None and len(phi) == src.order:
                yield tuple(phi[x] for x in range(src.order))
            return
        for y in candidates[level]:
            images.append(y)
            if _extend(src, dst, gens[: level + 1], images) is not None:
                yield from search(level + 1, images)
            images.pop()

    if not gens:
        yield (0,)
        return
    yield from search(0, [])


def automorphism_group(g: GroupTable, max_order: int | None = None) -> PermGroup:
    check_cap(g.order, max_order)
    return PermGroup(g.order, isomorphisms(g, g), check=False)


def is_automorphism(g: GroupTable, images: Sequence[int]) -> bool:
    """True iff ``images`` is a bijection preserving the table."""
    phi = np.asarray(images, dtype=np.int64)
    if phi.shape != (g.order,) or sorted(phi.tolist()) != list(range(g.order)):
        return False
    t = g.table
    return bool(np.array_equal(phi[t], t[np.ix_(phi, phi)]))


def is_homomorphism(src: GroupTable, dst: GroupTable, images: Sequence[int]) -> bool:
    f = np.asarray(images, dtype=np.int64)
    if f.shape != (src.order,) or f.min() < 0 or f.max() >= dst.order:
        return False
    return bool(np.array_equal(f[src.table], dst.table[np.ix_(f, f)]))


def holomorph(g: GroupTable, max_order: int | None = None) -> PermGroup:
    """``{h -> x * theta(h)}`` over all x in g and automorphisms theta."""
    aut = automorphism_group(g, max_order)
    t = g.table
    perms = []
    for theta in aut:
        th = np.array(theta.images, dtype=np.int64)
        for row in t[:, th]:  # row x is h -> x * theta(h)
            perms.append(tuple(row.tolist()))
    return PermGroup(g.order, perms, check=False)


def in_holomorph(g: GroupTable, p: Permutation) -> bool:
    """Membership in Hol(g) without building it: ``lambda(p(0))^-1 p`` must be an automorphism."""
    if p.degree != g.order:
        return False
    x = p(0)
    theta = g.table[g.inv(x)][np.array(p.images, dtype=np.int64)]
    return is_automorphism(g, theta)


def left_regular(g: GroupTable) -> PermGroup:
    return PermGroup(g.order, [tuple(r) for r in g.rows], check=False)


def right_regular(g: GroupTable) -> PermGroup:
    return PermGroup(g.order, [g.right_translation(x) for x in range(g.order)], check=False)


# fingerprints

def fingerprint(g: GroupTable) -> dict:
    """Cheap isomorphism invariants."""
    return {
        "order": g.order,
        "abelian": g.is_abelian,
        "exponent": g.exponent,
        "center": len(g.center),
        "element_orders": dict(sorted(Counter(g.element_orders).items())),
    }


def are_isomorphic(a: GroupTable, b: GroupTable, brute_force_below: int = 64) -> bool | None:
    """Isomorphism test: fingerprints, then an explicit search when small.

    Returns None when fingerprints agree but the order is too large to search.
    """
    if fingerprint(a) != fingerprint(b):
        return False
    if a.order >= brute_force_below:
        return None
    return next(isomorphisms(a, b), None) is not None


def direct_product(a: GroupTable, b: GroupTable) -> GroupTable:
    """``a x b`` with ``(i, j)`` stored at index ``i * |b| + j``."""
    m = b.order
    ta, tb = a.table, b.table
    big = ta[:, None, :, None] * m + tb[None, :, None, :]
    return validate_group_table(big.reshape(a.order * m, a.order * m))
