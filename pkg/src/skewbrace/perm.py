"""Permutations of ``0..n-1`` and finite permutation groups.

Composition follows function notation: ``(p * q)(x) == p(q(x))``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import DegreeMismatch, NotAGroup, NotAPermutation


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise NotAPermutation(f"not a bijection of 0..{len(self.images) - 1}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def conjugate(self, by: Permutation) -> Permutation:
        """``by * self * by^-1``."""
        return by * self * by.inverse()

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i == x]

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def _as_perm(p: Permutation | Sequence[int]) -> Permutation:
    return p if isinstance(p, Permutation) else Permutation(tuple(int(x) for x in p))


class PermGroup:
    """A finite group of permutations, stored as a canonically sorted element list.

    The constructor checks closure; use :func:`generate` to build the group
    spanned by a few generators.
    """

    __slots__ = ("_degree", "_elements", "_set")

    def __init__(self, degree: int, elements: Iterable[Permutation | Sequence[int]], *, check: bool = True):
        perms = sorted({_as_perm(p) for p in elements})
        for p in perms:
            if p.degree != degree:
                raise DegreeMismatch(f"element of degree {p.degree} in group of degree {degree}")
        self._degree = degree
        self._elements = tuple(perms)
        self._set = frozenset(perms)
        if check:
            self._check_closed()

    def _check_closed(self) -> None:
        if Permutation.identity(self._degree) not in self._set:
            raise NotAGroup("identity permutation missing")
        arr = self.as_array()
        rows = {row.tobytes() for row in arr}
        for p in arr:
            # p[arr] is the stack of p * q over all q
            for row in p[arr]:
                if row.tobytes() not in rows:
                    raise NotAGroup("not closed under composition")

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def elements(self) -> tuple[Permutation, ...]:
        return self._elements

    @property
    def order(self) -> int:
        return len(self._elements)

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self._elements)

    def __contains__(self, p: object) -> bool:
        return p in self._set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self._degree == other._degree and self._set == other._set

    def __hash__(self) -> int:
        return hash((self._degree, self._set))

    def __repr__(self) -> str:
        return f"PermGroup(degree={self._degree}, order={self.order})"

    def as_array(self) -> np.ndarray:
        return np.array([p.images for p in self._elements], dtype=np.int64).reshape(-1, self._degree)

    def issubset(self, other: PermGroup) -> bool:
        return self._set <= other._set

    def to_json(self) -> dict:
        return {"degree": self._degree, "elements": [list(p.images) for p in self._elements]}

    @classmethod
    def from_json(cls, data: dict) -> PermGroup:
        return cls(int(data["degree"]), data["elements"])


def generate(degree: int, gens: Iterable[Permutation | Sequence[int]]) -> PermGroup:
    """The permutation group generated by ``gens``."""
    gens = [_as_perm(g) for g in gens]
    identity = Permutation.identity(degree)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return PermGroup(degree, seen, check=False)


def symmetric_group(degree: int) -> PermGroup:
    if degree == 1:
        return PermGroup(1, [(0,)])
    gens = [tuple([1, 0] + list(range(2, degree))), tuple(list(range(1, degree)) + [0])]
    return generate(degree, gens)


def is_regular(pg: PermGroup) -> bool:
    """True iff ``pg`` acts simply transitively on its points."""
    if pg.order != pg.degree:
        return False
    return all(p.is_identity() or not p.fixed_points() for p in pg)


def normalized_by(target: PermGroup, actor: PermGroup) -> bool:
    """True iff ``a t a^-1`` lies in ``target`` for every ``a`` in actor, ``t`` in target."""
    if target.degree != actor.degree:
        raise DegreeMismatch(f"degrees {target.degree} and {actor.degree}")
    t_arr = target.as_array()
    rows = {row.tobytes() for row in t_arr}
    for a in actor:
        a_img = np.array(a.images, dtype=np.int64)
        a_inv = np.array(a.inverse().images, dtype=np.int64)
        # row i of a_img[t_arr[:, a_inv]] is a * t_i * a^-1
        for row in a_img[t_arr[:, a_inv]]:
            if row.tobytes() not in rows:
                return False
    return True


def perm_subgroups(pg: PermGroup) -> list[PermGroup]:
    """All subgroups of a (small) permutation group, by joining cyclic subgroups.

    Works on permutation objects directly, independently of the Cayley-table
    machinery in :mod:`skewbrace.groups`.
    """
    def cyclic(p: Permutation) -> frozenset[Permutation]:
        out = {Permutation.identity(pg.degree)}
        q = p
        while q not in out:
            out.add(q)
            q = q * p
        return frozenset(out)

    def join(a: frozenset[Permutation], b: frozenset[Permutation]) -> frozenset[Permutation]:
        return frozenset(generate(pg.degree, a | b).elements)

    cyclics = {cyclic(p) for p in pg}
    found = set(cyclics)
    frontier = set(cyclics)
    while frontier:
        new = set()
        for s in frontier:
            for c in cyclics:
                if c <= s:
                    continue
                j = join(s, c)
                if j not in found:
                    new.add(j)
        found |= new
        frontier = new
    groups = [PermGroup(pg.degree, s, check=False) for s in found]
    groups.sort(key=lambda h: (h.order, [p.images for p in h.elements]))
    return groups


def invariant_subgroups(target: PermGroup, actor: PermGroup) -> list[PermGroup]:
    """Subgroups of ``target`` normalized by every element of ``actor``."""
    return [s for s in perm_subgroups(target) if normalized_by(s, actor)]
