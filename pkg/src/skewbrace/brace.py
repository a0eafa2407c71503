"""Skew left braces on a shared index carrier.

A brace holds two Cayley tables: ``star`` (the additive group, written
``g * h`` below) and ``circ`` (the circle group, ``g o h``). Inverses
``g^-1`` always refer to ``star`` unless stated otherwise.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import (
    BraceAxiomFailure,
    EmptySubset,
    IdentityMismatch,
    IndexOutOfRange,
    NotAStarSubgroup,
    OrderMismatch,
)
from .groups import (
    GroupTable,
    Subgroup,
    check_cap,
    is_subgroup,
    subgroups,
    validate_group_table,
)
from .perm import Permutation


@dataclass(frozen=True, eq=False)
class SkewBrace:
    star: GroupTable
    circ: GroupTable

    @property
    def order(self) -> int:
        return self.star.order

    @cached_property
    def star_inv(self) -> np.ndarray:
        return self.star.inverse

    @cached_property
    def circ_inv(self) -> np.ndarray:
        return self.circ.inverse

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewBrace):
            return NotImplemented
        return self.star == other.star and self.circ == other.circ

    def __hash__(self) -> int:
        return hash((self.star, self.circ))

    def __repr__(self) -> str:
        return f"SkewBrace(order={self.order}, star_abelian={self.star.is_abelian}, circ_abelian={self.circ.is_abelian})"

    @property
    def is_left_brace(self) -> bool:
        return self.star.is_abelian

    def to_json(self) -> dict:
        return {"order": self.order, "star": self.star.table.tolist(), "circ": self.circ.table.tolist()}

    @classmethod
    def from_json(cls, data: dict) -> SkewBrace:
        b = make_brace(data["star"], data["circ"])
        if "order" in data and int(data["order"]) != b.order:
            raise OrderMismatch(f"declared order {data['order']} but tables have order {b.order}")
        return b


def _identity_of(raw) -> int | None:
    t = np.asarray(raw)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        return None
    full = np.arange(t.shape[0])
    for e in range(t.shape[0]):
        if np.array_equal(t[e], full) and np.array_equal(t[:, e], full):
            return e
    return None


def check_brace_axiom(star: GroupTable, circ: GroupTable) -> tuple[int, int, int] | None:
    """First triple violating ``g o (h * k) == (g o h) * g^-1 * (g o k)``, or None."""
    s, c, inv = star.table, circ.table, star.inverse
    for g in range(star.order):
        cg = c[g]
        lhs = cg[s]  # [h, k] -> g o (h * k)
        left = s[cg, inv[g]]  # [h] -> (g o h) * g^-1
        rhs = s[left[:, None], cg[None, :]]
        if not np.array_equal(lhs, rhs):
            h, k = np.argwhere(lhs != rhs)[0]
            return (g, int(h), int(k))
    return None


def make_brace(star: GroupTable | Sequence[Sequence[int]], circ: GroupTable | Sequence[Sequence[int]]) -> SkewBrace:
    """Validate the brace axiom over every triple and build the brace.

    Raw tables are accepted as well; if both have an identity but at
    different positions, that is reported as :class:`IdentityMismatch`.
    """
    if not isinstance(star, GroupTable) or not isinstance(circ, GroupTable):
        raw_s = star.table if isinstance(star, GroupTable) else star
        raw_c = circ.table if isinstance(circ, GroupTable) else circ
        if len(raw_s) != len(raw_c):
            raise OrderMismatch(f"orders {len(raw_s)} and {len(raw_c)}")
        es, ec = _identity_of(raw_s), _identity_of(raw_c)
        if es is not None and ec is not None and es != ec:
            raise IdentityMismatch(f"star identity {es}, circ identity {ec}")
        star = star if isinstance(star, GroupTable) else validate_group_table(star)
        circ = circ if isinstance(circ, GroupTable) else validate_group_table(circ)
    if star.order != circ.order:
        raise OrderMismatch(f"orders {star.order} and {circ.order}")
    bad = check_brace_axiom(star, circ)
    if bad is not None:
        raise BraceAxiomFailure(*bad)
    return SkewBrace(star, circ)


def trivial_brace(g: GroupTable) -> SkewBrace:
    return SkewBrace(g, g)


def _check_index(b: SkewBrace, g: int) -> int:
    if not 0 <= g < b.order:
        raise IndexOutOfRange(f"element {g} not in 0..{b.order - 1}")
    return int(g)


def lambda_images(b: SkewBrace, g: int) -> np.ndarray:
    """Images of ``x -> g^-1 * (g o x)`` as an array."""
    g = _check_index(b, g)
    return b.star.table[b.star_inv[g]][b.circ.table[g]]


def brace_lambda(b: SkewBrace, g: int) -> Permutation:
    return Permutation(tuple(lambda_images(b, g).tolist()))


def _star_subgroup_members(b: SkewBrace, s: Subgroup | Iterable[int]) -> np.ndarray:
    if isinstance(s, Subgroup):
        if s.parent_order != b.order:
            raise NotAStarSubgroup(f"subgroup of a group of order {s.parent_order}, brace has order {b.order}")
        members = s.members
    else:
        members = tuple(sorted(set(int(x) for x in s)))
    if not is_subgroup(b.star, members):
        raise NotAStarSubgroup(f"{list(members)} is not a subgroup of the additive group")
    return np.array(members, dtype=np.int64)


def _all_in(values: np.ndarray, members: np.ndarray, n: int) -> bool:
    inside = np.zeros(n, dtype=bool)
    inside[members] = True
    return bool(inside[values].all())


def is_circ_stable(b: SkewBrace, s: Subgroup | Iterable[int]) -> bool:
    """True iff ``(g o x) * g^-1`` stays in ``s`` for all g and all x in ``s``."""
    m = _star_subgroup_members(b, s)
    g = np.arange(b.order)[:, None]
    vals = b.star.table[b.circ.table[g, m[None, :]], b.star_inv[g]]
    return _all_in(vals, m, b.order)


def is_left_ideal(b: SkewBrace, s: Subgroup | Iterable[int]) -> bool:
    """True iff ``g^-1 * (g o x)`` stays in ``s`` for all g and all x in ``s``."""
    m = _star_subgroup_members(b, s)
    g = np.arange(b.order)[:, None]
    vals = b.star.table[b.star_inv[g], b.circ.table[g, m[None, :]]]
    return _all_in(vals, m, b.order)


def satisfies_gv_condition(b: SkewBrace, subset: Iterable[int]) -> bool:
    """Subset condition ``h * g^-1 * (g o x) * h^-1 in S`` for all g, h and x in S.

    ``S`` may be any nonempty subset of the carrier, not only a subgroup.
    """
    m = np.array(sorted(set(int(x) for x in subset)), dtype=np.int64)
    if m.size == 0:
        raise EmptySubset("subset must be nonempty")
    if m.min() < 0 or m.max() >= b.order:
        raise IndexOutOfRange(f"subset entries must lie in 0..{b.order - 1}")
    s = b.star.table
    g = np.arange(b.order)[:, None]
    moved = np.unique(s[b.star_inv[g], b.circ.table[g, m[None, :]]])
    h = np.arange(b.order)[:, None]
    vals = s[s[h, moved[None, :]], b.star_inv[h]]
    return _all_in(vals, m, b.order)


def circ_stable_subgroups(b: SkewBrace, max_order: int | None = None) -> list[Subgroup]:
    check_cap(b.order, max_order)
    return [s for s in subgroups(b.star, max_order) if is_circ_stable(b, s)]


def left_ideals(b: SkewBrace, max_order: int | None = None) -> list[Subgroup]:
    check_cap(b.order, max_order)
    return [s for s in subgroups(b.star, max_order) if is_left_ideal(b, s)]


@dataclass(frozen=True)
class GaloisReport:
    count_circ_stable: int
    count_circ_subgroups: int
    ratio: Fraction
    stable_list: tuple[Subgroup, ...]

    def to_json(self) -> dict:
        return {
            "stable": self.count_circ_stable,
            "subgroups": self.count_circ_subgroups,
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
            "stable_list": [list(s.members) for s in self.stable_list],
        }


def galois_report(b: SkewBrace, max_order: int | None = None) -> GaloisReport:
    """Count the circle-stable subgroups against all subgroups of the circle group."""
    stable = circ_stable_subgroups(b, max_order)
    total = len(subgroups(b.circ, max_order))
    return GaloisReport(len(stable), total, Fraction(len(stable), total), tuple(stable))
