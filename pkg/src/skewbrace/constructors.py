"""Braces from regular subgroups of holomorphs, exact factorizations and
fixed point free pairs of homomorphisms, and the way back to permutations.

Right translations use ``rho(g)(x) = x * g^-1`` so that ``rho`` is a
homomorphism; then ``lambda(g_l) rho(g_r)`` sends ``x`` to ``g_l x g_r^-1``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .brace import SkewBrace, make_brace
from .errors import (
    DegreeMismatch,
    NotAnIsomorphism,
    NotComplementary,
    NotFixedPointFree,
    NotHomomorphism,
    NotInHolomorph,
    NotRegular,
    OrderMismatch,
)
from .groups import (
    GroupTable,
    Subgroup,
    in_holomorph,
    is_homomorphism,
    make_subgroup,
    validate_group_table,
)
from .perm import Permutation, PermGroup, is_regular


# isomorphisms onto Gamma

@dataclass(frozen=True, eq=False)
class BraceIso:
    """An isomorphism ``a: (G, o) -> Gamma`` with inverse ``b``."""

    brace: SkewBrace
    gamma: GroupTable
    a: tuple[int, ...]
    b: tuple[int, ...]


def make_brace_iso(brace: SkewBrace, gamma: GroupTable, a: Sequence[int]) -> BraceIso:
    a_arr = np.asarray(a, dtype=np.int64)
    n = brace.order
    if gamma.order != n or a_arr.shape != (n,) or sorted(a_arr.tolist()) != list(range(n)):
        raise NotAnIsomorphism("a must be a bijection between carriers of equal size")
    if not is_homomorphism(brace.circ, gamma, a_arr):
        raise NotAnIsomorphism("a(g o h) != a(g) a(h) for some g, h")
    b_arr = np.empty(n, dtype=np.int64)
    b_arr[a_arr] = np.arange(n)
    return BraceIso(brace, gamma, tuple(a_arr.tolist()), tuple(b_arr.tolist()))


def identity_iso(brace: SkewBrace) -> BraceIso:
    """Gamma taken to be the circle group itself."""
    return make_brace_iso(brace, brace.circ, range(brace.order))


def alpha_embedding(iso: BraceIso) -> PermGroup:
    """``{a lambda_star(g) a^-1}`` inside Perm(Gamma)."""
    iso = make_brace_iso(iso.brace, iso.gamma, iso.a)  # revalidate
    a = np.array(iso.a, dtype=np.int64)
    b = np.array(iso.b, dtype=np.int64)
    star = iso.brace.star.table
    # row g: gamma -> a(g * b(gamma))
    perms = a[star[:, b]]
    return PermGroup(iso.gamma.order, [tuple(r) for r in perms.tolist()], check=False)


def beta_embedding(iso: BraceIso) -> PermGroup:
    """``{beta(gamma) = lambda_circ(b(gamma))}`` inside Perm(G)."""
    circ = iso.brace.circ.table
    return PermGroup(iso.brace.order, [tuple(circ[x].tolist()) for x in iso.b], check=False)


# regular subgroups of the holomorph

def brace_from_holomorph_regular(gstar: GroupTable, r: PermGroup) -> SkewBrace:
    """The brace with ``g o h = r_g(h)``, where ``r_g`` is the element of ``r`` sending 0 to g."""
    if r.degree != gstar.order:
        raise DegreeMismatch(f"permutation degree {r.degree}, group order {gstar.order}")
    if not is_regular(r):
        raise NotRegular("permutation group is not regular")
    for p in r:
        if not in_holomorph(gstar, p):
            raise NotInHolomorph(f"{p} is not in Hol(G)")
    circ = [None] * gstar.order
    for p in r:
        circ[p(0)] = list(p.images)
    return make_brace(gstar, validate_group_table(circ))


# exact factorizations

@dataclass(frozen=True, eq=False)
class ExactFactorization:
    g: GroupTable
    h: Subgroup
    j: Subgroup
    left: tuple[int, ...]
    right: tuple[int, ...]


def make_exact_factorization(g: GroupTable, h: Subgroup | Iterable[int], j: Subgroup | Iterable[int]) -> ExactFactorization:
    """Validate ``G = HJ`` with ``H n J = 1`` and tabulate ``x -> (x_l, x_r)``."""
    h = make_subgroup(g, h.members if isinstance(h, Subgroup) else h)
    j = make_subgroup(g, j.members if isinstance(j, Subgroup) else j)
    if h.order * j.order != g.order:
        raise NotComplementary(f"|H||J| = {h.order * j.order} != |G| = {g.order}")
    if h.as_set() & j.as_set() != {0}:
        raise NotComplementary("H and J intersect nontrivially")
    left = [-1] * g.order
    right = [-1] * g.order
    rows = g.rows
    for x in h:
        for y in j:
            z = rows[x][y]
            left[z], right[z] = x, y
    if -1 in left:
        raise NotComplementary("HJ does not cover G")
    return ExactFactorization(g, h, j, tuple(left), tuple(right))


def factorize(ef: ExactFactorization, x: int) -> tuple[int, int]:
    return ef.left[x], ef.right[x]


def factorization_gamma(ef: ExactFactorization) -> GroupTable:
    """``H x J`` with ``(h_i, j_k)`` at index ``i * |J| + k`` (positions within the sorted members)."""
    rows = ef.g.rows
    hpos = {x: i for i, x in enumerate(ef.h.members)}
    jpos = {y: k for k, y in enumerate(ef.j.members)}
    m = ef.j.order
    pairs = [(x, y) for x in ef.h.members for y in ef.j.members]
    table = [
        [hpos[rows[x1][x2]] * m + jpos[rows[y1][y2]] for (x2, y2) in pairs]
        for (x1, y1) in pairs
    ]
    return validate_group_table(table)


def brace_from_exact_factorization(ef: ExactFactorization) -> tuple[SkewBrace, BraceIso]:
    """``g o h = g_l h g_r`` on G, with ``a(g_l g_r) = (g_l, g_r^-1)`` onto ``H x J``."""
    t = ef.g.table
    left = np.array(ef.left, dtype=np.int64)
    right = np.array(ef.right, dtype=np.int64)
    circ = t[t[left], right[:, None]]  # [x, y] -> x_l * y * x_r
    brace = make_brace(ef.g, validate_group_table(circ))

    hpos = {x: i for i, x in enumerate(ef.h.members)}
    jpos = {y: k for k, y in enumerate(ef.j.members)}
    a = [hpos[ef.left[x]] * ef.j.order + jpos[ef.g.inv(ef.right[x])] for x in range(ef.g.order)]
    return brace, make_brace_iso(brace, factorization_gamma(ef), a)


def closed_under_h_conjugation(ef: ExactFactorization, s: Subgroup | Iterable[int]) -> bool:
    """True iff ``x_l y x_l^-1`` lies in ``s`` for every ``x_l`` in H and ``y`` in ``s``."""
    members = set(s.members if isinstance(s, Subgroup) else s)
    rows = ef.g.rows
    return all(rows[rows[x][y]][ef.g.inv(x)] in members for x in ef.h for y in members)


# fixed point free pairs

@dataclass(frozen=True, eq=False)
class FpfPair:
    gamma: GroupTable
    g: GroupTable
    f_l: tuple[int, ...]
    f_r: tuple[int, ...]


def make_fpf_pair(gamma: GroupTable, g: GroupTable, f_l: Sequence[int], f_r: Sequence[int]) -> FpfPair:
    if gamma.order != g.order:
        raise OrderMismatch(f"|Gamma| = {gamma.order} but |G| = {g.order}")
    for name, f in (("f_l", f_l), ("f_r", f_r)):
        if len(f) != gamma.order or not is_homomorphism(gamma, g, f):
            raise NotHomomorphism(f"{name} is not a homomorphism Gamma -> G")
    fixed = [x for x in range(1, gamma.order) if f_l[x] == f_r[x]]
    if fixed:
        raise NotFixedPointFree(f"f_l and f_r agree at nonidentity element {fixed[0]}")
    return FpfPair(gamma, g, tuple(int(x) for x in f_l), tuple(int(x) for x in f_r))


def fpf_beta(pair: FpfPair) -> list[Permutation]:
    """``beta(gamma)(x) = f_l(gamma) x f_r(gamma)^-1``, indexed by gamma."""
    t = pair.g.table
    inv = pair.g.inverse
    return [
        Permutation(tuple(t[t[fl], inv[fr]].tolist()))
        for fl, fr in zip(pair.f_l, pair.f_r)
    ]


def brace_from_fpf_pair(pair: FpfPair) -> SkewBrace:
    r = PermGroup(pair.g.order, fpf_beta(pair))
    return brace_from_holomorph_regular(pair.g, r)


def fpf_brace_iso(pair: FpfPair, brace: SkewBrace | None = None) -> BraceIso:
    """The isomorphism ``(G, o) -> Gamma`` inverse to ``gamma -> f_l(gamma) f_r(gamma)^-1``."""
    brace = brace or brace_from_fpf_pair(pair)
    b = [pair.g.mul(fl, pair.g.inv(fr)) for fl, fr in zip(pair.f_l, pair.f_r)]
    a = [0] * pair.g.order
    for gamma, x in enumerate(b):
        a[x] = gamma
    return make_brace_iso(brace, pair.gamma, a)
