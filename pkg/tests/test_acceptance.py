"""Acceptance criteria, one test each, at the stated tolerance and time budget.

Each test prints a single ``criterion N: PASS|FAIL`` line (shown with ``-s``)
and the full list is repeated in the terminal summary.
"""

from __future__ import annotations

import time
from fractions import Fraction

import numpy as np
import pytest

from oracles import brace_axiom_holds, cyclic_join_subgroups
from skewbrace.algebra import brace_from_algebra, circle_group, left_ideals as algebra_left_ideals
from skewbrace.brace import (
    circ_stable_subgroups,
    galois_report,
    is_circ_stable,
    left_ideals,
    satisfies_gv_condition,
)
from skewbrace.constructors import (
    alpha_embedding,
    beta_embedding,
    brace_from_exact_factorization,
    brace_from_holomorph_regular,
    closed_under_h_conjugation,
    fpf_brace_iso,
    identity_iso,
    make_exact_factorization,
)
from skewbrace.fixtures import (
    D4_LABELS,
    _is_even,
    a34,
    a35,
    dihedral_d4,
    heis_fpf,
    heis_fpf_pair,
    heis_index,
    heisenberg,
    rump8,
    sn_exact_factorization,
    sn_factorization,
    symmetric_group_table,
    zp_exact_factorization,
    zp_hol,
)
from skewbrace.groups import is_subgroup, left_regular, subgroups
from skewbrace.perm import invariant_subgroups, is_regular, normalized_by
from skewbrace.reproduce import small_fixture_braces


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def finish(record, number, ok, detail, timer, budget):
    in_time = timer.seconds < budget
    record(number, ok and in_time, f"{detail}  [{timer.seconds:.2f}s / {budget}s]")
    assert ok, detail
    assert in_time, f"took {timer.seconds:.1f}s, budget {budget}s"


def test_criterion_01_heisenberg_subgroup_count(record):
    with Timer() as t:
        got = {p: len(subgroups(heisenberg(p))) for p in (3, 5, 7)}
    want = {p: 2 * p * p + 2 * p + 4 for p in (3, 5, 7)}
    finish(record, 1, got == want, f"subgroups(Heis_3(F_p)) expected {want} got {got}", t, 30)


def test_criterion_02_a35_left_ideals(record):
    with Timer() as t:
        got = {p: len(algebra_left_ideals(a35(p))) for p in (3, 5)}
    want = {p: p + 4 for p in (3, 5)}
    finish(record, 2, got == want, f"left ideals of A35 expected {want} got {got}", t, 10)


def test_criterion_03_a34_left_ideals(record):
    cases = [(3, 0), (3, 1), (3, 2), (5, 0), (5, 1)]
    with Timer() as t:
        got = {c: len(algebra_left_ideals(a34(*c))) for c in cases}
    want = {c: c[0] + 4 for c in cases}
    bad = {c: got[c] for c in cases if got[c] != want[c]}
    finish(record, 3, not bad, f"left ideals of A34 (p, delta) expected {want} got {got}; mismatches {bad}", t, 30)


def test_criterion_04_circle_exponent(record):
    with Timer() as t:
        seen = {}
        for p in (3, 5):
            for name, alg in [("a35", a35(p))] + [(f"a34[{d}]", a34(p, d)) for d in range(p)]:
                seen[(p, name)] = set(circle_group(alg).element_orders) - {1}
    ok = all(orders == {p} for (p, _), orders in seen.items())
    finish(record, 4, ok, f"nonidentity circle orders {sorted((k, sorted(v)) for k, v in seen.items())}", t, 10)


def test_criterion_05_rump_brace(record):
    with Timer() as t:
        r = galois_report(rump8())
    got = (r.count_circ_stable, r.count_circ_subgroups, r.ratio)
    stable = {frozenset(D4_LABELS[i] for i in s) for s in r.stable_list}
    want_stable = {frozenset({"e"}), frozenset({"e", "sc", "c2", "sc3"}), frozenset(D4_LABELS)}
    ok = got == (3, 10, Fraction(3, 10)) and stable == want_stable
    shown = sorted(sorted(s) for s in stable)
    finish(record, 5, ok, f"rump8 report expected (3, 10, 3/10) got {got[0], got[1], str(got[2])}; stable {shown}", t, 1)


def test_criterion_06_heisenberg_fpf(record):
    with Timer() as t:
        got = {}
        for p in (3, 5):
            r = galois_report(heis_fpf(p))
            got[p] = (r.count_circ_stable, r.count_circ_subgroups)
    want = {p: (2 * p + 4, 2 * p * p + 2 * p + 4) for p in (3, 5)}
    finish(record, 6, got == want, f"(stable, circle subgroups) expected {want} got {got}", t, 60)


def test_criterion_07_symmetric_group_factorization(record):
    with Timer() as t:
        g, perms = symmetric_group_table(5)
        b = sn_factorization(5)
        stable = {s.as_set() for s in circ_stable_subgroups(b)}
        a5 = frozenset(i for i, q in enumerate(perms) if _is_even(q))
        want = {frozenset({0}), a5, frozenset(range(120))}
        lattice = {s.as_set() for s in subgroups(b.circ)}
        oracle = cyclic_join_subgroups(b.circ.rows)
    ok = stable == want and lattice == oracle
    detail = (f"stable sizes {sorted(len(s) for s in stable)} (want [1, 60, 120]); "
              f"circle subgroups lattice {len(lattice)} vs oracle {len(oracle)}")
    finish(record, 7, ok, detail, t, 300)


def test_criterion_08_zp_semidirect(record):
    with Timer() as t:
        ef = zp_exact_factorization(7)
        zp = ef.h.as_set()
        brute = {s.as_set() for s in subgroups(ef.g) if s.order == 1 or zp <= s.as_set()}
        stable = {s.as_set() for s in circ_stable_subgroups(zp_hol(7))}
    ok = ef.g.order == 42 and stable == brute and len(stable) == 5
    finish(record, 8, ok, f"stable {sorted(len(s) for s in stable)} vs trivial+over-Z7 {sorted(len(s) for s in brute)}", t, 5)


def test_criterion_09_subset_condition(record):
    p = 3
    with Timer() as t:
        b = heis_fpf(p)
        singletons = all(satisfies_gv_condition(b, {heis_index(p, 0, 0, c)}) for c in range(p))
        cosets = all(
            satisfies_gv_condition(b, {heis_index(p, r, s, c) for c in range(p)})
            for r in range(p) for s in range(p)
        )
        witnesses = [
            c for c in range(1, p)
            if satisfies_gv_condition(b, {heis_index(p, 0, 0, c)}) and not is_subgroup(b.star, [heis_index(p, 0, 0, c)])
        ]
    ok = singletons and cosets and bool(witnesses)
    finish(record, 9, ok, f"singletons {singletons}, cosets {cosets}, non-subgroup witnesses {len(witnesses)}", t, 5)


def _isos_up_to_32():
    out = [(name, identity_iso(b)) for name, b in small_fixture_braces().items()]
    for name, ef in [("sn(3)", sn_exact_factorization(3)), ("sn(4)", sn_exact_factorization(4)),
                     ("zp(5)", zp_exact_factorization(5)), ("zp(7,2)", zp_exact_factorization(7, 2))]:
        out.append((f"{name} via H x J", brace_from_exact_factorization(ef)[1]))
    out.append(("heis_fpf(3) via F_3^3", fpf_brace_iso(heis_fpf_pair(3))))
    return out


def test_criterion_10_alpha_normalized_count(record):
    with Timer() as t:
        mismatches, checked = [], 0
        for name, iso in _isos_up_to_32():
            assert iso.brace.order <= 32
            alpha = alpha_embedding(iso)
            lam = left_regular(iso.gamma)
            assert is_regular(alpha) and normalized_by(alpha, lam)
            n_alpha = len(invariant_subgroups(alpha, lam))
            n_stable = len(circ_stable_subgroups(iso.brace))
            checked += 1
            if n_alpha != n_stable:
                mismatches.append((name, n_stable, n_alpha))
    finish(record, 10, not mismatches, f"{checked} brace/Gamma pairs, mismatches {mismatches}", t, 60)


def test_criterion_11_ideals_equal_stable(record):
    with Timer() as t:
        braces = {"rump8": rump8()}
        for p in (3, 5):
            braces[f"a35({p})"] = brace_from_algebra(a35(p))
            for d in range(p):
                braces[f"a34({p},{d})"] = brace_from_algebra(a34(p, d))
        bad = [n for n, b in braces.items() if not b.star.is_abelian or left_ideals(b) != circ_stable_subgroups(b)]
    finish(record, 11, not bad, f"{len(braces)} left braces, disagreements {bad}", t, 10)


def _all_constructed_braces():
    out = dict(small_fixture_braces())
    out["a35(5)"] = brace_from_algebra(a35(5))
    out.update({f"a34(5,{d})": brace_from_algebra(a34(5, d)) for d in range(5)})
    out["heis_fpf(5)"] = heis_fpf(5)
    out["sn_factorization(5)"] = sn_factorization(5)
    out["zp_hol(7)"] = zp_hol(7)
    return out


def _lambda_is_hom_into_aut(b):
    n = b.order
    s, c = b.star.table, b.circ.table
    lam = s[b.star_inv[:, None], c]  # lam[g, x] = g^-1 * (g o x)
    g = np.arange(n)[:, None, None]
    hom = np.array_equal(lam[c], lam[g, lam[None, :, :]])  # lam_{g o h} = lam_g lam_h
    aut = all(np.array_equal(lam[k][s], s[lam[k]][:, lam[k]]) for k in range(n))
    return hom and aut


def test_criterion_12_property_suites(record):
    with Timer() as t:
        braces = _all_constructed_braces()
        axiom_bad = [n for n, b in braces.items() if not brace_axiom_holds(b.star.rows, b.circ.rows)]
        lam_bad = [n for n, b in braces.items() if not _lambda_is_hom_into_aut(b)]
        factorizations = {
            "sn(3)": sn_exact_factorization(3), "sn(4)": sn_exact_factorization(4), "sn(5)": sn_exact_factorization(5),
            "zp(5)": zp_exact_factorization(5), "zp(7)": zp_exact_factorization(7), "zp(7,2)": zp_exact_factorization(7, 2),
            "D4 = <c><s>": make_exact_factorization(dihedral_d4(), [0, 1, 2, 3], [0, 4]),
        }
        conj_bad = []
        for name, ef in factorizations.items():
            b, _ = brace_from_exact_factorization(ef)
            if any(is_circ_stable(b, s) != closed_under_h_conjugation(ef, s) for s in subgroups(ef.g)):
                conj_bad.append(name)
        trip_bad = []
        for name, b in braces.items():
            if b.order <= 32 and brace_from_holomorph_regular(b.star, beta_embedding(identity_iso(b))) != b:
                trip_bad.append(name)
    ok = not (axiom_bad or lam_bad or conj_bad or trip_bad)
    detail = (f"{len(braces)} braces: axiom failures {axiom_bad}, lambda failures {lam_bad}; "
              f"{len(factorizations)} factorizations: conjugation failures {conj_bad}; round-trip failures {trip_bad}")
    finish(record, 12, ok, detail, t, 120)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
