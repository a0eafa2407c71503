from __future__ import annotations

import itertools

import numpy as np
import pytest

from skewbrace import errors
from skewbrace.brace import circ_stable_subgroups, galois_report, is_circ_stable, make_brace, trivial_brace
from skewbrace.constructors import (
    alpha_embedding,
    beta_embedding,
    brace_from_exact_factorization,
    brace_from_fpf_pair,
    brace_from_holomorph_regular,
    closed_under_h_conjugation,
    factorize,
    fpf_beta,
    fpf_brace_iso,
    identity_iso,
    make_brace_iso,
    make_exact_factorization,
    make_fpf_pair,
)
from skewbrace.fixtures import (
    _is_even,
    cyclic_group,
    dihedral_d4,
    elementary_abelian,
    heis_fpf,
    heis_fpf_pair,
    heisenberg,
    rump8,
    sn_exact_factorization,
    symmetric_group_table,
    zp_exact_factorization,
)
from skewbrace.groups import (
    are_isomorphic,
    direct_product,
    fingerprint,
    in_holomorph,
    left_regular,
    right_regular,
    subgroups,
    table_from_op,
)
from skewbrace.perm import PermGroup, generate, invariant_subgroups, is_regular, normalized_by
from skewbrace.reproduce import small_fixture_braces

S3, S3_PERMS = symmetric_group_table(3)
SWAP01 = S3_PERMS.index((1, 0, 2))
SWAP02 = S3_PERMS.index((2, 1, 0))


def alternating_table(n):
    even = [p for p in itertools.permutations(range(n)) if _is_even(p)]
    return table_from_op(even, lambda p, q: tuple(p[i] for i in q))


def d4_factorization():
    # D4 = <c> <s>
    return make_exact_factorization(dihedral_d4(), [0, 1, 2, 3], [0, 4])


def exact_factorizations():
    return {
        "S3": sn_exact_factorization(3),
        "S4": sn_exact_factorization(4),
        "D4": d4_factorization(),
        "Z5 x| Z4": zp_exact_factorization(5),
        "Z7 x| Z3": zp_exact_factorization(7, 2),
    }


# regular subgroups of the holomorph

def test_left_regular_gives_trivial_brace():
    for g in (S3, dihedral_d4(), cyclic_group(6)):
        assert brace_from_holomorph_regular(g, left_regular(g)) == trivial_brace(g)


def test_right_regular_gives_opposite_group():
    b = brace_from_holomorph_regular(S3, right_regular(S3))
    assert np.array_equal(b.circ.table, S3.table.T)


def test_fpf_beta_is_regular_in_holomorph():
    pair = heis_fpf_pair(3)
    beta = PermGroup(27, fpf_beta(pair))
    assert is_regular(beta)
    assert all(in_holomorph(pair.g, p) for p in beta)
    b = brace_from_holomorph_regular(heisenberg(3), beta)
    assert b.star == heisenberg(3)
    assert b.circ.is_abelian and b.circ.exponent == 3
    assert are_isomorphic(b.circ, elementary_abelian(3, 3))


def test_holomorph_regular_errors():
    with pytest.raises(errors.DegreeMismatch):
        brace_from_holomorph_regular(S3, left_regular(cyclic_group(4)))
    with pytest.raises(errors.NotRegular):
        brace_from_holomorph_regular(S3, generate(6, [(1, 0, 2, 3, 4, 5)]))
    six_cycle = generate(6, [(1, 2, 3, 4, 5, 0)])
    assert is_regular(six_cycle)
    assert not all(in_holomorph(S3, p) for p in six_cycle)
    with pytest.raises(errors.NotInHolomorph):
        brace_from_holomorph_regular(S3, six_cycle)


@pytest.mark.parametrize("name", sorted(small_fixture_braces()))
def test_round_trip_through_regular_subgroup(name):
    b = small_fixture_braces()[name]
    beta = beta_embedding(identity_iso(b))
    assert is_regular(beta)
    assert brace_from_holomorph_regular(b.star, beta) == b


# alpha embedding

def test_alpha_of_trivial_brace_is_left_regular():
    b = trivial_brace(S3)
    assert alpha_embedding(identity_iso(b)) == left_regular(S3)


def test_rump_alpha_is_elementary_abelian_and_normalized():
    b = rump8()
    alpha = alpha_embedding(identity_iso(b))
    lam = left_regular(b.circ)
    assert is_regular(alpha)
    assert all(not p.is_identity() and (p * p).is_identity() for p in alpha if not p.is_identity())
    assert all(p * q == q * p for p in alpha for q in alpha)
    assert normalized_by(alpha, lam)
    assert len(invariant_subgroups(alpha, lam)) == len(circ_stable_subgroups(b)) == 4


@pytest.mark.parametrize("name", sorted(small_fixture_braces()))
def test_alpha_count_matches_stable_count(name):
    b = small_fixture_braces()[name]
    alpha = alpha_embedding(identity_iso(b))
    lam = left_regular(b.circ)
    assert is_regular(alpha) and normalized_by(alpha, lam)
    assert len(invariant_subgroups(alpha, lam)) == len(circ_stable_subgroups(b))


@pytest.mark.parametrize("name", ["S3", "S4", "D4", "Z5 x| Z4"])
def test_alpha_with_product_gamma(name):
    b, iso = brace_from_exact_factorization(exact_factorizations()[name])
    alpha = alpha_embedding(iso)
    lam = left_regular(iso.gamma)
    assert is_regular(alpha) and normalized_by(alpha, lam)
    assert len(invariant_subgroups(alpha, lam)) == len(circ_stable_subgroups(b))


def test_alpha_with_fpf_gamma():
    pair = heis_fpf_pair(3)
    iso = fpf_brace_iso(pair)
    alpha = alpha_embedding(iso)
    lam = left_regular(pair.gamma)
    assert is_regular(alpha) and normalized_by(alpha, lam)
    assert len(invariant_subgroups(alpha, lam)) == 10


def test_make_brace_iso_rejects_non_homomorphism():
    b = trivial_brace(cyclic_group(4))
    with pytest.raises(errors.NotAnIsomorphism):
        make_brace_iso(b, cyclic_group(4), [0, 2, 1, 3])
    with pytest.raises(errors.NotAnIsomorphism):
        make_brace_iso(b, cyclic_group(4), [0, 1, 1, 3])


# exact factorizations

def test_factorize_identity_and_j():
    ef = sn_exact_factorization(3)
    assert factorize(ef, 0) == (0, 0)
    assert factorize(ef, SWAP01) == (0, SWAP01)


def test_factorize_matches_exhaustive_search():
    ef = sn_exact_factorization(3)
    for x in range(6):
        pairs = [(h, j) for h in ef.h for j in ef.j if S3.mul(h, j) == x]
        assert pairs == [factorize(ef, x)]
    h, j = factorize(ef, SWAP02)
    assert j == SWAP01 and S3_PERMS[h] == (1, 2, 0)


def test_exact_factorization_errors():
    with pytest.raises(errors.NotComplementary):
        make_exact_factorization(dihedral_d4(), [0, 2], [0, 4])
    with pytest.raises(errors.NotComplementary):
        make_exact_factorization(dihedral_d4(), [0, 1, 2, 3], [0, 2])
    with pytest.raises(errors.NotASubgroup):
        make_exact_factorization(dihedral_d4(), [0, 1], [0, 4])


def test_trivial_factorization_gives_trivial_brace():
    ef = make_exact_factorization(S3, range(6), [0])
    b, _ = brace_from_exact_factorization(ef)
    assert b == trivial_brace(S3)


def test_s3_factorization_circle_group_is_cyclic():
    b, iso = brace_from_exact_factorization(sn_exact_factorization(3))
    assert b.circ.exponent == 6
    assert are_isomorphic(b.circ, cyclic_group(6))
    assert are_isomorphic(iso.gamma, cyclic_group(6))


def test_s5_factorization():
    b, iso = brace_from_exact_factorization(sn_exact_factorization(5))
    assert b.order == 120
    a5xc2 = direct_product(alternating_table(5), cyclic_group(2))
    assert fingerprint(b.circ) == fingerprint(a5xc2) == fingerprint(iso.gamma)


def test_subgroups_of_a5_times_c2_by_goursat():
    # subgroups of A x C2: pairs (A1, A1) twice, plus (A1, A2) with A2 of index 2 in A1
    a5 = alternating_table(5)
    subs = subgroups(a5)
    sets = [s.as_set() for s in subs]
    index_two = sum(1 for big in sets for small in sets if small < big and len(big) == 2 * len(small))
    b, _ = brace_from_exact_factorization(sn_exact_factorization(5))
    assert len(subgroups(b.circ)) == 2 * len(subs) + index_two == 164


@pytest.mark.parametrize("name", sorted(exact_factorizations()))
def test_stable_iff_closed_under_h_conjugation(name):
    ef = exact_factorizations()[name]
    b, _ = brace_from_exact_factorization(ef)
    for s in subgroups(ef.g):
        assert is_circ_stable(b, s) == closed_under_h_conjugation(ef, s)


@pytest.mark.parametrize("name", sorted(exact_factorizations()))
def test_exact_factorization_iso_is_valid(name):
    b, iso = brace_from_exact_factorization(exact_factorizations()[name])
    assert make_brace_iso(b, iso.gamma, iso.a).b == iso.b


# fixed point free pairs

def test_fpf_with_trivial_right_map_gives_trivial_brace():
    g = S3
    pair = make_fpf_pair(g, g, list(range(6)), [0] * 6)
    assert PermGroup(6, fpf_beta(pair)) == left_regular(g)
    assert brace_from_fpf_pair(pair) == trivial_brace(g)


def test_fpf_errors():
    with pytest.raises(errors.NotFixedPointFree):
        make_fpf_pair(S3, S3, list(range(6)), list(range(6)))
    with pytest.raises(errors.NotHomomorphism):
        make_fpf_pair(cyclic_group(4), cyclic_group(4), [0, 2, 1, 3], [0] * 4)
    with pytest.raises(errors.OrderMismatch):
        make_fpf_pair(cyclic_group(3), cyclic_group(4), [0, 1, 2], [0, 0, 0])


@pytest.mark.parametrize("p", [3, 5])
def test_heisenberg_fpf_brace(p):
    b = heis_fpf(p)
    assert b.star == heisenberg(p)
    assert b.circ.is_abelian and b.circ.exponent == p
    iso = fpf_brace_iso(heis_fpf_pair(p), b)
    assert iso.gamma == elementary_abelian(p, 3)


def test_fpf_brace_from_right_regular_pair():
    # f_l trivial, f_r identity: beta(g)(x) = x g^-1 is right translation
    pair = make_fpf_pair(S3, S3, [0] * 6, list(range(6)))
    b = brace_from_fpf_pair(pair)
    assert np.array_equal(b.circ.table, S3.table.T)
    assert b == make_brace(S3, S3.table.T)


def test_stable_count_of_exact_factorization_fixture():
    r = galois_report(brace_from_exact_factorization(zp_exact_factorization(7))[0])
    assert r.count_circ_stable == 5
