"""Finite skew left braces, regular subgroups of holomorphs and circle-stable subgroups."""

from .algebra import NilpotentAlgebra, brace_from_algebra, circle_group, left_ideals as algebra_left_ideals, make_algebra
from .brace import (
    GaloisReport,
    SkewBrace,
    brace_lambda,
    circ_stable_subgroups,
    galois_report,
    is_circ_stable,
    is_left_ideal,
    left_ideals,
    make_brace,
    satisfies_gv_condition,
)
from .constructors import (
    BraceIso,
    ExactFactorization,
    FpfPair,
    alpha_embedding,
    brace_from_exact_factorization,
    brace_from_fpf_pair,
    brace_from_holomorph_regular,
    factorize,
    make_brace_iso,
    make_exact_factorization,
    make_fpf_pair,
)
from .fixtures import builtin_fixture, fixture_brace
from .groups import (
    GroupTable,
    Subgroup,
    automorphism_group,
    holomorph,
    subgroups,
    validate_group_table,
)
from .perm import Permutation, PermGroup, is_regular, normalized_by

__version__ = "0.1.0"
