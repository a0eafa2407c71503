"""Named reproduction targets: a claimed value next to the computed one."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from . import fixtures
from .algebra import circle_group, left_ideals
from .brace import galois_report, satisfies_gv_condition
from .constructors import alpha_embedding, identity_iso
from .errors import UnknownFixture
from .groups import is_subgroup, left_regular, subgroups
from .perm import invariant_subgroups


@dataclass(frozen=True)
class Check:
    target: str
    params: dict
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "params": self.params,
            "expected": self.expected,
            "computed": self.computed,
            "status": "PASS" if self.passed else "FAIL",
        }


def _heis_subgroups(p=None, **_):
    for p in [p] if p else [3, 5, 7]:
        yield Check("heis-subgroups", {"p": p}, 2 * p * p + 2 * p + 4, len(subgroups(fixtures.heisenberg(p))))


def _a35_ideals(p=None, **_):
    for p in [p] if p else [3, 5]:
        yield Check("a35-ideals", {"p": p}, p + 4, len(left_ideals(fixtures.a35(p))))


def _a34_ideals(p=None, delta=None, **_):
    if p:
        cases = [(p, d) for d in ([delta] if delta is not None else range(p))]
    else:
        cases = [(3, 0), (3, 1), (3, 2), (5, 0), (5, 1)]
    for p, d in cases:
        yield Check("a34-ideals", {"p": p, "delta": d}, p + 4, len(left_ideals(fixtures.a34(p, d))))


def _circle_exponent(p=None, **_):
    for p in [p] if p else [3, 5]:
        algebras = [("a35", fixtures.a35(p))] + [(f"a34[{d}]", fixtures.a34(p, d)) for d in range(p)]
        for name, alg in algebras:
            orders = set(circle_group(alg).element_orders) - {1}
            yield Check("circle-exponent", {"p": p, "algebra": name}, [p], sorted(orders))


def _rump8(**_):
    b = fixtures.rump8()
    r = galois_report(b)
    labels = fixtures.D4_LABELS
    stable = [[labels[i] for i in s] for s in r.stable_list]
    yield Check("rump8", {}, [3, 10, "3/10"], [r.count_circ_stable, r.count_circ_subgroups, r.to_json()["ratio"]])
    yield Check("rump8-stable-list", {}, [["e"], ["e", "c2", "sc", "sc3"], list(labels)], stable)


def _heis_fpf(p=None, **_):
    for p in [p] if p else [3, 5]:
        r = galois_report(fixtures.heis_fpf(p))
        yield Check("heis-fpf", {"p": p}, [2 * p + 4, 2 * p * p + 2 * p + 4],
                    [r.count_circ_stable, r.count_circ_subgroups])


def _sn(n=None, **_):
    n = n or 5
    r = galois_report(fixtures.sn_factorization(n))
    yield Check("sn", {"n": n}, [1, factorial(n) // 2, factorial(n)], [len(s) for s in r.stable_list])


def _zp_hol(p=None, **_):
    p = p or 7
    ef = fixtures.zp_exact_factorization(p)
    zp = set(ef.h.members)
    expected = [list(s.members) for s in subgroups(ef.g) if s.order == 1 or zp <= s.as_set()]
    r = galois_report(fixtures.zp_hol(p))
    yield Check("zp-hol", {"p": p}, expected, [list(s.members) for s in r.stable_list])


def _gv_remark(p=None, **_):
    p = p or 3
    b = fixtures.heis_fpf(p)
    idx = fixtures.heis_index
    singletons = all(satisfies_gv_condition(b, {idx(p, 0, 0, t)}) for t in range(p))
    cosets = all(
        satisfies_gv_condition(b, {idx(p, r, s, t) for t in range(p)})
        for r in range(p) for s in range(p)
    )
    non_subgroup = any(
        not is_subgroup(b.star, [idx(p, 0, 0, t)]) for t in range(1, p)
        if satisfies_gv_condition(b, {idx(p, 0, 0, t)})
    )
    yield Check("gv-remark", {"p": p}, [True, True, True], [singletons, cosets, non_subgroup])


def small_fixture_braces():
    """Every fixture brace of order at most 32, keyed by a readable name."""
    return {
        "rump8": fixtures.rump8(),
        "a35(3)": fixtures.fixture_brace("a35", p=3),
        **{f"a34(3,{d})": fixtures.fixture_brace("a34", p=3, delta=d) for d in range(3)},
        "heis_fpf(3)": fixtures.heis_fpf(3),
        "sn_factorization(3)": fixtures.sn_factorization(3),
        "sn_factorization(4)": fixtures.sn_factorization(4),
        "zp_hol(5)": fixtures.zp_hol(5),
        "zp_hol(7,2)": fixtures.zp_hol(7, 2),
    }


def _main_oracle(**_):
    for name, b in small_fixture_braces().items():
        alpha = alpha_embedding(identity_iso(b))
        invariant = invariant_subgroups(alpha, left_regular(b.circ))
        yield Check("main-oracle", {"brace": name}, galois_report(b).count_circ_stable, len(invariant))


TARGETS = {
    "heis-subgroups": _heis_subgroups,
    "a35-ideals": _a35_ideals,
    "a34-ideals": _a34_ideals,
    "circle-exponent": _circle_exponent,
    "rump8": _rump8,
    "heis-fpf": _heis_fpf,
    "sn": _sn,
    "zp-hol": _zp_hol,
    "gv-remark": _gv_remark,
    "main-oracle": _main_oracle,
}


def run(target: str, **params) -> list[Check]:
    """Run one target (or ``"all"`` with default parameters)."""
    if target == "all":
        return [c for fn in TARGETS.values() for c in fn()]
    if target not in TARGETS:
        raise UnknownFixture(f"unknown target {target!r}; known: all, {', '.join(TARGETS)}")
    return list(TARGETS[target](**{k: v for k, v in params.items() if v is not None}))
