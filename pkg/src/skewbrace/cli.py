"""Command-line front end.

Exit codes: 0 on success, 1 when an input fails validation (or a reproduce
target fails), 2 on I/O, parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures, reproduce
from .algebra import NilpotentAlgebra, brace_from_algebra, left_ideals as algebra_left_ideals
from .brace import SkewBrace, circ_stable_subgroups, galois_report, left_ideals, trivial_brace
from .constructors import (
    brace_from_exact_factorization,
    brace_from_fpf_pair,
    brace_from_holomorph_regular,
    make_exact_factorization,
    make_fpf_pair,
)
from .errors import BadParams, BraceError, UnknownFixture
from .groups import GroupTable, fingerprint, subgroups
from .perm import PermGroup, is_regular


class UsageError(Exception):
    pass


# loading

def read_json(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError(f"{path}: expected a JSON object")
    return data


def detect_kind(data: dict) -> str:
    keys = set(data)
    for kind, needed in (
        ("brace", {"star", "circ"}),
        ("fpf", {"gamma", "g", "f_l", "f_r"}),
        ("factorization", {"g", "h", "j"}),
        ("holomorph-regular", {"group", "regular"}),
        ("algebra", {"p", "dim", "mul"}),
        ("perm-group", {"degree", "elements"}),
        ("group", {"table"}),
    ):
        if needed <= keys:
            return kind
    raise UsageError(f"unrecognised JSON object with keys {sorted(keys)}")


def build(data: dict):
    """Validate a JSON object into the corresponding library value."""
    kind = detect_kind(data)
    if kind == "group":
        return GroupTable.from_json(data)
    if kind == "brace":
        return SkewBrace.from_json(data)
    if kind == "perm-group":
        return PermGroup.from_json(data)
    if kind == "algebra":
        return NilpotentAlgebra.from_json(data)
    if kind == "fpf":
        return make_fpf_pair(GroupTable.from_json(data["gamma"]), GroupTable.from_json(data["g"]),
                             data["f_l"], data["f_r"])
    if kind == "factorization":
        return make_exact_factorization(GroupTable.from_json(data["g"]), data["h"], data["j"])
    return (GroupTable.from_json(data["group"]), PermGroup.from_json(data["regular"]))


def _fixture_params(args) -> dict:
    return {"p": args.p, "delta": args.delta, "n": args.n}


def load_input(args):
    if getattr(args, "input", None) and getattr(args, "fixture", None):
        raise UsageError("give either --in or --fixture, not both")
    if getattr(args, "input", None):
        return build(read_json(args.input))
    if getattr(args, "fixture", None):
        return fixtures.builtin_fixture(args.fixture, **_fixture_params(args))
    raise UsageError("an input is required: --in FILE or --fixture NAME")


def as_brace(obj, max_order=None) -> SkewBrace:
    if isinstance(obj, SkewBrace):
        return obj
    if isinstance(obj, NilpotentAlgebra):
        return brace_from_algebra(obj, max_order)
    if isinstance(obj, GroupTable):
        return trivial_brace(obj)
    raise UsageError(f"expected a brace, got {type(obj).__name__}")


# output

def emit(args, payload: dict, text: str | None = None) -> None:
    if args.format == "text" and text is not None:
        print(text)
    else:
        print(json.dumps(payload, separators=(",", ":")))


def _aligned(rows: list[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


# commands

def cmd_validate(args) -> int:
    obj = load_input(args)
    if isinstance(obj, GroupTable):
        payload = {"valid": True, "kind": "group", **fingerprint(obj)}
        payload["element_orders"] = {str(k): v for k, v in payload["element_orders"].items()}
    elif isinstance(obj, SkewBrace):
        payload = {"valid": True, "kind": "brace", "order": obj.order,
                   "star_abelian": obj.star.is_abelian, "circ_abelian": obj.circ.is_abelian}
    elif isinstance(obj, PermGroup):
        payload = {"valid": True, "kind": "perm-group", "degree": obj.degree, "order": obj.order,
                   "regular": is_regular(obj)}
    elif isinstance(obj, NilpotentAlgebra):
        payload = {"valid": True, "kind": "algebra", "p": obj.p, "dim": obj.dim}
    elif isinstance(obj, tuple):
        g, r = obj
        brace_from_holomorph_regular(g, r)
        payload = {"valid": True, "kind": "holomorph-regular", "order": g.order}
    else:
        payload = {"valid": True, "kind": type(obj).__name__, "order": obj.g.order}
    emit(args, payload, _aligned(list(payload.items())))
    return 0


def cmd_subgroups(args) -> int:
    obj = load_input(args)
    if isinstance(obj, GroupTable):
        g = obj
    else:
        b = as_brace(obj, args.max_order)
        g = b.circ if args.of == "circ" else b.star
    subs = subgroups(g, args.max_order)
    payload = {"order": g.order, "count": len(subs), "subgroups": [list(s.members) for s in subs]}
    emit(args, payload, "\n".join([f"{len(subs)} subgroups"] + [" ".join(map(str, s.members)) for s in subs]))
    return 0


def cmd_stable(args) -> int:
    b = as_brace(load_input(args), args.max_order)
    subs = circ_stable_subgroups(b, args.max_order)
    payload = {"count": len(subs), "stable_list": [list(s.members) for s in subs]}
    emit(args, payload, "\n".join([f"{len(subs)} circle-stable subgroups"] + [" ".join(map(str, s.members)) for s in subs]))
    return 0


def cmd_ideals(args) -> int:
    obj = load_input(args)
    if isinstance(obj, NilpotentAlgebra):
        subs = algebra_left_ideals(obj, args.max_order)
    else:
        subs = left_ideals(as_brace(obj, args.max_order), args.max_order)
    payload = {"count": len(subs), "ideals": [list(s.members) for s in subs]}
    emit(args, payload, "\n".join([f"{len(subs)} left ideals"] + [" ".join(map(str, s.members)) for s in subs]))
    return 0


def cmd_report(args) -> int:
    b = as_brace(load_input(args), args.max_order)
    r = galois_report(b, args.max_order).to_json()
    text = _aligned([("stable", r["stable"]), ("subgroups", r["subgroups"]), ("ratio", r["ratio"])])
    emit(args, r, text)
    return 0


def cmd_brace_build(args) -> int:
    sources = [s for s in ("holomorph_regular", "exact_factorization", "fpf", "algebra") if getattr(args, s)]
    if len(sources) != 1:
        raise UsageError("brace build needs exactly one of --holomorph-regular, --exact-factorization, --fpf, --algebra")
    source = sources[0]
    data = read_json(getattr(args, source))
    wanted = {"holomorph_regular": "holomorph-regular", "exact_factorization": "factorization",
              "fpf": "fpf", "algebra": "algebra"}[source]
    if detect_kind(data) != wanted:
        raise UsageError(f"--{source.replace('_', '-')} expects a {wanted} JSON object")
    obj = build(data)
    if source == "holomorph_regular":
        b = brace_from_holomorph_regular(*obj)
    elif source == "exact_factorization":
        b, _ = brace_from_exact_factorization(obj)
    elif source == "fpf":
        b = brace_from_fpf_pair(obj)
    else:
        b = brace_from_algebra(obj, args.max_order)
    emit(args, b.to_json())
    return 0


def cmd_reproduce(args) -> int:
    try:
        checks = reproduce.run(args.target, **_fixture_params(args))
    except (UnknownFixture, BadParams) as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps([c.to_json() for c in checks], separators=(",", ":")))
    else:
        for c in checks:
            params = " ".join(f"{k}={v}" for k, v in c.params.items())
            print(f"{c.target:16} {params:22} expected {c.expected}  computed {c.computed}  "
                  f"{'PASS' if c.passed else 'FAIL'}")
    return 0 if all(c.passed for c in checks) else 1


# parser

def _common(suppress: bool) -> argparse.ArgumentParser:
    default = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=["json", "text"], default=default if suppress else "json")
    p.add_argument("--max-order", type=int, default=default,
                   help="enumeration cap (default: $BRACE_MAX_ORDER or 512)")
    return p


def _input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="input", metavar="FILE", help="JSON input ('-' for stdin)")
    p.add_argument("--fixture", metavar="NAME", help=f"one of: {', '.join(fixtures.FIXTURES)}")
    _param_args(p)


def _param_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--n", type=int)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewbrace", parents=[_common(False)],
                                     description="Skew braces, circle-stable subgroups and Galois-correspondence counts.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(True)

    p = sub.add_parser("validate", parents=[common], help="validate a JSON object")
    _input_args(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("subgroups", parents=[common], help="list all subgroups")
    _input_args(p)
    p.add_argument("--of", choices=["star", "circ"], default="star", help="which group of a brace")
    p.set_defaults(func=cmd_subgroups)

    p = sub.add_parser("stable", parents=[common], help="list circle-stable subgroups of a brace")
    _input_args(p)
    p.set_defaults(func=cmd_stable)

    p = sub.add_parser("ideals", parents=[common], help="list left ideals of an algebra or brace")
    _input_args(p)
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("report", parents=[common], help="Galois-correspondence counts for a brace")
    _input_args(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("brace", help="brace construction")
    bsub = p.add_subparsers(dest="brace_command", required=True)
    b = bsub.add_parser("build", parents=[common], help="build a brace and print its JSON")
    b.add_argument("--holomorph-regular", metavar="FILE")
    b.add_argument("--exact-factorization", metavar="FILE")
    b.add_argument("--fpf", metavar="FILE")
    b.add_argument("--algebra", metavar="FILE")
    b.set_defaults(func=cmd_brace_build)

    p = sub.add_parser("reproduce", parents=[common], help="compare computed values with the claimed ones")
    p.add_argument("target", help=f"all, {', '.join(reproduce.TARGETS)}")
    _param_args(p)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UnknownFixture, BadParams) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BraceError as exc:
        print(f"invalid: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
