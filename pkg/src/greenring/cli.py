"""Command-line front end.

Subcommands: describe | tensor | presentation | radical | stable | verify |
oracle-check.  Every command loads a datum file, computes, and writes one
deterministic JSON report (sorted keys) to stdout or --out.  Exit codes:
0 success, 1 invalid input, 2 a verification suite found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys

from .datum import gauge_comparison, load_datum
from .errors import GreenRingError
from .green import GreenRing
from .radical import radical_report
from .stable import StableRing
from .verify import SUITE_NAMES, all_passed, first_failure, run_suites


def _parse_pair(text: str) -> tuple:
    try:
        i, j = (int(part) for part in text.split(","))
    except ValueError as exc:
        raise GreenRingError(f"expected a pair like 1,2 - got {text!r}") from exc
    return i, j


def _encode_element(ring: GreenRing, x, pretty: bool):
    return ring.pretty(x) if pretty else x.to_json()


def _emit(report: dict, out_path) -> None:
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_describe(ring: GreenRing, args) -> tuple:
    report = ring.datum.describe()
    if args.compare:
        other = load_datum(args.compare)
        report["gauge_comparison"] = gauge_comparison(ring.datum, other)
    return report, 0


def _cmd_tensor(ring: GreenRing, args) -> tuple:
    left = ring.M(*_parse_pair(args.left))
    right = ring.M(*_parse_pair(args.right))
    product = left * right
    return {
        "left": _encode_element(ring, left, args.pretty),
        "right": _encode_element(ring, right, args.pretty),
        "result": _encode_element(ring, product, args.pretty),
    }, 0


def _cmd_presentation(ring: GreenRing, args) -> tuple:
    relation = ring.presentation_relation()
    constants = [
        [i, j, list(ring.simple_product(i, j))]
        for i in range(1, ring.m + 1)
        for j in range(i, ring.m + 1)
    ]
    return {
        "n": ring.n,
        "a_simple_index": ring.datum.a_index,
        "relation_coefficients_by_z_degree": [
            _encode_element(ring, c, args.pretty) for c in relation
        ],
        "group_ring_structure_constants": constants,
    }, 0


def _cmd_radical(ring: GreenRing, args) -> tuple:
    return radical_report(ring), 0


def _cmd_stable(ring: GreenRing, args) -> tuple:
    return StableRing(ring).report(), 0


def _cmd_verify(ring: GreenRing, args) -> tuple:
    names = args.suite.split(",") if args.suite else ["all"]
    results = run_suites(ring, names, max_dim=args.max_dim)
    ok = all_passed(results)
    report = {"ok": ok, "suites": results}
    if not ok:
        report["first_failure"] = first_failure(results)
    return report, 0 if ok else 2


def _cmd_oracle_check(ring: GreenRing, args) -> tuple:
    results = run_suites(ring, ["oracle"], max_dim=args.max_dim)
    ok = all_passed(results)
    report = {"ok": ok, "suites": results}
    if not ok:
        report["first_failure"] = first_failure(results)
    return report, 0 if ok else 2


_COMMANDS = {
    "describe": _cmd_describe,
    "tensor": _cmd_tensor,
    "presentation": _cmd_presentation,
    "radical": _cmd_radical,
    "stable": _cmd_stable,
    "verify": _cmd_verify,
    "oracle-check": _cmd_oracle_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greenring",
        description="Exact Green rings of pointed rank-one Hopf algebras "
        "of nilpotent type.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--datum", required=True, help="path to a datum JSON file")
        p.add_argument("--out", default=None, help="write the report here instead of stdout")
        p.add_argument("--pretty", action="store_true", help="render M[i,j] symbolically")
        p.add_argument(
            "--max-dim",
            type=int,
            default=200,
            help="oracle cutoff: skip tensor modules above this dimension",
        )
        if name == "describe":
            p.add_argument(
                "--compare",
                default=None,
                help="second datum file: report the antipode-trace gauge "
                "comparison and the cyclic-group Green-ring criterion",
            )
        if name == "tensor":
            p.add_argument("--left", required=True, help="basis index pair i,j")
            p.add_argument("--right", required=True, help="basis index pair i,j")
        if name == "verify":
            p.add_argument(
                "--suite",
                default="all",
                help="comma-separated suite names: " + ",".join(SUITE_NAMES) + " or all",
            )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        datum = load_datum(args.datum)
        ring = GreenRing(datum)
        report, code = _COMMANDS[args.command](ring, args)
    except (GreenRingError, KeyError, OSError, ValueError, json.JSONDecodeError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, getattr(args, "out", None))
        return 1
    _emit(report, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
