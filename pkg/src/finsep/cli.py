"""Command-line front end.

Subcommands: ``parse`` (echo the canonical form of a space or map
expression), ``axioms`` (classification table for a space), ``lift``
(decide one lifting problem), ``census`` (enumerate all spaces of a
size, cross-check the axiom suites, optionally persist records).

Exit codes: 0 success / LIFTS; 1 parse, continuity, or usage error;
2 internal disagreement between direct and diagram methods on a
hard-equivalence axiom; 3 lifting FAILS; 4 census file I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .axioms import DIRECT_ONLY, HARD_AXIOMS, SOFT_AXIOMS, Axiom
from .census import (
    classify_space,
    lifting_classification,
    run_equivalence_suite,
    run_implication_suite,
    run_strength_chain_suite,
    write_census,
)
from .lifting import has_lifting
from .maps import ContinuousMap, ContinuityError
from .notation import NotationError, format_map, format_space, parse, parse_map
from .spaces import FiniteSpace, canonical_arrows

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DISAGREE = 2
EXIT_FAILS = 3
EXIT_IO = 4


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; keep 2 reserved for suite
    # disagreement and fold usage problems into the parse-error code.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _space_json(space: FiniteSpace) -> dict:
    return {
        "points": space.n,
        "labels": [space.label(x) for x in range(space.n)],
        "arrows": [list(arrow) for arrow in canonical_arrows(space)],
        "display": format_space(space),
    }


def _map_json(m: ContinuousMap) -> dict:
    return {
        "dom": _space_json(m.dom),
        "cod": _space_json(m.cod),
        "f": list(m.f),
        "display": format_map(m),
    }


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _cmd_parse(args) -> int:
    obj = parse(args.text)
    if isinstance(obj, ContinuousMap):
        payload = {"kind": "map", **_map_json(obj)}
        display = format_map(obj)
    else:
        payload = {"kind": "space", **_space_json(obj)}
        display = format_space(obj)
    if args.json:
        _print_json(payload)
    else:
        print(display)
    return EXIT_OK


_BOOL = {True: "true", False: "false"}


def _cmd_axioms(args) -> int:
    space = parse(args.text)
    if isinstance(space, ContinuousMap):
        print("error: expected a space expression, got a map", file=sys.stderr)
        return EXIT_PARSE
    method = args.method
    direct = classify_space(space) if method in ("direct", "both") else None
    lifting = lifting_classification(space) if method in ("lifting", "both") else None

    rows = []
    disagree = False
    for axiom in Axiom:
        d = direct[axiom] if direct is not None else None
        l = lifting.get(axiom) if lifting is not None else None
        agree = None
        if method == "both" and axiom not in DIRECT_ONLY:
            agree = d == l
            if not agree and axiom in HARD_AXIOMS:
                disagree = True
        rows.append((axiom, d, l, agree))

    if args.json:
        payload = {
            "space": format_space(space),
            "method": method,
            "axioms": {
                axiom.value: {"direct": d, "lifting": l, "agree": agree}
                for axiom, d, l, agree in rows
            },
        }
        _print_json(payload)
    else:
        headers = ["AXIOM"]
        if direct is not None:
            headers.append("DIRECT")
        if lifting is not None:
            headers.append("LIFTING")
        if method == "both":
            headers.append("AGREE")
        fmt = "{:<24}" + " {:>8}" * (len(headers) - 1)
        print(fmt.format(*headers))
        for axiom, d, l, agree in rows:
            cells = [axiom.value]
            if direct is not None:
                cells.append(_BOOL[d])
            if lifting is not None:
                cells.append("-" if axiom in DIRECT_ONLY else _BOOL[l])
            if method == "both":
                cells.append("-" if agree is None else _BOOL[agree])
            print(fmt.format(*cells))
    return EXIT_DISAGREE if disagree else EXIT_OK


def _cmd_lift(args) -> int:
    left = parse_map(args.left)
    right = parse_map(args.right)
    result = has_lifting(left, right)
    if args.json:
        payload = {"lifts": result.holds, "counterexample": None}
        if not result.holds:
            sq = result.counterexample
            payload["counterexample"] = {
                "bottom": format_map(sq.bottom),
                "top": format_map(sq.top),
            }
        _print_json(payload)
    else:
        if result.holds:
            print("LIFTS")
        else:
            sq = result.counterexample
            print("FAILS")
            print(f"bottom: {format_map(sq.bottom)}")
            print(f"top: {format_map(sq.top)}")
    return EXIT_OK if result.holds else EXIT_FAILS


def _cmd_census(args) -> int:
    n = args.n
    up_to_iso = args.iso
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                report = write_census(fh, n, up_to_iso)
        else:
            report = run_equivalence_suite(n, up_to_iso)
    except OSError as exc:
        print(f"error: cannot write census file: {exc}", file=sys.stderr)
        return EXIT_IO

    implications = None
    strength = None
    if args.verify:
        implications = run_implication_suite(n, up_to_iso)
        if n <= 3:
            strength = run_strength_chain_suite(n, up_to_iso)

    hard = report.hard_mismatches
    soft_agreement = {
        axiom.value: report.per_axiom[axiom].agreement for axiom in sorted(SOFT_AXIOMS)
    }
    bad = bool(hard) or (implications is not None and not implications.ok) or (
        strength is not None and not strength.ok
    )

    if args.json:
        payload = {
            "n": n,
            "up_to_iso": up_to_iso,
            "spaces": report.spaces_checked,
            "hard_mismatches": [m.as_dict() for m in hard],
            "soft_agreement": soft_agreement,
        }
        if implications is not None:
            payload["implications"] = {
                "checked": implications.spaces_checked,
                "violations": implications.violations,
            }
        if strength is not None:
            payload["strength_chain"] = {
                "checked": strength.spaces_checked,
                "violations": strength.violations,
            }
        _print_json(payload)
    else:
        kind = "spaces up to homeomorphism" if up_to_iso else "labeled spaces"
        print(
            f"{report.spaces_checked} {kind}; "
            f"equivalence suite: {len(hard)} hard mismatches"
        )
        for axiom_name, fraction in soft_agreement.items():
            agg = report.per_axiom[Axiom(axiom_name)]
            print(
                f"{axiom_name} direct-vs-diagram agreement: "
                f"{agg.checked - len(agg.mismatches)}/{agg.checked}"
            )
            for m in agg.mismatches:
                print(
                    f"  mismatch at index {m.index}: {m.space} "
                    f"(direct={_BOOL[m.direct]}, lifting={_BOOL[m.lifting]})"
                )
        for m in hard:
            print(
                f"HARD MISMATCH {m.axiom.value} at index {m.index}: {m.space} "
                f"(direct={_BOOL[m.direct]}, lifting={_BOOL[m.lifting]})"
            )
        if implications is not None:
            verdict = "ok" if implications.ok else f"{len(implications.violations)} violations"
            print(f"implication suite: {verdict} ({implications.spaces_checked} spaces)")
            for line in implications.violations:
                print(f"  {line}")
        if strength is not None:
            verdict = "ok" if strength.ok else f"{len(strength.violations)} violations"
            print(f"strength chain: {verdict} ({strength.spaces_checked} spaces)")
            for line in strength.violations:
                print(f"  {line}")
    return EXIT_DISAGREE if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="finsep",
        description="Finite topological spaces: notation, lifting problems, "
        "separation axioms, and exhaustive cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_parse = sub.add_parser("parse", help="parse a space or map expression")
    p_parse.add_argument("text", help='expression, e.g. "{a>b}" or "{a>b} -> {a=b}"')
    p_parse.add_argument("--json", action="store_true", help="machine-readable output")
    p_parse.set_defaults(func=_cmd_parse)

    p_axioms = sub.add_parser("axioms", help="classification table for a space")
    p_axioms.add_argument("text", help="space expression")
    p_axioms.add_argument(
        "--method",
        choices=("direct", "lifting", "both"),
        default="both",
        help="how to decide each axiom (default: both, with an AGREE column)",
    )
    p_axioms.add_argument("--json", action="store_true", help="machine-readable output")
    p_axioms.set_defaults(func=_cmd_axioms)

    p_lift = sub.add_parser("lift", help="decide one lifting problem")
    p_lift.add_argument("left", help="left map expression")
    p_lift.add_argument("right", help="right map expression")
    p_lift.add_argument("--json", action="store_true", help="machine-readable output")
    p_lift.set_defaults(func=_cmd_lift)

    p_census = sub.add_parser(
        "census", help="enumerate all spaces of one size and run the suites"
    )
    p_census.add_argument("-n", type=int, required=True, help="point count")
    p_census.add_argument(
        "--iso", action="store_true", help="one space per homeomorphism class"
    )
    p_census.add_argument("--out", help="write record lines + summary to this file")
    p_census.add_argument(
        "--verify",
        action="store_true",
        help="also run the implication suite (and the strength chain for n <= 3)",
    )
    p_census.add_argument("--json", action="store_true", help="machine-readable summary")
    p_census.set_defaults(func=_cmd_census)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # argparse help/usage paths
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    except (NotationError, ContinuityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
