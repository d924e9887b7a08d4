"""Command-line front end.

Subcommands: ``apply`` (act on a free-group word by a braid), ``matrix``
(abelianized image of a braid), ``equal`` (exact braid equality),
``parse`` (echo a word in canonical form), and ``verify`` (run a named
check suite).  Exit codes: 0 success / equal / all checks passed,
1 verified false, 2 usage or parse error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import endo, monoid, sp4
from .action import GenusContext, braid_automorphism, verify_center_vanishes, verify_u_braid_relations
from .braids import braids_equal, format_braid, parse_braid
from .errors import BraidactError, ResourceLimitError
from .report import QUOTIENT_PASS, VerificationReport, merge_reports
from .symplectic import (
    braid_matrix,
    verify_sl2_braid_relation,
    verify_symplectic_generators,
    verify_symplectic_random,
)
from .words import format_word, parse_word

DEFAULT_SEED = 20260809

SUITES = ("relations", "center", "symplectic", "sp4", "monoid", "all")


def _print_report(report: VerificationReport, as_json: bool) -> int:
    if as_json:
        print(report.to_json())
    else:
        for check in report.sorted_checks():
            tag = "PASS " if check.status == "pass" else (
                "QPASS" if check.status == QUOTIENT_PASS else "FAIL "
            )
            print(f"{tag}  {check.check_id}  {check.description}")
            if check.witness:
                print(f"       left:  {check.witness.get('left', '')}")
                print(f"       right: {check.witness.get('right', '')}")
        print(report.summary())
    return 0 if report.all_passed() else 1


def _run_suite(name: str, genus: int, max_len: int, seed: int) -> VerificationReport:
    ctx = GenusContext(genus)
    if name == "relations":
        return verify_u_braid_relations(ctx)
    if name == "center":
        return verify_center_vanishes(ctx)
    if name == "symplectic":
        return merge_reports(
            "symplectic",
            (
                verify_symplectic_generators(),
                verify_sl2_braid_relation(),
                verify_symplectic_random(ctx, seed=seed),
            ),
        )
    if name == "sp4":
        return sp4.verify_all()
    if name == "monoid":
        reports = [
            monoid.check_omega_alphabet(ctx),
            monoid.free_monoid_oracle(max_len=10),
        ]
        if genus >= 2:
            reports.append(monoid.verify_normal_form_sweep(ctx, max_len))
            reports.append(monoid.verify_section(ctx, min(4, max_len)))
        return merge_reports("monoid", reports)
    if name == "all":
        return merge_reports(
            "all",
            (
                _run_suite("relations", genus, max_len, seed),
                _run_suite("center", genus, max_len, seed),
                _run_suite("symplectic", genus, max_len, seed),
                _run_suite("sp4", genus, max_len, seed),
                _run_suite("monoid", genus, max_len, seed),
            ),
        )
    raise BraidactError(f"unknown suite {name!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidact",
        description="Braid actions on free groups and their symplectic shadows.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_apply = sub.add_parser("apply", help="act on a free-group word by a braid")
    p_apply.add_argument("braid", help="braid word, e.g. '1 -2' or 'DELTA6'")
    p_apply.add_argument("word", help="free-group word, e.g. 'a1 B2'")
    p_apply.add_argument("--genus", type=int, default=2)
    p_apply.add_argument("--max-len", type=int, default=None, help="word length cap")
    p_apply.add_argument("--json", action="store_true")

    p_matrix = sub.add_parser("matrix", help="abelianized image of a braid")
    p_matrix.add_argument("braid")
    p_matrix.add_argument("--genus", type=int, default=2)
    p_matrix.add_argument("--json", action="store_true")

    p_equal = sub.add_parser("equal", help="decide equality of two braid words")
    p_equal.add_argument("braid1")
    p_equal.add_argument("braid2")
    p_equal.add_argument("--strands", type=int, default=6)
    p_equal.add_argument("--json", action="store_true")

    p_parse = sub.add_parser("parse", help="echo a word in canonical form")
    p_parse.add_argument("kind", choices=("word", "braid", "omega"))
    p_parse.add_argument("text")
    p_parse.add_argument("--genus", type=int, default=2)
    p_parse.add_argument("--strands", type=int, default=6)
    p_parse.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--genus", type=int, default=2)
    p_verify.add_argument(
        "--max-len",
        type=int,
        default=5,
        help="enumeration bound for the monoid normal-form sweep",
    )
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--json", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "apply":
            if args.max_len is not None:
                endo.set_length_cap(args.max_len)
            ctx = GenusContext(args.genus)
            braid = parse_braid(args.braid, ctx.strands)
            word = parse_word(args.word, ctx.rank)
            image = braid_automorphism(ctx, braid).apply(word)
            text = format_word(image)
            print(json.dumps({"result": text}) if args.json else text)
            return 0

        if args.command == "matrix":
            ctx = GenusContext(args.genus)
            braid = parse_braid(args.braid, ctx.strands)
            m = braid_matrix(ctx, braid)
            print(json.dumps(m.to_lists()) if args.json else str(m))
            return 0

        if args.command == "equal":
            b1 = parse_braid(args.braid1, args.strands)
            b2 = parse_braid(args.braid2, args.strands)
            same = braids_equal(b1, b2)
            if args.json:
                print(json.dumps({"equal": same}))
            else:
                print("equal" if same else "not equal")
            return 0 if same else 1

        if args.command == "parse":
            if args.kind == "word":
                text = format_word(parse_word(args.text, 2 * args.genus))
            elif args.kind == "braid":
                text = format_braid(parse_braid(args.text, args.strands))
            else:
                text = monoid.format_omega(monoid.parse_omega(args.text, args.genus))
            print(json.dumps({"result": text}) if args.json else text)
            return 0

        if args.command == "verify":
            if not args.json and args.suite in ("symplectic", "all"):
                print(f"seed: {args.seed}")
            report = _run_suite(args.suite, args.genus, args.max_len, args.seed)
            return _print_report(report, args.json)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BraidactError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
