"""Command line: analyze one student, batch a roster, or validate a map."""

from __future__ import annotations

import argparse
import sys

from .errors import InputError, ValidationError
from .fileio import RunConfig, parse_concept_map_file, run_analyze


def _add_report_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "csv", "json"), default="text",
                        help="report format (default: text)")
    parser.add_argument("--order", choices=("asc", "desc"), default="asc",
                        help="remediation order: smallest or largest importance first")
    parser.add_argument("--levels", choices=("deepest", "all"), default="deepest",
                        help="process only the deepest boundary set or all of them")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="roughmap",
        description="Compare student concept maps against a teacher's reference map, "
                    "grade per-concept mastery, and emit a remediation plan.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze_p = sub.add_parser("analyze", help="grade one student map")
    analyze_p.add_argument("--teacher", required=True, help="teacher concept-map JSON")
    analyze_p.add_argument("--student", required=True, help="student concept-map JSON")
    _add_report_flags(analyze_p)
    analyze_p.add_argument("--out", help="write the report here instead of stdout")

    batch_p = sub.add_parser("batch", help="grade every student on a roster")
    batch_p.add_argument("--teacher", required=True, help="teacher concept-map JSON")
    batch_p.add_argument("--roster", required=True, help="roster CSV")
    batch_p.add_argument("--maps-dir", help="base directory for relative map paths in the roster")
    batch_p.add_argument("--out-dir", default=".",
                         help="directory for per-student reports and cohort_summary.csv")
    _add_report_flags(batch_p)

    validate_p = sub.add_parser("validate", help="check that a map file is a valid rooted tree")
    validate_p.add_argument("map_path")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        config = RunConfig(
            teacher_map_path=args.teacher,
            student_map_path=args.student,
            out_path=args.out,
            report_format=args.format,
            order=args.order,
            levels=args.levels,
        )
        return run_analyze(config)
    if args.command == "batch":
        config = RunConfig(
            teacher_map_path=args.teacher,
            roster_path=args.roster,
            maps_dir=args.maps_dir,
            out_dir=args.out_dir,
            report_format=args.format,
            order=args.order,
            levels=args.levels,
        )
        return run_analyze(config)
    try:
        parse_concept_map_file(args.map_path)
    except ValidationError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 1
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"valid: {args.map_path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
