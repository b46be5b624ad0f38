"""File formats, roster ingestion, and the single/batch run driver.

Concept maps are JSON documents::

    {"subject": "...", "nodes": [{"id": "S1", "parent": null},
                                 {"id": "U1", "parent": "S1", "phrase": "includes"}]}

Rosters are CSV with header
``register_no,name,department,semester,subject,map_path``.  Exit statuses:
0 success, 1 validation/analysis error, 2 I/O or parse error.
"""

from __future__ import annotations

import csv
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, TextIO

from .analysis import ALL_LEVELS, DEEPEST_ONLY, analyze
from .conceptmap import ConceptMap, MapNode, integrate, validate_map
from .errors import (
    DuplicateRegisterError,
    InputError,
    MapFileParseError,
    RosterSchemaError,
    ValidationError,
)
from .grading import (
    ASCENDING,
    DESCENDING,
    EXPECTED_RESULT_PLACES,
    REPORT_FORMATS,
    format_fraction,
    grade_records,
    remediation_sequence,
    render_report,
)
from .roughset import DecisionTable, Universe

__all__ = [
    "RosterRecord",
    "RunConfig",
    "ROSTER_COLUMNS",
    "SUMMARY_FILENAME",
    "parse_concept_map",
    "parse_concept_map_file",
    "serialize_concept_map",
    "parse_roster",
    "load_decision_table_csv",
    "student_report",
    "run_analyze",
]

ROSTER_COLUMNS = ("register_no", "name", "department", "semester", "subject", "map_path")
SUMMARY_FILENAME = "cohort_summary.csv"


@dataclass(frozen=True)
class RosterRecord:
    register_no: str
    name: str
    department: str
    semester: str
    subject: str
    map_path: str


@dataclass(frozen=True)
class RunConfig:
    """Everything one run needs; exactly one of single/batch mode selected."""

    teacher_map_path: str
    student_map_path: str | None = None
    roster_path: str | None = None
    maps_dir: str | None = None
    out_path: str | None = None  # single mode; None writes to stdout
    out_dir: str | None = None  # batch mode; None means the current directory
    report_format: str = "text"
    order: str = ASCENDING
    levels: str = DEEPEST_ONLY

    def __post_init__(self) -> None:
        if (self.student_map_path is None) == (self.roster_path is None):
            raise ValueError("exactly one of student_map_path / roster_path must be set")
        if self.report_format not in REPORT_FORMATS:
            raise ValueError(f"unknown report format: {self.report_format!r}")
        if self.order not in (ASCENDING, DESCENDING):
            raise ValueError(f"order must be 'asc' or 'desc', got {self.order!r}")
        if self.levels not in (DEEPEST_ONLY, ALL_LEVELS):
            raise ValueError(f"levels must be 'deepest' or 'all', got {self.levels!r}")


def parse_concept_map(text: str, source: str = "<string>") -> ConceptMap:
    """Parse and validate the JSON concept-map format."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MapFileParseError(
            f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("nodes"), list):
        raise MapFileParseError(f"{source}: expected an object with a 'nodes' array")
    subject = doc.get("subject", "untitled")
    if not isinstance(subject, str):
        raise MapFileParseError(f"{source}: 'subject' must be a string")
    nodes: list[MapNode] = []
    for i, entry in enumerate(doc["nodes"]):
        if not isinstance(entry, dict) or "id" not in entry or "parent" not in entry:
            raise MapFileParseError(f"{source}: nodes[{i}] must be an object with 'id' and 'parent'")
        nid, parent, phrase = entry["id"], entry["parent"], entry.get("phrase")
        if not isinstance(nid, str):
            raise MapFileParseError(f"{source}: nodes[{i}].id must be a string")
        if parent is not None and not isinstance(parent, str):
            raise MapFileParseError(f"{source}: nodes[{i}].parent must be a string or null")
        if phrase is not None and not isinstance(phrase, str):
            raise MapFileParseError(f"{source}: nodes[{i}].phrase must be a string")
        nodes.append(MapNode(id=nid, parent=parent, phrase=phrase))
    return validate_map(nodes, subject=subject)


def parse_concept_map_file(path: str | Path) -> ConceptMap:
    path = Path(path)
    return parse_concept_map(path.read_text(encoding="utf-8"), source=str(path))


def serialize_concept_map(cmap: ConceptMap) -> str:
    """Inverse of :func:`parse_concept_map` up to key order."""
    nodes = []
    for n in cmap.nodes:
        entry: dict[str, object] = {"id": n.id, "parent": n.parent}
        if n.phrase is not None:
            entry["phrase"] = n.phrase
        nodes.append(entry)
    return json.dumps({"subject": cmap.subject, "nodes": nodes}, indent=2) + "\n"


def parse_roster(path: str | Path) -> tuple[RosterRecord, ...]:
    """Read a roster CSV; rows keep file order, register numbers must be unique."""
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise RosterSchemaError(f"{path}: empty roster file")
        missing = [c for c in ROSTER_COLUMNS if c not in reader.fieldnames]
        if missing:
            raise RosterSchemaError(f"{path}: missing column(s): {', '.join(missing)}")
        records: list[RosterRecord] = []
        seen: set[str] = set()
        for lineno, row in enumerate(reader, start=2):
            register_no = (row["register_no"] or "").strip()
            if not register_no:
                raise RosterSchemaError(f"{path}: line {lineno}: empty register_no")
            if register_no in seen:
                raise DuplicateRegisterError(f"{path}: duplicate register_no {register_no!r}")
            seen.add(register_no)
            records.append(
                RosterRecord(
                    register_no=register_no,
                    name=row["name"],
                    department=row["department"],
                    semester=row["semester"],
                    subject=row["subject"],
                    map_path=row["map_path"],
                )
            )
    return tuple(records)


def load_decision_table_csv(
    path: str | Path,
    condition: Iterable[str] | None = None,
    decision: Iterable[str] | None = None,
) -> DecisionTable:
    """Load a decision table from CSV: first column object ids, remaining
    columns attribute values.  Defaults: all attributes but the last are
    condition features, the last is the decision feature."""
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or len(rows[0]) < 2:
        raise InputError(f"{path}: need a header with an object column and at least one attribute")
    attributes = tuple(rows[0][1:])
    objects: list[str] = []
    values: dict[tuple[str, str], str] = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(rows[0]):
            raise InputError(f"{path}: line {lineno}: expected {len(rows[0])} cells, got {len(row)}")
        obj = row[0]
        if obj in objects:
            raise InputError(f"{path}: duplicate object id {obj!r}")
        objects.append(obj)
        for attr, val in zip(attributes, row[1:]):
            values[(obj, attr)] = val
    if condition is None:
        condition = attributes[:-1]
    if decision is None:
        decision = attributes[-1:]
    return DecisionTable(
        objects=Universe(tuple(objects)),
        attributes=attributes,
        values=values,
        condition=frozenset(condition),
        decision=frozenset(decision),
    )


def student_report(
    teacher: ConceptMap,
    student: ConceptMap,
    report_format: str = "text",
    order: str = ASCENDING,
    levels: str = DEEPEST_ONLY,
) -> str:
    """Full pipeline for one student: integrate, analyze, grade, plan, render."""
    imap = integrate(teacher, student)
    result = analyze(imap, levels=levels)
    graded = grade_records(result.records)
    plan = remediation_sequence(result.records, order=order)
    return render_report(result, graded, plan, report_format)


def run_analyze(config: RunConfig, stderr: TextIO | None = None) -> int:
    """Drive one run and return the process exit status.

    Single mode renders one report to `out_path` (or stdout); batch mode
    writes one report per roster row named ``<register_no>.<format>`` plus a
    cohort summary.  Any error produces a one-line diagnostic on `stderr`.
    """
    err = stderr if stderr is not None else sys.stderr
    try:
        _run(config)
    except ValidationError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    return 0


def _run(config: RunConfig) -> None:
    teacher = parse_concept_map_file(config.teacher_map_path)
    if config.student_map_path is not None:
        student = parse_concept_map_file(config.student_map_path)
        report = student_report(
            teacher,
            student,
            report_format=config.report_format,
            order=config.order,
            levels=config.levels,
        )
        if config.out_path is not None:
            Path(config.out_path).write_text(report, encoding="utf-8")
        else:
            sys.stdout.write(report)
        return
    roster = parse_roster(config.roster_path)
    out_dir = Path(config.out_dir) if config.out_dir is not None else Path(".")
    out_dir.mkdir(parents=True, exist_ok=True)
    summary_rows: list[tuple[str, str, str]] = []
    for rec in roster:
        map_path = Path(rec.map_path)
        if config.maps_dir is not None and not map_path.is_absolute():
            map_path = Path(config.maps_dir) / map_path
        if not map_path.is_file():
            raise InputError(f"student map for {rec.register_no} not found: {map_path}")
        try:
            student = parse_concept_map_file(map_path)
            imap = integrate(teacher, student)
            result = analyze(imap, levels=config.levels)
        except ValidationError as exc:
            raise ValidationError(f"student {rec.register_no} ({map_path}): {exc}") from exc
        graded = grade_records(result.records)
        plan = remediation_sequence(result.records, order=config.order)
        report = render_report(result, graded, plan, config.report_format)
        out_file = out_dir / f"{rec.register_no}.{config.report_format}"
        out_file.write_text(report, encoding="utf-8")
        summary_rows.append(
            (
                rec.register_no,
                format_fraction(result.expected_result, EXPECTED_RESULT_PLACES),
                ";".join(f"{g.node}={g.grade}" for g in graded),
            )
        )
    with (out_dir / SUMMARY_FILENAME).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["register_no", "expected_result", "grades"])
        writer.writerows(summary_rows)
