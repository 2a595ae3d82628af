"""Knot tables stored one JSON object per line, and verdict reports."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from importlib import resources
from pathlib import Path
from typing import Iterable

from .diagrams.pd import LinkDiagram, PDError, parse_pd

__all__ = [
    "KnotRecord",
    "TableError",
    "load_table",
    "save_table",
    "fixture_path",
    "load_fixtures",
    "render_report",
    "render_report_jsonl",
    "save_report",
]


class TableError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


@dataclass(frozen=True)
class KnotRecord:
    name: str
    pd: str
    crossing_number: int
    prime: bool | None = None
    unknotting_number: int | None = None
    signature: int | None = None
    qmax_expected: int | None = None
    alternating: bool | None = None

    def diagram(self) -> LinkDiagram:
        d = parse_pd(self.pd)
        return LinkDiagram(d.crossings, d.loops, self.name)

    def to_json(self) -> str:
        data = {k: v for k, v in asdict(self).items() if v is not None}
        return json.dumps(data, sort_keys=False)


_FIELDS = {f.name for f in fields(KnotRecord)}
_REQUIRED = {"name", "pd", "crossing_number"}


def _record(obj, line: int) -> KnotRecord:
    if not isinstance(obj, dict):
        raise TableError("expected a JSON object", line)
    missing = _REQUIRED - obj.keys()
    if missing:
        raise TableError(f"missing field(s) {sorted(missing)}", line)
    unknown = obj.keys() - _FIELDS
    if unknown:
        raise TableError(f"unknown field(s) {sorted(unknown)}", line)
    for key in ("crossing_number", "unknotting_number", "signature", "qmax_expected"):
        v = obj.get(key)
        if v is not None and (not isinstance(v, int) or isinstance(v, bool)):
            raise TableError(f"{key} must be an integer", line)
    rec = KnotRecord(**obj)
    try:
        d = parse_pd(rec.pd)
    except PDError as exc:
        raise TableError(f"bad PD for {rec.name}: {exc}", line) from exc
    if d.crossing_number != rec.crossing_number:
        raise TableError(
            f"{rec.name}: crossing_number {rec.crossing_number} but the PD has "
            f"{d.crossing_number} crossings",
            line,
        )
    return rec


def load_table(path) -> list[KnotRecord]:
    """Read and validate a table; blank lines are skipped."""
    out: list[KnotRecord] = []
    names: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for no, text in enumerate(fh, start=1):
            if not text.strip():
                continue
            try:
                obj = json.loads(text)
            except json.JSONDecodeError as exc:
                raise TableError(f"invalid JSON ({exc.msg})", no) from exc
            rec = _record(obj, no)
            if rec.name in names:
                raise TableError(f"duplicate name {rec.name} (first on line {names[rec.name]})", no)
            names[rec.name] = no
            out.append(rec)
    return out


def save_table(records: Iterable[KnotRecord], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(rec.to_json() + "\n")


def fixture_path() -> Path:
    return Path(str(resources.files("knotq") / "data" / "knots.jsonl"))


def load_fixtures() -> list[KnotRecord]:
    """The bundled table: the unknot, all prime knots up to 8 crossings and
    the Perko knot 10_161."""
    return load_table(fixture_path())


# -- reports -----------------------------------------------------------------

REPORT_HEADER = "# name qmax c sigma u verdict fired"


def _cell(v) -> str:
    return "-" if v is None else str(v)


def render_report(verdicts) -> str:
    lines = [REPORT_HEADER]
    for v in verdicts:
        if v.error:
            lines.append(f"{v.knot} - {_cell(v.c)} - - ERROR {v.error}")
            continue
        fired = ",".join(t.test for t in v.fired) or "-"
        lines.append(
            f"{v.knot} {v.qmax} {v.c} {_cell(v.sigma)} {_cell(v.u)} {v.overall.value} {fired}"
        )
    return "\n".join(lines) + "\n"


def render_report_jsonl(verdicts) -> str:
    return "".join(json.dumps(v.as_dict(), sort_keys=True) + "\n" for v in verdicts)


def save_report(verdicts, path) -> None:
    """Write the text report, or the JSON-lines form for ``.jsonl`` paths."""
    verdicts = list(verdicts)
    text = render_report_jsonl(verdicts) if str(path).endswith(".jsonl") else render_report(verdicts)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
