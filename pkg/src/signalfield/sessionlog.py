"""Flat CSV interchange format for session logs.

One row per signal-session:

    signal,session,day,scores_x,scores_y,occurrences,note

scores_x and scores_y are ``;``-separated integers of equal count; both
empty means a review-only session. The session column is a 1-based
per-signal counter kept for human readers; import validates it.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Union

from signalfield.engine import NrsPair, SessionInput
from signalfield.register import Register

HEADER = ["signal", "session", "day", "scores_x", "scores_y", "occurrences", "note"]


class SessionLogError(ValueError):
    """A session-log row that cannot be imported, with its row number."""

    def __init__(self, row_number: int, message: str):
        self.row_number = row_number
        super().__init__(f"row {row_number}: {message}")


def _parse_scores(text: str, row_number: int, axis: str) -> list[int]:
    if text == "":
        return []
    scores = []
    for part in text.split(";"):
        try:
            value = int(part)
        except ValueError:
            raise SessionLogError(
                row_number, f"scores_{axis} entry {part!r} is not an integer"
            ) from None
        if not 0 <= value <= 4:
            raise SessionLogError(
                row_number, f"scores_{axis} value {value} outside 0..4"
            )
        scores.append(value)
    return scores


def parse_session_log(text: str) -> list[tuple[str, SessionInput]]:
    """Parse CSV text into (signal_name, SessionInput) pairs in file order."""
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    if not rows:
        return []
    if rows[0] != HEADER:
        raise SessionLogError(1, f"header must be {','.join(HEADER)}")
    entries: list[tuple[str, SessionInput]] = []
    counters: dict[str, int] = {}
    for i, row in enumerate(rows[1:], start=2):
        if not row or all(cell == "" for cell in row):
            continue
        if len(row) != len(HEADER):
            raise SessionLogError(i, f"expected {len(HEADER)} columns, got {len(row)}")
        name, session_text, day_text, sx_text, sy_text, occ_text, note = row
        if not name:
            raise SessionLogError(i, "signal name is empty")
        try:
            session_index = int(session_text)
            day = int(day_text)
            occurrences = int(occ_text)
        except ValueError as exc:
            raise SessionLogError(i, f"non-integer numeric column: {exc}") from None
        expected = counters.get(name, 0) + 1
        if session_index != expected:
            raise SessionLogError(
                i, f"session counter for {name!r} should be {expected}, got {session_index}"
            )
        counters[name] = session_index
        xs = _parse_scores(sx_text, i, "x")
        ys = _parse_scores(sy_text, i, "y")
        if len(xs) != len(ys):
            raise SessionLogError(
                i, f"scores_x has {len(xs)} entries but scores_y has {len(ys)}"
            )
        try:
            session = SessionInput(
                day=day,
                assessments=tuple(NrsPair(x, y) for x, y in zip(xs, ys)),
                occurrences=occurrences,
                note=note,
            )
        except ValueError as exc:
            raise SessionLogError(i, str(exc)) from None
        entries.append((name, session))
    return entries


def import_session_log(source: Union[str, Path]) -> list[tuple[str, SessionInput]]:
    return parse_session_log(Path(source).read_text(encoding="utf-8"))


def format_session_log(register: Register) -> str:
    """Serialize every locus back to the CSV format, signals in id order."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(HEADER)
    for signal in register.signals.values():
        for record in signal.locus:
            writer.writerow(
                [
                    signal.name,
                    record.session_index,
                    record.day,
                    ";".join(str(a.score_x) for a in record.assessments),
                    ";".join(str(a.score_y) for a in record.assessments),
                    record.occurrences,
                    record.note,
                ]
            )
    return out.getvalue()


def export_session_log(register: Register, destination: Union[str, Path]) -> None:
    Path(destination).write_text(format_session_log(register), encoding="utf-8")
