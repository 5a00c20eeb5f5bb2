"""Bundled reference data: the published 26-session trajectory and the
input log derived from it by inversion."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from signalfield.engine import SessionInput
from signalfield.sessionlog import parse_session_log

SIGNAL_NAME = "gas-fumes"


@dataclass(frozen=True)
class PublishedSession:
    """One row of the published trajectory table (2-decimal values)."""

    session: int
    day: int
    x: float
    y: float
    n: int
    region: str
    occurrences: int
    f: int
    ssi: float
    key_event: str


def _data_text(name: str) -> str:
    return resources.files("signalfield.data").joinpath(name).read_text(encoding="utf-8")


def published_trajectory() -> list[PublishedSession]:
    """The reference trajectory exactly as published."""
    reader = csv.DictReader(_data_text("table4.csv").splitlines())
    rows = []
    for row in reader:
        rows.append(
            PublishedSession(
                session=int(row["session"]),
                day=int(row["day"]),
                x=float(row["x"]),
                y=float(row["y"]),
                n=int(row["n"]),
                region=row["region"],
                occurrences=int(row["occurrences"]),
                f=int(row["f"]),
                ssi=float(row["ssi"]),
                key_event=row["key_event"],
            )
        )
    return rows


def bundled_log_entries() -> list[tuple[str, SessionInput]]:
    """The derived session log shipped with the package."""
    return parse_session_log(_data_text("gasfumes.csv"))


def bundled_log_path() -> Path:
    """Filesystem path of the bundled log (for CLI default arguments)."""
    with resources.as_file(
        resources.files("signalfield.data").joinpath("gasfumes.csv")
    ) as p:
        return Path(p)
