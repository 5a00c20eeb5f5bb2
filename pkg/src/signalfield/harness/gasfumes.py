"""Replay the bundled reference log and diff it against the published
trajectory, session by session."""

from __future__ import annotations

import math
from dataclasses import dataclass

from signalfield import register as reg
from signalfield.engine import BIWEEKLY, Tier
from signalfield.harness.reference import (
    SIGNAL_NAME,
    bundled_log_entries,
    published_trajectory,
)

COORD_TOL = 0.02
SSI_TOL = 0.02
SMS_SESSIONS = frozenset(range(6, 24))


@dataclass(frozen=True)
class SessionComparison:
    session: int
    day: int
    x: float
    y: float
    d: float
    ssi: float
    region: str
    sms: bool
    pub_x: float
    pub_y: float
    pub_d: float
    pub_ssi: float
    pub_region: str

    @property
    def dx(self) -> float:
        return self.x - self.pub_x

    @property
    def dy(self) -> float:
        return self.y - self.pub_y

    @property
    def dd(self) -> float:
        return self.d - self.pub_d

    @property
    def dssi(self) -> float:
        return self.ssi - self.pub_ssi

    @property
    def within_tolerance(self) -> bool:
        return (
            abs(self.dx) <= COORD_TOL
            and abs(self.dy) <= COORD_TOL
            and abs(self.dd) <= COORD_TOL
            and abs(self.dssi) <= SSI_TOL
            and self.region == self.pub_region
            and self.sms == (self.session in SMS_SESSIONS)
        )


@dataclass
class GasfumesReport:
    tier: Tier
    rows: list[SessionComparison]
    max_coord_err: float
    max_ssi_err: float
    region_sequence_ok: bool
    sms_sessions_ok: bool

    @property
    def passed(self) -> bool:
        return (
            all(r.within_tolerance for r in self.rows)
            and self.region_sequence_ok
            and self.sms_sessions_ok
        )


def run_gasfumes(tier: Tier = Tier.LITE) -> GasfumesReport:
    """Replay the bundled log and compare against the published rows.

    Published d is recomputed from the published 2-decimal coordinates
    (the table prints no d column of its own).
    """
    entries = bundled_log_entries()
    register = reg.replay(entries, BIWEEKLY, tier)
    locus = register.signal_by_name(SIGNAL_NAME).locus
    published = published_trajectory()

    rows = []
    for record, pub in zip(locus, published):
        rows.append(
            SessionComparison(
                session=record.session_index,
                day=record.day,
                x=record.position.x,
                y=record.position.y,
                d=record.d,
                ssi=record.ssi,
                region=record.region.value,
                sms=record.sms,
                pub_x=pub.x,
                pub_y=pub.y,
                pub_d=math.hypot(pub.x, pub.y),
                pub_ssi=pub.ssi,
                pub_region=pub.region,
            )
        )
    max_coord = max(max(abs(r.dx), abs(r.dy), abs(r.dd)) for r in rows)
    max_ssi = max(abs(r.dssi) for r in rows)
    region_ok = [r.region for r in rows] == [p.region for p in published]
    sms_ok = {r.session for r in rows if r.sms} == set(SMS_SESSIONS)
    return GasfumesReport(
        tier=tier,
        rows=rows,
        max_coord_err=max_coord,
        max_ssi_err=max_ssi,
        region_sequence_ok=region_ok,
        sms_sessions_ok=sms_ok,
    )
