"""The bundled reference trajectory and its inversion oracle."""

import pytest

from signalfield.engine import Region, Tier
from signalfield.harness import gasfumes, inversion, reference


@pytest.fixture(scope="module")
def lite_report():
    return gasfumes.run_gasfumes(Tier.LITE)


class TestPublishedData:
    def test_twenty_six_sessions(self):
        rows = reference.published_trajectory()
        assert len(rows) == 26
        assert rows[0].key_event == "Entry"
        assert rows[-1].key_event == "Retirement candidate"

    def test_published_region_counts(self):
        rows = reference.published_trajectory()
        sequence = [row.region for row in rows]
        compact = []
        for region in sequence:
            if not compact or compact[-1][0] != region:
                compact.append([region, 0])
            compact[-1][1] += 1
        assert [(r, c) for r, c in compact] == [
            ("QM", 5),
            ("LF", 6),
            ("OW", 9),
            ("SC", 4),
            ("QM", 2),
        ]


class TestReplay:
    def test_lite_replay_passes(self, lite_report):
        assert lite_report.passed
        assert lite_report.max_coord_err <= 0.02
        assert lite_report.max_ssi_err <= 0.02

    def test_every_row_within_tolerance(self, lite_report):
        for row in lite_report.rows:
            assert row.within_tolerance, f"session {row.session} out of tolerance"

    def test_sms_active_exactly_sessions_6_to_23(self, lite_report):
        active = {row.session for row in lite_report.rows if row.sms}
        assert active == set(range(6, 24))

    def test_region_sequence_matches_published(self, lite_report):
        assert lite_report.region_sequence_ok
        assert [row.region for row in lite_report.rows] == [
            row.pub_region for row in lite_report.rows
        ]

    def test_peak_ssi_at_session_15(self, lite_report):
        peak = max(lite_report.rows, key=lambda row: row.ssi)
        assert peak.session == 15
        assert peak.ssi == pytest.approx(3.31, abs=0.02)

    def test_continuous_tier_reaches_identical_decisions(self, lite_report):
        report = gasfumes.run_gasfumes(Tier.CONTINUOUS)
        assert [row.region for row in report.rows] == [
            row.region for row in lite_report.rows
        ]
        assert [row.sms for row in report.rows] == [row.sms for row in lite_report.rows]


class TestInversion:
    def test_inversion_reproduces_bundled_log(self):
        result = inversion.derive_inputs(reference.published_trajectory())
        assert result.flagged == []
        bundled = reference.bundled_log_entries()
        assert len(result.entries) == len(bundled)
        for (_, derived), (_, shipped) in zip(result.entries, bundled):
            assert derived.day == shipped.day
            assert derived.occurrences == shipped.occurrences
            assert [(a.score_x, a.score_y) for a in derived.assessments] == [
                (a.score_x, a.score_y) for a in shipped.assessments
            ]

    def test_session_six_inversion_is_unanimous_4_1(self):
        result = inversion.derive_inputs(reference.published_trajectory())
        _, session6 = result.entries[5]
        assert [(a.score_x, a.score_y) for a in session6.assessments] == [(4, 1)] * 3

    def test_entry_inversion_is_1_1(self):
        result = inversion.derive_inputs(reference.published_trajectory())
        _, entry = result.entries[0]
        assert [(a.score_x, a.score_y) for a in entry.assessments] == [(1, 1)]
