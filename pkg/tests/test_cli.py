"""Command-line behavior: exit codes and key output lines."""

import pytest

from signalfield import cli
from signalfield.harness import reference


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestValidate:
    def test_passes_on_lite_tier(self, capsys):
        code, out, _ = run(["validate", "gasfumes"], capsys)
        assert code == 0
        assert "max coordinate error" in out
        assert "FAIL" not in out

    def test_continuous_tier_also_within_tolerance(self, capsys):
        code, out, _ = run(["validate", "gasfumes", "--tier", "continuous"], capsys)
        assert code == 0


class TestScenario:
    @pytest.mark.parametrize("which,expected", [("a", 0), ("b", 1), ("c", 0), ("d", 0)])
    def test_exit_codes(self, which, expected, capsys):
        code, out, _ = run(["scenario", which], capsys)
        assert code == expected

    def test_b_reports_the_failing_claim(self, capsys):
        _, out, _ = run(["scenario", "b"], capsys)
        assert "FAIL" in out
        assert "first_lit_fuses_session = 4" in out


class TestSensitivity:
    def test_default_scales_pass(self, capsys):
        code, out, _ = run(["sensitivity"], capsys)
        assert code == 0
        assert "scale 0.70" in out and "scale 1.30" in out
        assert "seed 19" in out


class TestDrift:
    def test_log_mode(self, capsys):
        code, out, _ = run(
            ["drift", "--log", str(reference.bundled_log_path()), "--cadence", "biweekly"],
            capsys,
        )
        assert code == 0
        assert "region mismatches 0" in out

    def test_missing_log_is_a_usage_error(self, capsys, tmp_path):
        bad = tmp_path / "nope.csv"
        bad.write_text("signal,day\n")
        code, _, err = run(["drift", "--log", str(bad)], capsys)
        assert code == 2
        assert "error" in err


class TestReplayAndEmit:
    def test_replay_then_emit(self, capsys, tmp_path):
        out_dir = tmp_path / "replayed"
        code, out, _ = run(
            [
                "replay",
                "--log",
                str(reference.bundled_log_path()),
                "--cadence",
                "biweekly",
                "--tier",
                "lite",
                "--out",
                str(out_dir),
            ],
            capsys,
        )
        assert code == 0
        assert (out_dir / "register.json").exists()
        assert "gas-fumes: 26 sessions" in out

        emit_dir = tmp_path / "plots"
        code, out, _ = run(
            [
                "emit",
                "--register",
                str(out_dir / "register.json"),
                "--formats",
                "csv,svg",
                "--out",
                str(emit_dir),
            ],
            capsys,
        )
        assert code == 0
        written = sorted(p.name for p in emit_dir.iterdir())
        assert written == [
            "s0001-gas-fumes-locus.svg",
            "s0001-gas-fumes-ssi.svg",
            "s0001-gas-fumes-trajectory.csv",
        ]

    def test_emit_empty_register_notices(self, capsys, tmp_path):
        from signalfield import register
        from signalfield.engine import BIWEEKLY

        store = tmp_path / "empty.json"
        register.save_register(register.Register(cadence=BIWEEKLY), store)
        code, out, _ = run(["emit", "--register", str(store)], capsys)
        assert code == 0
        assert "nothing to emit" in out

    def test_emit_corrupt_register_fails(self, capsys, tmp_path):
        store = tmp_path / "bad.json"
        store.write_text("{]")
        code, _, err = run(["emit", "--register", str(store)], capsys)
        assert code == 2
        assert "error" in err


def test_unknown_subcommand_exits_with_usage():
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["frobnicate"])
    assert excinfo.value.code == 2
