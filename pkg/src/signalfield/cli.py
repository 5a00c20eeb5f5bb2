"""Command-line front end.

One subcommand per harness activity: replay a session log, validate the
bundled reference trajectory, run a boundary scenario, sweep the gap
thresholds, measure tier drift, emit tables and plots, or serve the
session API. Exit status is 0 only when every checked tolerance holds.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from signalfield import engine, register as reg_mod, sessionlog
from signalfield.engine import CADENCES, Tier
from signalfield.harness import drift as drift_mod
from signalfield.harness import emit as emit_mod
from signalfield.harness import gasfumes as gasfumes_mod
from signalfield.harness import scenarios as scenarios_mod
from signalfield.harness import sensitivity as sensitivity_mod

DRIFT_ANCHOR_BOUND = 0.23
SENSITIVITY_BOUND = 1.0


def _mark(ok: bool) -> str:
    return "ok  " if ok else "FAIL"


def _cmd_replay(args: argparse.Namespace) -> int:
    try:
        entries = sessionlog.import_session_log(args.log)
    except sessionlog.SessionLogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    register = reg_mod.replay(entries, CADENCES[args.cadence], Tier(args.tier))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    store = out / "register.json"
    reg_mod.save_register(register, store)
    written = emit_mod.emit_outputs(register, out, formats=("csv",))
    for signal in register.signals.values():
        latest = signal.latest
        print(
            f"{signal.name}: {len(signal.locus)} sessions, "
            f"({latest.position.x:.2f}, {latest.position.y:.2f}) "
            f"{latest.region.value}, SSI {latest.ssi:.2f} {latest.band.value}"
        )
    print(f"wrote {store} and {len(written)} trajectory file(s) to {out}")
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    report = gasfumes_mod.run_gasfumes(Tier(args.tier))
    print(f"reference trajectory, {report.tier.value} tier")
    print("sess  day   computed (x, y)      published (x, y)     |dx|    |dy|    dS")
    for row in report.rows:
        print(
            f"{row.session:>4}  {row.day:>4}  "
            f"({row.x:5.2f}, {row.y:5.2f})  vs  ({row.pub_x:5.2f}, {row.pub_y:5.2f})  "
            f"{abs(row.dx):6.4f}  {abs(row.dy):6.4f}  {abs(row.dssi):6.4f}"
        )
    print(f"{_mark(report.max_coord_err <= 0.02)} max coordinate error {report.max_coord_err:.4f} (tolerance 0.02)")
    print(f"{_mark(report.max_ssi_err <= 0.02)} max SSI error {report.max_ssi_err:.4f} (tolerance 0.02)")
    print(f"{_mark(report.region_sequence_ok)} region sequence matches published column")
    print(f"{_mark(report.sms_sessions_ok)} SMS active exactly sessions 6-23")
    return 0 if report.passed else 1


def _cmd_scenario(args: argparse.Namespace) -> int:
    report = scenarios_mod.SCENARIOS[args.which]()
    print(f"scenario {args.which.upper()}: {report.description}")
    for text, ok in report.claims:
        print(f"  {_mark(ok)} {text}")
    for key, value in report.metrics.items():
        print(f"  {key} = {value}")
    return 0 if report.passed else 1


def _cmd_sensitivity(args: argparse.Namespace) -> int:
    scales = tuple(float(s) for s in args.scales.split(","))
    report = sensitivity_mod.sensitivity_sweep(scales=scales)
    print(
        f"threshold sweep: {report.trace_count} traces "
        f"({report.session_count} sessions), seed {report.seed}"
    )
    failed = False
    for result in report.results:
        if result.scale == 1.0:
            ok = result.max_drift == 0.0
            line = f"scale {result.scale:.2f}: max drift {result.max_drift:.6f} (must be exactly 0)"
        else:
            ok = result.max_drift < SENSITIVITY_BOUND
            line = (
                f"scale {result.scale:.2f}: max drift {result.max_drift:.4f} "
                f"(bound {SENSITIVITY_BOUND}), worst {result.worst_trace}, "
                f"reference log drift {result.gasfumes_drift:.4f}"
            )
        failed = failed or not ok
        print(f"{_mark(ok)} {line}")
        breakdown = ", ".join(
            f"{kind} {value:.4f}" for kind, value in result.per_cadence.items()
        )
        print(f"      per cadence: {breakdown}")
    return 1 if failed else 0


def _cmd_drift(args: argparse.Namespace) -> int:
    if args.log is None:
        report = drift_mod.drift_bound_sweep()
        ok = report.max_drift <= DRIFT_ANCHOR_BOUND
        print(
            f"{_mark(ok)} anchor-gap sweep: {report.trace_count} traces "
            f"({report.session_count} sessions), seed {report.seed}, "
            f"max drift {report.max_drift:.4f} (bound {DRIFT_ANCHOR_BOUND}), "
            f"worst {report.worst_trace}"
        )
        return 0 if ok else 1
    try:
        entries = sessionlog.import_session_log(args.log)
    except sessionlog.SessionLogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = drift_mod.tier_drift(entries, CADENCES[args.cadence])
    print(
        f"tier drift over {len(report.sessions)} sessions: "
        f"max {report.max_drift:.4f}, region mismatches {report.region_mismatches}, "
        f"SMS mismatches {report.sms_mismatches}"
    )
    return 0


def _cmd_emit(args: argparse.Namespace) -> int:
    try:
        register = reg_mod.load_register(args.register)
    except reg_mod.StorageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    formats = tuple(f.strip() for f in args.formats.split(","))
    written = emit_mod.emit_outputs(register, Path(args.out), formats=formats)
    if not written:
        print("register holds no signals; nothing to emit")
        return 0
    for path in written:
        print(f"wrote {path}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from signalfield import service

    service.serve(args.register, args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signalfield",
        description="risk-signal field tracking: replay, validate, and serve",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    replay = sub.add_parser("replay", help="replay a session log into a register")
    replay.add_argument("--log", required=True, help="session log CSV")
    replay.add_argument("--cadence", required=True, choices=sorted(CADENCES))
    replay.add_argument(
        "--tier", default="lite", choices=[t.value for t in Tier]
    )
    replay.add_argument("--out", required=True, help="output directory")
    replay.set_defaults(func=_cmd_replay)

    validate = sub.add_parser(
        "validate", help="check the bundled log against the published trajectory"
    )
    validate.add_argument("what", choices=["gasfumes"])
    validate.add_argument(
        "--tier", default="lite", choices=[t.value for t in Tier]
    )
    validate.set_defaults(func=_cmd_validate)

    scenario = sub.add_parser("scenario", help="run one boundary-behavior scenario")
    scenario.add_argument("which", choices=sorted(scenarios_mod.SCENARIOS))
    scenario.set_defaults(func=_cmd_scenario)

    sensitivity = sub.add_parser(
        "sensitivity", help="sweep gap-class thresholds by scale factors"
    )
    sensitivity.add_argument(
        "--scales", default="0.7,1.0,1.3", help="comma-separated scale factors"
    )
    sensitivity.set_defaults(func=_cmd_sensitivity)

    drift = sub.add_parser(
        "drift", help="compare lite-table and continuous-formula replays"
    )
    drift.add_argument("--log", help="session log CSV; omit for the generated sweep")
    drift.add_argument("--cadence", default="biweekly", choices=sorted(CADENCES))
    drift.set_defaults(func=_cmd_drift)

    emit = sub.add_parser("emit", help="write trajectory tables and plots")
    emit.add_argument("--register", required=True, help="register JSON store")
    emit.add_argument("--formats", default="csv,svg")
    emit.add_argument("--out", default="signalfield-out", help="output directory")
    emit.set_defaults(func=_cmd_emit)

    serve = sub.add_parser("serve", help="run the session service")
    serve.add_argument("--register", required=True, help="register JSON store")
    serve.add_argument("--port", type=int, default=8800)
    serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
