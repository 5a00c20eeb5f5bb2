"""Validation harness: reference-trajectory checks, scenario suite,
threshold sensitivity, tier drift, and report emission."""

from signalfield.harness.drift import DriftReport, drift_bound_sweep, tier_drift
from signalfield.harness.emit import emit_outputs
from signalfield.harness.gasfumes import GasfumesReport, run_gasfumes
from signalfield.harness.inversion import derive_inputs
from signalfield.harness.reference import (
    PublishedSession,
    bundled_log_entries,
    bundled_log_path,
    published_trajectory,
)
from signalfield.harness.scenarios import SCENARIOS, ScenarioReport
from signalfield.harness.sensitivity import SensitivityReport, sensitivity_sweep

__all__ = [
    "DriftReport",
    "GasfumesReport",
    "PublishedSession",
    "SCENARIOS",
    "ScenarioReport",
    "SensitivityReport",
    "bundled_log_entries",
    "bundled_log_path",
    "derive_inputs",
    "drift_bound_sweep",
    "emit_outputs",
    "published_trajectory",
    "run_gasfumes",
    "sensitivity_sweep",
    "tier_drift",
]
