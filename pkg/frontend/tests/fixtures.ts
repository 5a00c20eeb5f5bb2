/** Builders for synthetic service payloads used by the unit tests. */

import type { SessionRecordDoc, SsiPoint } from '../src/types.js';

export function record(
  overrides: Partial<SessionRecordDoc> = {},
): SessionRecordDoc {
  return {
    session_index: 1,
    day: 0,
    gap_days: 0,
    gap_class: null,
    n: 1,
    w: null,
    decay: null,
    c: null,
    w_eff: null,
    x_new: null,
    y_new: null,
    x: 2.5,
    y: 2.5,
    region: 'QM',
    d: 3.5355,
    sms: false,
    f: 3,
    ssi: 0.3466,
    band: 'low',
    assessments: [[1, 1]],
    occurrences: 3,
    note: '',
    ...overrides,
  };
}

export function ssiPoint(overrides: Partial<SsiPoint> = {}): SsiPoint {
  return {
    session_index: 1,
    day: 0,
    ssi: 0.35,
    band: 'low',
    sms: false,
    ...overrides,
  };
}
