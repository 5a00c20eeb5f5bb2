/**
 * Wire types for the signalfield session service.
 *
 * Field names mirror the register document: what the service returns
 * is exactly what the store holds, so these shapes double as the file
 * schema. All numbers are plain JSON numbers; the UI never recomputes
 * any of them.
 */

export type Region = 'QM' | 'LF' | 'SC' | 'OW';

export type Band = 'low' | 'moderate' | 'elevated' | 'critical';

export type SignalStatus = 'active' | 'retirement-candidate' | 'retired';

export type GapClassName = 'early' | 'normal' | 'missed1' | 'missed2plus';

/** One assessor's two scores, x then y, each an integer 0 to 4. */
export type ScorePair = [number, number];

export interface ServiceConfig {
  schema_version: number;
  cadence: string;
  tier: string;
  constants: {
    y_floor: number;
    sms_threshold: number;
    retirement_threshold: number;
    ssi_denominator: number;
    committee_floor: number;
    committee_slope: number;
    field_max: number;
  };
}

/**
 * One computed session. Entry records carry null for the gap and
 * weight fields; review-only records carry null for the
 * elicitation-side fields (w, c, x_new, y_new).
 */
export interface SessionRecordDoc {
  session_index: number;
  day: number;
  gap_days: number;
  gap_class: GapClassName | null;
  n: number;
  w: number | null;
  decay: number | null;
  c: number | null;
  w_eff: number | null;
  x_new: number | null;
  y_new: number | null;
  x: number;
  y: number;
  region: Region;
  d: number;
  sms: boolean;
  f: number;
  ssi: number;
  band: Band;
  assessments: ScorePair[];
  occurrences: number;
  note: string;
}

/** What the signal list shows: identity plus the latest session. */
export interface SignalSummary {
  id: string;
  name: string;
  status: SignalStatus;
  sessions: number;
  day: number;
  x: number;
  y: number;
  region: Region;
  d: number;
  sms: boolean;
  f: number;
  ssi: number;
  band: Band;
}

export interface SignalDoc {
  id: string;
  name: string;
  status: SignalStatus;
  status_history: [number, SignalStatus][];
  locus: SessionRecordDoc[];
}

export interface SsiPoint {
  session_index: number;
  day: number;
  ssi: number;
  band: Band;
  sms: boolean;
}

export interface EntryPayload {
  name: string;
  day: number;
  assessments: ScorePair[];
  occurrences?: number;
  note?: string;
}

export interface SessionPayload {
  day: number;
  /** Empty array means a review-only session (decay alone). */
  assessments: ScorePair[];
  occurrences?: number;
  note?: string;
  client_token?: string;
}
