/**
 * State machine behind the score-entry form.
 *
 * The central invariant: the commit button is live only while a
 * preview fetched for the exact current form contents is on screen.
 * Any edit invalidates the preview (and the retry token), so the
 * facilitator can never commit numbers the team has not just seen.
 */

import type { Region, SessionPayload, SessionRecordDoc } from './types.js';

export interface ScoreRow {
  x: number;
  y: number;
}

export const SCORE_MIN = 0;
export const SCORE_MAX = 4;

function clampScore(value: number): number {
  const rounded = Math.round(value);
  return Math.min(SCORE_MAX, Math.max(SCORE_MIN, rounded));
}

/**
 * Entry gate, checked client-side before submission: a brand-new
 * signal must score at most 1 on every axis for every assessor.
 * Returns a warning message, or null when the rows pass. The service
 * enforces the same rule; this only moves the message before the
 * round trip.
 */
export function entryScoreWarning(rows: readonly ScoreRow[]): string | null {
  const over = rows.findIndex((row) => row.x > 1 || row.y > 1);
  if (over === -1) return null;
  return (
    `assessor ${over + 1} scores above 1: a new signal must enter ` +
    'as a weak signal (every score 0 or 1)'
  );
}

export class SessionForm {
  private rows: ScoreRow[] = [{ x: 0, y: 0 }];
  private reviewOnly = false;
  private day = 0;
  private occurrences = 0;
  private note = '';
  private signalId: string | null = null;
  private currentRegion: Region | null = null;
  private previewResult: SessionRecordDoc | null = null;
  private token: string | null = null;

  constructor(
    private readonly tokenSource: () => string = () => crypto.randomUUID(),
  ) {}

  // ---- selection ----

  /** Point the form at a signal; wipes contents from any previous one. */
  selectSignal(id: string, currentRegion: Region, lastDay: number): void {
    this.signalId = id;
    this.currentRegion = currentRegion;
    this.rows = [{ x: 0, y: 0 }];
    this.reviewOnly = false;
    this.day = lastDay;
    this.occurrences = 0;
    this.note = '';
    this.invalidate();
  }

  get selectedSignal(): string | null {
    return this.signalId;
  }

  /** Region before this session, for the transition narration. */
  get regionBefore(): Region | null {
    return this.currentRegion;
  }

  // ---- edits (each one invalidates the preview) ----

  setDay(day: number): void {
    this.day = day;
    this.invalidate();
  }

  setOccurrences(occurrences: number): void {
    this.occurrences = occurrences;
    this.invalidate();
  }

  setNote(note: string): void {
    this.note = note;
    this.invalidate();
  }

  setReviewOnly(on: boolean): void {
    this.reviewOnly = on;
    this.invalidate();
  }

  addRow(): void {
    this.rows.push({ x: 0, y: 0 });
    this.invalidate();
  }

  removeRow(index: number): void {
    if (this.rows.length <= 1) return; // keep one row; review-only is the toggle
    this.rows.splice(index, 1);
    this.invalidate();
  }

  setScore(index: number, axis: 'x' | 'y', value: number): void {
    const row = this.rows[index];
    if (!row) return;
    row[axis] = clampScore(value);
    this.invalidate();
  }

  get scoreRows(): readonly ScoreRow[] {
    return this.rows;
  }

  get isReviewOnly(): boolean {
    return this.reviewOnly;
  }

  get dayValue(): number {
    return this.day;
  }

  get occurrencesValue(): number {
    return this.occurrences;
  }

  // ---- preview / commit lifecycle ----

  payload(): SessionPayload {
    return {
      day: this.day,
      assessments: this.reviewOnly
        ? []
        : this.rows.map((row) => [row.x, row.y]),
      occurrences: this.occurrences,
      note: this.note,
    };
  }

  /** Same payload plus the retry token, for the commit request. */
  commitPayload(): SessionPayload {
    if (this.token === null) {
      this.token = this.tokenSource();
    }
    return { ...this.payload(), client_token: this.token };
  }

  /** Store the service's answer for the payload currently on the form. */
  recordPreview(result: SessionRecordDoc): void {
    this.previewResult = result;
  }

  get preview(): SessionRecordDoc | null {
    return this.previewResult;
  }

  /** True only while a preview for the current contents is held. */
  get canCommit(): boolean {
    return this.signalId !== null && this.previewResult !== null;
  }

  /** After a successful commit: the session is history, start fresh. */
  noteCommitted(): void {
    this.currentRegion = this.previewResult?.region ?? this.currentRegion;
    this.rows = [{ x: 0, y: 0 }];
    this.reviewOnly = false;
    this.occurrences = 0;
    this.note = '';
    this.invalidate();
  }

  private invalidate(): void {
    this.previewResult = null;
    this.token = null;
  }
}
