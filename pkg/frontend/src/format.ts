/**
 * Display formatting shared by every view.
 *
 * Rounding convention: coordinates, distance, and SSI to 2 decimals;
 * weights to 3. The colors match the palette the batch plots use, so
 * printed artifacts and the live screen read the same.
 */

import type { Band, Region } from './types.js';

export const REGION_LABELS: Record<Region, string> = {
  QM: 'Question Marks',
  LF: 'Lit Fuses',
  SC: 'Sleeping Cats',
  OW: 'Owls',
};

export const REGION_COLORS: Record<Region, string> = {
  QM: '#4878a8',
  LF: '#e07b39',
  SC: '#6a9a58',
  OW: '#c03a2b',
};

export const BAND_LABELS: Record<Band, string> = {
  low: 'Low',
  moderate: 'Moderate',
  elevated: 'Elevated',
  critical: 'Critical',
};

export const BAND_COLORS: Record<Band, string> = {
  low: '#e8f0e8',
  moderate: '#f5e9cf',
  elevated: '#f3d5b8',
  critical: '#eec4bc',
};

/**
 * Upper edges of the low/moderate/elevated bands, for drawing the
 * background stripes of the SSI timeline. Presentation constants
 * mirroring the published interpretation ranges; per-point band
 * membership always comes from the service.
 */
export const BAND_EDGES = [0.5, 1.5, 2.5] as const;

/** Coordinates, d, SSI: two decimals. */
export function fmt2(value: number): string {
  return value.toFixed(2);
}

/** Weights (w, decay, c, w_eff): three decimals; null renders as a dash. */
export function fmt3(value: number | null): string {
  return value === null ? '-' : value.toFixed(3);
}

/**
 * Narration line for a region change, e.g.
 * "Question Marks → Lit Fuses"; null when the region held.
 */
export function transitionText(from: Region | null, to: Region): string | null {
  if (from === null || from === to) return null;
  return `${REGION_LABELS[from]} → ${REGION_LABELS[to]}`;
}

/** Escape text destined for HTML or SVG markup. */
export function escapeMarkup(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}
