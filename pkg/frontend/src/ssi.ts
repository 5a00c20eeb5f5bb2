/**
 * SSI timeline view: severity per session over banded background.
 *
 * Same split as the locus view: buildSsiModel computes geometry,
 * renderSsiSvg emits markup, both pure.
 */

import { BAND_COLORS, BAND_EDGES, escapeMarkup, fmt2 } from './format.js';
import type { Band, SsiPoint } from './types.js';

export interface SsiMark {
  session: number;
  ssi: number;
  band: Band;
  sms: boolean;
  cx: number;
  cy: number;
}

export interface SsiStripe {
  band: Band;
  yTop: number;
  height: number;
}

export interface SsiModel {
  marks: SsiMark[];
  stripes: SsiStripe[];
  ceiling: number;
}

const PLOT = {
  WIDTH: 560,
  HEIGHT: 260,
  MARGIN: 34,
  MARK_RADIUS: 5,
  RING_RADIUS: 9,
};

export function buildSsiModel(points: readonly SsiPoint[]): SsiModel {
  // leave headroom above the critical edge or the tallest point
  const top = Math.max(...points.map((p) => p.ssi), BAND_EDGES[2]);
  const ceiling = top * 1.15;
  const innerW = PLOT.WIDTH - 2 * PLOT.MARGIN;
  const innerH = PLOT.HEIGHT - 2 * PLOT.MARGIN;
  const step = points.length > 1 ? innerW / (points.length - 1) : 0;
  const toY = (ssi: number) =>
    PLOT.HEIGHT - PLOT.MARGIN - (ssi / ceiling) * innerH;

  const marks = points.map((point, i) => ({
    session: point.session_index,
    ssi: point.ssi,
    band: point.band,
    sms: point.sms,
    cx: PLOT.MARGIN + (points.length > 1 ? i * step : innerW / 2),
    cy: toY(point.ssi),
  }));

  const edges = [0, ...BAND_EDGES, ceiling];
  const bands: Band[] = ['low', 'moderate', 'elevated', 'critical'];
  const stripes = bands.map((band, i) => {
    const bottom = toY(edges[i] ?? 0);
    const top2 = toY(Math.min(edges[i + 1] ?? ceiling, ceiling));
    return { band, yTop: top2, height: bottom - top2 };
  });

  return { marks, stripes, ceiling };
}

export function renderSsiSvg(model: SsiModel): string {
  if (model.marks.length === 0) {
    return '<div class="placeholder">No sessions recorded yet.</div>';
  }
  const { WIDTH, HEIGHT, MARGIN, MARK_RADIUS, RING_RADIUS } = PLOT;
  const parts: string[] = [];
  parts.push(
    `<svg class="ssi-plot" viewBox="0 0 ${WIDTH} ${HEIGHT}" role="img" ` +
      'aria-label="SSI timeline">',
  );
  for (const stripe of model.stripes) {
    parts.push(
      `<rect class="band band-${stripe.band}" x="${MARGIN}" ` +
        `y="${stripe.yTop.toFixed(1)}" width="${WIDTH - 2 * MARGIN}" ` +
        `height="${stripe.height.toFixed(1)}" fill="${BAND_COLORS[stripe.band]}"/>`,
    );
  }
  if (model.marks.length > 1) {
    const points = model.marks
      .map((mark) => `${mark.cx.toFixed(1)},${mark.cy.toFixed(1)}`)
      .join(' ');
    parts.push(`<polyline class="ssi-path" points="${points}"/>`);
  }
  for (const mark of model.marks) {
    if (mark.sms) {
      parts.push(
        `<circle class="sms-ring" cx="${mark.cx.toFixed(1)}" ` +
          `cy="${mark.cy.toFixed(1)}" r="${RING_RADIUS}"/>`,
      );
    }
  }
  for (const mark of model.marks) {
    const title = `Session ${mark.session}: SSI ${fmt2(mark.ssi)}`;
    parts.push(
      `<circle class="ssi-mark" data-session="${mark.session}" ` +
        `cx="${mark.cx.toFixed(1)}" cy="${mark.cy.toFixed(1)}" r="${MARK_RADIUS}">` +
        `<title>${escapeMarkup(title)}</title></circle>`,
    );
  }
  parts.push(
    `<text class="axis" x="${WIDTH / 2}" y="${HEIGHT - 6}" ` +
      'text-anchor="middle">Session</text>',
  );
  parts.push('</svg>');
  return parts.join('\n');
}
