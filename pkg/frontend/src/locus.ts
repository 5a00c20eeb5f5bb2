/**
 * Field-locus view: the signal's path across the 10x10 field.
 *
 * buildLocusModel turns service records into plot geometry;
 * renderLocusSvg turns the geometry into markup. Both are pure, so
 * tests can count nodes and rings without a DOM.
 */

import { REGION_COLORS, escapeMarkup, fmt2 } from './format.js';
import type { Region, SessionRecordDoc } from './types.js';

export interface LocusNode {
  session: number;
  x: number;
  y: number;
  region: Region;
  sms: boolean;
  cx: number;
  cy: number;
}

export interface LocusModel {
  nodes: LocusNode[];
  fieldMax: number;
  /** Pixel positions of the session path, in locus order. */
  pathPoints: [number, number][];
}

const PLOT = {
  SIZE: 420,
  MARGIN: 36,
  NODE_RADIUS: 9,
  RING_RADIUS: 14,
};

function toPixel(value: number, fieldMax: number): number {
  return PLOT.MARGIN + (value / fieldMax) * (PLOT.SIZE - 2 * PLOT.MARGIN);
}

export function buildLocusModel(
  locus: readonly SessionRecordDoc[],
  fieldMax = 10,
): LocusModel {
  const nodes = locus.map((record) => ({
    session: record.session_index,
    x: record.x,
    y: record.y,
    region: record.region,
    sms: record.sms,
    cx: toPixel(record.x, fieldMax),
    // screen y grows downward; field y grows upward
    cy: PLOT.SIZE - toPixel(record.y, fieldMax),
  }));
  return {
    nodes,
    fieldMax,
    pathPoints: nodes.map((node) => [node.cx, node.cy]),
  };
}

const CORNER_LABELS: { region: Region; align: 'start' | 'end'; dx: number; dy: number }[] = [
  { region: 'QM', align: 'start', dx: 0, dy: 1 },
  { region: 'LF', align: 'end', dx: 1, dy: 1 },
  { region: 'SC', align: 'start', dx: 0, dy: 0 },
  { region: 'OW', align: 'end', dx: 1, dy: 0 },
];

export function renderLocusSvg(model: LocusModel): string {
  if (model.nodes.length === 0) {
    return '<div class="placeholder">No sessions recorded yet.</div>';
  }
  const { SIZE, MARGIN, NODE_RADIUS, RING_RADIUS } = PLOT;
  const mid = toPixel(model.fieldMax / 2, model.fieldMax);
  const lo = MARGIN;
  const hi = SIZE - MARGIN;
  const parts: string[] = [];
  parts.push(
    `<svg class="locus-plot" viewBox="0 0 ${SIZE} ${SIZE}" role="img" ` +
      'aria-label="Field locus">',
  );
  parts.push(
    `<rect class="field" x="${lo}" y="${lo}" width="${hi - lo}" height="${hi - lo}"/>`,
  );
  // quadrant boundaries at half the field span
  parts.push(
    `<line class="quadrant" x1="${mid}" y1="${lo}" x2="${mid}" y2="${hi}"/>`,
    `<line class="quadrant" x1="${lo}" y1="${SIZE - mid}" x2="${hi}" y2="${SIZE - mid}"/>`,
  );
  for (const corner of CORNER_LABELS) {
    const cx = corner.dx === 0 ? lo + 6 : hi - 6;
    const cy = corner.dy === 1 ? hi - 8 : lo + 16;
    parts.push(
      `<text class="corner" x="${cx}" y="${cy}" text-anchor="${corner.align}" ` +
        `fill="${REGION_COLORS[corner.region]}">${corner.region}</text>`,
    );
  }
  if (model.pathPoints.length > 1) {
    const points = model.pathPoints
      .map(([px, py]) => `${px.toFixed(1)},${py.toFixed(1)}`)
      .join(' ');
    parts.push(`<polyline class="locus-path" points="${points}"/>`);
  }
  for (const node of model.nodes) {
    if (node.sms) {
      parts.push(
        `<circle class="sms-ring" cx="${node.cx.toFixed(1)}" ` +
          `cy="${node.cy.toFixed(1)}" r="${RING_RADIUS}"/>`,
      );
    }
  }
  for (const node of model.nodes) {
    const title = `Session ${node.session}: (${fmt2(node.x)}, ${fmt2(node.y)})`;
    parts.push(
      `<g class="locus-node" data-session="${node.session}">` +
        `<circle cx="${node.cx.toFixed(1)}" cy="${node.cy.toFixed(1)}" ` +
        `r="${NODE_RADIUS}" fill="${REGION_COLORS[node.region]}">` +
        `<title>${escapeMarkup(title)}</title></circle>` +
        `<text x="${node.cx.toFixed(1)}" y="${(node.cy + 3.5).toFixed(1)}" ` +
        `text-anchor="middle">${node.session}</text></g>`,
    );
  }
  parts.push(
    `<text class="axis" x="${SIZE / 2}" y="${SIZE - 6}" text-anchor="middle">` +
      'Risk intensity (x)</text>',
    `<text class="axis" x="12" y="${SIZE / 2}" text-anchor="middle" ` +
      `transform="rotate(-90 12 ${SIZE / 2})">Risk growth potential (y)</text>`,
  );
  parts.push('</svg>');
  return parts.join('\n');
}
