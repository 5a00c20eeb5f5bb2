/**
 * Markup builders for the session screen.
 *
 * Pure functions from service payloads to HTML strings; app.ts only
 * injects the strings and wires events. Every number shown comes
 * straight from a payload, formatted but never recomputed.
 */

import {
  BAND_COLORS,
  BAND_LABELS,
  REGION_COLORS,
  REGION_LABELS,
  escapeMarkup,
  fmt2,
  fmt3,
  transitionText,
} from './format.js';
import type { Region, SessionRecordDoc, SignalSummary } from './types.js';

export function renderSignalList(
  summaries: readonly SignalSummary[],
  selectedId: string | null,
): string {
  if (summaries.length === 0) {
    return '<p class="placeholder">No signals in the register yet.</p>';
  }
  const items = summaries.map((s) => {
    const selected = s.id === selectedId ? ' selected' : '';
    return (
      `<li class="signal-item${selected}" data-signal="${s.id}">` +
      `<span class="region-badge" style="background:${REGION_COLORS[s.region]}">` +
      `${s.region}</span>` +
      `<span class="signal-name">${escapeMarkup(s.name)}</span>` +
      `<span class="signal-status">${s.status}</span>` +
      `<span class="signal-stats">d ${fmt2(s.d)} · SSI ${fmt2(s.ssi)}</span>` +
      '</li>'
    );
  });
  return `<ul class="signal-list">${items.join('')}</ul>`;
}

/**
 * The facilitator's read-back panel for a previewed (or just
 * committed) session: position, region with transition narration,
 * the SMS banner, SSI with its band color, and the weight line.
 */
export function renderPreviewPanel(
  regionBefore: Region | null,
  doc: SessionRecordDoc,
): string {
  const parts: string[] = ['<div class="preview-panel">'];
  parts.push(
    `<p class="position">Position (${fmt2(doc.x)}, ${fmt2(doc.y)})` +
      ` · d ${fmt2(doc.d)}</p>`,
  );
  const transition = transitionText(regionBefore, doc.region);
  parts.push(
    `<p class="region" style="color:${REGION_COLORS[doc.region]}">` +
      `${REGION_LABELS[doc.region]}` +
      (transition ? ` <span class="transition">${transition}</span>` : '') +
      '</p>',
  );
  if (doc.sms) {
    parts.push(
      '<p class="sms-banner">SMS active: monitoring threshold crossed</p>',
    );
  }
  parts.push(
    `<p class="ssi">SSI ${fmt2(doc.ssi)} ` +
      `<span class="band-chip" style="background:${BAND_COLORS[doc.band]}">` +
      `${BAND_LABELS[doc.band]}</span></p>`,
  );
  parts.push(
    `<p class="weights">w ${fmt3(doc.w)} · decay ${fmt3(doc.decay)}` +
      ` · c ${fmt3(doc.c)} · w_eff ${fmt3(doc.w_eff)}</p>`,
  );
  parts.push('</div>');
  return parts.join('\n');
}

/** Inline message for a rejected request, next to the offending form. */
export function renderFormError(code: string, message: string): string {
  return (
    `<p class="form-error" data-code="${escapeMarkup(code)}">` +
    `${escapeMarkup(message)}</p>`
  );
}
