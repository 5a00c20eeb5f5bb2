import { describe, expect, it } from 'vitest';

import { buildLocusModel, renderLocusSvg } from '../src/locus.js';
import { record } from './fixtures.js';

const THREE_SESSIONS = [
  record({ session_index: 1, x: 2.5, y: 2.5, region: 'QM', sms: false }),
  record({ session_index: 2, x: 6.8, y: 2.9, region: 'LF', sms: true }),
  record({ session_index: 3, x: 8.9, y: 6.9, region: 'OW', sms: true }),
];

describe('locus model', () => {
  it('keeps one node per session in order', () => {
    const model = buildLocusModel(THREE_SESSIONS);
    expect(model.nodes.map((n) => n.session)).toEqual([1, 2, 3]);
    expect(model.pathPoints).toHaveLength(3);
  });

  it('maps field coordinates with y pointing up', () => {
    const model = buildLocusModel(THREE_SESSIONS);
    const low = model.nodes[0]!;
    const high = model.nodes[2]!;
    expect(high.cx).toBeGreaterThan(low.cx); // larger x sits further right
    expect(high.cy).toBeLessThan(low.cy); // larger y sits further up
  });
});

describe('locus rendering', () => {
  it('draws a node per session and a ring per flagged session', () => {
    const svg = renderLocusSvg(buildLocusModel(THREE_SESSIONS));
    expect(svg.match(/class="locus-node"/g)).toHaveLength(3);
    expect(svg.match(/class="sms-ring"/g)).toHaveLength(2);
  });

  it('draws the quadrant boundaries and axis labels', () => {
    const svg = renderLocusSvg(buildLocusModel(THREE_SESSIONS));
    expect(svg.match(/class="quadrant"/g)).toHaveLength(2);
    expect(svg).toContain('Risk intensity (x)');
    expect(svg).toContain('Risk growth potential (y)');
  });

  it('draws one node and no path segment for a single session', () => {
    const svg = renderLocusSvg(buildLocusModel([THREE_SESSIONS[0]!]));
    expect(svg.match(/class="locus-node"/g)).toHaveLength(1);
    expect(svg).not.toContain('locus-path');
  });

  it('renders a placeholder for an empty locus', () => {
    const markup = renderLocusSvg(buildLocusModel([]));
    expect(markup).toContain('placeholder');
    expect(markup).not.toContain('<svg');
  });
});
