import { beforeEach, describe, expect, it } from 'vitest';

import { SessionForm, entryScoreWarning } from '../src/form.js';
import { record } from './fixtures.js';

function freshForm(): SessionForm {
  let counter = 0;
  const form = new SessionForm(() => `token-${++counter}`);
  form.selectSignal('s0001', 'QM', 49);
  return form;
}

describe('commit gating', () => {
  let form: SessionForm;

  beforeEach(() => {
    form = freshForm();
  });

  it('starts with commit disabled', () => {
    expect(form.canCommit).toBe(false);
  });

  it('enables commit once a preview is recorded', () => {
    form.recordPreview(record());
    expect(form.canCommit).toBe(true);
  });

  it('clears a stale preview on every kind of edit', () => {
    const edits: ((f: SessionForm) => void)[] = [
      (f) => f.setDay(63),
      (f) => f.setOccurrences(3),
      (f) => f.setNote('smell back'),
      (f) => f.setReviewOnly(true),
      (f) => f.addRow(),
      (f) => f.setScore(0, 'x', 4),
    ];
    for (const edit of edits) {
      form.recordPreview(record());
      expect(form.canCommit).toBe(true);
      edit(form);
      expect(form.canCommit).toBe(false);
      expect(form.preview).toBeNull();
    }
  });

  it('clears the preview when a row is removed', () => {
    form.addRow();
    form.recordPreview(record());
    form.removeRow(1);
    expect(form.canCommit).toBe(false);
  });

  it('keeps the last row; review-only is a toggle, not an empty grid', () => {
    form.removeRow(0);
    expect(form.scoreRows).toHaveLength(1);
  });

  it('disables commit again after a commit is noted', () => {
    form.recordPreview(record());
    form.noteCommitted();
    expect(form.canCommit).toBe(false);
  });
});

describe('payload shape', () => {
  it('sends the score rows as [x, y] pairs', () => {
    const form = freshForm();
    form.setDay(63);
    form.addRow();
    form.addRow();
    for (let i = 0; i < 3; i++) {
      form.setScore(i, 'x', 4);
      form.setScore(i, 'y', 1);
    }
    form.setOccurrences(3);
    expect(form.payload()).toEqual({
      day: 63,
      assessments: [
        [4, 1],
        [4, 1],
        [4, 1],
      ],
      occurrences: 3,
      note: '',
    });
  });

  it('sends an empty assessments array for review-only sessions', () => {
    const form = freshForm();
    form.setReviewOnly(true);
    expect(form.payload().assessments).toEqual([]);
  });

  it('clamps scores into 0..4 integers', () => {
    const form = freshForm();
    form.setScore(0, 'x', 7);
    form.setScore(0, 'y', -2);
    expect(form.scoreRows[0]).toEqual({ x: 4, y: 0 });
    form.setScore(0, 'y', 2.6);
    expect(form.scoreRows[0]?.y).toBe(3);
  });
});

describe('retry token', () => {
  it('reuses one token across retries of the same commit', () => {
    const form = freshForm();
    form.recordPreview(record());
    const first = form.commitPayload();
    const retry = form.commitPayload();
    expect(first.client_token).toBe('token-1');
    expect(retry.client_token).toBe('token-1');
  });

  it('issues a new token after the form changes', () => {
    const form = freshForm();
    form.recordPreview(record());
    expect(form.commitPayload().client_token).toBe('token-1');
    form.setDay(70);
    form.recordPreview(record());
    expect(form.commitPayload().client_token).toBe('token-2');
  });
});

describe('region memory', () => {
  it('tracks the region across a committed session for narration', () => {
    const form = freshForm();
    expect(form.regionBefore).toBe('QM');
    form.recordPreview(record({ region: 'LF' }));
    form.noteCommitted();
    expect(form.regionBefore).toBe('LF');
  });
});

describe('entry gate warning', () => {
  it('accepts all-weak rows', () => {
    expect(entryScoreWarning([{ x: 1, y: 0 }, { x: 1, y: 1 }])).toBeNull();
  });

  it('warns before submission when any score exceeds 1', () => {
    const warning = entryScoreWarning([{ x: 1, y: 1 }, { x: 2, y: 0 }]);
    expect(warning).toContain('assessor 2');
  });
});
