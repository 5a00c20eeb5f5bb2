/**
 * DOM shell for the session screen.
 *
 * Thin by design: all state lives in SessionForm, all markup comes
 * from the pure builders, all numbers come from the service. This
 * module only moves strings into elements and events into method
 * calls, so the test suite covers everything except the wiring.
 */

import { ServiceClient, ServiceError } from './api.js';
import { SessionForm, entryScoreWarning } from './form.js';
import { buildLocusModel, renderLocusSvg } from './locus.js';
import { buildSsiModel, renderSsiSvg } from './ssi.js';
import {
  renderFormError,
  renderPreviewPanel,
  renderSignalList,
} from './views.js';
import type { SignalSummary } from './types.js';

export class SessionScreen {
  private readonly form = new SessionForm();
  private summaries: SignalSummary[] = [];
  private fieldMax = 10;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: ServiceClient,
  ) {
    root.addEventListener('click', this.handleClick);
    root.addEventListener('input', this.handleInput);
    root.addEventListener('change', this.handleInput);
  }

  async start(): Promise<void> {
    const config = await this.client.config();
    this.fieldMax = config.constants.field_max;
    await this.refreshSignals();
  }

  // ---- event plumbing ----

  private handleClick = (event: Event): void => {
    const target = event.target as HTMLElement;
    const item = target.closest<HTMLElement>('.signal-item');
    if (item?.dataset.signal) {
      void this.selectSignal(item.dataset.signal);
      return;
    }
    switch (target.dataset.action) {
      case 'add-row':
        this.form.addRow();
        this.renderForm();
        break;
      case 'remove-row':
        this.form.removeRow(Number(target.dataset.index));
        this.renderForm();
        break;
      case 'preview':
        void this.doPreview();
        break;
      case 'commit':
        void this.doCommit();
        break;
      case 'create-signal':
        void this.doCreate();
        break;
    }
  };

  private handleInput = (event: Event): void => {
    const target = event.target as HTMLInputElement;
    const index = Number(target.dataset.index);
    switch (target.dataset.field) {
      case 'score-x':
        this.form.setScore(index, 'x', Number(target.value));
        break;
      case 'score-y':
        this.form.setScore(index, 'y', Number(target.value));
        break;
      case 'day':
        this.form.setDay(Number(target.value));
        break;
      case 'occurrences':
        this.form.setOccurrences(Number(target.value));
        break;
      case 'note':
        this.form.setNote(target.value);
        break;
      case 'review-only':
        this.form.setReviewOnly(target.checked);
        break;
      default:
        return;
    }
    this.renderCommitState();
  };

  // ---- actions ----

  private async selectSignal(id: string): Promise<void> {
    const summary = this.summaries.find((s) => s.id === id);
    if (!summary) return;
    this.form.selectSignal(id, summary.region, summary.day);
    this.renderForm();
    await this.refreshPlots(id);
  }

  private async doPreview(): Promise<void> {
    const id = this.form.selectedSignal;
    if (!id) return;
    try {
      const record = await this.client.preview(id, this.form.payload());
      this.form.recordPreview(record);
      this.setPanel(renderPreviewPanel(this.form.regionBefore, record));
      this.clearError();
    } catch (error) {
      this.showError(error);
    }
    this.renderCommitState();
  }

  private async doCommit(): Promise<void> {
    const id = this.form.selectedSignal;
    if (!id || !this.form.canCommit) return;
    try {
      const record = await this.client.commitSession(
        id,
        this.form.commitPayload(),
      );
      this.setPanel(renderPreviewPanel(this.form.regionBefore, record));
      this.form.noteCommitted();
      this.clearError();
      await this.refreshSignals();
      await this.refreshPlots(id);
      this.renderForm();
    } catch (error) {
      this.showError(error);
    }
  }

  private async doCreate(): Promise<void> {
    const name = this.inputValue('new-name');
    const day = Number(this.inputValue('new-day'));
    const x = Number(this.inputValue('new-x'));
    const y = Number(this.inputValue('new-y'));
    const warning = entryScoreWarning([{ x, y }]);
    if (warning) {
      this.setSlot('entry-error', renderFormError('entry-constraint', warning));
      return;
    }
    try {
      await this.client.createSignal({ name, day, assessments: [[x, y]] });
      this.setSlot('entry-error', '');
      await this.refreshSignals();
    } catch (error) {
      this.showError(error, 'entry-error');
    }
  }

  // ---- rendering ----

  private async refreshSignals(): Promise<void> {
    this.summaries = await this.client.listSignals();
    this.setSlot(
      'signals',
      renderSignalList(this.summaries, this.form.selectedSignal),
    );
  }

  private async refreshPlots(id: string): Promise<void> {
    const [locus, ssi] = await Promise.all([
      this.client.getLocus(id),
      this.client.getSsi(id),
    ]);
    this.setSlot('locus', renderLocusSvg(buildLocusModel(locus, this.fieldMax)));
    this.setSlot('ssi', renderSsiSvg(buildSsiModel(ssi)));
  }

  private renderForm(): void {
    const rows = this.form.scoreRows
      .map(
        (row, i) =>
          '<div class="score-row">' +
          `<input type="number" min="0" max="4" step="1" value="${row.x}" ` +
          `data-field="score-x" data-index="${i}">` +
          `<input type="number" min="0" max="4" step="1" value="${row.y}" ` +
          `data-field="score-y" data-index="${i}">` +
          `<button type="button" data-action="remove-row" data-index="${i}">` +
          'remove</button></div>',
      )
      .join('');
    this.setSlot(
      'score-grid',
      `${rows}<button type="button" data-action="add-row">add assessor</button>`,
    );
    this.setPanel('');
    this.renderCommitState();
  }

  private renderCommitState(): void {
    const button = this.root.querySelector<HTMLButtonElement>(
      '[data-action="commit"]',
    );
    if (button) button.disabled = !this.form.canCommit;
  }

  private setPanel(markup: string): void {
    this.setSlot('preview', markup);
  }

  private setSlot(slot: string, markup: string): void {
    const element = this.root.querySelector(`[data-slot="${slot}"]`);
    if (element) element.innerHTML = markup;
  }

  private inputValue(slot: string): string {
    return (
      this.root.querySelector<HTMLInputElement>(`[data-slot="${slot}"]`)
        ?.value ?? ''
    );
  }

  private clearError(): void {
    this.setSlot('error', '');
  }

  private showError(error: unknown, slot = 'error'): void {
    if (error instanceof ServiceError) {
      this.setSlot(slot, renderFormError(error.code, error.message));
    } else {
      this.setSlot(slot, renderFormError('network', String(error)));
    }
  }
}

export function boot(): void {
  const root = document.getElementById('app');
  if (!root) return;
  const params = new URLSearchParams(window.location.search);
  const base = params.get('service') ?? 'http://127.0.0.1:8800';
  const screen = new SessionScreen(root, new ServiceClient(base));
  void screen.start();
}

if (typeof document !== 'undefined') {
  boot();
}
