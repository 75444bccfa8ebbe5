import { ServiceClient, ServiceError } from './api.js';
import { UndoManager } from './undo.js';
import type { ArrangementDoc, MoveReportDoc, MoveRequest, ValidationDoc } from './types.js';

export type Axis = 'x' | 'y';

export interface Banner {
  kind: 'error' | 'info';
  text: string;
}

/**
 * Client-held document state. The document of record is the exact JSON
 * text the service (or an imported file) produced; every geometric answer
 * shown in the UI is a verbatim service response. At most one preview
 * request is live: late responses for superseded requests are dropped.
 */
export class Session {
  private docText: string | null = null;
  private parsed: ArrangementDoc | null = null;
  private readonly undoManager = new UndoManager();
  private previewSeq = 0;

  axis: Axis = 'x';
  preview: MoveReportDoc | null = null;
  previewText: string | null = null;
  banner: Banner | null = null;
  onChange: () => void = () => {};

  constructor(private readonly client: ServiceClient) {}

  get documentText(): string | null {
    return this.docText;
  }

  get document(): ArrangementDoc | null {
    return this.parsed;
  }

  get canUndo(): boolean {
    return this.undoManager.canUndo;
  }

  get canRedo(): boolean {
    return this.undoManager.canRedo;
  }

  /** Validate with the service, then adopt the text verbatim. */
  async importDocument(text: string): Promise<boolean> {
    let parsed: ArrangementDoc;
    try {
      parsed = JSON.parse(text) as ArrangementDoc;
      if (!Array.isArray(parsed.circles) || !Array.isArray(parsed.seed)) {
        throw new Error('missing circles/seed');
      }
    } catch (err) {
      this.banner = { kind: 'error', text: `not an arrangement document: ${String(err)}` };
      this.onChange();
      return false;
    }
    let report: ValidationDoc;
    try {
      report = JSON.parse(await this.client.validate(text)) as ValidationDoc;
    } catch (err) {
      this.banner = { kind: 'error', text: this.describe(err) };
      this.onChange();
      return false;
    }
    if (!report.valid) {
      const clauses = report.violations.map((v) => v.clause).join(', ');
      this.banner = { kind: 'error', text: `arrangement rejected: ${clauses}` };
      this.onChange();
      return false;
    }
    this.docText = text;
    this.parsed = parsed;
    this.preview = null;
    this.previewText = null;
    this.banner = null;
    this.onChange();
    return true;
  }

  /** The exported file is the held text, byte for byte. */
  exportDocument(): string {
    if (this.docText === null) throw new Error('no document loaded');
    return this.docText;
  }

  badge(): string | null {
    if (!this.preview) return null;
    const ax = this.preview.axes.find((a) => a.axis === this.axis);
    return ax ? ax.case : null;
  }

  /** Latest-wins preview; stale responses are discarded silently. */
  async requestPreview(move: MoveRequest): Promise<MoveReportDoc | null> {
    if (this.docText === null) return null;
    const seq = ++this.previewSeq;
    let text: string;
    try {
      text = await this.client.preview(this.docText, move);
    } catch (err) {
      if (seq === this.previewSeq) {
        this.banner = { kind: 'error', text: this.describe(err) };
        this.onChange();
      }
      return null;
    }
    if (seq !== this.previewSeq) return null; // superseded while in flight
    this.preview = JSON.parse(text) as MoveReportDoc;
    this.previewText = text;
    this.banner = null;
    this.onChange();
    return this.preview;
  }

  clearPreview(): void {
    this.previewSeq++;
    this.preview = null;
    this.previewText = null;
    this.onChange();
  }

  /** Commit through the service and push the old document on the undo stack. */
  async commitMove(move: MoveRequest): Promise<boolean> {
    if (this.docText === null) return false;
    let text: string;
    try {
      text = await this.client.commit(this.docText, move);
    } catch (err) {
      this.banner = { kind: 'error', text: this.describe(err) };
      this.onChange();
      return false;
    }
    this.undoManager.pushSnapshot(this.docText);
    this.docText = text;
    this.parsed = JSON.parse(text) as ArrangementDoc;
    this.preview = null;
    this.previewText = null;
    this.banner = null;
    this.onChange();
    return true;
  }

  undo(): boolean {
    if (this.docText === null) return false;
    const prev = this.undoManager.undo(this.docText);
    if (prev === null) return false;
    this.adopt(prev);
    return true;
  }

  redo(): boolean {
    if (this.docText === null) return false;
    const next = this.undoManager.redo(this.docText);
    if (next === null) return false;
    this.adopt(next);
    return true;
  }

  toggleAxis(): void {
    this.axis = this.axis === 'x' ? 'y' : 'x';
    this.onChange();
  }

  private adopt(text: string): void {
    this.docText = text;
    this.parsed = JSON.parse(text) as ArrangementDoc;
    this.preview = null;
    this.previewText = null;
    this.onChange();
  }

  private describe(err: unknown): string {
    if (err instanceof ServiceError) {
      return err.status === 0 ? err.message : `service error ${err.status}: ${err.message}`;
    }
    return String(err);
  }
}
