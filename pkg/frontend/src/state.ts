// Session view-model: a thin shell over the API with a single in-flight
// mutation and refetch-after-mutate so the view never drifts from the
// server's history.

import { ApiClient, ApiError, AttrDict, CompareResult, EditOptions, Session } from "./api.js";

export interface SessionView {
  sessionId: string | null;
  session: Session | null;
  pending: boolean;
  lastError: string | null;
  compare: CompareResult | null;
}

export type Listener = (view: SessionView) => void;

export class SessionController {
  view: SessionView = { sessionId: null, session: null, pending: false, lastError: null, compare: null };
  private listeners: Listener[] = [];

  constructor(private api: ApiClient) {}

  subscribe(fn: Listener): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn(this.view);
  }

  private update(patch: Partial<SessionView>): void {
    this.view = { ...this.view, ...patch };
    this.emit();
  }

  canUndo(): boolean {
    const session = this.view.session;
    return !this.view.pending && !!session && session.rounds.length > 1;
  }

  /** Refetch the authoritative history; the view mirrors the server exactly. */
  private async refresh(): Promise<void> {
    if (!this.view.sessionId) return;
    const session = await this.api.getSession(this.view.sessionId);
    this.update({ session });
  }

  private async mutate<T>(run: () => Promise<T>): Promise<T | null> {
    if (this.view.pending) return null; // single in-flight mutation
    this.update({ pending: true, lastError: null });
    try {
      const result = await run();
      await this.refresh();
      return result;
    } catch (err) {
      const message =
        err instanceof ApiError && err.status === 409
          ? "The session is busy with another generation; try again in a moment."
          : err instanceof Error
            ? err.message
            : String(err);
      this.update({ lastError: message });
      return null;
    } finally {
      this.update({ pending: false });
    }
  }

  async start(choice: { attrs?: AttrDict; image?: string }): Promise<void> {
    await this.mutate(async () => {
      const session = await this.api.createSession(choice);
      this.update({ sessionId: session.id, session, compare: null });
    });
  }

  async submitEdit(options: EditOptions): Promise<void> {
    const text = options.text.trim();
    if (!text) {
      this.update({ lastError: "Type an edit instruction first." });
      return;
    }
    if (!this.view.sessionId) {
      this.update({ lastError: "Start a session first." });
      return;
    }
    const id = this.view.sessionId;
    await this.mutate(() => this.api.applyEdit(id, { ...options, text }));
  }

  async compareOrders(t1: string, t2: string, seed?: number | null): Promise<void> {
    const a = t1.trim();
    const b = t2.trim();
    if (!a || !b) {
      this.update({ lastError: "Both instructions are needed for a comparison." });
      return;
    }
    if (!this.view.sessionId) {
      this.update({ lastError: "Start a session first." });
      return;
    }
    const id = this.view.sessionId;
    await this.mutate(async () => {
      const compare = await this.api.compare(id, { t1: a, t2: b, seed: seed ?? undefined });
      this.update({ compare });
    });
  }

  async undo(): Promise<void> {
    if (!this.canUndo() || !this.view.sessionId) return;
    const id = this.view.sessionId;
    await this.mutate(() => this.api.undo(id));
  }
}

export function formatConsistency(value: number): string {
  return value.toFixed(3);
}
