// Request lifecycle logic, kept free of DOM concerns so it can be
// driven by tests and by the page glue alike.

import { ActionClient, HttpError, SearchClient, SearchHit } from "./api";

export interface Scheduler {
  set(ms: number, fn: () => void): number;
  clear(id: number): void;
}

export const realScheduler: Scheduler = {
  set: (ms, fn) => setTimeout(fn, ms) as unknown as number,
  clear: (id) => clearTimeout(id),
};

export interface SearchView {
  renderHits(hits: SearchHit[]): void;
  clear(): void;
  showError(message: string): void;
}

export const DEBOUNCE_MS = 150;

/**
 * Search-as-you-type with a debounce, at most one request in flight,
 * and responses for anything but the latest query discarded.
 */
export class SearchBox {
  private query = "";
  private timer: number | null = null;
  private inFlight = false;
  private pending: string | null = null;

  constructor(
    private readonly api: SearchClient,
    private readonly view: SearchView,
    private readonly scheduler: Scheduler = realScheduler,
    private readonly debounceMs: number = DEBOUNCE_MS,
  ) {}

  type(query: string): void {
    this.query = query;
    if (this.timer !== null) {
      this.scheduler.clear(this.timer);
      this.timer = null;
    }
    if (query === "") {
      this.pending = null;
      this.view.clear();
      return;
    }
    this.timer = this.scheduler.set(this.debounceMs, () => {
      this.timer = null;
      void this.request(query);
    });
  }

  private async request(query: string): Promise<void> {
    if (this.inFlight) {
      this.pending = query;
      return;
    }
    this.inFlight = true;
    try {
      const hits = await this.api.search(query);
      if (query === this.query) this.view.renderHits(hits);
    } catch (err) {
      if (query === this.query) this.view.showError(`search failed: ${err}`);
    } finally {
      this.inFlight = false;
      const next = this.pending;
      this.pending = null;
      if (next !== null && next === this.query && next !== query) {
        void this.request(next);
      }
    }
  }
}

export interface ActionView {
  confirm(message: string): void;
  banner(message: string): void;
  hideEditButtons(): void;
  refreshPage(): void;
}

/**
 * Edit and reload buttons.  Edit hides itself for the session on a 403;
 * reload is single-flight with one queued repeat at most.
 */
export class Actions {
  lastGeneration: number | null = null;
  editsHidden = false;
  private reloadInFlight = false;
  private reloadQueued = false;

  constructor(
    private readonly api: ActionClient,
    private readonly view: ActionView,
  ) {}

  async edit(indicator: string): Promise<void> {
    if (this.editsHidden) return;
    try {
      this.view.confirm(await this.api.edit(indicator));
    } catch (err) {
      if (err instanceof HttpError && err.status === 403) {
        this.editsHidden = true;
        this.view.hideEditButtons();
      } else {
        this.view.banner(`edit failed: ${err}`);
      }
    }
  }

  async reload(): Promise<void> {
    if (this.reloadInFlight) {
      this.reloadQueued = true;
      return;
    }
    this.reloadInFlight = true;
    try {
      const result = await this.api.reload();
      this.lastGeneration = result.generation;
      this.view.refreshPage();
    } catch (err) {
      this.view.banner(`reload failed: ${err}`);
    } finally {
      this.reloadInFlight = false;
      if (this.reloadQueued) {
        this.reloadQueued = false;
        void this.reload();
      }
    }
  }
}
