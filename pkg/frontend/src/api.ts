// Typed client for the documentation server's JSON and action endpoints.

export interface SearchHit {
  target: string;
  kind: string;
  summary: string;
  public: boolean;
  score: number;
  file: string;
}

export interface ReloadResult {
  generation: number;
  parsed: string[];
}

export class HttpError extends Error {
  constructor(readonly status: number, body: string) {
    super(`HTTP ${status}: ${body}`);
  }
}

export type Fetcher = (url: string, init?: RequestInit) => Promise<Response>;

export interface SearchClient {
  search(query: string): Promise<SearchHit[]>;
}

export interface ActionClient {
  edit(indicator: string): Promise<string>;
  reload(): Promise<ReloadResult>;
}

export class Api implements SearchClient, ActionClient {
  constructor(
    private readonly base = "",
    private readonly fetcher: Fetcher = (url, init) => fetch(url, init),
  ) {}

  async search(query: string): Promise<SearchHit[]> {
    const url = `${this.base}/api/search?for=${encodeURIComponent(query)}`;
    return (await this.json(url)) as SearchHit[];
  }

  async edit(indicator: string): Promise<string> {
    const url = `${this.base}/edit?pred=${encodeURIComponent(indicator)}`;
    const resp = await this.fetcher(url, { method: "POST" });
    const body = await resp.text();
    if (!resp.ok) throw new HttpError(resp.status, body);
    return body;
  }

  async reload(): Promise<ReloadResult> {
    const resp = await this.fetcher(`${this.base}/reload`, { method: "POST" });
    if (!resp.ok) throw new HttpError(resp.status, await resp.text());
    return (await resp.json()) as ReloadResult;
  }

  private async json(url: string): Promise<unknown> {
    const resp = await this.fetcher(url);
    if (!resp.ok) throw new HttpError(resp.status, await resp.text());
    return resp.json();
  }
}
