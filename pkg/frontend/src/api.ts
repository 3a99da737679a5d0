/** Thin client for the query API plus stale-response bookkeeping. */

import type {
  ArticleView,
  BBox,
  EventCluster,
  GalleryEntry,
  Glossary,
  RelatedEntry,
  RelatedMode,
  SearchHit,
  TimelineBucket,
  TodayFeed,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export class ApiClient {
  constructor(readonly serverUrl: string) {}

  imageUrl(path: string): string {
    return `${this.serverUrl}/${path}`;
  }

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(`${this.serverUrl}/api${path}`);
    if (!response.ok) {
      let code = "http_error";
      let message = `${response.status}`;
      try {
        const body = (await response.json()) as { error?: { code: string; message: string } };
        if (body.error) {
          code = body.error.code;
          message = body.error.message;
        }
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, code, message);
    }
    return (await response.json()) as T;
  }

  glossaries(): Promise<Glossary[]> {
    return this.get("/glossaries");
  }

  article(id: string): Promise<ArticleView> {
    return this.get(`/articles/${encodeURIComponent(id)}`);
  }

  related(id: string, mode: RelatedMode, k: number): Promise<RelatedEntry[]> {
    return this.get(`/articles/${encodeURIComponent(id)}/related?mode=${mode}&k=${k}`);
  }

  events(box: BBox, zoom: number): Promise<EventCluster[]> {
    const q = `south=${box.south}&west=${box.west}&north=${box.north}&east=${box.east}&zoom=${zoom}`;
    return this.get(`/events?${q}`);
  }

  timeline(from: number, to: number, buckets: number, era?: string): Promise<TimelineBucket[]> {
    const eraParam = era ? `&era=${era}` : "";
    return this.get(`/timeline?from=${from}&to=${to}&buckets=${buckets}${eraParam}`);
  }

  today(date?: string): Promise<TodayFeed> {
    return this.get(date ? `/today?date=${date}` : "/today");
  }

  search(query: string): Promise<SearchHit[]> {
    return this.get(`/search?q=${encodeURIComponent(query)}`);
  }

  gallery(): Promise<GalleryEntry[]> {
    return this.get("/gallery");
  }
}

/**
 * Generation counter for in-flight requests: a view takes a ticket before
 * fetching and applies the response only if no newer ticket was issued,
 * so an outdated viewport or window never paints over a fresh one.
 */
export class RequestGate {
  private generation = 0;

  next(): number {
    return ++this.generation;
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.generation;
  }
}

/** Articles are fetched once per id and shared by every view. */
export class ArticleCache {
  private cache = new Map<string, Promise<ArticleView>>();

  constructor(private api: ApiClient) {}

  view(id: string): Promise<ArticleView> {
    let pending = this.cache.get(id);
    if (!pending) {
      pending = this.api.article(id);
      pending.catch(() => this.cache.delete(id));
      this.cache.set(id, pending);
    }
    return pending;
  }

  title(id: string): Promise<string> {
    return this.view(id).then((view) => view.article.title);
  }
}
