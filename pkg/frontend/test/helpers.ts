/** Fetch interception that replays recorded API responses. */

import { readFileSync, existsSync } from "node:fs";
import { join } from "node:path";
import { vi } from "vitest";

function fixturePath(name: string): string {
  return join(process.cwd(), "test", "fixtures", `${name}.json`);
}

export function fixture<T = unknown>(name: string): T {
  return JSON.parse(readFileSync(fixturePath(name), "utf8")) as T;
}

function hasFixture(name: string): boolean {
  return existsSync(fixturePath(name));
}

function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "Content-Type": "application/json; charset=utf-8" },
  });
}

function notFound(url: string): Response {
  return jsonResponse({ error: { code: "not_found", message: `no route for ${url}` } }, 404);
}

/** Map a request URL to a recorded payload; undefined means 404. */
export function replayRoute(url: string): unknown {
  const parsed = new URL(url);
  const path = parsed.pathname;
  if (path === "/api/glossaries") return fixture("glossaries");
  if (path === "/api/gallery") return fixture("gallery");
  if (path === "/api/today") return fixture("today");
  if (path === "/api/search") return fixture("search-wali-demak");
  if (path === "/api/events") {
    const zoom = parsed.searchParams.get("zoom");
    return hasFixture(`events-global-z${zoom}`) ? fixture(`events-global-z${zoom}`) : undefined;
  }
  if (path === "/api/timeline") {
    const era = parsed.searchParams.get("era");
    if (era === "classical") return fixture("timeline-classical");
    if (era === "modern") return fixture("timeline-modern");
    return fixture("timeline-all");
  }
  const article = path.match(/^\/api\/articles\/([^/]+)$/);
  if (article) {
    const name = `article-${article[1]}`;
    return hasFixture(name) ? fixture(name) : undefined;
  }
  return undefined;
}

export type RouteOverride = (url: string) => unknown | Promise<Response> | undefined;

/** Install a fetch stub; overrides run first, then the standard replay. */
export function stubFetch(override?: RouteOverride): ReturnType<typeof vi.fn> {
  const mock = vi.fn(async (input: RequestInfo | URL): Promise<Response> => {
    const url = String(input);
    if (override) {
      const handled = override(url);
      if (handled instanceof Promise) return handled;
      if (handled !== undefined) return jsonResponse(handled);
    }
    const payload = replayRoute(url);
    return payload === undefined ? notFound(url) : jsonResponse(payload);
  });
  vi.stubGlobal("fetch", mock);
  return mock;
}

export function failingFetch(): void {
  vi.stubGlobal(
    "fetch",
    vi.fn(async () => {
      throw new TypeError("network down");
    }),
  );
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
