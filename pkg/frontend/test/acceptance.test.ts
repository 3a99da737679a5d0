/** Secondary acceptance: thin-client replay fidelity and layout rules.
 *
 * Fetches are intercepted and answered from recordings of the real API
 * (test/fixtures/, written by tools/record_frontend_fixtures.py), so every
 * assertion compares rendered DOM against genuine server payloads.
 */

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient, ArticleCache } from "../src/api.js";
import { renderArticle } from "../src/views/article.js";
import { renderGallery } from "../src/views/gallery.js";
import { MapView } from "../src/views/map.js";
import { TimelineStrip } from "../src/views/timeline.js";
import type {
  ArticleView,
  EventCluster,
  GalleryEntry,
  RelatedMode,
  TimelineBucket,
} from "../src/types.js";
import { fixture, stubFetch } from "./helpers.js";

const API = new ApiClient("http://svc.test");

beforeEach(() => {
  stubFetch();
});
afterEach(() => vi.unstubAllGlobals());

describe("thin-client replay", () => {
  it("map markers match the API payload exactly, for every recorded zoom", async () => {
    for (let zoom = 0; zoom <= 8; zoom++) {
      const map = new MapView(API, {
        width: 800,
        height: 480,
        center: { lat: -2.5, lon: 113 },
        zoom,
      });
      await map.refresh();
      const payload = fixture<EventCluster[]>(`events-global-z${zoom}`);
      const markers = Array.from(map.root.querySelectorAll<HTMLElement>(".map-marker"));
      expect(markers.length).toBe(payload.length);
      expect(markers.map((m) => m.dataset.ids)).toEqual(payload.map((c) => c.ids.join(",")));
      expect(markers.map((m) => Number(m.dataset.count))).toEqual(payload.map((c) => c.count));
    }
  });

  it("timeline dots match the API's non-empty buckets exactly, both bands", async () => {
    for (const era of ["classical", "modern"] as const) {
      const strip = new TimelineStrip(API, new ArticleCache(API), {
        era,
        label: era,
        fromYear: era === "classical" ? 1250 : 1800,
        toYear: era === "classical" ? 1700 : 1960,
      });
      await strip.refresh();
      const buckets = fixture<TimelineBucket[]>(`timeline-${era}`).filter((b) => b.count > 0);
      const dots = Array.from(strip.root.querySelectorAll<HTMLElement>(".timeline-dot"));
      expect(dots.length).toBe(buckets.length);
      expect(dots.map((d) => d.dataset.ids)).toEqual(buckets.map((b) => b.ids.join(",")));
    }
  });

  it("related panels list the API's ids in API order", async () => {
    const cache = new ArticleCache(API);
    const page = await renderArticle(API, "demak", (id) => cache.title(id));
    const payload = fixture<ArticleView>("article-demak");
    for (const mode of ["location", "time", "combined"] as RelatedMode[]) {
      const entries = Array.from(
        page.querySelectorAll<HTMLElement>(`.related-panel.mode-${mode} .related-entry`),
      );
      expect(entries.map((e) => e.dataset.id)).toEqual(payload.related[mode].map((r) => r.id));
    }
  });

  it("gallery thumbnails match the API payload count and order", async () => {
    const cache = new ArticleCache(API);
    const page = await renderGallery(API, (id) => cache.title(id));
    const payload = fixture<GalleryEntry[]>("gallery");
    const thumbs = Array.from(page.querySelectorAll<HTMLImageElement>(".gallery-thumb"));
    expect(thumbs.length).toBe(payload.length);
    expect(thumbs.map((t) => t.dataset.path)).toEqual(payload.map((e) => e.path));
    expect(thumbs.map((t) => t.dataset.articleId)).toEqual(payload.map((e) => e.article_id));
  });
});

describe("layout rules", () => {
  it("gallery panes split at 0.382 +/- 0.01 of the container", async () => {
    const cache = new ArticleCache(API);
    const page = await renderGallery(API, (id) => cache.title(id));
    const left = page.querySelector<HTMLElement>(".gallery-pane-left")!;
    const fraction = parseFloat(left.style.width) / 100;
    expect(Math.abs(fraction - 0.382)).toBeLessThanOrEqual(0.01);
    expect(Math.abs(fraction * 1000 - 382)).toBeLessThanOrEqual(10);
  });

  it("zooming in on a fixed viewport never decreases the marker count", async () => {
    const map = new MapView(API, {
      width: 800,
      height: 480,
      center: { lat: -2.5, lon: 113 },
      zoom: 0,
    });
    let previous = 0;
    for (let zoom = 0; zoom <= 8; zoom++) {
      map.zoom = zoom;
      await map.refresh();
      const count = map.root.querySelectorAll(".map-marker").length;
      expect(count).toBeGreaterThanOrEqual(previous);
      previous = count;
    }
  });
});
