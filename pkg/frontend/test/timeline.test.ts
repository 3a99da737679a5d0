import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient, ArticleCache } from "../src/api.js";
import { TimelineStrip } from "../src/views/timeline.js";
import type { ArticleView, TimelineBucket } from "../src/types.js";
import { failingFetch, fixture, flush, stubFetch } from "./helpers.js";

function makeStrip(era: "classical" | "modern"): TimelineStrip {
  const api = new ApiClient("http://svc.test");
  return new TimelineStrip(api, new ArticleCache(api), {
    era,
    label: era,
    fromYear: era === "classical" ? 1250 : 1800,
    toYear: era === "classical" ? 1700 : 1960,
  });
}

function dots(strip: TimelineStrip): HTMLElement[] {
  return Array.from(strip.root.querySelectorAll<HTMLElement>(".timeline-dot"));
}

beforeEach(() => {
  stubFetch();
});
afterEach(() => vi.unstubAllGlobals());

describe("timeline strip", () => {
  it("draws one dot per non-empty bucket in payload order", async () => {
    const strip = makeStrip("classical");
    await strip.refresh();
    const payload = fixture<TimelineBucket[]>("timeline-classical").filter((b) => b.count > 0);
    const rendered = dots(strip);
    expect(rendered.length).toBe(payload.length);
    expect(rendered.map((d) => d.dataset.ids)).toEqual(payload.map((b) => b.ids.join(",")));
  });

  it("sizes dots by bucket count", async () => {
    const strip = makeStrip("classical");
    await strip.refresh();
    for (const dot of dots(strip)) {
      const count = Number(dot.dataset.count);
      const size = parseFloat(dot.style.width);
      expect(size).toBe(8 + 4 * Math.min(count - 1, 4));
    }
  });

  it("shows event titles in the tooltip on hover", async () => {
    const strip = makeStrip("modern");
    await strip.refresh();
    const withMuhammadiyah = dots(strip).find((d) =>
      (d.dataset.ids ?? "").split(",").includes("muhammadiyah"),
    );
    expect(withMuhammadiyah).toBeDefined();
    withMuhammadiyah!.dispatchEvent(new Event("mouseenter"));
    await flush();
    await flush();
    const tooltip = strip.root.querySelector<HTMLElement>(".timeline-tooltip")!;
    expect(tooltip.style.display).not.toBe("none");
    const expected = fixture<ArticleView>("article-muhammadiyah").article.title;
    expect(tooltip.textContent).toContain(expected);
  });

  it("navigates when a single-event dot is clicked", async () => {
    const strip = makeStrip("modern");
    await strip.refresh();
    const single = dots(strip).find((d) => d.dataset.count === "1");
    expect(single).toBeDefined();
    single!.click();
    expect(window.location.hash).toBe(`#/article/${single!.dataset.ids}`);
  });

  it("scrolling right moves the window strictly later", async () => {
    const strip = makeStrip("classical");
    await strip.refresh();
    const before = { from: strip.from, to: strip.to };
    strip.shift(+0.5);
    await flush();
    expect(strip.from).toBeGreaterThan(before.from);
    expect(strip.to).toBeGreaterThan(before.to);
    expect(strip.to - strip.from).toBe(before.to - before.from); // same width
  });

  it("scrolling left moves the window earlier", async () => {
    const strip = makeStrip("classical");
    await strip.refresh();
    const before = strip.from;
    strip.shift(-0.25);
    await flush();
    expect(strip.from).toBeLessThan(before);
  });

  it("shows an error banner when the service is down", async () => {
    failingFetch();
    const strip = makeStrip("classical");
    await strip.refresh();
    expect(dots(strip).length).toBe(0);
    const banner = strip.root.querySelector<HTMLElement>(".error-banner")!;
    expect(banner.style.display).not.toBe("none");
  });
});
