import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient, ArticleCache } from "../src/api.js";
import { renderGallery } from "../src/views/gallery.js";
import type { GalleryEntry } from "../src/types.js";
import { fixture, stubFetch } from "./helpers.js";

function makeGallery() {
  const api = new ApiClient("http://svc.test");
  const cache = new ArticleCache(api);
  return renderGallery(api, (id) => cache.title(id));
}

beforeEach(() => {
  stubFetch();
});
afterEach(() => vi.unstubAllGlobals());

describe("gallery page", () => {
  it("renders one thumbnail per gallery entry in API order", async () => {
    const page = await makeGallery();
    const payload = fixture<GalleryEntry[]>("gallery");
    const thumbs = Array.from(page.querySelectorAll<HTMLImageElement>(".gallery-thumb"));
    expect(thumbs.length).toBe(payload.length);
    expect(thumbs.map((t) => t.dataset.path)).toEqual(payload.map((e) => e.path));
  });

  it("splits the panes at the golden ratio", async () => {
    const page = await makeGallery();
    const left = page.querySelector<HTMLElement>(".gallery-pane-left")!;
    const right = page.querySelector<HTMLElement>(".gallery-pane-right")!;
    const leftFraction = parseFloat(left.style.width) / 100;
    const rightFraction = parseFloat(right.style.width) / 100;
    expect(Math.abs(leftFraction - 0.382)).toBeLessThanOrEqual(0.01);
    expect(leftFraction + rightFraction).toBeCloseTo(1.0, 6);
    // on a 1000-px container the thumbnail pane measures 382 +/- 10 px
    expect(Math.abs(leftFraction * 1000 - 382)).toBeLessThanOrEqual(10);
  });

  it("starts with the first image selected as the main image", async () => {
    const page = await makeGallery();
    const payload = fixture<GalleryEntry[]>("gallery");
    const main = page.querySelector<HTMLImageElement>(".gallery-main-image")!;
    expect(main.src).toBe(`http://svc.test/${payload[0]!.path}`);
    expect(page.querySelector(".gallery-caption")!.textContent).toBe(payload[0]!.caption);
  });

  it("swaps the main image when a thumbnail is clicked", async () => {
    const page = await makeGallery();
    const payload = fixture<GalleryEntry[]>("gallery");
    const thumbs = page.querySelectorAll<HTMLImageElement>(".gallery-thumb");
    const n = 5;
    thumbs[n]!.click();
    const main = page.querySelector<HTMLImageElement>(".gallery-main-image")!;
    expect(main.src).toBe(`http://svc.test/${payload[n]!.path}`);
    expect(page.querySelector(".gallery-caption")!.textContent).toBe(payload[n]!.caption);
    const source = page.querySelector<HTMLAnchorElement>(".gallery-source")!;
    expect(source.getAttribute("href")).toBe(`#/article/${payload[n]!.article_id}`);
    expect(thumbs[n]!.classList.contains("selected")).toBe(true);
    expect(thumbs[0]!.classList.contains("selected")).toBe(false);
  });

  it("shows a placeholder when the corpus has no images", async () => {
    stubFetch((url) => (url.includes("/api/gallery") ? [] : undefined));
    const page = await makeGallery();
    expect(page.querySelector(".gallery-empty")).not.toBeNull();
    expect(page.querySelectorAll(".gallery-thumb").length).toBe(0);
  });
});
