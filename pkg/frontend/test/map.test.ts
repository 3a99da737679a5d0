import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { MapView } from "../src/views/map.js";
import type { EventCluster } from "../src/types.js";
import { failingFetch, fixture, flush, stubFetch } from "./helpers.js";

const API = new ApiClient("http://svc.test");

function makeMap(zoom = 4): MapView {
  return new MapView(API, {
    width: 800,
    height: 480,
    center: { lat: -2.5, lon: 113 },
    zoom,
  });
}

function markers(map: MapView): HTMLElement[] {
  return Array.from(map.root.querySelectorAll<HTMLElement>(".map-marker"));
}

beforeEach(() => {
  stubFetch();
});
afterEach(() => vi.unstubAllGlobals());

describe("map view", () => {
  it("renders one marker per cluster, in payload order, labelled with counts", async () => {
    const map = makeMap(4);
    await map.refresh();
    const payload = fixture<EventCluster[]>("events-global-z4");
    const rendered = markers(map);
    expect(rendered.length).toBe(payload.length);
    expect(rendered.map((m) => m.dataset.representative)).toEqual(
      payload.map((c) => c.representative),
    );
    expect(rendered.map((m) => m.textContent)).toEqual(payload.map((c) => String(c.count)));
    expect(rendered.map((m) => m.dataset.ids)).toEqual(payload.map((c) => c.ids.join(",")));
  });

  it("navigates to the article when a single-event marker is clicked", async () => {
    const map = makeMap(8);
    await map.refresh();
    const single = markers(map).find((m) => m.dataset.count === "1");
    expect(single).toBeDefined();
    single!.click();
    expect(window.location.hash).toBe(`#/article/${single!.dataset.representative}`);
  });

  it("zooms one level toward the centroid when a multi-event marker is clicked", async () => {
    const map = makeMap(2);
    await map.refresh();
    const multi = markers(map).find((m) => Number(m.dataset.count) > 1);
    expect(multi).toBeDefined();
    const payload = fixture<EventCluster[]>("events-global-z2");
    const cluster = payload.find((c) => c.representative === multi!.dataset.representative)!;
    multi!.click();
    await flush();
    expect(map.zoom).toBe(3);
    expect(map.center.lon).toBeCloseTo(cluster.lon, 6);
    expect(map.center.lat).toBeCloseTo(cluster.lat, 6);
  });

  it("shows an error banner and clears markers when the service is down", async () => {
    const map = makeMap(4);
    await map.refresh();
    expect(markers(map).length).toBeGreaterThan(0);
    failingFetch();
    await map.refresh();
    expect(markers(map).length).toBe(0);
    const banner = map.root.querySelector<HTMLElement>(".error-banner")!;
    expect(banner.style.display).not.toBe("none");
    expect(banner.textContent).toContain("unavailable");
  });

  it("discards stale responses from an outdated viewport", async () => {
    let releaseFirst!: () => void;
    const firstGate = new Promise<void>((resolve) => (releaseFirst = resolve));
    let call = 0;
    stubFetch((url) => {
      if (!url.includes("/api/events")) return undefined;
      call += 1;
      if (call === 1) {
        return firstGate.then(
          () =>
            new Response(JSON.stringify(fixture("events-global-z0")), {
              status: 200,
              headers: { "Content-Type": "application/json" },
            }),
        );
      }
      return undefined; // fall through to replay for the second call
    });
    const map = makeMap(0);
    const slow = map.refresh(); // will resolve last
    map.zoom = 5;
    await map.refresh(); // newer request wins
    releaseFirst();
    await slow;
    const payload = fixture<EventCluster[]>("events-global-z5");
    expect(markers(map).length).toBe(payload.length);
  });

  it("requests full-world longitude bounds when zoomed all the way out", async () => {
    const calls = stubFetch();
    const map = makeMap(0); // world is 256px wide, narrower than the 800px pane
    await map.refresh();
    const url = String(calls.mock.calls[0]![0]);
    expect(url).toContain("west=-180");
    expect(url).toContain("east=180");
  });
});
