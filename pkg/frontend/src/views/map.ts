/** Zoomable cluster map: one marker per API cluster, nothing computed here.
 *
 * Clicking a single-event marker opens that article; clicking a multi-event
 * marker zooms one level in toward the cluster centroid, mirroring the
 * server's grid behaviour of splitting clusters as cells shrink.
 */

import { ApiClient, RequestGate } from "../api.js";
import { clear, el, errorBanner } from "../dom.js";
import { TILE_SIZE, latToY, lonToX, normalizeLon, worldSize, xToLon, yToLat } from "../mercator.js";
import { navigateToArticle } from "../router.js";
import type { BBox, EventCluster } from "../types.js";

export interface MapOptions {
  width?: number;
  height?: number;
  center?: { lat: number; lon: number };
  zoom?: number;
  tileTemplate?: string;
  onViewChange?: (box: BBox, zoom: number) => void;
}

const MAX_ZOOM = 18;

export class MapView {
  readonly root: HTMLElement;
  private readonly pane: HTMLElement;
  private readonly markerLayer: HTMLElement;
  private readonly tileLayer: HTMLElement;
  private readonly banner: HTMLElement;
  private readonly gate = new RequestGate();
  private readonly width: number;
  private readonly height: number;
  private readonly tileTemplate: string;
  private readonly onViewChange?: (box: BBox, zoom: number) => void;

  center: { lat: number; lon: number };
  zoom: number;

  constructor(
    private api: ApiClient,
    options: MapOptions = {},
  ) {
    this.width = options.width ?? 800;
    this.height = options.height ?? 480;
    this.center = options.center ?? { lat: -2.5, lon: 115.0 };
    this.zoom = options.zoom ?? 4;
    this.tileTemplate = options.tileTemplate ?? "";
    this.onViewChange = options.onViewChange;

    this.tileLayer = el("div", { className: "map-tiles" });
    this.markerLayer = el("div", { className: "map-markers" });
    this.banner = errorBanner("");
    this.banner.style.display = "none";
    this.pane = el("div", { className: "map-pane" }, [this.tileLayer, this.markerLayer]);
    this.pane.style.width = `${this.width}px`;
    this.pane.style.height = `${this.height}px`;

    const zoomIn = el("button", { className: "map-zoom-in", text: "+" });
    zoomIn.addEventListener("click", () => this.setView(this.center, this.zoom + 1));
    const zoomOut = el("button", { className: "map-zoom-out", text: "−" });
    zoomOut.addEventListener("click", () => this.setView(this.center, this.zoom - 1));
    const controls = el("div", { className: "map-controls" }, [zoomIn, zoomOut]);

    this.root = el("div", { className: "map-view" }, [this.banner, controls, this.pane]);
    this.attachPanning();
  }

  /** Current viewport as the API's bbox parameters. */
  bounds(): BBox {
    const size = worldSize(this.zoom);
    const cx = lonToX(this.center.lon, this.zoom);
    const cy = latToY(this.center.lat, this.zoom);
    const north = yToLat(Math.max(0, cy - this.height / 2), this.zoom);
    const south = yToLat(Math.min(size, cy + this.height / 2), this.zoom);
    if (this.width >= size) {
      return { south, west: -180, north, east: 180 };
    }
    return {
      south,
      west: normalizeLon(xToLon(cx - this.width / 2, this.zoom)),
      north,
      east: normalizeLon(xToLon(cx + this.width / 2, this.zoom)),
    };
  }

  setView(center: { lat: number; lon: number }, zoom: number): void {
    this.center = {
      lat: Math.max(-85, Math.min(85, center.lat)),
      lon: normalizeLon(center.lon),
    };
    this.zoom = Math.max(0, Math.min(MAX_ZOOM, zoom));
    void this.refresh();
  }

  async refresh(): Promise<void> {
    const ticket = this.gate.next();
    const box = this.bounds();
    const zoom = this.zoom;
    let clusters: EventCluster[];
    try {
      clusters = await this.api.events(box, zoom);
    } catch (error) {
      if (!this.gate.isCurrent(ticket)) return;
      clear(this.markerLayer);
      this.showError(`event service unavailable: ${(error as Error).message}`);
      return;
    }
    if (!this.gate.isCurrent(ticket)) return; // a newer viewport took over
    this.hideError();
    this.renderTiles();
    this.renderMarkers(clusters);
    this.onViewChange?.(box, zoom);
  }

  private showError(message: string): void {
    this.banner.textContent = message;
    this.banner.style.display = "";
  }

  private hideError(): void {
    this.banner.style.display = "none";
  }

  private origin(): { x: number; y: number } {
    return {
      x: lonToX(this.center.lon, this.zoom) - this.width / 2,
      y: latToY(this.center.lat, this.zoom) - this.height / 2,
    };
  }

  private renderTiles(): void {
    clear(this.tileLayer);
    if (!this.tileTemplate) return;
    const tiles = 2 ** this.zoom;
    const origin = this.origin();
    const firstX = Math.floor(origin.x / TILE_SIZE);
    const firstY = Math.max(0, Math.floor(origin.y / TILE_SIZE));
    const lastX = Math.floor((origin.x + this.width) / TILE_SIZE);
    const lastY = Math.min(tiles - 1, Math.floor((origin.y + this.height) / TILE_SIZE));
    for (let ty = firstY; ty <= lastY; ty++) {
      for (let tx = firstX; tx <= lastX; tx++) {
        const wrappedX = ((tx % tiles) + tiles) % tiles;
        const img = el("img", {
          className: "map-tile",
          src: this.tileTemplate
            .replace("{z}", String(this.zoom))
            .replace("{x}", String(wrappedX))
            .replace("{y}", String(ty)),
          alt: "",
        });
        img.style.left = `${tx * TILE_SIZE - origin.x}px`;
        img.style.top = `${ty * TILE_SIZE - origin.y}px`;
        img.addEventListener("error", () => (img.style.visibility = "hidden"));
        this.tileLayer.append(img);
      }
    }
  }

  private renderMarkers(clusters: EventCluster[]): void {
    clear(this.markerLayer);
    const origin = this.origin();
    for (const cluster of clusters) {
      const marker = el("div", {
        className: cluster.count === 1 ? "map-marker single" : "map-marker multi",
        text: String(cluster.count),
        dataset: {
          count: String(cluster.count),
          representative: cluster.representative,
          ids: cluster.ids.join(","),
        },
      });
      marker.style.left = `${lonToX(cluster.lon, this.zoom) - origin.x}px`;
      marker.style.top = `${latToY(cluster.lat, this.zoom) - origin.y}px`;
      marker.addEventListener("click", () => {
        if (cluster.count === 1) {
          navigateToArticle(cluster.representative);
        } else {
          this.setView({ lat: cluster.lat, lon: cluster.lon }, this.zoom + 1);
        }
      });
      this.markerLayer.append(marker);
    }
  }

  private attachPanning(): void {
    let dragging: { x: number; y: number } | null = null;
    this.pane.addEventListener("pointerdown", (event) => {
      dragging = { x: event.clientX, y: event.clientY };
    });
    this.pane.addEventListener("pointerup", (event) => {
      if (!dragging) return;
      const dx = event.clientX - dragging.x;
      const dy = event.clientY - dragging.y;
      dragging = null;
      if (dx === 0 && dy === 0) return;
      const cx = lonToX(this.center.lon, this.zoom) - dx;
      const cy = latToY(this.center.lat, this.zoom) - dy;
      this.setView({ lat: yToLat(cy, this.zoom), lon: xToLon(cx, this.zoom) }, this.zoom);
    });
  }
}
