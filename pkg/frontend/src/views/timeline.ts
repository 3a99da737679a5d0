/** One era band of the timeline: a strip of dots, one per non-empty bucket.
 *
 * Dot size grows with the bucket count; hovering fetches and shows the
 * titles of the bucket's events; clicking a one-event dot opens it. The
 * ‹ › controls (and horizontal wheel) slide the window — right means later.
 */

import { ApiClient, RequestGate, ArticleCache } from "../api.js";
import { ordinalToYear, yearEnd, yearStart } from "../dates.js";
import { clear, el, errorBanner } from "../dom.js";
import { navigateToArticle } from "../router.js";
import type { TimelineBucket } from "../types.js";

export interface TimelineOptions {
  era: "classical" | "modern";
  label: string;
  fromYear: number;
  toYear: number;
  buckets?: number;
}

export class TimelineStrip {
  readonly root: HTMLElement;
  private readonly strip: HTMLElement;
  private readonly banner: HTMLElement;
  private readonly rangeLabel: HTMLElement;
  private readonly tooltip: HTMLElement;
  private readonly gate = new RequestGate();
  private readonly bucketCount: number;

  from: number;
  to: number;

  constructor(
    private api: ApiClient,
    private titles: ArticleCache,
    private options: TimelineOptions,
  ) {
    this.from = yearStart(options.fromYear);
    this.to = yearEnd(options.toYear);
    this.bucketCount = options.buckets ?? 48;

    this.strip = el("div", { className: "timeline-strip" });
    this.banner = errorBanner("");
    this.banner.style.display = "none";
    this.tooltip = el("div", { className: "timeline-tooltip" });
    this.tooltip.style.display = "none";
    this.rangeLabel = el("span", { className: "timeline-range" });

    const earlier = el("button", { className: "timeline-earlier", text: "‹" });
    earlier.addEventListener("click", () => this.shift(-0.5));
    const later = el("button", { className: "timeline-later", text: "›" });
    later.addEventListener("click", () => this.shift(+0.5));

    this.root = el("div", { className: `timeline-band era-${options.era}` }, [
      el("div", { className: "timeline-head" }, [
        el("span", { className: "timeline-label", text: options.label }),
        this.rangeLabel,
      ]),
      this.banner,
      el("div", { className: "timeline-row" }, [earlier, this.strip, later]),
      this.tooltip,
    ]);
    this.strip.addEventListener("wheel", (event) => {
      const delta = event.deltaX !== 0 ? event.deltaX : event.deltaY;
      if (delta !== 0) {
        event.preventDefault();
        this.shift(delta > 0 ? 0.25 : -0.25);
      }
    });
  }

  /** Slide the window by the given fraction of its width (right = later). */
  shift(fraction: number): void {
    const width = this.to - this.from + 1;
    const delta = Math.round(width * fraction);
    this.from = Math.max(1, this.from + delta);
    this.to = this.from + width - 1;
    void this.refresh();
  }

  async refresh(): Promise<void> {
    const ticket = this.gate.next();
    let buckets: TimelineBucket[];
    try {
      buckets = await this.api.timeline(this.from, this.to, this.bucketCount, this.options.era);
    } catch (error) {
      if (!this.gate.isCurrent(ticket)) return;
      clear(this.strip);
      this.banner.textContent = `timeline service unavailable: ${(error as Error).message}`;
      this.banner.style.display = "";
      return;
    }
    if (!this.gate.isCurrent(ticket)) return;
    this.banner.style.display = "none";
    this.rangeLabel.textContent = `${ordinalToYear(this.from)} – ${ordinalToYear(this.to)}`;
    this.render(buckets);
  }

  private render(buckets: TimelineBucket[]): void {
    clear(this.strip);
    const span = this.to - this.from + 1;
    for (const bucket of buckets) {
      if (bucket.count === 0) continue;
      const dot = el("div", {
        className: bucket.count === 1 ? "timeline-dot single" : "timeline-dot multi",
        dataset: {
          count: String(bucket.count),
          ids: bucket.ids.join(","),
          lo: String(bucket.lo),
          hi: String(bucket.hi),
        },
      });
      const size = 8 + 4 * Math.min(bucket.count - 1, 4);
      dot.style.width = `${size}px`;
      dot.style.height = `${size}px`;
      const mid = (bucket.lo + bucket.hi) / 2;
      dot.style.left = `${(100 * (mid - this.from)) / span}%`;
      dot.addEventListener("mouseenter", () => void this.showTooltip(dot, bucket));
      dot.addEventListener("mouseleave", () => this.hideTooltip());
      dot.addEventListener("click", () => {
        const only = bucket.ids[0];
        if (bucket.count === 1 && only) navigateToArticle(only);
      });
      this.strip.append(dot);
    }
  }

  private async showTooltip(dot: HTMLElement, bucket: TimelineBucket): Promise<void> {
    const titles = await Promise.allSettled(bucket.ids.map((id) => this.titles.title(id)));
    this.tooltip.replaceChildren(
      ...titles.map((result, i) =>
        el("div", {
          className: "tooltip-line",
          text: result.status === "fulfilled" ? result.value : bucket.ids[i] ?? "",
        }),
      ),
    );
    this.tooltip.style.display = "";
    this.tooltip.style.left = dot.style.left;
  }

  private hideTooltip(): void {
    this.tooltip.style.display = "none";
  }
}
