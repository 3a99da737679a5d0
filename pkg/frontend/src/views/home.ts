/** Homepage: event map, the two era bands, and the today-in-the-past feed. */

import { ApiClient, ArticleCache } from "../api.js";
import { el, errorBanner, fillText } from "../dom.js";
import { articleHash } from "../router.js";
import { MapView } from "./map.js";
import { TimelineStrip } from "./timeline.js";

export interface HomeParts {
  root: HTMLElement;
  map: MapView;
  classical: TimelineStrip;
  modern: TimelineStrip;
}

export function buildHome(api: ApiClient, titles: ArticleCache, tileTemplate: string): HomeParts {
  const map = new MapView(api, {
    tileTemplate,
    center: { lat: -2.5, lon: 113.0 },
    zoom: 4,
  });
  const classical = new TimelineStrip(api, titles, {
    era: "classical",
    label: "Arrival of Islam and the kingdoms",
    fromYear: 1250,
    toYear: 1700,
  });
  const modern = new TimelineStrip(api, titles, {
    era: "modern",
    label: "Colonial era to independence",
    fromYear: 1800,
    toYear: 1960,
  });

  const feed = el("div", { className: "today-feed" }, [
    el("h3", { text: "Today in the past" }),
  ]);
  const feedList = el("ul", { className: "today-list" });
  feed.append(feedList);

  void api
    .today()
    .then(async (payload) => {
      feed.dataset.date = payload.date;
      if (payload.events.length === 0) {
        feedList.append(el("li", { className: "today-empty", text: `Nothing recorded for ${payload.date}.` }));
        return;
      }
      for (const event of payload.events) {
        const link = el("a", { href: articleHash(event.id), text: event.id });
        fillText(link, titles.title(event.id));
        feedList.append(
          el("li", { className: "today-entry", dataset: { id: event.id } }, [
            el("span", { className: "today-years", text: `${event.years_ago} years ago` }),
            " — ",
            link,
          ]),
        );
      }
    })
    .catch((error) => feed.append(errorBanner(`feed unavailable: ${(error as Error).message}`)));

  const root = el("div", { className: "view home-page" }, [
    map.root,
    classical.root,
    modern.root,
    feed,
  ]);
  return { root, map, classical, modern };
}
