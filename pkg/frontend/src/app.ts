/** Application shell: menu, routing, and view mounting. */

import { ApiClient, ArticleCache } from "./api.js";
import { loadConfig } from "./config.js";
import { clear, el } from "./dom.js";
import { Route, onRouteChange, parseHash } from "./router.js";
import { renderArticle } from "./views/article.js";
import { renderGallery } from "./views/gallery.js";
import { renderGlossaries } from "./views/glossary.js";
import { buildHome } from "./views/home.js";
import { MapView } from "./views/map.js";
import { buildSearch } from "./views/search.js";
import { TimelineStrip } from "./views/timeline.js";

const MENU: { label: string; hash: string }[] = [
  { label: "Home", hash: "#/" },
  { label: "Glossary", hash: "#/glossary" },
  { label: "Map", hash: "#/map" },
  { label: "Timeline", hash: "#/timeline" },
  { label: "Gallery", hash: "#/gallery" },
  { label: "Search", hash: "#/search" },
];

export class App {
  readonly api: ApiClient;
  readonly articles: ArticleCache;
  private readonly tileTemplate: string;
  private readonly outlet: HTMLElement;

  constructor(mount: HTMLElement) {
    const config = loadConfig();
    this.api = new ApiClient(config.serverUrl);
    this.articles = new ArticleCache(this.api);
    this.tileTemplate = config.tileTemplate;
    this.outlet = el("main", { className: "outlet" });

    const nav = el(
      "nav",
      { className: "menu" },
      MENU.map((item) => el("a", { className: "menu-item", href: item.hash, text: item.label })),
    );
    mount.append(el("header", { className: "masthead" }, [
      el("h1", { text: "Historical Atlas" }),
      nav,
    ]));
    mount.append(this.outlet);

    onRouteChange((route) => void this.show(route));
    void this.show(parseHash(window.location.hash));
  }

  async show(route: Route): Promise<void> {
    clear(this.outlet);
    const titleOf = (id: string) => this.articles.title(id);
    switch (route.view) {
      case "home": {
        const home = buildHome(this.api, this.articles, this.tileTemplate);
        this.outlet.append(home.root);
        await Promise.all([home.map.refresh(), home.classical.refresh(), home.modern.refresh()]);
        return;
      }
      case "map": {
        const map = new MapView(this.api, {
          tileTemplate: this.tileTemplate,
          width: 960,
          height: 600,
          center: { lat: -2.5, lon: 113.0 },
          zoom: 4,
        });
        this.outlet.append(el("div", { className: "view map-page" }, [map.root]));
        await map.refresh();
        return;
      }
      case "timeline": {
        const classical = new TimelineStrip(this.api, this.articles, {
          era: "classical",
          label: "Arrival of Islam and the kingdoms",
          fromYear: 1250,
          toYear: 1700,
          buckets: 96,
        });
        const modern = new TimelineStrip(this.api, this.articles, {
          era: "modern",
          label: "Colonial era to independence",
          fromYear: 1800,
          toYear: 1960,
          buckets: 96,
        });
        this.outlet.append(
          el("div", { className: "view timeline-page" }, [classical.root, modern.root]),
        );
        await Promise.all([classical.refresh(), modern.refresh()]);
        return;
      }
      case "glossary":
        this.outlet.append(await renderGlossaries(this.api, (id) => this.articles.view(id)));
        return;
      case "gallery":
        this.outlet.append(await renderGallery(this.api, titleOf));
        return;
      case "search":
        this.outlet.append(buildSearch(this.api, titleOf, route.query));
        return;
      case "article":
        this.outlet.append(await renderArticle(this.api, route.id, titleOf));
        return;
    }
  }
}

export function start(): App {
  const mount = document.getElementById("app");
  if (!mount) throw new Error("missing #app mount point");
  return new App(mount);
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  start();
}
