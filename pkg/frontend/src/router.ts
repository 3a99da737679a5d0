/** Hash router: every view is client-side addressable and linkable. */

export type Route =
  | { view: "home" }
  | { view: "map" }
  | { view: "timeline" }
  | { view: "glossary" }
  | { view: "gallery" }
  | { view: "search"; query: string }
  | { view: "article"; id: string };

export function parseHash(hash: string): Route {
  const path = hash.replace(/^#\/?/, "");
  const [head = "", ...rest] = path.split("/");
  switch (head) {
    case "":
    case "home":
      return { view: "home" };
    case "map":
      return { view: "map" };
    case "timeline":
      return { view: "timeline" };
    case "glossary":
      return { view: "glossary" };
    case "gallery":
      return { view: "gallery" };
    case "search":
      return { view: "search", query: decodeURIComponent(rest.join("/") ?? "") };
    case "article":
      return { view: "article", id: decodeURIComponent(rest.join("/")) };
    default:
      return { view: "home" };
  }
}

export function articleHash(id: string): string {
  return `#/article/${encodeURIComponent(id)}`;
}

export function navigateToArticle(id: string): void {
  window.location.hash = articleHash(id);
}

export function onRouteChange(handler: (route: Route) => void): void {
  window.addEventListener("hashchange", () => handler(parseHash(window.location.hash)));
}
