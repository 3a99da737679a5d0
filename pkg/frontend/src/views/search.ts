/** Search view: a query box over /api/search, hits link to articles. */

import { ApiClient, RequestGate } from "../api.js";
import { clear, el, errorBanner, fillText } from "../dom.js";
import { articleHash } from "../router.js";

export function buildSearch(
  api: ApiClient,
  titleOf: (id: string) => Promise<string>,
  initialQuery = "",
): HTMLElement {
  const input = el("input", { className: "search-input" });
  input.type = "search";
  input.placeholder = "Search titles and articles…";
  input.value = initialQuery;
  const button = el("button", { className: "search-go", text: "Search" });
  const results = el("ul", { className: "search-results" });
  const banner = errorBanner("");
  banner.style.display = "none";
  const gate = new RequestGate();

  async function run(): Promise<void> {
    const query = input.value;
    window.location.hash = query ? `#/search/${encodeURIComponent(query)}` : "#/search";
    const ticket = gate.next();
    let hits;
    try {
      hits = await api.search(query);
    } catch (error) {
      if (!gate.isCurrent(ticket)) return;
      banner.textContent = `search unavailable: ${(error as Error).message}`;
      banner.style.display = "";
      return;
    }
    if (!gate.isCurrent(ticket)) return;
    banner.style.display = "none";
    clear(results);
    if (hits.length === 0) {
      results.append(el("li", { className: "search-empty", text: "No matches." }));
      return;
    }
    for (const hit of hits) {
      const link = el("a", { href: articleHash(hit.id), text: hit.id });
      fillText(link, titleOf(hit.id));
      results.append(
        el("li", { className: "search-hit", dataset: { id: hit.id, score: String(hit.score) } }, [
          link,
          el("span", { className: "search-score", text: ` score ${hit.score}` }),
        ]),
      );
    }
  }

  button.addEventListener("click", () => void run());
  input.addEventListener("keydown", (event) => {
    if (event.key === "Enter") void run();
  });
  if (initialQuery) void run();

  return el("div", { className: "view search-page" }, [
    el("div", { className: "search-bar" }, [input, button]),
    banner,
    results,
  ]);
}
