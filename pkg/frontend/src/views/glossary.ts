/** Glossary view: the corpus's thematic groups with their member articles.
 *
 * There is no members-by-glossary endpoint, so membership comes from the
 * articles themselves: ids from a whole-range timeline query, each article
 * fetched (and cached) to read its declared glossary.
 */

import { ApiClient } from "../api.js";
import { el, errorBanner } from "../dom.js";
import { articleHash } from "../router.js";
import type { ArticleView } from "../types.js";

const WHOLE_RANGE = { from: 1, to: 800_000 };

export async function renderGlossaries(
  api: ApiClient,
  articleOf: (id: string) => Promise<ArticleView>,
): Promise<HTMLElement> {
  try {
    const [glossaries, buckets] = await Promise.all([
      api.glossaries(),
      api.timeline(WHOLE_RANGE.from, WHOLE_RANGE.to, 1),
    ]);
    const ids = buckets.flatMap((bucket) => bucket.ids);
    const views = await Promise.all(ids.map((id) => articleOf(id)));
    const members = new Map<string, ArticleView[]>();
    for (const view of views) {
      const list = members.get(view.article.glossary) ?? [];
      list.push(view);
      members.set(view.article.glossary, list);
    }
    return el(
      "div",
      { className: "view glossary-page" },
      glossaries.map((glossary) =>
        el("section", { className: `glossary-card era-${glossary.era}`, dataset: { id: glossary.id } }, [
          el("h3", { text: glossary.title }),
          el("span", { className: "glossary-era", text: glossary.era }),
          el("p", { text: glossary.description }),
          el(
            "ul",
            { className: "glossary-members" },
            (members.get(glossary.id) ?? []).map((view) =>
              el("li", {}, [
                el("span", { className: "member-year", text: String(view.article.date.start.year) }),
                " ",
                el("a", { href: articleHash(view.article.id), text: view.article.title }),
              ]),
            ),
          ),
        ]),
      ),
    );
  } catch (error) {
    return el("div", { className: "view glossary-page" }, [
      errorBanner(`glossaries unavailable: ${(error as Error).message}`),
    ]);
  }
}
