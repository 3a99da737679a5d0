/** Article page: text, images, glossary link, and the three related panels. */

import { ApiClient, ApiError } from "../api.js";
import { el, fillText } from "../dom.js";
import { articleHash } from "../router.js";
import type { ArticleView, DateParts, RelatedEntry, RelatedMode } from "../types.js";

const PANELS: { mode: RelatedMode; heading: string }[] = [
  { mode: "location", heading: "Related by location" },
  { mode: "time", heading: "Related by time" },
  { mode: "combined", heading: "Related by location and time" },
];

function formatDate(parts: DateParts): string {
  const pieces = [String(parts.year).padStart(4, "0")];
  if (parts.month !== undefined) pieces.push(String(parts.month).padStart(2, "0"));
  if (parts.day !== undefined) pieces.push(String(parts.day).padStart(2, "0"));
  return pieces.join("-");
}

function formatSpan(view: ArticleView): string {
  const { start, end } = view.article.date;
  const from = formatDate(start);
  const to = end ? formatDate(end) : from;
  return from === to ? from : `${from} to ${to}`;
}

function relatedItem(entry: RelatedEntry, titleOf: (id: string) => Promise<string>): HTMLElement {
  const link = el("a", { className: "related-link", href: articleHash(entry.id), text: entry.id });
  fillText(link, titleOf(entry.id));
  const score = el("span", { className: "related-score", text: entry.score.toFixed(3) });
  const item = el(
    "li",
    { className: "related-entry", dataset: { id: entry.id, score: String(entry.score) } },
    [link, score],
  );
  if (entry.tier) {
    item.dataset.tier = entry.tier;
    item.append(el("span", { className: `related-tier tier-${entry.tier}`, text: entry.tier }));
  }
  return item;
}

export function renderNotFound(id: string): HTMLElement {
  return el("div", { className: "view not-found" }, [
    el("h2", { text: "No such article" }),
    el("p", { text: `Nothing in the corpus is called “${id}”.` }),
    el("a", { href: "#/", text: "Back to the map" }),
  ]);
}

export async function renderArticle(
  api: ApiClient,
  id: string,
  titleOf: (articleId: string) => Promise<string>,
): Promise<HTMLElement> {
  let view: ArticleView;
  try {
    view = await api.article(id);
  } catch (error) {
    if (error instanceof ApiError && error.status === 404) {
      return renderNotFound(id);
    }
    throw error;
  }

  const article = view.article;
  const images = el(
    "div",
    { className: "article-images" },
    article.images.map((image) =>
      el("figure", { className: "article-figure" }, [
        el("img", {
          className: "article-thumb",
          src: api.imageUrl(image.path),
          alt: image.caption,
        }),
        el("figcaption", { text: image.credit ? `${image.caption} (${image.credit})` : image.caption }),
      ]),
    ),
  );

  const panels = el(
    "div",
    { className: "related-panels" },
    PANELS.map(({ mode, heading }) =>
      el("section", { className: `related-panel mode-${mode}`, dataset: { mode } }, [
        el("h3", { text: heading }),
        view.related[mode].length === 0
          ? el("p", { className: "related-empty", text: "Nothing related yet." })
          : el(
              "ul",
              { className: "related-list" },
              view.related[mode].map((entry) => relatedItem(entry, titleOf)),
            ),
      ]),
    ),
  );

  return el("article", { className: "view article-page", dataset: { id: article.id } }, [
    el("h2", { className: "article-title", text: article.title }),
    el("p", { className: "article-meta" }, [
      el("span", { className: "article-dates", text: formatSpan(view) }),
      " · ",
      el("span", { className: "article-place", text: article.location.place }),
      " · ",
      el("a", {
        className: "article-glossary",
        href: "#/glossary",
        text: view.glossary.title,
      }),
    ]),
    images,
    ...article.body.split("\n\n").map((paragraph) => el("p", { className: "article-body", text: paragraph })),
    panels,
  ]);
}
