/** Two-pane gallery split at the golden ratio.
 *
 * Thumbnails fill the narrow left pane (38.2% of the width) and the main
 * image the right (61.8%); clicking a thumbnail swaps the main image and
 * its caption/source link.
 */

import { ApiClient } from "../api.js";
import { el, errorBanner, fillText } from "../dom.js";
import { articleHash } from "../router.js";
import type { GalleryEntry } from "../types.js";

export const THUMB_PANE_FRACTION = 0.382;

export async function renderGallery(
  api: ApiClient,
  titleOf: (id: string) => Promise<string>,
): Promise<HTMLElement> {
  let entries: GalleryEntry[];
  try {
    entries = await api.gallery();
  } catch (error) {
    return el("div", { className: "view gallery-page" }, [
      errorBanner(`gallery unavailable: ${(error as Error).message}`),
    ]);
  }

  if (entries.length === 0) {
    return el("div", { className: "view gallery-page" }, [
      el("p", { className: "gallery-empty", text: "No images in this corpus yet." }),
    ]);
  }

  const mainImage = el("img", { className: "gallery-main-image" });
  const caption = el("div", { className: "gallery-caption" });
  const sourceLink = el("a", { className: "gallery-source" });

  function select(entry: GalleryEntry): void {
    mainImage.src = api.imageUrl(entry.path);
    mainImage.alt = entry.caption;
    caption.textContent = entry.caption;
    sourceLink.href = articleHash(entry.article_id);
    sourceLink.textContent = entry.article_id;
    fillText(sourceLink, titleOf(entry.article_id));
  }

  const thumbs = el(
    "div",
    { className: "gallery-thumbs" },
    entries.map((entry, index) => {
      const thumb = el("img", {
        className: "gallery-thumb",
        src: api.imageUrl(entry.path),
        alt: entry.caption,
        dataset: { path: entry.path, articleId: entry.article_id },
      });
      if (index === 0) thumb.classList.add("selected");
      thumb.addEventListener("click", () => {
        select(entry);
        for (const sibling of Array.from(thumbs.children)) sibling.classList.remove("selected");
        thumb.classList.add("selected");
      });
      return thumb;
    }),
  );

  const left = el("div", { className: "gallery-pane-left" }, [thumbs]);
  left.style.width = `${THUMB_PANE_FRACTION * 100}%`;
  const right = el("div", { className: "gallery-pane-right" }, [
    mainImage,
    caption,
    el("div", { className: "gallery-source-line" }, ["from ", sourceLink]),
  ]);
  right.style.width = `${(1 - THUMB_PANE_FRACTION) * 100}%`;

  const first = entries[0];
  if (first) select(first);
  const split = el("div", { className: "gallery-split" }, [left, right]);
  return el("div", { className: "view gallery-page" }, [split]);
}
