/** Small DOM construction helpers; no framework, no templates. */

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: {
    className?: string;
    text?: string;
    href?: string;
    title?: string;
    src?: string;
    alt?: string;
    dataset?: Record<string, string>;
  } = {},
  children: (HTMLElement | string)[] = [],
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (attrs.className) node.className = attrs.className;
  if (attrs.text !== undefined) node.textContent = attrs.text;
  if (attrs.title !== undefined) node.title = attrs.title;
  if (attrs.href !== undefined) (node as unknown as HTMLAnchorElement).href = attrs.href;
  if (attrs.src !== undefined) (node as unknown as HTMLImageElement).src = attrs.src;
  if (attrs.alt !== undefined) (node as unknown as HTMLImageElement).alt = attrs.alt;
  for (const [key, value] of Object.entries(attrs.dataset ?? {})) {
    node.dataset[key] = value;
  }
  for (const child of children) {
    node.append(child);
  }
  return node;
}

export function clear(node: HTMLElement): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

export function errorBanner(message: string): HTMLElement {
  return el("div", { className: "error-banner", text: message });
}

/** Swap a node's text once a lookup resolves; on failure the fallback stays. */
export function fillText(node: HTMLElement, lookup: Promise<string>): void {
  lookup.then((value) => (node.textContent = value)).catch(() => undefined);
}
