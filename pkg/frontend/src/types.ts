/** Wire types of the query API. Field names mirror the JSON exactly. */

export interface Glossary {
  id: string;
  title: string;
  description: string;
  era: "classical" | "modern";
}

export interface DateParts {
  year: number;
  month?: number;
  day?: number;
}

export interface ImageRef {
  path: string;
  caption: string;
  credit?: string;
}

export interface ArticleBody {
  id: string;
  title: string;
  body: string;
  glossary: string;
  date: { start: DateParts; end?: DateParts };
  location: { lat: number; lon: number; place: string };
  images: ImageRef[];
  tags: string[];
}

export interface RelatedEntry {
  id: string;
  score: number;
  spatial: number;
  temporal: number;
  tier?: "same_date" | "anniversary" | "nearby";
}

export type RelatedMode = "location" | "time" | "combined";

export interface ArticleView {
  article: ArticleBody;
  glossary: Glossary;
  related: Record<RelatedMode, RelatedEntry[]>;
}

export interface EventCluster {
  lat: number;
  lon: number;
  count: number;
  ids: string[];
  representative: string;
}

export interface TimelineBucket {
  lo: number;
  hi: number;
  count: number;
  ids: string[];
}

export interface TodayFeed {
  date: string;
  events: { id: string; years_ago: number }[];
}

export interface SearchHit {
  id: string;
  score: number;
}

export interface GalleryEntry {
  article_id: string;
  path: string;
  caption: string;
}

export interface BBox {
  south: number;
  west: number;
  north: number;
  east: number;
}
