"""Read-only query facade: search, feeds, and JSON payload assembly.

Every public payload_* function returns a plain JSON-ready structure with
the exact field names of the HTTP API. The HTTP server and the CLI both
serialize these through :func:`render_json`, which is what makes their
output byte-identical for the same arguments.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone
from pathlib import Path
from typing import Any

from histomap.corpus import Article, Corpus, HistoricalDate
from histomap.relatedness import (
    MODES,
    RelatednessParams,
    RelatedScore,
    rank_related,
)
from histomap.spatial import BoundingBox, grid_cluster
from histomap.temporal import anniversary_query, bucketize

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


@dataclass(frozen=True)
class ServiceConfig:
    """Static configuration for one service process."""

    corpus_dir: Path
    port: int = 8531
    params: RelatednessParams = field(default_factory=RelatednessParams)
    fixed_today: HistoricalDate | None = None
    default_k: int = 5
    utc_offset_minutes: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.port <= 65535:
            raise ValueError(f"port {self.port} out of range")
        if self.default_k < 1:
            raise ValueError("default_k must be positive")
        if self.fixed_today is not None and self.fixed_today.precision != "day":
            raise ValueError("fixed_today must be a day-precision date")

    def today(self) -> HistoricalDate:
        if self.fixed_today is not None:
            return self.fixed_today
        now = datetime.now(timezone.utc) + timedelta(minutes=self.utc_offset_minutes)
        return HistoricalDate(year=now.year, month=now.month, day=now.day)


@dataclass(frozen=True)
class SearchHit:
    article_id: str
    title_matches: int
    body_matches: int

    @property
    def score(self) -> int:
        return 2 * self.title_matches + self.body_matches


def tokenize(text: str) -> list[str]:
    """Lowercase and split on non-alphanumeric runs."""
    return _TOKEN_RE.findall(text.lower())


def search(corpus: Corpus, query: str) -> list[SearchHit]:
    """Keyword search over titles (weight 2) and bodies (weight 1).

    Hits are sorted by score descending, ties by id; an empty or
    whitespace-only query yields no hits.
    """
    terms = tokenize(query)
    if not terms:
        return []
    hits = []
    for article in corpus.articles.values():
        title_tokens = tokenize(article.title)
        body_tokens = tokenize(article.body)
        title_matches = sum(title_tokens.count(term) for term in terms)
        body_matches = sum(body_tokens.count(term) for term in terms)
        if title_matches or body_matches:
            hits.append(SearchHit(article.id, title_matches, body_matches))
    hits.sort(key=lambda h: (-h.score, h.article_id))
    return hits


@dataclass(frozen=True)
class TodayFeed:
    date: HistoricalDate
    events: tuple[tuple[str, int], ...]  # (article id, years ago)


def today_feed(corpus: Corpus, today: HistoricalDate) -> TodayFeed:
    """Anniversary feed: events sharing today's month and day in earlier years."""
    if today.precision != "day":
        raise ValueError("today must be a day-precision date")
    ids = anniversary_query(corpus, today.month, today.day, before_year=today.year)
    return TodayFeed(
        date=today,
        events=tuple(
            (article_id, today.year - corpus.articles[article_id].span.start.year)
            for article_id in ids
        ),
    )


@dataclass(frozen=True)
class ArticleView:
    article: Article
    related: dict[str, list[RelatedScore]]


def article_view(
    corpus: Corpus, article_id: str, k: int, params: RelatednessParams
) -> ArticleView:
    """An article plus its three related lists (location, time, combined)."""
    if article_id not in corpus.articles:
        raise KeyError(f"unknown article id {article_id!r}")
    return ArticleView(
        article=corpus.articles[article_id],
        related={
            mode: rank_related(corpus, article_id, mode, k, params) for mode in MODES
        },
    )


# --- JSON payloads ------------------------------------------------------------


def render_json(payload: Any) -> bytes:
    """Canonical wire encoding shared by the HTTP server and the CLI."""
    return (
        json.dumps(payload, ensure_ascii=False, separators=(",", ":"), allow_nan=False)
        + "\n"
    ).encode("utf-8")


def _date_json(d: HistoricalDate) -> dict[str, int]:
    obj: dict[str, int] = {"year": d.year}
    if d.month is not None:
        obj["month"] = d.month
    if d.day is not None:
        obj["day"] = d.day
    return obj


def _article_json(article: Article) -> dict[str, Any]:
    date: dict[str, Any] = {"start": _date_json(article.span.start)}
    if article.span.end != article.span.start:
        date["end"] = _date_json(article.span.end)
    return {
        "id": article.id,
        "title": article.title,
        "body": article.body,
        "glossary": article.glossary_id,
        "date": date,
        "location": {
            "lat": article.location.lat,
            "lon": article.location.lon,
            "place": article.place_name,
        },
        "images": [
            {"path": img.path, "caption": img.caption}
            | ({"credit": img.credit} if img.credit is not None else {})
            for img in article.images
        ],
        "tags": list(article.tags),
    }


def _related_json(entry: RelatedScore) -> dict[str, Any]:
    obj: dict[str, Any] = {
        "id": entry.article_id,
        "score": entry.score,
        "spatial": entry.spatial_component,
        "temporal": entry.temporal_component,
    }
    if entry.tier is not None:
        obj["tier"] = entry.tier
    return obj


def payload_glossaries(corpus: Corpus) -> list[dict[str, Any]]:
    return [
        {"id": g.id, "title": g.title, "description": g.description, "era": g.era}
        for g in corpus.glossaries.values()
    ]


def payload_article_view(
    corpus: Corpus, article_id: str, k: int, params: RelatednessParams
) -> dict[str, Any]:
    view = article_view(corpus, article_id, k, params)
    glossary = corpus.glossaries[view.article.glossary_id]
    return {
        "article": _article_json(view.article),
        "glossary": {
            "id": glossary.id,
            "title": glossary.title,
            "description": glossary.description,
            "era": glossary.era,
        },
        "related": {
            mode: [_related_json(e) for e in view.related[mode]] for mode in MODES
        },
    }


def payload_related(
    corpus: Corpus, article_id: str, mode: str, k: int, params: RelatednessParams
) -> list[dict[str, Any]]:
    return [_related_json(e) for e in rank_related(corpus, article_id, mode, k, params)]


def payload_events(
    corpus: Corpus,
    box: BoundingBox,
    zoom: int,
    time_from: int | None = None,
    time_to: int | None = None,
) -> list[dict[str, Any]]:
    return [
        {
            "lat": cluster.centroid.lat,
            "lon": cluster.centroid.lon,
            "count": cluster.count,
            "ids": list(cluster.article_ids),
            "representative": cluster.representative_id,
        }
        for cluster in grid_cluster(corpus, box, zoom, time_from, time_to)
    ]


def payload_timeline(
    corpus: Corpus,
    time_from: int,
    time_to: int,
    buckets: int,
    era: str | None = None,
) -> list[dict[str, Any]]:
    return [
        {
            "lo": bucket.lo,
            "hi": bucket.hi,
            "count": bucket.count,
            "ids": list(bucket.article_ids),
        }
        for bucket in bucketize(corpus, time_from, time_to, buckets, era)
    ]


def payload_today(corpus: Corpus, today: HistoricalDate) -> dict[str, Any]:
    feed = today_feed(corpus, today)
    return {
        "date": feed.date.iso(),
        "events": [
            {"id": article_id, "years_ago": years_ago}
            for article_id, years_ago in feed.events
        ],
    }


def payload_search(corpus: Corpus, query: str) -> list[dict[str, Any]]:
    return [{"id": hit.article_id, "score": hit.score} for hit in search(corpus, query)]


def payload_gallery(corpus: Corpus) -> list[dict[str, Any]]:
    return [
        {"article_id": article.id, "path": img.path, "caption": img.caption}
        for article in corpus.ordered_articles()
        for img in article.images
    ]
