"""Spatio-temporal relatedness scoring between articles.

Closeness in space and time is turned into bounded similarities with
exponential-decay kernels, exp(-distance/scale); a convex combination of
the two gives the combined score. Time-only ranking is tiered instead:
events on an intersecting date range first, then anniversaries (same month
and day in a different year), then everything else by gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from histomap.spatial import haversine_km
from histomap.temporal import span_gap_days, span_to_ordinal_range

if TYPE_CHECKING:
    from histomap.corpus import Article, Corpus

MODES = ("location", "time", "combined")

TIERS = ("same_date", "anniversary", "nearby")


@dataclass(frozen=True)
class RelatednessParams:
    """Kernel scales and mixing weights; weights must sum to one."""

    spatial_scale_km: float = 250.0
    temporal_scale_days: float = 3650.0
    spatial_weight: float = 0.5
    temporal_weight: float = 0.5

    def __post_init__(self) -> None:
        if self.spatial_scale_km <= 0 or self.temporal_scale_days <= 0:
            raise ValueError("kernel scales must be positive")
        if self.spatial_weight < 0 or self.temporal_weight < 0:
            raise ValueError("weights must be non-negative")
        if abs(self.spatial_weight + self.temporal_weight - 1.0) > 1e-9:
            raise ValueError("weights must sum to 1; use from_weights() to normalize")

    @classmethod
    def from_weights(
        cls,
        spatial_weight: float,
        temporal_weight: float,
        spatial_scale_km: float = 250.0,
        temporal_scale_days: float = 3650.0,
    ) -> RelatednessParams:
        """Build params from unnormalized non-negative weights."""
        total = spatial_weight + temporal_weight
        if total <= 0:
            raise ValueError("at least one weight must be positive")
        return cls(
            spatial_scale_km=spatial_scale_km,
            temporal_scale_days=temporal_scale_days,
            spatial_weight=spatial_weight / total,
            temporal_weight=temporal_weight / total,
        )


@dataclass(frozen=True)
class RelatedScore:
    """One ranked candidate with its component breakdown."""

    article_id: str
    score: float
    spatial_component: float
    temporal_component: float
    tier: str | None = None  # set in time mode only


def spatial_similarity(a: Article, b: Article, params: RelatednessParams) -> float:
    return math.exp(-haversine_km(a.location, b.location) / params.spatial_scale_km)


def temporal_similarity(a: Article, b: Article, params: RelatednessParams) -> float:
    gap = span_gap_days(span_to_ordinal_range(a.span), span_to_ordinal_range(b.span))
    return math.exp(-gap / params.temporal_scale_days)


def time_tier(a: Article, b: Article) -> str:
    """Classify temporal relatedness: same_date, anniversary, or nearby."""
    if span_to_ordinal_range(a.span).intersects(span_to_ordinal_range(b.span)):
        return "same_date"
    sa, sb = a.span.start, b.span.start
    if (
        sa.precision == "day"
        and sb.precision == "day"
        and sa.month == sb.month
        and sa.day == sb.day
        and sa.year != sb.year
    ):
        return "anniversary"
    return "nearby"


def rank_related(
    corpus: Corpus,
    article_id: str,
    mode: str,
    k: int,
    params: RelatednessParams | None = None,
) -> list[RelatedScore]:
    """Top-k articles related to ``article_id`` under the given mode.

    location mode orders by spatial similarity, combined mode by the
    weighted sum, and time mode by tier (same_date, anniversary, nearby)
    with the day gap ascending inside each tier. All ties break by id.
    The result is a prefix of the full deterministic ordering.
    """
    if params is None:
        params = RelatednessParams()
    if article_id not in corpus.articles:
        raise KeyError(f"unknown article id {article_id!r}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")

    anchor = corpus.articles[article_id]
    anchor_span = span_to_ordinal_range(anchor.span)
    scored: list[tuple[tuple, RelatedScore]] = []
    for candidate in corpus.articles.values():
        if candidate.id == article_id:
            continue
        spatial = spatial_similarity(anchor, candidate, params)
        temporal = temporal_similarity(anchor, candidate, params)
        if mode == "location":
            entry = RelatedScore(candidate.id, spatial, spatial, temporal)
            key = (-entry.score, candidate.id)
        elif mode == "combined":
            combined = (
                params.spatial_weight * spatial + params.temporal_weight * temporal
            )
            entry = RelatedScore(candidate.id, combined, spatial, temporal)
            key = (-entry.score, candidate.id)
        else:
            tier = time_tier(anchor, candidate)
            gap = span_gap_days(anchor_span, span_to_ordinal_range(candidate.span))
            entry = RelatedScore(candidate.id, temporal, spatial, temporal, tier=tier)
            key = (TIERS.index(tier), gap, candidate.id)
        scored.append((key, entry))
    scored.sort(key=lambda pair: pair[0])
    return [entry for _, entry in scored[:k]]
