"""histomap: spatio-temporal query engine for dated, geolocated history articles.

The package loads a corpus directory into an immutable in-memory model and
answers map-clustering, timeline, anniversary, relatedness, and keyword
queries over it, through Python calls, a CLI, and an HTTP/JSON service.
"""

from histomap.corpus import (
    Article,
    ArticleParseError,
    Corpus,
    Diagnostic,
    FatalCorpusError,
    GeoPoint,
    Glossary,
    HistoricalDate,
    ImageRef,
    TimeSpan,
    build_corpus,
    load_corpus,
    parse_article,
    serialize_article,
    validate_corpus,
)
from histomap.relatedness import (
    RelatednessParams,
    RelatedScore,
    rank_related,
    spatial_similarity,
    temporal_similarity,
    time_tier,
)
from histomap.service import ServiceConfig, SearchHit, article_view, search, today_feed
from histomap.spatial import (
    BoundingBox,
    Cluster,
    grid_cluster,
    haversine_km,
    query_bbox,
)
from histomap.temporal import (
    OrdinalRange,
    TimelineBucket,
    anniversary_query,
    bucketize,
    date_to_ordinal_range,
    query_time_range,
    span_gap_days,
    span_to_ordinal_range,
)

__version__ = "0.1.0"

__all__ = [
    "Article",
    "ArticleParseError",
    "BoundingBox",
    "Cluster",
    "Corpus",
    "Diagnostic",
    "FatalCorpusError",
    "GeoPoint",
    "Glossary",
    "HistoricalDate",
    "ImageRef",
    "OrdinalRange",
    "RelatednessParams",
    "RelatedScore",
    "SearchHit",
    "ServiceConfig",
    "TimeSpan",
    "TimelineBucket",
    "anniversary_query",
    "article_view",
    "bucketize",
    "build_corpus",
    "date_to_ordinal_range",
    "grid_cluster",
    "haversine_km",
    "load_corpus",
    "parse_article",
    "query_bbox",
    "query_time_range",
    "rank_related",
    "search",
    "serialize_article",
    "span_gap_days",
    "span_to_ordinal_range",
    "spatial_similarity",
    "temporal_similarity",
    "time_tier",
    "today_feed",
    "validate_corpus",
]
