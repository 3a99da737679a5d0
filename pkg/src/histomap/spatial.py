"""Great-circle distance, bounding-box queries, and grid clustering.

Clustering is a fixed-origin grid: the world is divided into square cells
of 45/2^zoom degrees anchored at (-180, -90). Halving the cell size per
zoom level makes cells nest exactly 4-into-1, so zooming in can only split
clusters, never merge them. That determinism is what makes the zoom-reveal
behaviour reproducible and testable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from histomap.corpus import GeoPoint
from histomap.temporal import OrdinalRange, span_to_ordinal_range

if TYPE_CHECKING:
    from histomap.corpus import Article, Corpus

EARTH_RADIUS_KM = 6371.0

MAX_ZOOM = 18


@dataclass(frozen=True)
class BoundingBox:
    """Geographic box; ``west > east`` wraps across the antimeridian.

    ``west == east`` is interpreted as full longitude coverage so that a
    box spanning the whole globe is expressible at all (longitudes live in
    the half-open interval [-180, 180)).
    """

    south: float
    west: float
    north: float
    east: float

    def __post_init__(self) -> None:
        if not -90.0 <= self.south <= self.north <= 90.0:
            raise ValueError(
                f"latitude bounds must satisfy -90 <= south <= north <= 90, "
                f"got south={self.south} north={self.north}"
            )
        for name, value in (("west", self.west), ("east", self.east)):
            if not -180.0 <= value < 180.0:
                raise ValueError(f"{name} {value} not in [-180, 180)")

    def contains(self, point: GeoPoint) -> bool:
        if not self.south <= point.lat <= self.north:
            return False
        if self.west == self.east:
            return True
        if self.west < self.east:
            return self.west <= point.lon < self.east
        return point.lon >= self.west or point.lon < self.east


@dataclass(frozen=True)
class Cluster:
    """All events in one grid cell, rendered as a single map marker."""

    centroid: GeoPoint
    article_ids: tuple[str, ...]
    representative_id: str
    cell: tuple[int, int]  # (row, col) in the zoom-level grid

    @property
    def count(self) -> int:
        return len(self.article_ids)


def haversine_km(a: GeoPoint, b: GeoPoint) -> float:
    """Great-circle distance on a sphere of radius 6371 km."""
    lat1, lat2 = math.radians(a.lat), math.radians(b.lat)
    dlat = lat2 - lat1
    dlon = math.radians(b.lon - a.lon)
    h = math.sin(dlat / 2) ** 2 + math.cos(lat1) * math.cos(lat2) * math.sin(dlon / 2) ** 2
    return 2.0 * EARTH_RADIUS_KM * math.asin(min(1.0, math.sqrt(h)))


def _time_window(
    time_from: int | None, time_to: int | None
) -> OrdinalRange | None:
    if time_from is None and time_to is None:
        return None
    lo = time_from if time_from is not None else -(10**9)
    hi = time_to if time_to is not None else 10**9
    if lo > hi:
        raise ValueError(f"invalid time window: from {lo} > to {hi}")
    return OrdinalRange(lo, hi)


def query_bbox(
    corpus: Corpus,
    box: BoundingBox,
    time_from: int | None = None,
    time_to: int | None = None,
) -> list[str]:
    """Ids of articles located in the box, optionally limited to a time window.

    Latitude bounds are inclusive; longitude is inclusive west, exclusive
    east. Results come back in (span start ordinal, id) order.
    """
    window = _time_window(time_from, time_to)
    hits = []
    for article in corpus.ordered_articles():
        if not box.contains(article.location):
            continue
        if window is not None and not span_to_ordinal_range(article.span).intersects(window):
            continue
        hits.append(article.id)
    return hits


def cell_size_degrees(zoom: int) -> float:
    if not 0 <= zoom <= MAX_ZOOM:
        raise ValueError(f"zoom {zoom} not in 0..{MAX_ZOOM}")
    return 45.0 / (2**zoom)


def cell_of(point: GeoPoint, zoom: int) -> tuple[int, int]:
    """(row, col) of the fixed-origin grid cell containing a point."""
    size = cell_size_degrees(zoom)
    return (
        math.floor((point.lat + 90.0) / size),
        math.floor((point.lon + 180.0) / size),
    )


def grid_cluster(
    corpus: Corpus,
    box: BoundingBox,
    zoom: int,
    time_from: int | None = None,
    time_to: int | None = None,
) -> list[Cluster]:
    """Cluster the box's articles by grid cell at the given zoom level.

    Each non-empty cell yields one cluster whose centroid is the
    arithmetic mean of member coordinates and whose representative is the
    member with the smallest (span start ordinal, id). Clusters are sorted
    by (row, col).
    """
    cell_size_degrees(zoom)  # range check before scanning
    cells: dict[tuple[int, int], list[Article]] = {}
    for article_id in query_bbox(corpus, box, time_from, time_to):
        article = corpus.articles[article_id]
        cells.setdefault(cell_of(article.location, zoom), []).append(article)
    clusters = []
    for cell in sorted(cells):
        members = cells[cell]  # already in (span.lo, id) order via query_bbox
        clusters.append(
            Cluster(
                centroid=GeoPoint(
                    lat=sum(m.location.lat for m in members) / len(members),
                    lon=sum(m.location.lon for m in members) / len(members),
                ),
                article_ids=tuple(m.id for m in members),
                representative_id=members[0].id,
                cell=cell,
            )
        )
    return clusters
