"""Ordinal-day conversion and time-based queries.

The time axis is Rata Die: day 1 is 0001-01-01 in the proleptic Gregorian
calendar, which is exactly ``datetime.date.toordinal``. A date known only
to month or year precision occupies the full ordinal range of that month
or year.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import date as _pydate
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from histomap.corpus import Corpus, HistoricalDate, TimeSpan

_DAYS_IN_MONTH = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)


def is_leap_year(year: int) -> bool:
    return (year % 4 == 0 and year % 100 != 0) or year % 400 == 0


def days_in_month(year: int, month: int) -> int:
    if month == 2 and is_leap_year(year):
        return 29
    return _DAYS_IN_MONTH[month - 1]


@dataclass(frozen=True)
class OrdinalRange:
    """Closed interval of Rata Die day numbers."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"ordinal range lo {self.lo} > hi {self.hi}")

    def intersects(self, other: OrdinalRange) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def midpoint(self) -> int:
        return (self.lo + self.hi) // 2


@dataclass(frozen=True)
class TimelineBucket:
    """One cell of a uniform partition of an ordinal range."""

    lo: int
    hi: int
    article_ids: tuple[str, ...]

    @property
    def count(self) -> int:
        return len(self.article_ids)


def date_to_ordinal_range(d: HistoricalDate) -> OrdinalRange:
    """Ordinal range a date occupies: one day, a whole month, or a whole year."""
    if d.precision == "day":
        ordinal = _pydate(d.year, d.month, d.day).toordinal()
        return OrdinalRange(ordinal, ordinal)
    if d.precision == "month":
        return OrdinalRange(
            _pydate(d.year, d.month, 1).toordinal(),
            _pydate(d.year, d.month, days_in_month(d.year, d.month)).toordinal(),
        )
    return OrdinalRange(
        _pydate(d.year, 1, 1).toordinal(), _pydate(d.year, 12, 31).toordinal()
    )


def span_to_ordinal_range(s: TimeSpan) -> OrdinalRange:
    return OrdinalRange(
        date_to_ordinal_range(s.start).lo, date_to_ordinal_range(s.end).hi
    )


def span_gap_days(a: OrdinalRange, b: OrdinalRange) -> int:
    """Days separating two ranges; zero when they intersect."""
    if a.intersects(b):
        return 0
    return max(a.lo, b.lo) - min(a.hi, b.hi)


def query_time_range(
    corpus: Corpus, time_from: int, time_to: int, era_filter: str | None = None
) -> list[str]:
    """Ids of articles whose span intersects [time_from, time_to], in (span.lo, id) order."""
    if time_from > time_to:
        raise ValueError(f"invalid range: from {time_from} > to {time_to}")
    window = OrdinalRange(time_from, time_to)
    hits = []
    for article in corpus.ordered_articles():
        if not span_to_ordinal_range(article.span).intersects(window):
            continue
        if era_filter is not None and corpus.era_of(article) != era_filter:
            continue
        hits.append(article.id)
    return hits


def anniversary_query(
    corpus: Corpus, month: int, day: int, before_year: int | None = None
) -> list[str]:
    """Articles whose day-precision start date falls on (month, day).

    Only explicit (2, 29) queries match February 29 events; no remapping to
    adjacent days. Results are sorted by start year ascending, ties by id.
    """
    if not 1 <= month <= 12 or not 1 <= day <= days_in_month(2000, month):
        raise ValueError(f"impossible calendar day ({month}, {day})")
    hits = []
    for article in corpus.articles.values():
        start = article.span.start
        if start.precision != "day":
            continue
        if start.month != month or start.day != day:
            continue
        if before_year is not None and start.year >= before_year:
            continue
        hits.append((start.year, article.id))
    hits.sort()
    return [article_id for _, article_id in hits]


def bucketize(
    corpus: Corpus,
    time_from: int,
    time_to: int,
    n: int,
    era_filter: str | None = None,
) -> list[TimelineBucket]:
    """Partition [time_from, time_to] into at most ``n`` equal-width buckets.

    Bucket width is ceil(range/n); the last bucket is truncated at
    ``time_to``, so the buckets tile the range exactly (which can leave
    fewer than ``n`` of them). Each intersecting article lands in the
    bucket containing its span midpoint, clamped into the range.
    """
    if n < 1:
        raise ValueError(f"bucket count must be positive, got {n}")
    if time_from > time_to:
        raise ValueError(f"invalid range: from {time_from} > to {time_to}")
    length = time_to - time_from + 1
    width = math.ceil(length / n)
    bucket_count = math.ceil(length / width)
    members: list[list[tuple[int, str]]] = [[] for _ in range(bucket_count)]
    window = OrdinalRange(time_from, time_to)
    for article in corpus.ordered_articles():
        span = span_to_ordinal_range(article.span)
        if not span.intersects(window):
            continue
        if era_filter is not None and corpus.era_of(article) != era_filter:
            continue
        mid = min(max(span.midpoint(), time_from), time_to)
        members[(mid - time_from) // width].append((span.lo, article.id))
    buckets = []
    for k, entries in enumerate(members):
        entries.sort()
        lo = time_from + k * width
        buckets.append(
            TimelineBucket(
                lo=lo,
                hi=min(lo + width - 1, time_to),
                article_ids=tuple(article_id for _, article_id in entries),
            )
        )
    return buckets
