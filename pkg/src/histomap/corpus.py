"""Content data model and corpus ingestion.

A corpus is a directory with a ``glossaries.json`` manifest, one JSON
document per article under ``articles/``, and image files under
``images/``. Loading produces an immutable :class:`Corpus` that the query
engines treat as read-only shared state.

All dates are interpreted as proleptic Gregorian, including pre-1582
events, so that every date maps to one unambiguous ordinal-day range.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path, PurePosixPath
from types import MappingProxyType
from typing import Any, Iterable, Mapping

from histomap import temporal
from histomap.temporal import days_in_month

SLUG_RE = re.compile(r"^[a-z0-9][a-z0-9-]*$")

ERAS = ("classical", "modern")

# Hard structural bound: dates must be representable on the ordinal axis.
MIN_YEAR, MAX_YEAR = 1, 9999
# Corpus content policy: events outside this window are reported as
# diagnostics rather than being unrepresentable.
DOMAIN_MIN_YEAR, DOMAIN_MAX_YEAR = 500, 2100


class CorpusError(Exception):
    """Base class for corpus ingestion failures."""


class FatalCorpusError(CorpusError):
    """Structural problem that prevents loading a corpus at all."""


class ArticleParseError(CorpusError):
    """One article document failed to parse; carries per-field diagnostics."""

    def __init__(self, diagnostics: list[Diagnostic]):
        super().__init__("; ".join(d.message for d in diagnostics))
        self.diagnostics = diagnostics


@dataclass(frozen=True, order=False)
class HistoricalDate:
    """A calendar date known to year, month, or day precision."""

    year: int
    month: int | None = None
    day: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.year, int) or isinstance(self.year, bool):
            raise ValueError("year must be an integer")
        if not MIN_YEAR <= self.year <= MAX_YEAR:
            raise ValueError(f"year {self.year} outside representable range")
        if self.day is not None and self.month is None:
            raise ValueError("day given without month")
        if self.month is not None and not 1 <= self.month <= 12:
            raise ValueError(f"month {self.month} not in 1..12")
        if self.day is not None and not 1 <= self.day <= days_in_month(self.year, self.month):
            raise ValueError(
                f"invalid calendar date {self.year:04d}-{self.month:02d}-{self.day:02d}"
            )

    @property
    def precision(self) -> str:
        if self.day is not None:
            return "day"
        if self.month is not None:
            return "month"
        return "year"

    def iso(self) -> str:
        parts = [f"{self.year:04d}"]
        if self.month is not None:
            parts.append(f"{self.month:02d}")
        if self.day is not None:
            parts.append(f"{self.day:02d}")
        return "-".join(parts)


@dataclass(frozen=True)
class TimeSpan:
    """Event time span; a single (possibly imprecise) date is a span onto itself."""

    start: HistoricalDate
    end: HistoricalDate | None = None

    def __post_init__(self) -> None:
        if self.end is None:
            object.__setattr__(self, "end", self.start)
        lo = temporal.date_to_ordinal_range(self.start).lo
        hi = temporal.date_to_ordinal_range(self.end).hi
        if lo > hi:
            raise ValueError(f"span start {self.start.iso()} after end {self.end.iso()}")


@dataclass(frozen=True)
class GeoPoint:
    """Point on the sphere; longitude is normalized into [-180, 180)."""

    lat: float
    lon: float

    def __post_init__(self) -> None:
        lat = float(self.lat)
        lon = float(self.lon)
        if not -90.0 <= lat <= 90.0:
            raise ValueError(f"latitude {lat} not in [-90, 90]")
        if lon != lon or lon in (float("inf"), float("-inf")):
            raise ValueError("longitude must be finite")
        object.__setattr__(self, "lat", lat)
        object.__setattr__(self, "lon", (lon + 180.0) % 360.0 - 180.0)


@dataclass(frozen=True)
class ImageRef:
    """Reference to an image file, relative to the corpus root."""

    path: str
    caption: str
    credit: str | None = None

    def __post_init__(self) -> None:
        if not self.path:
            raise ValueError("image path is empty")
        parts = PurePosixPath(self.path).parts
        if self.path.startswith("/") or ".." in parts:
            raise ValueError(f"image path {self.path!r} escapes the corpus root")


@dataclass(frozen=True)
class Glossary:
    """Named group of articles sharing a theme and a close time period."""

    id: str
    title: str
    description: str
    era: str

    def __post_init__(self) -> None:
        if not SLUG_RE.match(self.id):
            raise ValueError(f"glossary id {self.id!r} is not a slug")
        if self.era not in ERAS:
            raise ValueError(f"era {self.era!r} not one of {ERAS}")


@dataclass(frozen=True)
class Article:
    """One historical event: text, time span, location, glossary membership."""

    id: str
    title: str
    body: str
    glossary_id: str
    span: TimeSpan
    location: GeoPoint
    place_name: str
    images: tuple[ImageRef, ...] = ()
    tags: tuple[str, ...] = ()
    source: str = ""

    def __post_init__(self) -> None:
        if not SLUG_RE.match(self.id):
            raise ValueError(f"article id {self.id!r} is not a slug")
        if not self.title.strip():
            raise ValueError("title is empty")
        if not self.body.strip():
            raise ValueError("body is empty")
        for tag in self.tags:
            if not SLUG_RE.match(tag):
                raise ValueError(f"tag {tag!r} is not a lowercase token")


@dataclass(frozen=True)
class Diagnostic:
    """One ingest or validation finding; data, not an exception."""

    severity: str  # "error" | "warning"
    file: str
    message: str

    def __post_init__(self) -> None:
        if self.severity not in ("error", "warning"):
            raise ValueError(f"unknown severity {self.severity!r}")
        if not self.message:
            raise ValueError("diagnostic message is empty")


@dataclass(frozen=True)
class Corpus:
    """Immutable loaded corpus; safe for unlimited concurrent readers."""

    glossaries: Mapping[str, Glossary]
    articles: Mapping[str, Article]
    ingest_diagnostics: tuple[Diagnostic, ...] = ()
    root: Path | None = None

    def ordered_articles(self) -> tuple[Article, ...]:
        """Articles in (span start ordinal, id) order."""
        return tuple(self.articles.values())

    def era_of(self, article: Article) -> str:
        return self.glossaries[article.glossary_id].era


def build_corpus(
    glossaries: Iterable[Glossary],
    articles: Iterable[Article],
    diagnostics: Iterable[Diagnostic] = (),
    root: Path | None = None,
) -> Corpus:
    """Assemble an immutable corpus, ordering articles by (start ordinal, id)."""
    glossary_map: dict[str, Glossary] = {}
    for glossary in glossaries:
        if glossary.id in glossary_map:
            raise FatalCorpusError(f"duplicate glossary id {glossary.id!r}")
        glossary_map[glossary.id] = glossary
    ordered = sorted(
        articles, key=lambda a: (temporal.span_to_ordinal_range(a.span).lo, a.id)
    )
    article_map: dict[str, Article] = {}
    for article in ordered:
        if article.id in article_map:
            raise FatalCorpusError(f"duplicate article id {article.id!r}")
        if article.glossary_id not in glossary_map:
            raise FatalCorpusError(
                f"article {article.id!r} references unknown glossary {article.glossary_id!r}"
            )
        article_map[article.id] = article
    return Corpus(
        glossaries=MappingProxyType(glossary_map),
        articles=MappingProxyType(article_map),
        ingest_diagnostics=tuple(diagnostics),
        root=root,
    )


# --- article document parsing -------------------------------------------------


class _FieldErrors:
    def __init__(self, source: str):
        self.source = source
        self.diagnostics: list[Diagnostic] = []

    def add(self, field_name: str, problem: str) -> None:
        self.diagnostics.append(
            Diagnostic("error", self.source, f"{field_name}: {problem}")
        )

    def raise_if_any(self) -> None:
        if self.diagnostics:
            raise ArticleParseError(self.diagnostics)


def _require_str(obj: Mapping[str, Any], key: str, errors: _FieldErrors, prefix: str = "") -> str:
    name = prefix + key
    value = obj.get(key)
    if value is None:
        errors.add(name, "missing required field")
        return ""
    if not isinstance(value, str) or not value.strip():
        errors.add(name, "must be a non-empty string")
        return ""
    return value


def _opt_int(obj: Mapping[str, Any], key: str, errors: _FieldErrors, prefix: str) -> int | None:
    value = obj.get(key)
    if value is None:
        return None
    if not isinstance(value, int) or isinstance(value, bool):
        errors.add(prefix + key, "must be an integer")
        return None
    return value


def _parse_date(obj: Any, errors: _FieldErrors, prefix: str) -> HistoricalDate | None:
    if not isinstance(obj, dict):
        errors.add(prefix, "must be an object with year/month/day")
        return None
    unknown = set(obj) - {"year", "month", "day"}
    if unknown:
        errors.add(prefix, f"unknown keys {sorted(unknown)}")
        return None
    year = _opt_int(obj, "year", errors, prefix + ".")
    if "year" not in obj:
        errors.add(prefix + ".year", "missing required field")
        return None
    month = _opt_int(obj, "month", errors, prefix + ".")
    day = _opt_int(obj, "day", errors, prefix + ".")
    if year is None:
        return None
    try:
        date = HistoricalDate(year=year, month=month, day=day)
    except ValueError as exc:
        errors.add(prefix, str(exc))
        return None
    if not DOMAIN_MIN_YEAR <= year <= DOMAIN_MAX_YEAR:
        errors.add(
            prefix + ".year",
            f"year {year} out of domain bound {DOMAIN_MIN_YEAR}..{DOMAIN_MAX_YEAR}",
        )
        return None
    return date


def _parse_location(obj: Any, errors: _FieldErrors) -> tuple[GeoPoint | None, str]:
    if not isinstance(obj, dict):
        errors.add("location", "must be an object with lat/lon/place")
        return None, ""
    unknown = set(obj) - {"lat", "lon", "place"}
    if unknown:
        errors.add("location", f"unknown keys {sorted(unknown)}")
    place = _require_str(obj, "place", errors, "location.")
    point: GeoPoint | None = None
    lat, lon = obj.get("lat"), obj.get("lon")
    if not isinstance(lat, (int, float)) or isinstance(lat, bool):
        errors.add("location.lat", "must be a number")
    elif not isinstance(lon, (int, float)) or isinstance(lon, bool):
        errors.add("location.lon", "must be a number")
    else:
        try:
            point = GeoPoint(lat=float(lat), lon=float(lon))
        except ValueError as exc:
            errors.add("location", str(exc))
    return point, place


def _parse_images(obj: Any, errors: _FieldErrors) -> tuple[ImageRef, ...]:
    if obj is None:
        return ()
    if not isinstance(obj, list):
        errors.add("images", "must be an array")
        return ()
    images = []
    for i, entry in enumerate(obj):
        prefix = f"images[{i}]"
        if not isinstance(entry, dict):
            errors.add(prefix, "must be an object")
            continue
        unknown = set(entry) - {"path", "caption", "credit"}
        if unknown:
            errors.add(prefix, f"unknown keys {sorted(unknown)}")
        path = _require_str(entry, "path", errors, prefix + ".")
        caption = _require_str(entry, "caption", errors, prefix + ".")
        credit = entry.get("credit")
        if credit is not None and not isinstance(credit, str):
            errors.add(prefix + ".credit", "must be a string")
            credit = None
        if not path or not caption:
            continue
        try:
            images.append(ImageRef(path=path, caption=caption, credit=credit))
        except ValueError as exc:
            errors.add(prefix, str(exc))
    return tuple(images)


def _parse_tags(obj: Any, errors: _FieldErrors) -> tuple[str, ...]:
    if obj is None:
        return ()
    if not isinstance(obj, list):
        errors.add("tags", "must be an array")
        return ()
    tags = []
    for i, tag in enumerate(obj):
        if not isinstance(tag, str) or not SLUG_RE.match(tag):
            errors.add(f"tags[{i}]", "must be a lowercase token")
            continue
        tags.append(tag)
    return tuple(tags)


_ARTICLE_KEYS = {"id", "title", "body", "glossary", "date", "location", "images", "tags"}


def parse_article(document: str, source: str) -> Article:
    """Parse one article document in the corpus JSON format.

    Raises :class:`ArticleParseError` carrying one diagnostic per problem;
    every diagnostic names the offending field and the source file.
    """
    errors = _FieldErrors(source)
    try:
        raw = json.loads(document)
    except json.JSONDecodeError as exc:
        errors.add("document", f"malformed JSON: {exc.msg} (line {exc.lineno})")
        errors.raise_if_any()
    if not isinstance(raw, dict):
        errors.add("document", "top level must be an object")
        errors.raise_if_any()

    unknown = set(raw) - _ARTICLE_KEYS
    if unknown:
        errors.add("document", f"unknown keys {sorted(unknown)}")

    article_id = _require_str(raw, "id", errors)
    if article_id and not SLUG_RE.match(article_id):
        errors.add("id", f"{article_id!r} is not a slug")
        article_id = ""
    title = _require_str(raw, "title", errors)
    body = _require_str(raw, "body", errors)
    glossary_id = _require_str(raw, "glossary", errors)

    span: TimeSpan | None = None
    date_obj = raw.get("date")
    if not isinstance(date_obj, dict):
        errors.add("date", "missing required field" if date_obj is None else "must be an object")
    else:
        unknown = set(date_obj) - {"start", "end"}
        if unknown:
            errors.add("date", f"unknown keys {sorted(unknown)}")
        if "start" not in date_obj:
            errors.add("date.start", "missing required field")
        start = _parse_date(date_obj.get("start"), errors, "date.start") if "start" in date_obj else None
        end = _parse_date(date_obj["end"], errors, "date.end") if "end" in date_obj else None
        if start is not None:
            try:
                span = TimeSpan(start=start, end=end)
            except ValueError as exc:
                errors.add("date", str(exc))

    if "location" not in raw:
        errors.add("location", "missing required field")
        point, place = None, ""
    else:
        point, place = _parse_location(raw["location"], errors)
    images = _parse_images(raw.get("images"), errors)
    tags = _parse_tags(raw.get("tags"), errors)

    errors.raise_if_any()
    assert span is not None and point is not None
    try:
        return Article(
            id=article_id,
            title=title,
            body=body,
            glossary_id=glossary_id,
            span=span,
            location=point,
            place_name=place,
            images=images,
            tags=tags,
            source=source,
        )
    except ValueError as exc:
        errors.add("document", str(exc))
        errors.raise_if_any()
        raise AssertionError("unreachable")


def serialize_article(article: Article) -> str:
    """Render an article back into its corpus document form.

    ``parse_article(serialize_article(a), a.source) == a`` for every valid
    article; optional fields are omitted when they hold their defaults.
    """

    def date_obj(d: HistoricalDate) -> dict[str, int]:
        obj: dict[str, int] = {"year": d.year}
        if d.month is not None:
            obj["month"] = d.month
        if d.day is not None:
            obj["day"] = d.day
        return obj

    date: dict[str, Any] = {"start": date_obj(article.span.start)}
    if article.span.end != article.span.start:
        date["end"] = date_obj(article.span.end)
    doc: dict[str, Any] = {
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
    }
    if article.images:
        doc["images"] = [
            {"path": img.path, "caption": img.caption}
            | ({"credit": img.credit} if img.credit is not None else {})
            for img in article.images
        ]
    if article.tags:
        doc["tags"] = list(article.tags)
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


# --- loading ------------------------------------------------------------------


def _load_manifest(path: Path) -> list[Glossary]:
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FatalCorpusError(f"{path.name}: malformed JSON: {exc.msg}") from exc
    if not isinstance(raw, list):
        raise FatalCorpusError(f"{path.name}: manifest must be an array")
    glossaries = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise FatalCorpusError(f"{path.name}: entry {i} must be an object")
        unknown = set(entry) - {"id", "title", "description", "era"}
        if unknown:
            raise FatalCorpusError(f"{path.name}: entry {i} has unknown keys {sorted(unknown)}")
        try:
            glossaries.append(
                Glossary(
                    id=entry.get("id", ""),
                    title=entry.get("title", ""),
                    description=entry.get("description", ""),
                    era=entry.get("era", ""),
                )
            )
        except (TypeError, ValueError) as exc:
            raise FatalCorpusError(f"{path.name}: entry {i}: {exc}") from exc
    return glossaries


def _check_images(article: Article, root: Path) -> list[Diagnostic]:
    found = []
    for img in article.images:
        target = root / img.path
        if not target.is_file():
            found.append(
                Diagnostic("warning", article.source, f"image path {img.path!r} is unreadable")
            )
    return found


def load_corpus(directory: Path | str) -> Corpus:
    """Load and validate a corpus directory.

    Structural problems (missing manifest, duplicate ids) raise
    :class:`FatalCorpusError`; per-article content problems become
    diagnostics on the returned corpus, with the offending articles
    excluded when they cannot be represented.
    """
    root = Path(directory)
    if not root.is_dir():
        raise FileNotFoundError(f"corpus directory {root} does not exist")
    manifest_path = root / "glossaries.json"
    if not manifest_path.is_file():
        raise FatalCorpusError(f"missing glossary manifest {manifest_path.name}")
    glossary_list = _load_manifest(manifest_path)
    glossary_map = {}
    for glossary in glossary_list:
        if glossary.id in glossary_map:
            raise FatalCorpusError(f"glossaries.json: duplicate glossary id {glossary.id!r}")
        glossary_map[glossary.id] = glossary

    diagnostics: list[Diagnostic] = []
    articles: list[Article] = []
    seen_ids: dict[str, str] = {}
    articles_dir = root / "articles"
    article_files = sorted(articles_dir.glob("*.json")) if articles_dir.is_dir() else []
    for file_path in article_files:
        rel = file_path.relative_to(root).as_posix()
        try:
            text = file_path.read_text(encoding="utf-8")
        except OSError as exc:
            diagnostics.append(Diagnostic("error", rel, f"unreadable file: {exc}"))
            continue
        try:
            article = parse_article(text, rel)
        except ArticleParseError as exc:
            diagnostics.extend(exc.diagnostics)
            continue
        if article.id in seen_ids:
            raise FatalCorpusError(
                f"duplicate article id {article.id!r} declared by both "
                f"{seen_ids[article.id]} and {rel}"
            )
        seen_ids[article.id] = rel
        if article.glossary_id not in glossary_map:
            diagnostics.append(
                Diagnostic(
                    "error", rel, f"glossary {article.glossary_id!r} is not in the manifest"
                )
            )
            continue
        diagnostics.extend(_check_images(article, root))
        articles.append(article)

    corpus = build_corpus(glossary_list, articles, diagnostics, root=root)
    _assert_invariants(corpus)
    return corpus


def _assert_invariants(corpus: Corpus) -> None:
    # Exhaustive post-load check: dataclass validation already ran for each
    # value, so this guards the cross-object rules.
    for article in corpus.articles.values():
        assert article.glossary_id in corpus.glossaries
        assert DOMAIN_MIN_YEAR <= article.span.start.year <= DOMAIN_MAX_YEAR
        assert DOMAIN_MIN_YEAR <= article.span.end.year <= DOMAIN_MAX_YEAR


def validate_corpus(corpus: Corpus) -> list[Diagnostic]:
    """Re-run content checks over an already-built corpus.

    Returns diagnostics sorted by (file, message); never mutates the corpus.
    """
    found: list[Diagnostic] = []
    for article in corpus.articles.values():
        where = article.source or f"articles/{article.id}.json"
        if article.glossary_id not in corpus.glossaries:
            found.append(
                Diagnostic(
                    "error", where, f"glossary {article.glossary_id!r} is not in the manifest"
                )
            )
        for date in dict.fromkeys((article.span.start, article.span.end)):
            if not DOMAIN_MIN_YEAR <= date.year <= DOMAIN_MAX_YEAR:
                found.append(
                    Diagnostic(
                        "error",
                        where,
                        f"year {date.year} out of domain bound "
                        f"{DOMAIN_MIN_YEAR}..{DOMAIN_MAX_YEAR}",
                    )
                )
        if corpus.root is not None:
            found.extend(_check_images(article, corpus.root))
    found.sort(key=lambda d: (d.file, d.message))
    return found
