"""HTTP/JSON server for the query API.

Built on the standard library's threading HTTP server: every handler
reads one shared immutable corpus, so concurrent requests need no locks.
Response bodies come from the payload functions in
:mod:`histomap.service`, which keeps them byte-identical to CLI output.
"""

from __future__ import annotations

import mimetypes
import re
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Any, Mapping
from urllib.parse import parse_qs, unquote, urlsplit

from histomap import service
from histomap.corpus import Corpus, HistoricalDate
from histomap.relatedness import MODES
from histomap.spatial import MAX_ZOOM, BoundingBox
from histomap.service import ServiceConfig, render_json

_DATE_RE = re.compile(r"^(\d{4})-(\d{2})-(\d{2})$")


class RequestError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code


def _bad(message: str) -> RequestError:
    return RequestError(400, "invalid_argument", message)


def _missing(params: Mapping[str, list[str]], name: str) -> str:
    values = params.get(name)
    if not values:
        raise _bad(f"missing required parameter {name!r}")
    return values[0]


def _float_param(params: Mapping[str, list[str]], name: str) -> float:
    raw = _missing(params, name)
    try:
        value = float(raw)
    except ValueError:
        raise _bad(f"parameter {name!r} must be a number, got {raw!r}") from None
    if value != value or value in (float("inf"), float("-inf")):
        raise _bad(f"parameter {name!r} must be finite")
    return value


def _int_param(
    params: Mapping[str, list[str]], name: str, default: int | None = None
) -> int | None:
    values = params.get(name)
    if not values or values[0] == "":
        return default
    try:
        return int(values[0])
    except ValueError:
        raise _bad(f"parameter {name!r} must be an integer, got {values[0]!r}") from None


def _date_param(raw: str) -> HistoricalDate:
    match = _DATE_RE.match(raw)
    if not match:
        raise _bad(f"date must be YYYY-MM-DD, got {raw!r}")
    try:
        return HistoricalDate(
            year=int(match.group(1)), month=int(match.group(2)), day=int(match.group(3))
        )
    except ValueError as exc:
        raise _bad(str(exc)) from None


def _era_param(params: Mapping[str, list[str]]) -> str | None:
    values = params.get("era")
    if not values or values[0] == "":
        return None
    if values[0] not in ("classical", "modern"):
        raise _bad(f"era must be classical or modern, got {values[0]!r}")
    return values[0]


def _norm_lon(value: float) -> float:
    return (value + 180.0) % 360.0 - 180.0


def _bbox_params(params: Mapping[str, list[str]]) -> BoundingBox:
    south = _float_param(params, "south")
    west = _float_param(params, "west")
    north = _float_param(params, "north")
    east = _float_param(params, "east")
    if east - west >= 360.0:
        # A request spanning the whole world; west == east means full
        # longitude coverage in BoundingBox.
        west = east = -180.0
    try:
        return BoundingBox(
            south=south, west=_norm_lon(west), north=north, east=_norm_lon(east)
        )
    except ValueError as exc:
        raise _bad(str(exc)) from None


class QueryApi:
    """Routes API paths to payload builders; independent of the socket layer."""

    def __init__(self, corpus: Corpus, config: ServiceConfig):
        self.corpus = corpus
        self.config = config

    def dispatch(self, path: str, params: Mapping[str, list[str]]) -> tuple[int, bytes, str]:
        """Return (status, body bytes, content type) for a GET request."""
        try:
            payload = self._route(path, params)
        except RequestError as exc:
            body = render_json({"error": {"code": exc.code, "message": str(exc)}})
            return exc.status, body, "application/json; charset=utf-8"
        if isinstance(payload, tuple):  # raw file response (content type, bytes)
            return 200, payload[1], payload[0]
        return 200, render_json(payload), "application/json; charset=utf-8"

    def _route(self, path: str, params: Mapping[str, list[str]]) -> Any:
        corpus, config = self.corpus, self.config
        if path == "/api/glossaries":
            return service.payload_glossaries(corpus)
        if path == "/api/gallery":
            return service.payload_gallery(corpus)
        if path == "/api/search":
            query = params.get("q", [""])[0]
            return service.payload_search(corpus, query)
        if path == "/api/today":
            values = params.get("date")
            today = _date_param(values[0]) if values and values[0] else config.today()
            return service.payload_today(corpus, today)
        if path == "/api/timeline":
            time_from = _int_param(params, "from")
            time_to = _int_param(params, "to")
            if time_from is None or time_to is None:
                raise _bad("parameters 'from' and 'to' are required")
            buckets = _int_param(params, "buckets")
            if buckets is None:
                raise _bad("parameter 'buckets' is required")
            try:
                return service.payload_timeline(
                    corpus, time_from, time_to, buckets, _era_param(params)
                )
            except ValueError as exc:
                raise _bad(str(exc)) from None
        if path == "/api/events":
            box = _bbox_params(params)
            zoom = _int_param(params, "zoom")
            if zoom is None:
                raise _bad("parameter 'zoom' is required")
            if not 0 <= zoom <= MAX_ZOOM:
                raise _bad(f"zoom {zoom} not in 0..{MAX_ZOOM}")
            try:
                return service.payload_events(
                    corpus,
                    box,
                    zoom,
                    _int_param(params, "from"),
                    _int_param(params, "to"),
                )
            except ValueError as exc:
                raise _bad(str(exc)) from None
        match = re.match(r"^/api/articles/([^/]+)$", path)
        if match:
            article_id = unquote(match.group(1))
            if article_id not in corpus.articles:
                raise RequestError(404, "not_found", f"unknown article id {article_id!r}")
            k = _int_param(params, "k", config.default_k)
            if k is None or k < 1:
                raise _bad(f"k must be positive, got {k}")
            return service.payload_article_view(corpus, article_id, k, config.params)
        match = re.match(r"^/api/articles/([^/]+)/related$", path)
        if match:
            article_id = unquote(match.group(1))
            if article_id not in corpus.articles:
                raise RequestError(404, "not_found", f"unknown article id {article_id!r}")
            mode = params.get("mode", ["combined"])[0]
            if mode not in MODES:
                raise _bad(f"mode must be one of {MODES}, got {mode!r}")
            k = _int_param(params, "k", config.default_k)
            if k is None or k < 1:
                raise _bad(f"k must be positive, got {k}")
            return service.payload_related(corpus, article_id, mode, k, config.params)
        if path.startswith("/images/"):
            return self._image(path)
        raise RequestError(404, "not_found", f"no route for {path}")

    def _image(self, path: str) -> tuple[str, bytes]:
        if self.corpus.root is None:
            raise RequestError(404, "not_found", "corpus has no image directory")
        rel = unquote(path.lstrip("/"))
        target = (self.corpus.root / rel).resolve()
        root = self.corpus.root.resolve()
        if not target.is_relative_to(root) or not target.is_file():
            raise RequestError(404, "not_found", f"no image at {path}")
        content_type = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
        return content_type, target.read_bytes()


def make_handler(api: QueryApi, quiet: bool = True) -> type[BaseHTTPRequestHandler]:
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"
        server_version = "histomap"

        def do_GET(self) -> None:  # noqa: N802 (http.server naming)
            url = urlsplit(self.path)
            params = parse_qs(url.query, keep_blank_values=True)
            status, body, content_type = api.dispatch(url.path, params)
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def log_message(self, format: str, *args: Any) -> None:
            if not quiet:
                super().log_message(format, *args)

    return Handler


def create_server(
    corpus: Corpus,
    config: ServiceConfig,
    host: str = "127.0.0.1",
    quiet: bool = True,
) -> ThreadingHTTPServer:
    """Bind a threading HTTP server; ``config.port`` 0 picks a free port."""
    api = QueryApi(corpus, config)
    server = ThreadingHTTPServer((host, config.port), make_handler(api, quiet))
    server.daemon_threads = True
    return server
