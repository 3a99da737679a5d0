#!/usr/bin/env python3
"""Record query-API responses into frontend/test/fixtures/.

The frontend's replay tests intercept fetch and answer with these files,
so they must be real server output. Re-run after changing the sample
corpus or any payload shape:

    python3 tools/record_frontend_fixtures.py
"""

from __future__ import annotations

import json
import threading
from pathlib import Path
from urllib.request import urlopen

from histomap.corpus import load_corpus
from histomap.server import create_server
from histomap.service import ServiceConfig
from histomap.temporal import date_to_ordinal_range
from histomap.corpus import HistoricalDate

ROOT = Path(__file__).resolve().parents[1]
OUT = ROOT / "frontend" / "test" / "fixtures"


def year_lo(year: int) -> int:
    return date_to_ordinal_range(HistoricalDate(year)).lo


def year_hi(year: int) -> int:
    return date_to_ordinal_range(HistoricalDate(year)).hi


def main() -> None:
    corpus = load_corpus(ROOT / "sample_corpus")
    config = ServiceConfig(
        corpus_dir=ROOT / "sample_corpus",
        port=0,
        fixed_today=HistoricalDate(2024, 11, 18),
    )
    server = create_server(corpus, config)
    host, port = server.server_address[:2]
    threading.Thread(target=server.serve_forever, daemon=True).start()
    base = f"http://{host}:{port}"

    # The exact windows the UI's home/timeline views request.
    recordings = {
        "glossaries": "/api/glossaries",
        "timeline-classical": (
            f"/api/timeline?from={year_lo(1250)}&to={year_hi(1700)}&buckets=48&era=classical"
        ),
        "timeline-modern": (
            f"/api/timeline?from={year_lo(1800)}&to={year_hi(1960)}&buckets=48&era=modern"
        ),
        "timeline-all": "/api/timeline?from=1&to=800000&buckets=1",
        "today": "/api/today",
        "search-wali-demak": "/api/search?q=wali%20demak",
        "gallery": "/api/gallery",
    }
    for zoom in range(0, 9):
        recordings[f"events-global-z{zoom}"] = (
            f"/api/events?south=-85&west=-180&north=85&east=180&zoom={zoom}"
        )
    for article_id in corpus.articles:
        recordings[f"article-{article_id}"] = f"/api/articles/{article_id}"

    OUT.mkdir(parents=True, exist_ok=True)
    for name, path in sorted(recordings.items()):
        with urlopen(base + path) as response:
            payload = json.loads(response.read())
        (OUT / f"{name}.json").write_text(
            json.dumps(payload, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
        )
        print(f"{name}.json <- {path}")

    server.shutdown()
    server.server_close()


if __name__ == "__main__":
    main()
