"""Acceptance gate: one test per top-level criterion, each printing a
PASS/FAIL line (run with ``pytest -s tests/test_acceptance.py`` to see them).

Expected values come from the independent oracles in ``oracles.py``: the
closed-form Rata Die converter, the atan2 great-circle distance, and plain
brute-force scans. Tolerances are fixed here and nowhere else.
"""

from __future__ import annotations

import math
import random
import re
import subprocess
import sys
import time
from contextlib import contextmanager

import httpx

from histomap.corpus import GeoPoint, HistoricalDate, load_corpus
from histomap.relatedness import rank_related, time_tier
from histomap.spatial import BoundingBox, grid_cluster, haversine_km, query_bbox
from histomap.temporal import (
    anniversary_query,
    bucketize,
    date_to_ordinal_range,
    days_in_month,
    query_time_range,
)
from histomap.service import search

import oracles
from conftest import FIXTURE_DIR
from corpusdisk import broken_corpora


@contextmanager
def criterion(name: str):
    try:
        yield
    except BaseException:
        print(f"[acceptance] {name}: FAIL")
        raise
    print(f"[acceptance] {name}: PASS")


def test_calendar_oracle():
    with criterion("calendar-oracle"):
        rng = random.Random(710260)
        dates = []
        for _ in range(10_000):
            year = rng.randint(500, 2100)
            precision = rng.choice(("year", "month", "day"))
            month = rng.randint(1, 12)
            if precision == "year":
                dates.append(HistoricalDate(year))
            elif precision == "month":
                dates.append(HistoricalDate(year, month))
            else:
                dates.append(HistoricalDate(year, month, rng.randint(1, days_in_month(year, month))))
        started = time.perf_counter()
        for d in dates:
            r = date_to_ordinal_range(d)
            assert (r.lo, r.hi) == oracles.date_range(d)
        elapsed = time.perf_counter() - started
        assert elapsed < 1.0, f"10,000 conversions took {elapsed:.3f}s"


def test_haversine():
    with criterion("haversine"):
        assert haversine_km(GeoPoint(12.3, 45.6), GeoPoint(12.3, 45.6)) == 0.0
        assert abs(haversine_km(GeoPoint(0, 0), GeoPoint(0, 180)) - math.pi * 6371.0) < 1e-3
        assert abs(
            haversine_km(GeoPoint(0, 110), GeoPoint(0, 111)) - 2 * math.pi * 6371.0 / 360
        ) < 1e-3
        rng = random.Random(6371)
        for _ in range(1_000):
            a = GeoPoint(rng.uniform(-90, 90), rng.uniform(-180, 180))
            b = GeoPoint(rng.uniform(-90, 90), rng.uniform(-180, 180))
            assert abs(haversine_km(a, b) - haversine_km(b, a)) < 1e-9


def test_clustering():
    with criterion("clustering"):
        corpus = load_corpus(FIXTURE_DIR)
        rng = random.Random(45)
        boxes = [BoundingBox(south=-90, west=-180, north=90, east=-180)]
        while len(boxes) < 21:  # the globe plus 20 random boxes
            south = rng.uniform(-90, 89)
            north = rng.uniform(south, 90)
            west = rng.uniform(-180, 179.99)
            east = rng.uniform(-180, 179.99)
            boxes.append(BoundingBox(south=south, west=west, north=north, east=east))
        for box in boxes:
            in_box = query_bbox(corpus, box)
            previous_count = 0
            for zoom in range(0, 19):
                clusters = grid_cluster(corpus, box, zoom)
                # partition: counts sum to the bbox-query count, no id twice
                members = [i for c in clusters for i in c.article_ids]
                assert sum(c.count for c in clusters) == len(in_box)
                assert sorted(members) == sorted(in_box)
                # equality with the brute-force grid assignment
                expected = oracles.scan_grid(
                    corpus, box.south, box.west, box.north, box.east, zoom
                )
                assert {c.cell: list(c.article_ids) for c in clusters} == expected
                # zoom reveal: cluster count never decreases
                assert len(clusters) >= previous_count
                previous_count = len(clusters)


def test_temporal_queries():
    with criterion("temporal-queries"):
        fixture = load_corpus(FIXTURE_DIR)
        rng = random.Random(1290)
        corpora = [fixture] + [oracles.random_corpus(rng) for _ in range(100)]
        for corpus in corpora:
            lo = rng.randint(1, 780000)
            hi = rng.randint(lo, 800000)
            era = rng.choice([None, "classical", "modern"])
            assert query_time_range(corpus, lo, hi, era) == oracles.scan_time_range(
                corpus, lo, hi, era
            )
            month = rng.randint(1, 12)
            day = rng.randint(1, 29 if month == 2 else days_in_month(2001, month))
            before = rng.choice([None, rng.randint(500, 2101)])
            assert anniversary_query(corpus, month, day, before) == (
                oracles.scan_anniversary(corpus, month, day, before)
            )
            n = rng.randint(1, 50)
            got = bucketize(corpus, lo, hi, n, era)
            assert [(b.lo, b.hi, list(b.article_ids)) for b in got] == (
                oracles.scan_buckets(corpus, lo, hi, n, era)
            )
            # exact tiling
            assert got[0].lo == lo and got[-1].hi == hi
            for left, right in zip(got, got[1:]):
                assert right.lo == left.hi + 1


def test_relatedness():
    with criterion("relatedness"):
        corpus = load_corpus(FIXTURE_DIR)
        ids = list(corpus.articles)
        n = len(ids) - 1
        scores = {}
        for anchor in ids:
            got = rank_related(corpus, anchor, "combined", n)
            expected = oracles.rank_combined(corpus, anchor, n)
            assert [e.article_id for e in got] == [i for i, _ in expected]
            for entry, (_, score) in zip(got, expected):
                assert abs(entry.score - score) <= 1e-12
            for entry in got:
                scores[(anchor, entry.article_id)] = entry.score
        # symmetry over all 24 x 23 ordered pairs
        for (a, b), value in scores.items():
            assert abs(value - scores[(b, a)]) <= 1e-12
        # definitional tier cases
        demak = corpus.articles["demak"]
        aceh = corpus.articles["aceh-sultanate"]  # 1496, inside demak's span
        assert time_tier(demak, aceh) == "same_date"
        muhammadiyah = corpus.articles["muhammadiyah"]  # 1912-11-18
        proklamasi = corpus.articles["proklamasi"]  # 1945-08-17
        assert time_tier(muhammadiyah, proklamasi) == "nearby"
        from histomap.corpus import Article, TimeSpan

        echo = Article(
            id="echo",
            title="t",
            body="b",
            glossary_id=muhammadiyah.glossary_id,
            span=TimeSpan(start=HistoricalDate(1946, 11, 18)),
            location=muhammadiyah.location,
            place_name="x",
        )
        assert time_tier(muhammadiyah, echo) == "anniversary"
        # prefix property
        full = rank_related(corpus, "demak", "combined", n)
        for k in range(1, 11):
            assert rank_related(corpus, "demak", "combined", k) == full[:k]


def test_search_oracle():
    with criterion("search"):
        fixture = load_corpus(FIXTURE_DIR)
        for query in ("wali demak", "sultanate", "mosque harbor", "", "xyzzy"):
            got = [(h.article_id, h.score) for h in search(fixture, query)]
            assert got == oracles.scan_search(fixture, query)
        rng = random.Random(2012)
        for _ in range(100):
            corpus = oracles.random_corpus(rng)
            query = " ".join(rng.choices(oracles._VOCAB, k=rng.randint(1, 4)))
            got = [(h.article_id, h.score) for h in search(corpus, query)]
            assert got == oracles.scan_search(corpus, query)


ENDPOINTS = [
    "/api/glossaries",
    "/api/articles/demak",
    "/api/articles/demak/related?mode=combined&k=5",
    "/api/articles/demak/related?mode=time&k=5",
    "/api/articles/demak/related?mode=location&k=5",
    "/api/events?south=-90&west=-180&north=90&east=-180&zoom=5",
    "/api/timeline?from=400000&to=712000&buckets=10",
    "/api/timeline?from=400000&to=712000&buckets=10&era=classical",
    "/api/today?date=2024-11-18",
    "/api/search?q=wali+demak",
    "/api/gallery",
    "/images/demak-mosque.png",
]

CLI_EQUIVALENT = [
    (
        ("related", "demak", "--mode", "combined", "-k", "5"),
        "/api/articles/demak/related?mode=combined&k=5",
    ),
    (
        ("related", "demak", "--mode", "time", "-k", "5"),
        "/api/articles/demak/related?mode=time&k=5",
    ),
    (("today", "--date", "2024-11-18"), "/api/today?date=2024-11-18"),
    (("search", "--q", "wali demak"), "/api/search?q=wali+demak"),
    (
        ("timeline", "--from", "400000", "--to", "712000", "--buckets", "10"),
        "/api/timeline?from=400000&to=712000&buckets=10",
    ),
]


def test_service_determinism(fixture_server):
    with criterion("service-determinism"):
        for endpoint in ENDPOINTS:
            first = httpx.get(fixture_server + endpoint)
            second = httpx.get(fixture_server + endpoint)
            assert first.status_code == second.status_code == 200, endpoint
            assert first.content == second.content, endpoint
        for cli_args, endpoint in CLI_EQUIVALENT:
            result = subprocess.run(
                [sys.executable, "-m", "histomap.cli", "query",
                 "--corpus", str(FIXTURE_DIR), *cli_args],
                capture_output=True,
                timeout=60,
            )
            assert result.returncode == 0
            assert result.stdout == httpx.get(fixture_server + endpoint).content


def test_end_to_end(tmp_path):
    with criterion("end-to-end"):
        cli = [sys.executable, "-m", "histomap.cli"]
        result = subprocess.run(
            [*cli, "validate", "--corpus", str(FIXTURE_DIR)],
            capture_output=True,
            timeout=60,
        )
        assert result.returncode == 0, result.stdout
        broken = broken_corpora(tmp_path)
        assert len(broken) == 5
        for name, root in broken.items():
            result = subprocess.run(
                [*cli, "validate", "--corpus", str(root)],
                capture_output=True,
                timeout=60,
            )
            assert result.returncode == 1, f"{name} -> {result.returncode}"
        process = subprocess.Popen(
            [*cli, "serve", "--corpus", str(FIXTURE_DIR), "--port", "0",
             "--today", "2024-11-18"],
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
        )
        try:
            line = process.stdout.readline().decode()
            match = re.search(r"http://[\d.]+:\d+", line)
            assert match, f"no bound address printed: {line!r}"
            payload = httpx.get(match.group(0) + "/api/today").json()
            assert payload == {
                "date": "2024-11-18",
                "events": [{"id": "muhammadiyah", "years_ago": 112}],
            }
        finally:
            process.terminate()
            process.wait(timeout=10)
