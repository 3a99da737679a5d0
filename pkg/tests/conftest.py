from __future__ import annotations

import threading
from pathlib import Path

import pytest

from histomap.corpus import Corpus, load_corpus
from histomap.server import create_server
from histomap.service import ServiceConfig

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXTURE_DIR = REPO_ROOT / "sample_corpus"


@pytest.fixture(scope="session")
def fixture_corpus() -> Corpus:
    return load_corpus(FIXTURE_DIR)


@pytest.fixture(scope="session")
def fixture_server(fixture_corpus: Corpus):
    """A live HTTP server over the sample corpus; yields its base URL."""
    config = ServiceConfig(corpus_dir=FIXTURE_DIR, port=0)
    server = create_server(fixture_corpus, config)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    host, port = server.server_address[:2]
    yield f"http://{host}:{port}"
    server.shutdown()
    server.server_close()
