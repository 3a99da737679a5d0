"""Operator command line: validate a corpus, serve the API, run ad-hoc queries.

``query`` subcommands print exactly the bytes the corresponding HTTP
endpoint would return, which makes scripted use and the service
interchangeable. Exit codes: 0 success, 1 domain error (broken corpus,
unknown id), 2 environment error (unreadable path, bad usage).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from histomap import service
from histomap.corpus import (
    Corpus,
    Diagnostic,
    FatalCorpusError,
    HistoricalDate,
    load_corpus,
    validate_corpus,
)
from histomap.server import create_server
from histomap.service import ServiceConfig, render_json

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_ENV = 2


def _parse_iso_date(raw: str) -> HistoricalDate:
    parts = raw.split("-")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"date must be YYYY-MM-DD, got {raw!r}")
    try:
        return HistoricalDate(year=int(parts[0]), month=int(parts[1]), day=int(parts[2]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="histomap", description="Spatio-temporal historical-events engine"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="check a corpus and print diagnostics")
    p_validate.add_argument("--corpus", required=True, type=Path, help="corpus directory")

    p_serve = sub.add_parser("serve", help="run the query API server")
    p_serve.add_argument("--corpus", required=True, type=Path)
    p_serve.add_argument("--port", type=int, default=8531, help="0 picks a free port")
    p_serve.add_argument(
        "--today",
        type=_parse_iso_date,
        default=None,
        help="fix the 'today in the past' date (YYYY-MM-DD)",
    )

    p_query = sub.add_parser("query", help="print one endpoint payload as JSON")
    p_query.add_argument("--corpus", required=True, type=Path)
    q_sub = p_query.add_subparsers(dest="query_command", required=True)

    q_related = q_sub.add_parser("related", help="articles related to one article")
    q_related.add_argument("id")
    q_related.add_argument(
        "--mode", choices=("location", "time", "combined"), default="combined"
    )
    q_related.add_argument("-k", type=int, default=5)

    q_today = q_sub.add_parser("today", help="anniversary feed for a date")
    q_today.add_argument("--date", type=_parse_iso_date, default=None)

    q_search = q_sub.add_parser("search", help="keyword search")
    q_search.add_argument("--q", required=True)

    q_timeline = q_sub.add_parser("timeline", help="timeline buckets for a range")
    q_timeline.add_argument("--from", dest="time_from", type=int, required=True)
    q_timeline.add_argument("--to", dest="time_to", type=int, required=True)
    q_timeline.add_argument("--buckets", type=int, required=True)
    q_timeline.add_argument("--era", choices=("classical", "modern"), default=None)

    return parser


def _print_diagnostics(diagnostics: list[Diagnostic]) -> None:
    for d in diagnostics:
        sys.stdout.write(f"{d.severity.upper()}\t{d.file}\t{d.message}\n")


def _merged_diagnostics(corpus: Corpus) -> list[Diagnostic]:
    merged = set(corpus.ingest_diagnostics) | set(validate_corpus(corpus))
    return sorted(merged, key=lambda d: (d.file, d.message))


def cmd_validate(corpus_dir: Path) -> int:
    try:
        corpus = load_corpus(corpus_dir)
    except FatalCorpusError as exc:
        sys.stdout.write(f"ERROR\t{corpus_dir}\t{exc}\n")
        return EXIT_DOMAIN
    diagnostics = _merged_diagnostics(corpus)
    _print_diagnostics(diagnostics)
    if any(d.severity == "error" for d in diagnostics):
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_serve(corpus_dir: Path, port: int, today: HistoricalDate | None) -> int:
    try:
        corpus = load_corpus(corpus_dir)
    except FatalCorpusError as exc:
        sys.stderr.write(f"refusing to serve: {exc}\n")
        return EXIT_DOMAIN
    errors = [d for d in _merged_diagnostics(corpus) if d.severity == "error"]
    if errors:
        for d in errors:
            sys.stderr.write(f"{d.severity.upper()}\t{d.file}\t{d.message}\n")
        sys.stderr.write("refusing to serve a corpus with errors\n")
        return EXIT_DOMAIN
    config = ServiceConfig(corpus_dir=corpus_dir, port=port, fixed_today=today)
    server = create_server(corpus, config)
    host, bound_port = server.server_address[:2]
    sys.stdout.write(f"serving {len(corpus.articles)} articles on http://{host}:{bound_port}\n")
    sys.stdout.flush()
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return EXIT_OK


def cmd_query(corpus_dir: Path, args: argparse.Namespace) -> int:
    try:
        corpus = load_corpus(corpus_dir)
    except FatalCorpusError as exc:
        sys.stderr.write(f"broken corpus: {exc}\n")
        return EXIT_DOMAIN
    config = ServiceConfig(corpus_dir=corpus_dir)
    try:
        if args.query_command == "related":
            if args.k < 1:
                sys.stderr.write(f"k must be positive, got {args.k}\n")
                return EXIT_DOMAIN
            payload = service.payload_related(
                corpus, args.id, args.mode, args.k, config.params
            )
        elif args.query_command == "today":
            today = args.date if args.date is not None else config.today()
            payload = service.payload_today(corpus, today)
        elif args.query_command == "search":
            payload = service.payload_search(corpus, args.q)
        else:
            payload = service.payload_timeline(
                corpus, args.time_from, args.time_to, args.buckets, args.era
            )
    except KeyError as exc:
        sys.stderr.write(f"{exc.args[0]}\n")
        return EXIT_DOMAIN
    except ValueError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_DOMAIN
    sys.stdout.buffer.write(render_json(payload))
    sys.stdout.flush()
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    corpus_dir: Path = args.corpus
    if not corpus_dir.is_dir():
        sys.stderr.write(f"corpus directory {corpus_dir} does not exist\n")
        return EXIT_ENV
    if args.command == "validate":
        return cmd_validate(corpus_dir)
    if args.command == "serve":
        return cmd_serve(corpus_dir, args.port, args.today)
    return cmd_query(corpus_dir, args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
