"""Keyword search and the day-anniversary feed.

Search is a tokenize-and-count scorer (title hits weigh double). The feed
picks day-precision events sharing a month and day with the query date,
strictly earlier in years -- the "what happened on this date" view.
"""

from pathlib import Path

from histomap import HistoricalDate, load_corpus, search, today_feed

corpus = load_corpus(Path(__file__).resolve().parents[1] / "sample_corpus")

for query in ("wali demak", "sultanate sumatra", "independence"):
    print(f"search({query!r}):")
    for hit in search(corpus, query)[:4]:
        print(
            f"  score {hit.score:2d}  {corpus.articles[hit.article_id].title}"
            f"  (title x{hit.title_matches}, body x{hit.body_matches})"
        )
    print()

for date in (HistoricalDate(2024, 11, 18), HistoricalDate(2024, 8, 17), HistoricalDate(2024, 6, 2)):
    feed = today_feed(corpus, date)
    print(f"on {date.iso()}:")
    if not feed.events:
        print("  nothing recorded on this date")
    for article_id, years_ago in feed.events:
        print(f"  {years_ago} years ago: {corpus.articles[article_id].title}")
    print()
