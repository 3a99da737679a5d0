"""Timeline bucketing and the two era bands.

The time axis is Rata Die day numbers (day 1 = 0001-01-01). A timeline
request partitions an ordinal range into equal-width buckets and drops
each event into the bucket holding its span midpoint, so every event is
exactly one dot.
"""

from pathlib import Path

from histomap import HistoricalDate, bucketize, date_to_ordinal_range, load_corpus

corpus = load_corpus(Path(__file__).resolve().parents[1] / "sample_corpus")


def year_ordinals(first_year: int, last_year: int) -> tuple[int, int]:
    return (
        date_to_ordinal_range(HistoricalDate(first_year)).lo,
        date_to_ordinal_range(HistoricalDate(last_year)).hi,
    )


def ordinal_to_year(ordinal: int) -> int:
    from datetime import date

    return date.fromordinal(ordinal).year


def strip(era: str, first_year: int, last_year: int, n: int = 24) -> None:
    lo, hi = year_ordinals(first_year, last_year)
    buckets = bucketize(corpus, lo, hi, n, era_filter=era)
    dots = "".join("·" if b.count == 0 else str(min(b.count, 9)) for b in buckets)
    print(f"  {first_year}-{last_year} [{era:9s}] |{dots}|")
    for bucket in buckets:
        if bucket.count:
            names = ", ".join(bucket.article_ids)
            span = f"{ordinal_to_year(bucket.lo)}-{ordinal_to_year(bucket.hi)}"
            print(f"      {span:>9}: {names}")


print("Classical band (arrival of Islam through the kingdoms):")
strip("classical", 1250, 1700)

print("\nModern band (colonial era through independence):")
strip("modern", 1800, 1950)
