"""Relatedness ranking: location, time, and the combined default.

Distances in kilometres and gaps in days both decay through exp(-d/scale),
so the two similarities land on the same (0, 1] scale and mix cleanly.
Time-only ranking is tiered instead: intersecting spans, then same-day
anniversaries in other years, then everything else by gap.
"""

from pathlib import Path

from histomap import load_corpus, rank_related

corpus = load_corpus(Path(__file__).resolve().parents[1] / "sample_corpus")

ANCHOR = "demak"
print(f"Related to {corpus.articles[ANCHOR].title!r}:\n")

for mode in ("location", "time", "combined"):
    print(f"  mode={mode}")
    for entry in rank_related(corpus, ANCHOR, mode, 4):
        tier = f"  [{entry.tier}]" if entry.tier else ""
        print(
            f"    {entry.score:6.4f}  {corpus.articles[entry.article_id].title}"
            f"  (spatial {entry.spatial_component:.3f},"
            f" temporal {entry.temporal_component:.3f}){tier}"
        )
    print()

print("The anniversary tier in action:")
for entry in rank_related(corpus, "muhammadiyah", "time", 4):
    start = corpus.articles[entry.article_id].span.start
    print(f"    [{entry.tier:9s}] {start.iso():>10}  {corpus.articles[entry.article_id].title}")
