"""Load the sample corpus and look around.

A corpus is a directory: one glossary manifest plus one JSON document per
article. Loading validates everything up front and returns an immutable
object, so every query after this point is a pure function.
"""

from pathlib import Path

from histomap import load_corpus, validate_corpus

corpus = load_corpus(Path(__file__).resolve().parents[1] / "sample_corpus")

print(f"{len(corpus.articles)} articles in {len(corpus.glossaries)} glossaries\n")

for glossary in corpus.glossaries.values():
    members = [a for a in corpus.articles.values() if a.glossary_id == glossary.id]
    years = [a.span.start.year for a in members]
    print(f"  {glossary.title}  [{glossary.era}]")
    print(f"    {len(members)} articles, {min(years)}-{max(years)}")

print("\nArticles are kept in (start ordinal, id) order -- a ready-made timeline:")
for article in list(corpus.articles.values())[:6]:
    print(f"  {article.span.start.iso():>10}  {article.title}")
print("  ...")

diagnostics = validate_corpus(corpus)
print(f"\nvalidate_corpus found {len(diagnostics)} problems")
