"""Zoom-dependent map clustering.

Events are grouped by fixed-origin grid cells whose size halves with each
zoom level. Because the cells nest exactly, zooming in only ever splits
markers apart -- the count never drops, which is what makes the map feel
like it "reveals" detail.
"""

from pathlib import Path

from histomap import BoundingBox, grid_cluster, load_corpus

corpus = load_corpus(Path(__file__).resolve().parents[1] / "sample_corpus")

# west == east means the box wraps the full 360 degrees
WORLD = BoundingBox(south=-90, west=-180, north=90, east=-180)

print("zoom  cell size  clusters")
for zoom in range(0, 13, 2):
    clusters = grid_cluster(corpus, WORLD, zoom)
    size = 45.0 / 2**zoom
    print(f"{zoom:4d}  {size:8.3f}°  {len(clusters):3d}")

print("\nAt zoom 4 the archipelago separates into regional groups:")
for cluster in grid_cluster(corpus, WORLD, 4):
    first = corpus.articles[cluster.representative_id]
    where = first.place_name.split(",")[-1].strip()
    print(
        f"  ({cluster.centroid.lat:7.2f}, {cluster.centroid.lon:7.2f})"
        f"  {cluster.count:2d} events   e.g. {first.title} ({where})"
    )

# A tighter box behaves the same way, just over fewer events.
java = BoundingBox(south=-9.0, west=105.0, north=-5.5, east=115.0)
print(f"\nJava box holds {sum(c.count for c in grid_cluster(corpus, java, 6))} events")
