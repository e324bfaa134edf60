#!/usr/bin/env python3
"""Writes us_cities_base.csv: 3387 seeded lon,lat locations over the
contiguous U.S., clustered around large metro areas with a rural scatter.

Row order is shuffled so that each third of the file spans the whole map.
"""
import csv
import random
from pathlib import Path

COUNT = 3387
SEED = 20190601

# (lon, lat, relative share) for large metro areas.
METROS = [
    (-74.006, 40.713, 9), (-118.244, 34.052, 8), (-87.630, 41.878, 6),
    (-95.369, 29.760, 5), (-112.074, 33.448, 4), (-75.165, 39.953, 4),
    (-98.494, 29.424, 3), (-117.161, 32.716, 3), (-96.797, 32.777, 5),
    (-121.886, 37.338, 4), (-97.743, 30.267, 3), (-81.656, 30.332, 2),
    (-83.046, 42.331, 3), (-82.999, 39.961, 2), (-80.843, 35.227, 2),
    (-122.419, 37.775, 4), (-86.158, 39.768, 2), (-122.332, 47.606, 3),
    (-104.990, 39.739, 3), (-77.037, 38.907, 4), (-71.059, 42.360, 4),
    (-106.487, 31.759, 1), (-86.781, 36.163, 2), (-90.049, 35.150, 1),
    (-122.676, 45.523, 2), (-97.516, 35.468, 1), (-115.140, 36.169, 2),
    (-85.759, 38.253, 1), (-76.612, 39.290, 2), (-87.906, 43.039, 1),
    (-106.651, 35.084, 1), (-110.975, 32.222, 1), (-119.787, 36.738, 1),
    (-121.494, 38.582, 2), (-94.579, 39.100, 2), (-84.388, 33.749, 4),
    (-80.192, 25.762, 4), (-93.265, 44.978, 3), (-90.071, 29.951, 1),
    (-95.993, 36.154, 1), (-81.694, 41.499, 2), (-82.458, 27.951, 3),
    (-97.331, 32.755, 2), (-111.891, 40.761, 2), (-84.512, 39.103, 2),
    (-79.996, 40.441, 2), (-90.199, 38.627, 2), (-78.639, 35.780, 2),
    (-77.436, 37.541, 1), (-81.379, 28.538, 3), (-96.700, 40.814, 1),
    (-116.202, 43.615, 1), (-100.783, 46.809, 1), (-69.779, 44.310, 1),
    (-72.576, 44.260, 1), (-105.937, 35.687, 1), (-108.501, 45.783, 1),
    (-98.493, 33.914, 1), (-89.401, 43.073, 1), (-92.289, 34.746, 1),
]

US_BOX = (-124.5, 25.0, -67.0, 49.0)


def main() -> None:
    rng = random.Random(SEED)
    total_share = sum(m[2] for m in METROS)
    rural = COUNT // 6
    clustered = COUNT - rural
    rows = []
    for lon, lat, share in METROS:
        n = round(clustered * share / total_share)
        spread = 0.25 + 0.08 * share
        for _ in range(n):
            rows.append((lon + rng.gauss(0.0, spread), lat + rng.gauss(0.0, spread * 0.8)))
    rows = rows[:clustered]
    while len(rows) < COUNT:
        rows.append((rng.uniform(US_BOX[0], US_BOX[2]), rng.uniform(US_BOX[1], US_BOX[3])))
    rng.shuffle(rows)

    out = Path(__file__).with_name("us_cities_base.csv")
    with out.open("w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["lon", "lat"])
        for lon, lat in rows:
            w.writerow([f"{lon:.5f}", f"{lat:.5f}"])


if __name__ == "__main__":
    main()
