#!/usr/bin/env python3
"""Regenerate the bundled sample dataset (data/sample/).

The site is synthetic but deliberately shaped to exercise every part of
the pipeline:

* a west-facing shore rising to inland hills (open sea touches the map
  edge, so default border seeding works),
* a dune ridge parallel to the shore with a low notch, sheltering a
  back-barrier lagoon that sits below sea level yet stays dry until the
  rising water clears the sill -- the connectivity story,
* an inland closed hollow below the 2100 water level that never floods
  in the connected model (but does in the naive threshold model),
* a NoData patch up in the hills (survey gap),
* five POIs with contrasting fates across the timeline.

Deterministic: no RNG, so reruns reproduce the repository files exactly.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import numpy as np

REPO = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO / "src"))

from tidelens.config import load_config  # noqa: E402
from tidelens.engine import Engine  # noqa: E402
from tidelens.geodata import (  # noqa: E402
    Dem,
    GeoAnchor,
    GeoCoord,
    LocalCoord,
    local_to_geo,
    sample_elevation,
    write_ascii_grid,
)
from tidelens.sealevel import year_for_slider  # noqa: E402

OUT = REPO / "data" / "sample"

NROWS = NCOLS = 120
CELLSIZE = 10.0
NODATA = -9999.0

ANCHOR = GeoAnchor(GeoCoord(53.4921, -6.1072), LocalCoord(0.0, 0.0))

CURVE_ROWS = [
    (2021, 0.0),
    (2030, 0.05),
    (2040, 0.12),
    (2050, 0.22),
    (2060, 0.34),
    (2070, 0.48),
    (2080, 0.65),
    (2090, 0.84),
    (2100, 1.05),
]

# positions are exact cell centers so the containing cell is unambiguous
POIS = [
    {
        "id": "old-strand",
        "name": "Old Strand Walk",
        "xy": (155.0, 595.0),
        "blurb": (
            "A century ago people promenaded here at low tide. The strand "
            "already sits below today's high water: the sea reclaimed it "
            "before the timeline even starts."
        ),
    },
    {
        "id": "harbour-steps",
        "name": "Harbour Steps",
        "xy": (275.0, 825.0),
        "blurb": (
            "Stone steps at the mouth of the tidal channel where boats once "
            "tied up. Only a hand's breadth above today's water line - the "
            "steps go under in the early 2030s, first of all the landmarks."
        ),
    },
    {
        "id": "dune-overlook",
        "name": "Dune Overlook",
        "xy": (295.0, 505.0),
        "blurb": (
            "The crest of the barrier dunes. High enough to stay dry through "
            "2100, this is the best spot to watch the water close in on both "
            "sides as the decades pass."
        ),
    },
    {
        "id": "lagoon-hide",
        "name": "Lagoon Bird Hide",
        "xy": (415.0, 695.0),
        "blurb": (
            "A bird hide on the floor of the sheltered back-barrier lagoon, "
            "below sea level yet dry: the dunes keep the water out. Once the "
            "rising sea clears the low notch in the ridge, the whole basin "
            "floods within a single year."
        ),
    },
    {
        "id": "heath-hollow",
        "name": "Heath Hollow",
        "xy": (805.0, 295.0),
        "blurb": (
            "A closed hollow in the inland heath whose floor lies below the "
            "2100 water level. It stays dry on every slider step: water has "
            "no path in. Elevation alone does not decide what floods."
        ),
    },
]


def elevation_field(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Synthetic coastal terrain; x, y in meters, broadcastable arrays."""
    t = x / 1200.0
    base = -3.0 + 14.0 * t**1.3
    ridge = 3.0 * np.exp(-(((x - 300.0) / 40.0) ** 2))
    notch = -1.9 * np.exp(-(((x - 300.0) / 45.0) ** 2) - (((y - 800.0) / 35.0) ** 2))
    lagoon = -2.5 * np.exp(-(((x - 420.0) / 90.0) ** 2) - (((y - 700.0) / 110.0) ** 2))
    hollow = -5.2 * np.exp(-(((x - 800.0) / 50.0) ** 2) - (((y - 300.0) / 60.0) ** 2))
    hills = 2.0 * np.exp(-(((x - 1000.0) / 120.0) ** 2) - (((y - 900.0) / 140.0) ** 2))
    waves = 0.15 * np.sin(x / 57.0) * np.cos(y / 43.0)
    return base + ridge + notch + lagoon + hollow + hills + waves


def build_dem() -> Dem:
    cols = np.arange(NCOLS)
    rows = np.arange(NROWS)
    xs = (cols + 0.5) * CELLSIZE
    ys = (NROWS - rows - 0.5) * CELLSIZE
    grid_x, grid_y = np.meshgrid(xs, ys)
    values = np.round(elevation_field(grid_x, grid_y), 3)
    values[18:24, 100:106] = NODATA  # survey gap in the hills
    return Dem(
        ncols=NCOLS,
        nrows=NROWS,
        xll=0.0,
        yll=0.0,
        cellsize=CELLSIZE,
        nodata_value=NODATA,
        values=values,
    )


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "media").mkdir(exist_ok=True)

    dem = build_dem()
    (OUT / "dem.asc").write_text(write_ascii_grid(dem), encoding="utf-8")
    print(f"wrote dem.asc ({dem.nrows}x{dem.ncols}, {int(dem.nodata_mask().sum())} NoData cells)")

    curve_lines = [
        "# Synthetic sea-level projection for the sample site.",
        "# Levels are meters above the 2021 datum.",
        "# year,level_m",
    ]
    curve_lines += [f"{y},{lv}" for y, lv in CURVE_ROWS]
    (OUT / "curve.csv").write_text("\n".join(curve_lines) + "\n", encoding="utf-8")
    print(f"wrote curve.csv ({len(CURVE_ROWS)} anchors)")

    records = []
    for poi in POIS:
        x, y = poi["xy"]
        geo = local_to_geo(ANCHOR, LocalCoord(x, y))
        records.append(
            {
                "id": poi["id"],
                "name": poi["name"],
                "lat": round(geo.lat, 7),
                "lon": round(geo.lon, 7),
                "blurb": poi["blurb"],
                "media_refs": [f"{poi['id']}.txt"],
            }
        )
        media = OUT / "media" / f"{poi['id']}.txt"
        media.write_text(f"{poi['name']}\n\n{poi['blurb']}\n", encoding="utf-8")
    (OUT / "pois.json").write_text(
        json.dumps(records, indent=2) + "\n", encoding="utf-8"
    )
    print(f"wrote pois.json ({len(records)} records) and media/")

    base_config = {
        "dem": "dem.asc",
        "curve": "curve.csv",
        "pois": "pois.json",
        "anchor": {
            "origin_lat": ANCHOR.origin_geo.lat,
            "origin_lon": ANCHOR.origin_geo.lon,
            "origin_x": 0.0,
            "origin_y": 0.0,
        },
        "scene": {"vertical_exaggeration": 1.0, "connectivity": 4, "seed_overrides": None},
        "listen": {"host": "127.0.0.1", "port": 8642},
        "media_dir": "media",
    }
    (OUT / "config.json").write_text(
        json.dumps(base_config, indent=2) + "\n", encoding="utf-8"
    )
    viewer_config = dict(base_config)
    viewer_config["static_dir"] = "../../frontend/dist"
    (OUT / "config-viewer.json").write_text(
        json.dumps(viewer_config, indent=2) + "\n", encoding="utf-8"
    )
    print("wrote config.json and config-viewer.json")

    # ---- verification pass: reload through the real pipeline and report
    engine = Engine(load_config(OUT / "config.json"))
    print("\nper-POI fate over the timeline:")
    for poi in engine.catalog:
        from tidelens.geodata import geo_to_local

        local = geo_to_local(ANCHOR, poi.position)
        ground = sample_elevation(engine.dem, local)
        first_flood = None
        for i in range(80):
            year = year_for_slider(i)
            mask, _ = engine.flood_for_year(year)
            r, c = engine.dem.cell_at(local)
            if mask.cells[r, c]:
                first_flood = year
                break
        fate = f"floods {first_flood}" if first_flood else "never floods"
        print(f"  {poi.id:15s} ground {ground:7.3f} m  {fate}")
    for year in (2021, 2050, 2100):
        _, stats = engine.flood_for_year(year)
        print(
            f"  {year}: level {engine.level_at(year):5.2f} m, "
            f"{stats.flooded_cells:5d} cells wet ({stats.flooded_fraction:.1%})"
        )


if __name__ == "__main__":
    main()
