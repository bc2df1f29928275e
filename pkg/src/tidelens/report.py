"""Static reports: a per-year stats table plus rendered figures.

render_report writes into an output directory:

    stats.csv            year,level_m,flooded_cells,flooded_area_m2,flooded_fraction
    sea_level_curve.png  projection curve with its anchors
    flooded_area.png     flooded area over the timeline
    flood_map_YYYY.png   elevation shaded relief + flood overlay per map year
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")  # headless: render straight to files

import matplotlib.pyplot as plt
import numpy as np

from .engine import Engine
from .geodata import geo_to_local
from .sealevel import TIMELINE, level_for_year

_WATER_BLUE = "#2f6fc4"


def per_year_rows(engine: Engine) -> list[dict]:
    rows = []
    for year, level in engine.curve_rows():
        _, stats = engine.flood_for_year(year)
        rows.append(
            {
                "year": year,
                "level_m": level,
                "flooded_cells": stats.flooded_cells,
                "flooded_area_m2": stats.flooded_area_m2,
                "flooded_fraction": stats.flooded_fraction,
            }
        )
    return rows


def write_stats_csv(rows: list[dict], path: Path) -> None:
    lines = ["year,level_m,flooded_cells,flooded_area_m2,flooded_fraction"]
    for row in rows:
        lines.append(
            f"{row['year']},{row['level_m']!r},{row['flooded_cells']},"
            f"{row['flooded_area_m2']!r},{row['flooded_fraction']!r}"
        )
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def plot_curve(engine: Engine, path: Path) -> None:
    years = np.arange(TIMELINE.start_year, TIMELINE.end_year + 1)
    levels = [level_for_year(engine.curve, int(y)) for y in years]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.plot(years, levels, color=_WATER_BLUE, lw=2)
    ax.plot(engine.curve.years, engine.curve.levels, "o", color="#19334d", ms=5)
    ax.set_xlabel("year")
    ax.set_ylabel("sea level rise (m)")
    ax.set_title("Projected sea level over the timeline")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_flooded_area(rows: list[dict], path: Path) -> None:
    years = [r["year"] for r in rows]
    area_ha = [r["flooded_area_m2"] / 1e4 for r in rows]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.fill_between(years, area_ha, color=_WATER_BLUE, alpha=0.35)
    ax.plot(years, area_ha, color=_WATER_BLUE, lw=2)
    ax.set_xlabel("year")
    ax.set_ylabel("flooded area (ha)")
    ax.set_title("Flooded area over the timeline")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_flood_map(engine: Engine, year: int, path: Path) -> None:
    dem = engine.dem
    mask, _ = engine.flood_for_year(year)
    level = engine.level_at(year)
    xmin, ymin, xmax, ymax = dem.extent

    elev = np.ma.masked_where(dem.nodata_mask(), dem.values)
    fig, ax = plt.subplots(figsize=(7.5, 7))
    shade = ax.imshow(
        elev, cmap="gist_earth", extent=(xmin, xmax, ymin, ymax), interpolation="nearest"
    )
    water = np.ma.masked_where(~mask.cells, np.ones_like(dem.values))
    ax.imshow(
        water,
        cmap=matplotlib.colors.ListedColormap([_WATER_BLUE]),
        alpha=0.6,
        extent=(xmin, xmax, ymin, ymax),
        interpolation="nearest",
    )
    for poi in engine.catalog:
        p = geo_to_local(engine.config.anchor, poi.position)
        ax.plot(p.x, p.y, "^", color="#c43131", ms=7, mec="white", mew=0.8)
        ax.annotate(
            poi.name, (p.x, p.y), textcoords="offset points", xytext=(6, 5), fontsize=7
        )
    fig.colorbar(shade, ax=ax, shrink=0.75, label="elevation (m)")
    ax.set_xlabel("x (m east)")
    ax.set_ylabel("y (m north)")
    ax.set_title(f"Flood extent {year} (water level {level:.2f} m)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_report(engine: Engine, out_dir: Path, map_years: list[int]) -> list[Path]:
    """Write the full report; returns the created file paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = per_year_rows(engine)
    written = []

    csv_path = out_dir / "stats.csv"
    write_stats_csv(rows, csv_path)
    written.append(csv_path)

    curve_path = out_dir / "sea_level_curve.png"
    plot_curve(engine, curve_path)
    written.append(curve_path)

    area_path = out_dir / "flooded_area.png"
    plot_flooded_area(rows, area_path)
    written.append(area_path)

    for year in map_years:
        map_path = out_dir / f"flood_map_{year}.png"
        plot_flood_map(engine, year, map_path)
        written.append(map_path)
    return written
