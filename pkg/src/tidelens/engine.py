"""The engine: one object owning the dataset, the flood cache, and every
byte encoding served to the outside.

Both the CLI and the HTTP service call into an Engine, and both hand out
the exact bytes produced here -- that is what makes `tidelens flood`
output and /api/flood.pgm responses byte-identical.
"""

from __future__ import annotations

import json
import threading
from functools import cached_property
from typing import Callable

from .catalog import PoiCatalog, load_pois, poi_view
from .config import AppConfig
from .errors import IndexOutOfRange, TidelensError
from .geodata import LocalCoord, geo_to_local, parse_ascii_grid
from .inundation import (
    FloodMask,
    FloodStats,
    boundary_seeds,
    flood_mask,
    mask_stats,
)
from .scene import (
    SceneConfig,
    encode_mask_pgm,
    encode_mask_rle,
    export_obj,
    ocean_surface,
    terrain_mesh,
)
from .sealevel import (
    TIMELINE,
    level_for_year,
    parse_curve,
    slider_for_year,
    year_for_slider,
)

YearEntry = tuple[FloodMask, FloodStats]


class YearCache:
    """Memoizes per-slider-index flood results; at most 80 live entries.

    Thread-safe.  The compute callable runs outside the lock, so two
    threads racing on a cold index may both compute -- results are
    deterministic and bit-identical, and the first one stored wins, so
    callers can never observe two different answers for one index.
    """

    def __init__(self, compute: Callable[[int], YearEntry]):
        self._compute = compute
        self._entries: dict[int, YearEntry] = {}
        self._lock = threading.Lock()
        self.computations = 0  # how many times compute actually ran

    def get(self, index: int) -> YearEntry:
        if not 0 <= index < TIMELINE.step_count:
            raise IndexOutOfRange(
                f"slider index {index} outside [0, {TIMELINE.step_count - 1}]"
            )
        with self._lock:
            hit = self._entries.get(index)
        if hit is not None:
            return hit
        result = self._compute(index)
        with self._lock:
            self.computations += 1
            return self._entries.setdefault(index, result)

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)


def _json_bytes(obj: object) -> bytes:
    return (json.dumps(obj, separators=(",", ":")) + "\n").encode("utf-8")


class Engine:
    """Loads a dataset per AppConfig and answers every query the CLI and
    service expose.  Construction fails fast on any unreadable or invalid
    input, naming the offending file."""

    def __init__(self, config: AppConfig):
        self.config = config
        self.dem = self._load(config.dem_path, parse_ascii_grid)
        self.curve_text = self._read(config.curve_path)
        self.curve = self._load(config.curve_path, parse_curve, text=self.curve_text)
        self.scene = SceneConfig(
            anchor=config.anchor,
            vertical_exaggeration=config.vertical_exaggeration,
            connectivity=config.connectivity,
            seed_overrides=config.seed_overrides,
        )
        self.catalog: PoiCatalog = self._load(
            config.pois_path, lambda t: load_pois(t, self.dem, config.anchor)
        )
        self.cache = YearCache(self._compute_index)
        self._poi_locals: dict[str, LocalCoord] = {
            p.id: geo_to_local(config.anchor, p.position) for p in self.catalog
        }

    @staticmethod
    def _read(path) -> str:
        try:
            return path.read_text(encoding="utf-8")
        except OSError as e:
            raise TidelensError(f"{path}: {e}") from None

    def _load(self, path, parse, text: str | None = None):
        if text is None:
            text = self._read(path)
        try:
            return parse(text)
        except TidelensError as e:
            raise type(e)(f"{path}: {e}") from None

    # ---- flood state

    def _compute_index(self, index: int) -> YearEntry:
        level = level_for_year(self.curve, year_for_slider(index))
        seeds = boundary_seeds(self.dem, level, self.scene.seed_overrides)
        mask = flood_mask(self.dem, level, seeds, self.scene.connectivity)
        return mask, mask_stats(mask, self.dem)

    def flood_for_year(self, year: int) -> YearEntry:
        return self.cache.get(slider_for_year(year))

    def level_at(self, year: int) -> float:
        slider_for_year(year)  # range check
        return level_for_year(self.curve, year)

    # ---- byte encodings (shared verbatim by CLI and service)

    def rle_bytes(self, year: int) -> bytes:
        mask, _ = self.flood_for_year(year)
        return encode_mask_rle(mask).encode("ascii")

    def pgm_bytes(self, year: int) -> bytes:
        mask, _ = self.flood_for_year(year)
        return encode_mask_pgm(mask)

    def stats_json_bytes(self, year: int) -> bytes:
        _, stats = self.flood_for_year(year)
        return _json_bytes(
            {
                "year": year,
                "level": self.level_at(year),
                "flooded_cells": stats.flooded_cells,
                "flooded_area_m2": stats.flooded_area_m2,
                "flooded_fraction": stats.flooded_fraction,
            }
        )

    @cached_property
    def terrain_obj_bytes(self) -> bytes:
        return export_obj(terrain_mesh(self.dem, self.scene)).encode("ascii")

    def ocean_obj_bytes(self, year: int) -> bytes:
        level = self.level_at(year)
        return export_obj(ocean_surface(self.dem, level, self.scene)).encode("ascii")

    # ---- metadata and POIs

    @cached_property
    def meta_bytes(self) -> bytes:
        xmin, ymin, xmax, ymax = self.dem.extent
        anchor = self.config.anchor
        return _json_bytes(
            {
                "dem": {
                    "nrows": self.dem.nrows,
                    "ncols": self.dem.ncols,
                    "cellsize": self.dem.cellsize,
                    "xllcorner": self.dem.xll,
                    "yllcorner": self.dem.yll,
                    "nodata_value": self.dem.nodata_value,
                },
                "extent": {"xmin": xmin, "ymin": ymin, "xmax": xmax, "ymax": ymax},
                "anchor": {
                    "origin_lat": anchor.origin_geo.lat,
                    "origin_lon": anchor.origin_geo.lon,
                    "origin_x": anchor.origin_local.x,
                    "origin_y": anchor.origin_local.y,
                },
                "timeline": {
                    "start_year": TIMELINE.start_year,
                    "end_year": TIMELINE.end_year,
                    "step_count": TIMELINE.step_count,
                },
                "scene": {
                    "vertical_exaggeration": self.scene.vertical_exaggeration,
                    "connectivity": self.scene.connectivity,
                },
                "poi_count": len(self.catalog),
            }
        )

    def _poi_record(self, poi) -> dict:
        local = self._poi_locals[poi.id]
        return {
            "id": poi.id,
            "name": poi.name,
            "lat": poi.position.lat,
            "lon": poi.position.lon,
            "local": {"x": local.x, "y": local.y},
            "blurb": poi.blurb,
            "media_refs": list(poi.media_refs),
        }

    @cached_property
    def pois_bytes(self) -> bytes:
        return _json_bytes([self._poi_record(p) for p in self.catalog])

    def poi_view_bytes(self, poi_id: str, year: int) -> bytes:
        poi = self.catalog.get(poi_id)  # KeyError for unknown ids
        mask, _ = self.flood_for_year(year)
        view = poi_view(poi, self.dem, self.config.anchor, self.curve, year, mask)
        record = self._poi_record(poi)
        record.update(
            {
                "year": view.year,
                "water_level": view.water_level,
                "ground_elevation": view.ground_elevation,
                "flooded": view.flooded,
                "depth": view.depth,
            }
        )
        return _json_bytes(record)

    # ---- timeline table (CLI `curve`, reports)

    def curve_rows(self) -> list[tuple[int, float]]:
        return [
            (year_for_slider(i), level_for_year(self.curve, year_for_slider(i)))
            for i in range(TIMELINE.step_count)
        ]
