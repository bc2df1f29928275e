"""Engine loading, the per-year cache, and encoder determinism."""

import threading

import numpy as np
import pytest

from tidelens.config import load_config
from tidelens.engine import Engine, YearCache
from tidelens.errors import IndexOutOfRange, NonNumericToken, TidelensError
from tidelens.sealevel import level_for_year
from conftest import SAMPLE


class TestYearCache:
    def test_memoizes(self):
        calls = []

        def compute(index):
            calls.append(index)
            return index * 10, None

        cache = YearCache(compute)
        assert cache.get(29) == (290, None)
        assert cache.get(29) == (290, None)
        assert calls == [29]
        assert cache.computations == 1

    def test_capacity_is_the_timeline(self):
        cache = YearCache(lambda i: (i, i))
        for i in range(80):
            cache.get(i)
        assert len(cache) == 80

    def test_rejects_out_of_range(self):
        cache = YearCache(lambda i: (i, i))
        for bad in (-1, 80):
            with pytest.raises(IndexOutOfRange):
                cache.get(bad)

    def test_concurrent_callers_see_one_result(self):
        barrier = threading.Barrier(8)

        def compute(index):
            barrier.wait()  # force all threads into compute together
            return object(), index

        cache = YearCache(compute)
        results = []

        def worker():
            results.append(cache.get(5))

        threads = [threading.Thread(target=worker) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        # several may have computed, but everyone must observe one entry
        assert len({id(r[0]) for r in results}) == 1
        assert cache.get(5) is results[0]


class TestEngineLoading:
    def test_loads_sample(self, sample_engine):
        assert sample_engine.dem.nrows == 120
        assert len(sample_engine.curve.anchors) == 9
        assert len(sample_engine.catalog) == 5

    def test_bad_dem_error_names_file(self, tmp_path):
        bad = tmp_path / "dem.asc"
        bad.write_text("ncols 2\nnrows 2\nxllcorner 0\nyllcorner 0\ncellsize 1\n1 x 3 4\n")
        for name in ("curve.csv", "pois.json"):
            (tmp_path / name).write_text("")
        config_text = (
            '{"dem": "dem.asc", "curve": "curve.csv", "pois": "pois.json",'
            ' "anchor": {"origin_lat": 53.0, "origin_lon": -6.0}}'
        )
        (tmp_path / "config.json").write_text(config_text)
        with pytest.raises(NonNumericToken, match="dem.asc"):
            Engine(load_config(tmp_path / "config.json"))

    def test_missing_file_fails_fast(self, tmp_path):
        config_text = (
            '{"dem": "absent.asc", "curve": "c.csv", "pois": "p.json",'
            ' "anchor": {"origin_lat": 53.0, "origin_lon": -6.0}}'
        )
        (tmp_path / "config.json").write_text(config_text)
        with pytest.raises(TidelensError, match="absent.asc"):
            Engine(load_config(tmp_path / "config.json"))


class TestEngineResults:
    def test_flood_level_matches_curve_exactly(self, sample_engine):
        for year in (2021, 2037, 2050, 2083, 2100):
            mask, _ = sample_engine.flood_for_year(year)
            assert mask.level == level_for_year(sample_engine.curve, year)

    def test_masks_cached_bit_identical(self, sample_engine):
        a = sample_engine.rle_bytes(2050)
        b = sample_engine.rle_bytes(2050)
        assert a == b
        assert sample_engine.pgm_bytes(2077) == sample_engine.pgm_bytes(2077)

    def test_stats_json_fields(self, sample_engine):
        import json

        payload = json.loads(sample_engine.stats_json_bytes(2050))
        assert payload["year"] == 2050
        assert payload["level"] == level_for_year(sample_engine.curve, 2050)
        assert set(payload) == {
            "year", "level", "flooded_cells", "flooded_area_m2", "flooded_fraction",
        }
        assert payload["flooded_area_m2"] == payload["flooded_cells"] * 100.0

    def test_curve_rows_cover_timeline(self, sample_engine):
        rows = sample_engine.curve_rows()
        assert len(rows) == 80
        assert rows[0] == (2021, 0.0)
        assert rows[29][0] == 2050
        assert rows[-1] == (2100, 1.05)

    def test_flooded_area_never_decreases(self, sample_engine):
        areas = [
            sample_engine.flood_for_year(year)[1].flooded_area_m2
            for year in range(2021, 2101)
        ]
        assert all(b >= a for a, b in zip(areas, areas[1:]))

    def test_terrain_obj_header_counts(self, sample_engine):
        header = sample_engine.terrain_obj_bytes.split(b"\n", 1)[0].decode()
        dem = sample_engine.dem
        nv = dem.nrows * dem.ncols
        # 36 NoData cells sit in a 6x6 block: they void a 7x7 patch of quads
        nodata_quads = 7 * 7
        nt = 2 * ((dem.nrows - 1) * (dem.ncols - 1) - nodata_quads)
        assert header == f"# mesh: {nv} vertices, {nt} triangles"

    def test_ocean_obj_tracks_level(self, sample_engine):
        text = sample_engine.ocean_obj_bytes(2100).decode()
        level = sample_engine.level_at(2100)
        assert f"v 0.000000 0.000000 {level:.6f}" in text
