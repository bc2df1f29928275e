"""HTTP endpoints: payloads, error shapes, and byte determinism."""

import json

import numpy as np
import pytest
from fastapi.testclient import TestClient

from oracles import decode_pgm_reference, decode_rle_reference
from tidelens.engine import Engine
from tidelens.sealevel import level_for_year
from tidelens.service import build_app
from conftest import SAMPLE


@pytest.fixture(scope="module")
def client(sample_config):
    engine = Engine(sample_config)
    return TestClient(build_app(engine)), engine


class TestMetaAndCurve:
    def test_meta(self, client):
        http, engine = client
        payload = http.get("/api/meta").json()
        assert payload["dem"]["nrows"] == 120
        assert payload["dem"]["cellsize"] == 10.0
        assert payload["extent"]["xmax"] == 1200.0
        assert payload["timeline"] == {
            "start_year": 2021, "end_year": 2100, "step_count": 80,
        }
        assert payload["anchor"]["origin_lat"] == engine.config.anchor.origin_geo.lat
        assert payload["poi_count"] == 5

    def test_curve_is_verbatim_file(self, client):
        http, _ = client
        response = http.get("/api/curve")
        assert response.status_code == 200
        assert response.text == (SAMPLE / "curve.csv").read_text()

    def test_responses_byte_deterministic(self, client):
        http, _ = client
        for url in ("/api/meta", "/api/pois", "/api/flood?year=2063",
                    "/api/flood.pgm?year=2063", "/api/stats?year=2063"):
            assert http.get(url).content == http.get(url).content, url


class TestPois:
    def test_listing_sorted_with_local_positions(self, client):
        http, engine = client
        records = http.get("/api/pois").json()
        assert [r["id"] for r in records] == sorted(r["id"] for r in records)
        for r in records:
            assert set(r) >= {"id", "name", "lat", "lon", "local", "blurb", "media_refs"}
            assert set(r["local"]) == {"x", "y"}

    def test_poi_view_payload(self, client):
        http, engine = client
        payload = http.get("/api/poi/lagoon-hide?year=2100").json()
        assert payload["year"] == 2100
        assert payload["flooded"] is True
        assert payload["water_level"] == level_for_year(engine.curve, 2100)
        assert payload["depth"] == pytest.approx(
            payload["water_level"] - payload["ground_elevation"]
        )

    def test_poi_dry_before_connection(self, client):
        http, _ = client
        payload = http.get("/api/poi/lagoon-hide?year=2030").json()
        assert payload["flooded"] is False
        assert payload["depth"] == 0.0
        assert payload["ground_elevation"] < payload["water_level"]

    def test_unknown_poi_is_404(self, client):
        http, _ = client
        response = http.get("/api/poi/atlantis?year=2050")
        assert response.status_code == 404
        body = response.json()
        assert set(body) == {"error", "message"}
        assert "atlantis" in body["message"]


class TestFloodEndpoints:
    def test_rle_level_matches_curve_exactly(self, client):
        http, engine = client
        for year in (2021, 2050, 2100):
            payload = json.loads(http.get(f"/api/flood?year={year}").content)
            assert payload["level"] == level_for_year(engine.curve, year), year

    def test_rle_and_pgm_agree(self, client):
        http, _ = client
        rle_cells, _ = decode_rle_reference(http.get("/api/flood?year=2080").text)
        pgm_cells = decode_pgm_reference(http.get("/api/flood.pgm?year=2080").content)
        assert np.array_equal(rle_cells, pgm_cells)

    def test_pgm_media_type_and_magic(self, client):
        http, _ = client
        response = http.get("/api/flood.pgm?year=2021")
        assert response.headers["content-type"].startswith("image/")
        assert response.content.startswith(b"P5\n120 120\n255\n")

    def test_stats_payload(self, client):
        http, engine = client
        payload = http.get("/api/stats?year=2050").json()
        mask, stats = engine.flood_for_year(2050)
        assert payload["flooded_cells"] == stats.flooded_cells
        assert payload["flooded_area_m2"] == stats.flooded_area_m2
        assert payload["flooded_fraction"] == stats.flooded_fraction

    def test_year_required(self, client):
        http, _ = client
        response = http.get("/api/flood")
        assert response.status_code == 400
        body = response.json()
        assert set(body) == {"error", "message"}
        assert "year" in body["message"]

    def test_year_must_be_integer(self, client):
        http, _ = client
        response = http.get("/api/flood?year=soon")
        assert response.status_code == 400
        assert response.json()["error"] == "BadParameter"

    def test_year_out_of_range(self, client):
        http, _ = client
        for bad in (1999, 2020, 2101):
            response = http.get(f"/api/flood?year={bad}")
            assert response.status_code == 400
            assert response.json()["error"] == "YearOutOfRange"


class TestMeshEndpoints:
    def test_terrain_obj(self, client):
        http, engine = client
        response = http.get("/api/mesh/terrain.obj")
        assert response.content == engine.terrain_obj_bytes
        assert response.text.startswith("# mesh: 14400 vertices, ")

    def test_ocean_obj_needs_year(self, client):
        http, _ = client
        assert http.get("/api/mesh/ocean.obj").status_code == 400
        ok = http.get("/api/mesh/ocean.obj?year=2100")
        assert ok.status_code == 200
        assert ok.text.startswith("# mesh: 4 vertices, 2 triangles\n")


class TestStaticMounts:
    def test_media_files_served(self, client):
        http, engine = client
        records = http.get("/api/pois").json()
        ref = records[0]["media_refs"][0]
        response = http.get(f"/media/{ref}")
        assert response.status_code == 200
        assert records[0]["name"] in response.text

    def test_api_wins_over_static(self, client):
        http, _ = client
        # no static_dir in the base config: unknown root paths are 404
        assert http.get("/definitely-missing").status_code == 404
