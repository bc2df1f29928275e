#!/usr/bin/env python3
"""Regenerate the viewer test fixtures from the sample dataset.

Writes the exact bytes the service would send for the year-2100 flood
mask in both wire formats, plus the scene metadata, into
frontend/tests/fixtures/. Run after changing the sample data generator.
"""

from pathlib import Path

from tidelens.config import load_config
from tidelens.engine import Engine

REPO = Path(__file__).resolve().parent.parent
OUT = REPO / "frontend" / "tests" / "fixtures"


def main() -> None:
    engine = Engine(load_config(REPO / "data" / "sample" / "config.json"))
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "meta.json").write_bytes(engine.meta_bytes)
    (OUT / "flood_2100.json").write_bytes(engine.rle_bytes(2100))
    (OUT / "flood_2100.pgm").write_bytes(engine.pgm_bytes(2100))
    (OUT / "stats_2100.json").write_bytes(engine.stats_json_bytes(2100))
    for name in ("meta.json", "flood_2100.json", "flood_2100.pgm", "stats_2100.json"):
        print(f"wrote {OUT / name} ({(OUT / name).stat().st_size} bytes)")


if __name__ == "__main__":
    main()
