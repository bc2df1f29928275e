"""App configuration: one JSON file naming the dataset and options.

Shape:

    {
      "dem": "dem.asc",
      "curve": "curve.csv",
      "pois": "pois.json",
      "anchor": {"origin_lat": 53.49, "origin_lon": -6.11,
                 "origin_x": 0.0, "origin_y": 0.0},
      "scene": {"vertical_exaggeration": 1.0, "connectivity": 4,
                "seed_overrides": null},
      "listen": {"host": "127.0.0.1", "port": 8642},
      "static_dir": null,
      "media_dir": "media"
    }

Relative paths resolve against the config file's directory.  Loading
fails fast: referenced files must exist and be readable.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError
from .geodata import GeoAnchor, GeoCoord, LocalCoord


@dataclass(frozen=True)
class ListenSpec:
    host: str = "127.0.0.1"
    port: int = 8642

    def __post_init__(self) -> None:
        if not isinstance(self.port, int) or not 1 <= self.port <= 65535:
            raise ConfigError(f"port must be an integer in [1, 65535], got {self.port!r}")


@dataclass(frozen=True)
class AppConfig:
    dem_path: Path
    curve_path: Path
    pois_path: Path
    anchor: GeoAnchor
    vertical_exaggeration: float = 1.0
    connectivity: int = 4
    seed_overrides: tuple[tuple[int, int], ...] | None = None
    listen: ListenSpec = field(default_factory=ListenSpec)
    static_dir: Path | None = None
    media_dir: Path | None = None


def _resolve(base: Path, raw: str, role: str, *, want_dir: bool = False) -> Path:
    path = Path(raw)
    if not path.is_absolute():
        path = base / path
    if want_dir:
        if not path.is_dir():
            raise ConfigError(f"{role} directory {path} does not exist")
    elif not path.is_file():
        raise ConfigError(f"{role} file {path} does not exist")
    return path


def load_config(path: str | Path) -> AppConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path}: not valid JSON: {e}") from None
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: config must be a JSON object")

    base = path.resolve().parent
    for key in ("dem", "curve", "pois", "anchor"):
        if key not in raw:
            raise ConfigError(f"{path}: missing required key {key!r}")

    anchor_raw = raw["anchor"]
    try:
        anchor = GeoAnchor(
            origin_geo=GeoCoord(
                float(anchor_raw["origin_lat"]), float(anchor_raw["origin_lon"])
            ),
            origin_local=LocalCoord(
                float(anchor_raw.get("origin_x", 0.0)),
                float(anchor_raw.get("origin_y", 0.0)),
            ),
        )
    except (TypeError, KeyError, ValueError) as e:
        raise ConfigError(f"{path}: bad anchor: {e}") from None

    scene_raw = raw.get("scene") or {}
    exaggeration = float(scene_raw.get("vertical_exaggeration", 1.0))
    if not (math.isfinite(exaggeration) and exaggeration > 0):
        raise ConfigError(f"{path}: vertical_exaggeration must be positive")
    connectivity = scene_raw.get("connectivity", 4)
    if connectivity not in (4, 8):
        raise ConfigError(f"{path}: connectivity must be 4 or 8, got {connectivity!r}")
    overrides_raw = scene_raw.get("seed_overrides")
    overrides: tuple[tuple[int, int], ...] | None = None
    if overrides_raw is not None:
        try:
            overrides = tuple((int(r), int(c)) for r, c in overrides_raw)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"{path}: bad seed_overrides: {e}") from None

    listen_raw = raw.get("listen") or {}
    listen = ListenSpec(
        host=str(listen_raw.get("host", "127.0.0.1")),
        port=listen_raw.get("port", 8642),
    )

    static_dir = None
    if raw.get("static_dir"):
        static_dir = _resolve(base, raw["static_dir"], "static", want_dir=True)
    media_dir = None
    if raw.get("media_dir"):
        media_dir = _resolve(base, raw["media_dir"], "media", want_dir=True)

    return AppConfig(
        dem_path=_resolve(base, raw["dem"], "DEM"),
        curve_path=_resolve(base, raw["curve"], "curve"),
        pois_path=_resolve(base, raw["pois"], "POI"),
        anchor=anchor,
        vertical_exaggeration=exaggeration,
        connectivity=connectivity,
        seed_overrides=overrides,
        listen=listen,
        static_dir=static_dir,
        media_dir=media_dir,
    )
