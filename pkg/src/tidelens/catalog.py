"""Points of interest anchored to geographic positions.

A catalog is a JSON array of records with id/name/lat/lon plus optional
blurb and media_refs.  Records are keyed by id and canonically ordered by
id, so permuting the input file changes nothing.  A PoiView is the
per-year story of one POI: where it sits in the scene, the ground under
it, and whether the water of a given year reaches it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    DataError,
    DuplicateId,
    MissingField,
    PositionOutsideScene,
    YearOutOfRange,
)
from .geodata import (
    AnchorTooFar,
    Dem,
    GeoAnchor,
    GeoCoord,
    LocalCoord,
    geo_to_local,
    sample_elevation,
)
from .inundation import FloodMask
from .sealevel import TIMELINE, SeaLevelCurve, level_for_year

_REQUIRED = ("id", "name", "lat", "lon")


@dataclass(frozen=True)
class Poi:
    id: str
    name: str
    position: GeoCoord
    blurb: str = ""
    media_refs: tuple[str, ...] = ()


@dataclass(frozen=True)
class PoiCatalog:
    """POIs sorted by id; ids are unique."""

    pois: tuple[Poi, ...]

    def __post_init__(self) -> None:
        ids = [p.id for p in self.pois]
        if len(set(ids)) != len(ids):
            raise DuplicateId("catalog holds repeated ids")
        if ids != sorted(ids):
            object.__setattr__(
                self, "pois", tuple(sorted(self.pois, key=lambda p: p.id))
            )

    def get(self, poi_id: str) -> Poi:
        for p in self.pois:
            if p.id == poi_id:
                return p
        raise KeyError(poi_id)

    def __iter__(self):
        return iter(self.pois)

    def __len__(self) -> int:
        return len(self.pois)


@dataclass(frozen=True)
class PoiView:
    """One POI at one year: scene position, ground, and water state.

    depth is water_level - ground_elevation when flooded, else 0.0; it is
    never negative.
    """

    poi: Poi
    local: LocalCoord
    ground_elevation: float
    year: int
    water_level: float
    flooded: bool
    depth: float


def load_pois(text: str, dem: Dem, anchor: GeoAnchor) -> PoiCatalog:
    """Parse and validate a POI catalog against a scene.

    Every record must carry id/name/lat/lon (MissingField), ids must be
    unique (DuplicateId), and every position must project inside the DEM
    footprint (PositionOutsideScene).
    """
    try:
        records = json.loads(text)
    except json.JSONDecodeError as e:
        raise DataError(f"POI catalog is not valid JSON: {e}") from None
    if not isinstance(records, list):
        raise DataError("POI catalog must be a JSON array of records")
    pois: list[Poi] = []
    seen: set[str] = set()
    for i, rec in enumerate(records):
        if not isinstance(rec, dict):
            raise DataError(f"POI record {i} is not a JSON object")
        for key in _REQUIRED:
            if key not in rec:
                raise MissingField(f"POI record {i}: missing field {key!r}")
        pid = rec["id"]
        if not isinstance(pid, str) or not pid:
            raise DataError(f"POI record {i}: id must be a non-empty string")
        if pid in seen:
            raise DuplicateId(f"POI id {pid!r} appears more than once")
        seen.add(pid)
        try:
            position = GeoCoord(float(rec["lat"]), float(rec["lon"]))
        except (TypeError, ValueError) as e:
            raise DataError(f"POI {pid!r}: bad position: {e}") from None
        try:
            local = geo_to_local(anchor, position)
        except AnchorTooFar as e:
            raise PositionOutsideScene(f"POI {pid!r}: {e}") from None
        xmin, ymin, xmax, ymax = dem.extent
        if not (xmin <= local.x <= xmax and ymin <= local.y <= ymax):
            raise PositionOutsideScene(
                f"POI {pid!r} projects to ({local.x:.1f}, {local.y:.1f}), "
                f"outside extent {dem.extent}"
            )
        media = rec.get("media_refs") or []
        if not isinstance(media, list) or any(not isinstance(m, str) for m in media):
            raise DataError(f"POI {pid!r}: media_refs must be a list of strings")
        pois.append(
            Poi(
                id=pid,
                name=str(rec["name"]),
                position=position,
                blurb=str(rec.get("blurb", "")),
                media_refs=tuple(media),
            )
        )
    return PoiCatalog(tuple(sorted(pois, key=lambda p: p.id)))


def poi_view(
    poi: Poi,
    dem: Dem,
    anchor: GeoAnchor,
    curve: SeaLevelCurve,
    year: int,
    mask: FloodMask,
) -> PoiView:
    """Evaluate one POI against the flood state of one year.

    mask must be the flood mask computed for this curve and year; flooded
    means the cell containing the POI is wet in it, and depth follows the
    water level minus the bilinear ground elevation.
    """
    if not TIMELINE.start_year <= year <= TIMELINE.end_year:
        raise YearOutOfRange(
            f"year {year} outside [{TIMELINE.start_year}, {TIMELINE.end_year}]"
        )
    level = level_for_year(curve, year)
    if mask.level != level:
        raise ValueError(
            f"mask was computed at level {mask.level}, but year {year} implies {level}"
        )
    local = geo_to_local(anchor, poi.position)
    ground = sample_elevation(dem, local)
    row, col = dem.cell_at(local)
    flooded = bool(mask.cells[row, col])
    depth = max(0.0, level - ground) if flooded else 0.0
    return PoiView(
        poi=poi,
        local=local,
        ground_elevation=ground,
        year=year,
        water_level=level,
        flooded=flooded,
        depth=depth,
    )
