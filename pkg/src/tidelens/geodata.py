"""Terrain grids and the geographic <-> scene coordinate bridge.

The DEM is an ESRI ASCII grid: row 0 is the northernmost row and the cell
at (row, col) has its center at

    x = xllcorner + (col + 0.5) * cellsize
    y = yllcorner + (nrows - row - 1 + 0.5) * cellsize

Scene space is a local tangent plane in meters (x east, y north), tied to
one geographic point by a GeoAnchor.  All geodesic math uses a spherical
Earth with the IUGG mean radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    AnchorTooFar,
    MissingHeaderKey,
    NoDataNeighborhood,
    NonNumericToken,
    OutOfExtent,
    ValueCountMismatch,
)

EARTH_RADIUS_M = 6371008.8  # IUGG mean radius
DEFAULT_NODATA = -9999.0

_REQUIRED_HEADER = ("ncols", "nrows", "xllcorner", "yllcorner", "cellsize")


class LocalCoord(NamedTuple):
    """Scene-space position in meters: x grows east, y grows north."""

    x: float
    y: float


@dataclass(frozen=True)
class GeoCoord:
    """Geographic position in degrees, WGS-ish lat/lon on a sphere."""

    lat: float
    lon: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lat) and math.isfinite(self.lon)):
            raise ValueError(f"non-finite coordinate ({self.lat}, {self.lon})")
        if not -90.0 <= self.lat <= 90.0:
            raise ValueError(f"latitude {self.lat} outside [-90, 90]")
        if not -180.0 < self.lon <= 180.0:
            raise ValueError(f"longitude {self.lon} outside (-180, 180]")


@dataclass(frozen=True)
class GeoAnchor:
    """Ties one geographic point to a scene-space point; +y is true north."""

    origin_geo: GeoCoord
    origin_local: LocalCoord = LocalCoord(0.0, 0.0)


@dataclass(frozen=True)
class Dem:
    """Regular elevation grid with a NoData sentinel.

    values is (nrows, ncols) float64, row 0 northernmost.  Entries are
    either finite elevations in meters or exactly nodata_value.
    """

    ncols: int
    nrows: int
    xll: float
    yll: float
    cellsize: float
    nodata_value: float
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.ncols < 2 or self.nrows < 2:
            raise ValueError(f"grid must be at least 2x2, got {self.nrows}x{self.ncols}")
        if not (math.isfinite(self.cellsize) and self.cellsize > 0):
            raise ValueError(f"cellsize must be positive, got {self.cellsize}")
        vals = np.asarray(self.values, dtype=np.float64)
        if vals.shape != (self.nrows, self.ncols):
            raise ValueError(
                f"values shape {vals.shape} does not match nrows={self.nrows} ncols={self.ncols}"
            )
        bad = ~np.isfinite(vals) & ~(vals == self.nodata_value)
        if bad.any():
            raise ValueError("grid contains non-finite entries that are not the NoData sentinel")
        vals = vals.copy()
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    @property
    def extent(self) -> tuple[float, float, float, float]:
        """(xmin, ymin, xmax, ymax) of the grid footprint in scene meters."""
        return (
            self.xll,
            self.yll,
            self.xll + self.ncols * self.cellsize,
            self.yll + self.nrows * self.cellsize,
        )

    def nodata_mask(self) -> np.ndarray:
        return self.values == self.nodata_value

    def cell_center(self, row: int, col: int) -> LocalCoord:
        if not (0 <= row < self.nrows and 0 <= col < self.ncols):
            raise OutOfExtent(f"cell ({row}, {col}) outside {self.nrows}x{self.ncols} grid")
        return LocalCoord(
            self.xll + (col + 0.5) * self.cellsize,
            self.yll + (self.nrows - row - 0.5) * self.cellsize,
        )

    def cell_at(self, p: LocalCoord) -> tuple[int, int]:
        """Row/col of the cell containing p; points on the shared edge of two
        cells land in the more south-easterly one, and the outer boundary of
        the footprint still counts as inside."""
        xmin, ymin, xmax, ymax = self.extent
        if not (xmin <= p.x <= xmax and ymin <= p.y <= ymax):
            raise OutOfExtent(f"point ({p.x}, {p.y}) outside extent {self.extent}")
        col = min(int((p.x - xmin) / self.cellsize), self.ncols - 1)
        row = min(int((ymax - p.y) / self.cellsize), self.nrows - 1)
        return row, col


def parse_ascii_grid(text: str) -> Dem:
    """Parse an ESRI ASCII grid.

    Header keys are case-insensitive; nodata_value is optional and defaults
    to -9999.  Raises MissingHeaderKey, ValueCountMismatch or
    NonNumericToken, each naming the offending line or token.
    """
    lines = text.splitlines()
    header: dict[str, float] = {}
    i = 0
    while i < len(lines):
        tokens = lines[i].split()
        if not tokens:
            i += 1
            continue
        if not tokens[0][0].isalpha():
            break  # first data line
        if len(tokens) != 2:
            raise NonNumericToken(f"line {i + 1}: malformed header line {lines[i]!r}")
        try:
            value = float(tokens[1])
        except ValueError:
            raise NonNumericToken(
                f"line {i + 1}: header value {tokens[1]!r} is not a number"
            ) from None
        if not math.isfinite(value):
            raise NonNumericToken(f"line {i + 1}: header value {tokens[1]!r} is not finite")
        header[tokens[0].lower()] = value
        i += 1

    for key in _REQUIRED_HEADER:
        if key not in header:
            raise MissingHeaderKey(f"required header key {key!r} is missing")
    for key in ("ncols", "nrows"):
        if header[key] != int(header[key]):
            raise NonNumericToken(f"header {key} must be an integer, got {header[key]}")

    ncols = int(header["ncols"])
    nrows = int(header["nrows"])
    nodata = header.get("nodata_value", DEFAULT_NODATA)
    expected = nrows * ncols
    values = np.empty(expected, dtype=np.float64)
    n = 0
    for lineno in range(i, len(lines)):
        for token in lines[lineno].split():
            try:
                v = float(token)
            except ValueError:
                raise NonNumericToken(
                    f"line {lineno + 1}: value {token!r} is not a number"
                ) from None
            if not math.isfinite(v):
                raise NonNumericToken(f"line {lineno + 1}: value {token!r} is not finite")
            if n >= expected:
                raise ValueCountMismatch(
                    f"line {lineno + 1}: more than {expected} values "
                    f"({nrows} rows x {ncols} cols), extra token {token!r}"
                )
            values[n] = v
            n += 1
    if n != expected:
        raise ValueCountMismatch(
            f"expected {expected} values ({nrows} rows x {ncols} cols), found {n}"
        )
    return Dem(
        ncols=ncols,
        nrows=nrows,
        xll=header["xllcorner"],
        yll=header["yllcorner"],
        cellsize=header["cellsize"],
        nodata_value=nodata,
        values=values.reshape(nrows, ncols),
    )


def _fmt_number(v: float) -> str:
    # integers stay integers; everything else uses repr, which round-trips
    if float(v).is_integer() and abs(v) < 1e15:
        return str(int(v))
    return repr(float(v))


def write_ascii_grid(dem: Dem) -> str:
    """Serialize back to ASCII-grid text.  parse(write(d)) reproduces every
    header field bit-exactly and every cell value exactly."""
    out = [
        f"ncols {dem.ncols}",
        f"nrows {dem.nrows}",
        f"xllcorner {_fmt_number(dem.xll)}",
        f"yllcorner {_fmt_number(dem.yll)}",
        f"cellsize {_fmt_number(dem.cellsize)}",
        f"nodata_value {_fmt_number(dem.nodata_value)}",
    ]
    for row in dem.values:
        out.append(" ".join(_fmt_number(v) for v in row))
    return "\n".join(out) + "\n"


def sample_elevation(dem: Dem, p: LocalCoord) -> float:
    """Bilinear elevation at p from the four surrounding cell centers.

    Exact at cell centers.  Points between the outermost cell centers and
    the footprint edge clamp to the edge cells.  Raises OutOfExtent outside
    the footprint and NoDataNeighborhood if any contributing cell is NoData
    -- a NoData cell never silently reads as zero.
    """
    xmin, ymin, xmax, ymax = dem.extent
    if not (xmin <= p.x <= xmax and ymin <= p.y <= ymax):
        raise OutOfExtent(f"point ({p.x}, {p.y}) outside extent {dem.extent}")
    gx = (p.x - dem.xll) / dem.cellsize - 0.5
    gy = (ymax - p.y) / dem.cellsize - 0.5
    # snap to the lattice so cell centers hit stored values exactly
    if abs(gx - round(gx)) < 1e-9:
        gx = float(round(gx))
    if abs(gy - round(gy)) < 1e-9:
        gy = float(round(gy))
    gx = min(max(gx, 0.0), dem.ncols - 1.0)
    gy = min(max(gy, 0.0), dem.nrows - 1.0)
    c0 = min(int(gx), dem.ncols - 2)
    r0 = min(int(gy), dem.nrows - 2)
    tx = gx - c0
    ty = gy - r0
    quad = dem.values[r0 : r0 + 2, c0 : c0 + 2]
    weights = (
        (1.0 - tx) * (1.0 - ty),
        tx * (1.0 - ty),
        (1.0 - tx) * ty,
        tx * ty,
    )
    cells = (quad[0, 0], quad[0, 1], quad[1, 0], quad[1, 1])
    # only cells that actually contribute can poison the sample: a point
    # exactly on a cell center must read that cell even beside NoData
    if any(w > 0.0 and v == dem.nodata_value for w, v in zip(weights, cells)):
        raise NoDataNeighborhood(
            f"sample at ({p.x}, {p.y}) touches NoData cells near row {r0}, col {c0}"
        )
    top = quad[0, 0] * (1.0 - tx) + quad[0, 1] * tx
    bottom = quad[1, 0] * (1.0 - tx) + quad[1, 1] * tx
    return float(top * (1.0 - ty) + bottom * ty)


def geo_to_local(anchor: GeoAnchor, g: GeoCoord) -> LocalCoord:
    """Project a geographic point onto the anchor's tangent plane.

    Equirectangular about the anchor latitude: meters east scale by
    cos(lat0).  Only valid near the anchor; beyond 1 degree of latitude
    separation the flat-plane error is no longer acceptable and
    AnchorTooFar is raised.
    """
    lat0 = anchor.origin_geo.lat
    if abs(g.lat - lat0) >= 1.0:
        raise AnchorTooFar(
            f"latitude {g.lat} is {abs(g.lat - lat0):.4f} deg from anchor latitude {lat0}"
        )
    rad = math.pi / 180.0
    x = EARTH_RADIUS_M * (g.lon - anchor.origin_geo.lon) * rad * math.cos(lat0 * rad)
    y = EARTH_RADIUS_M * (g.lat - lat0) * rad
    return LocalCoord(x + anchor.origin_local.x, y + anchor.origin_local.y)


def local_to_geo(anchor: GeoAnchor, p: LocalCoord) -> GeoCoord:
    """Inverse of geo_to_local (mutual inverses to float precision)."""
    if not (math.isfinite(p.x) and math.isfinite(p.y)):
        raise ValueError(f"non-finite local coordinate {p}")
    rad = math.pi / 180.0
    lat0 = anchor.origin_geo.lat
    lat = lat0 + (p.y - anchor.origin_local.y) / (EARTH_RADIUS_M * rad)
    lon = anchor.origin_geo.lon + (p.x - anchor.origin_local.x) / (
        EARTH_RADIUS_M * rad * math.cos(lat0 * rad)
    )
    return GeoCoord(lat, lon)


def bearing_distance(a: GeoCoord, b: GeoCoord) -> tuple[float, float]:
    """Initial great-circle bearing and haversine distance from a to b.

    Bearing is degrees clockwise from north in [0, 360); distance is meters
    along the sphere.  Identical points give (0.0, 0.0) by convention.
    """
    if a == b:
        return 0.0, 0.0
    phi1 = math.radians(a.lat)
    phi2 = math.radians(b.lat)
    dphi = math.radians(b.lat - a.lat)
    dlmb = math.radians(b.lon - a.lon)
    h = math.sin(dphi / 2.0) ** 2 + math.cos(phi1) * math.cos(phi2) * math.sin(dlmb / 2.0) ** 2
    distance = 2.0 * EARTH_RADIUS_M * math.atan2(math.sqrt(h), math.sqrt(max(0.0, 1.0 - h)))
    bearing = math.degrees(
        math.atan2(
            math.sin(dlmb) * math.cos(phi2),
            math.cos(phi1) * math.sin(phi2) - math.sin(phi1) * math.cos(phi2) * math.cos(dlmb),
        )
    )
    bearing %= 360.0
    if bearing >= 360.0:  # -1e-17 % 360 rounds to 360.0
        bearing = 0.0
    return bearing, distance
