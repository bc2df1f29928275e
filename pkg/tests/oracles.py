"""Independent reference implementations used only by tests.

Nothing here imports the package's algorithms: the flood oracle uses
union-find where the engine uses BFS, the geodesy oracle works in 3-D
Cartesian vectors where the engine uses trig identities, and the format
decoders are written from the byte layout alone.  Agreement between two
routes is the evidence.
"""

from __future__ import annotations

import json
import math

import numpy as np

EARTH_RADIUS_M = 6371008.8


# ---------------------------------------------------------------- geodesy

def _unit_vector(lat_deg: float, lon_deg: float) -> np.ndarray:
    lat = math.radians(lat_deg)
    lon = math.radians(lon_deg)
    return np.array(
        [math.cos(lat) * math.cos(lon), math.cos(lat) * math.sin(lon), math.sin(lat)]
    )


def vector_bearing_distance(
    lat1: float, lon1: float, lat2: float, lon2: float
) -> tuple[float, float]:
    """Great-circle initial bearing (deg cw from north) and distance (m),
    computed entirely with 3-D vector algebra."""
    n1 = _unit_vector(lat1, lon1)
    n2 = _unit_vector(lat2, lon2)
    cross = np.cross(n1, n2)
    angle = math.atan2(float(np.linalg.norm(cross)), float(np.dot(n1, n2)))
    distance = EARTH_RADIUS_M * angle

    # local tangent basis at point 1
    lat = math.radians(lat1)
    lon = math.radians(lon1)
    east = np.array([-math.sin(lon), math.cos(lon), 0.0])
    north = np.array(
        [-math.sin(lat) * math.cos(lon), -math.sin(lat) * math.sin(lon), math.cos(lat)]
    )
    # direction of the great circle toward point 2, projected on the tangent plane
    direction = n2 - n1 * float(np.dot(n1, n2))
    bearing = math.degrees(
        math.atan2(float(np.dot(direction, east)), float(np.dot(direction, north)))
    )
    return bearing % 360.0, distance


# ---------------------------------------------------------------- flooding

def flood_reference(
    values: np.ndarray,
    nodata_value: float,
    level: float,
    seeds: set[tuple[int, int]],
    connectivity: int = 4,
) -> np.ndarray:
    """Wet mask via connected components (union-find), keeping every
    component that contains at least one qualifying seed."""
    values = np.asarray(values, dtype=float)
    nrows, ncols = values.shape
    qualifies = (values != nodata_value) & (values <= level)

    parent = list(range(nrows * ncols))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        parent[find(i)] = find(j)

    if connectivity == 4:
        links = ((0, 1), (1, 0))
    else:
        links = ((0, 1), (1, 0), (1, 1), (1, -1))
    for r in range(nrows):
        for c in range(ncols):
            if not qualifies[r, c]:
                continue
            for dr, dc in links:
                rr, cc = r + dr, c + dc
                if 0 <= rr < nrows and 0 <= cc < ncols and qualifies[rr, cc]:
                    union(r * ncols + c, rr * ncols + cc)

    seed_roots = {
        find(r * ncols + c) for (r, c) in seeds if qualifies[r, c]
    }
    wet = np.zeros((nrows, ncols), dtype=bool)
    for r in range(nrows):
        for c in range(ncols):
            if qualifies[r, c] and find(r * ncols + c) in seed_roots:
                wet[r, c] = True
    return wet


def border_seed_reference(
    values: np.ndarray, nodata_value: float, level: float
) -> set[tuple[int, int]]:
    """Border cells that qualify as water entry points."""
    values = np.asarray(values, dtype=float)
    nrows, ncols = values.shape
    seeds = set()
    for r in range(nrows):
        for c in range(ncols):
            if r in (0, nrows - 1) or c in (0, ncols - 1):
                v = values[r, c]
                if v != nodata_value and v <= level:
                    seeds.add((r, c))
    return seeds


# ---------------------------------------------------------------- formats

def parse_obj_minimal(text: str):
    """Tiny OBJ reader for v/vt/f lines; returns (vertices, uvs, faces)
    with faces as 0-based (vertex, texture) index pair triples."""
    vertices: list[tuple[float, float, float]] = []
    uvs: list[tuple[float, float]] = []
    faces: list[tuple[tuple[int, int], ...]] = []
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0] == "#":
            continue
        if parts[0] == "v":
            vertices.append((float(parts[1]), float(parts[2]), float(parts[3])))
        elif parts[0] == "vt":
            uvs.append((float(parts[1]), float(parts[2])))
        elif parts[0] == "f":
            corners = []
            for corner in parts[1:]:
                fields = corner.split("/")
                corners.append((int(fields[0]) - 1, int(fields[1]) - 1))
            faces.append(tuple(corners))
    return vertices, uvs, faces


def decode_pgm_reference(data: bytes) -> np.ndarray:
    """Binary PGM decode written from the format description: magic,
    whitespace-separated width/height/maxval, single whitespace byte,
    then width*height raster bytes."""
    if data[:2] != b"P5":
        raise ValueError("not binary PGM")
    pos = 2
    fields: list[int] = []
    while len(fields) < 3:
        while data[pos : pos + 1].isspace():
            pos += 1
        start = pos
        while not data[pos : pos + 1].isspace():
            pos += 1
        fields.append(int(data[start:pos]))
    pos += 1  # exactly one whitespace byte before the raster
    width, height, maxval = fields
    if maxval != 255:
        raise ValueError(f"unexpected maxval {maxval}")
    raster = np.frombuffer(data[pos : pos + width * height], dtype=np.uint8)
    if raster.size != width * height:
        raise ValueError("truncated raster")
    return (raster.reshape(height, width) > 0).copy()


def decode_rle_reference(text: str) -> tuple[np.ndarray, float]:
    """Run-length JSON decode: alternating dry/wet runs starting dry."""
    obj = json.loads(text)
    nrows, ncols = obj["nrows"], obj["ncols"]
    out = []
    wet = False
    for run in obj["runs"]:
        out.extend([wet] * run)
        wet = not wet
    if len(out) != nrows * ncols:
        raise ValueError("run lengths do not cover the grid")
    return np.array(out, dtype=bool).reshape(nrows, ncols), float(obj["level"])
