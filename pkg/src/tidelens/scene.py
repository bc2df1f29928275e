"""Scene geometry and interchange encodings.

Terrain and ocean surfaces become triangle meshes in scene space (meters,
z up, optionally exaggerated).  Meshes serialize to a small Wavefront OBJ
subset; flood masks serialize to binary PGM (P5) or a run-length JSON
form.  All three encodings are byte-deterministic: the same inputs always
produce the same bytes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .geodata import Dem, GeoAnchor
from .inundation import Cell, FloodMask


@dataclass(frozen=True)
class SceneConfig:
    """Knobs for scene building: anchoring, exaggeration, flood behavior."""

    anchor: GeoAnchor
    vertical_exaggeration: float = 1.0
    connectivity: int = 4
    seed_overrides: tuple[Cell, ...] | None = None

    def __post_init__(self) -> None:
        ex = self.vertical_exaggeration
        if not (math.isfinite(ex) and ex > 0):
            raise ValueError(f"vertical_exaggeration must be positive, got {ex}")
        if self.connectivity not in (4, 8):
            raise ValueError(f"connectivity must be 4 or 8, got {self.connectivity}")


@dataclass(frozen=True)
class TerrainMesh:
    """Indexed triangle mesh; triangles wind counter-clockwise seen from +z."""

    vertices: np.ndarray  # (n, 3) float64 scene-space positions
    triangles: np.ndarray  # (m, 3) int64 vertex indices
    uv: np.ndarray  # (n, 2) float64 texture coordinates in [0, 1]

    def __post_init__(self) -> None:
        verts = np.asarray(self.vertices, dtype=np.float64).reshape(-1, 3)
        tris = np.asarray(self.triangles, dtype=np.int64).reshape(-1, 3)
        uv = np.asarray(self.uv, dtype=np.float64).reshape(-1, 2)
        if uv.shape[0] != verts.shape[0]:
            raise ValueError(f"{uv.shape[0]} uv pairs for {verts.shape[0]} vertices")
        if tris.size and (tris.min() < 0 or tris.max() >= verts.shape[0]):
            raise ValueError("triangle index out of range")
        for arr in (verts, tris, uv):
            arr.flags.writeable = False
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "triangles", tris)
        object.__setattr__(self, "uv", uv)


def terrain_mesh(dem: Dem, config: SceneConfig) -> TerrainMesh:
    """Height-field mesh with one vertex per cell center.

    Every cell gets a vertex (z = elevation * exaggeration), including
    NoData cells so indexing stays row-major; but any cell whose 2x2
    vertex quad touches NoData produces no triangles, leaving a hole
    rather than inventing ground.  uv spreads [0,1]^2 over the grid with
    v = 1 at the north edge.
    """
    nr, nc = dem.nrows, dem.ncols
    cols = np.arange(nc, dtype=np.float64)
    rows = np.arange(nr, dtype=np.float64)
    xs = dem.xll + (cols + 0.5) * dem.cellsize
    ys = dem.yll + (nr - rows - 0.5) * dem.cellsize
    grid_x, grid_y = np.meshgrid(xs, ys)
    z = dem.values * config.vertical_exaggeration
    vertices = np.column_stack([grid_x.ravel(), grid_y.ravel(), z.ravel()])
    grid_u, grid_v = np.meshgrid(cols / (nc - 1), (nr - 1 - rows) / (nr - 1))
    uv = np.column_stack([grid_u.ravel(), grid_v.ravel()])

    nodata = dem.nodata_mask()
    tris: list[tuple[int, int, int]] = []
    for r in range(nr - 1):
        for c in range(nc - 1):
            if nodata[r, c] or nodata[r, c + 1] or nodata[r + 1, c] or nodata[r + 1, c + 1]:
                continue
            nw = r * nc + c
            ne = nw + 1
            sw = nw + nc
            se = sw + 1
            # CCW from +z: counter-clockwise in the x/y plane
            tris.append((sw, se, nw))
            tris.append((se, ne, nw))
    triangles = np.array(tris, dtype=np.int64).reshape(-1, 3)
    return TerrainMesh(vertices, triangles, uv)


def ocean_surface(dem: Dem, level: float, config: SceneConfig) -> TerrainMesh:
    """Flat water quad over the whole DEM footprint at the given level."""
    xmin, ymin, xmax, ymax = dem.extent
    z = level * config.vertical_exaggeration
    vertices = np.array(
        [[xmin, ymin, z], [xmax, ymin, z], [xmin, ymax, z], [xmax, ymax, z]],
        dtype=np.float64,
    )
    triangles = np.array([[0, 1, 2], [1, 3, 2]], dtype=np.int64)
    uv = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
    return TerrainMesh(vertices, triangles, uv)


def export_obj(mesh: TerrainMesh) -> str:
    """Wavefront OBJ text: v/vt/f lines, fixed 6-decimal floats, 1-based
    f a/a b/b c/c faces, "\\n" line endings.  Byte-stable for equal input."""
    lines = [f"# mesh: {len(mesh.vertices)} vertices, {len(mesh.triangles)} triangles"]
    for x, y, z in mesh.vertices:
        lines.append(f"v {x:.6f} {y:.6f} {z:.6f}")
    for u, v in mesh.uv:
        lines.append(f"vt {u:.6f} {v:.6f}")
    for a, b, c in mesh.triangles + 1:
        lines.append(f"f {a}/{a} {b}/{b} {c}/{c}")
    return "\n".join(lines) + "\n"


def encode_mask_pgm(mask: FloodMask) -> bytes:
    """Binary PGM (P5), maxval 255: wet cells 255, dry cells 0, row-major
    from the north row."""
    header = f"P5\n{mask.ncols} {mask.nrows}\n255\n".encode("ascii")
    body = np.where(mask.cells, 255, 0).astype(np.uint8).tobytes()
    return header + body


def decode_mask_pgm(data: bytes) -> np.ndarray:
    """Inverse of encode_mask_pgm: the boolean wet/dry grid.

    PGM carries no water level, so only the cells come back.
    """
    parts = data.split(b"\n", 3)
    if len(parts) != 4 or parts[0] != b"P5":
        raise ValueError("not a P5 PGM produced by encode_mask_pgm")
    dims = parts[1].split()
    if len(dims) != 2:
        raise ValueError(f"malformed PGM dimension line {parts[1]!r}")
    ncols, nrows = int(dims[0]), int(dims[1])
    if parts[2] != b"255":
        raise ValueError(f"unexpected PGM maxval {parts[2]!r}")
    body = parts[3]
    if len(body) != nrows * ncols:
        raise ValueError(f"PGM body holds {len(body)} bytes, expected {nrows * ncols}")
    return (np.frombuffer(body, dtype=np.uint8).reshape(nrows, ncols) != 0).copy()


def encode_mask_rle(mask: FloodMask) -> str:
    """Run-length JSON: one line, keys nrows/ncols/level/runs.

    Runs alternate dry, wet, dry, ... over the row-major scan and always
    start with a dry run (possibly 0).  Run lengths sum to nrows*ncols.
    """
    flat = mask.cells.ravel()
    changes = np.flatnonzero(flat[1:] != flat[:-1]) + 1
    bounds = [0, *changes.tolist(), flat.size]
    runs = [b - a for a, b in zip(bounds, bounds[1:])]
    if flat.size and bool(flat[0]):
        runs = [0, *runs]
    payload = {
        "nrows": mask.nrows,
        "ncols": mask.ncols,
        "level": mask.level,
        "runs": runs,
    }
    return json.dumps(payload, separators=(",", ":")) + "\n"


def decode_mask_rle(text: str) -> FloodMask:
    """Inverse of encode_mask_rle."""
    obj = json.loads(text)
    nrows, ncols = int(obj["nrows"]), int(obj["ncols"])
    runs = obj["runs"]
    total = nrows * ncols
    if any((not isinstance(r, int)) or r < 0 for r in runs):
        raise ValueError(f"run lengths must be non-negative integers, got {runs!r}")
    if sum(runs) != total:
        raise ValueError(f"runs sum to {sum(runs)}, expected {total}")
    flat = np.zeros(total, dtype=bool)
    pos = 0
    wet = False
    for run in runs:
        if wet:
            flat[pos : pos + run] = True
        pos += run
        wet = not wet
    return FloodMask(nrows, ncols, float(obj["level"]), flat.reshape(nrows, ncols))
