/**
 * Canvas drawing: hillshaded terrain basemap, translucent flood
 * overlay, POI markers, compass rose. One DEM cell maps to one backing
 * pixel on the terrain/flood canvases; CSS scales the stack up with
 * pixelated rendering so cells stay crisp.
 */

import type { ElevationGrid } from "./obj.js";
import type { MaskGrid } from "./decode.js";
import type { Meta, Poi } from "./api.js";

export function isNoData(value: number, nodata: number): boolean {
  // exaggeration round-trips can leave dust on the sentinel
  return Math.abs(value - nodata) <= Math.abs(nodata) * 1e-9 + 1e-6;
}

/** Lambertian hillshade, light from the northwest at 45° altitude. */
export function renderTerrain(canvas: HTMLCanvasElement, grid: ElevationGrid, cellsize: number): void {
  const { nrows, ncols, values, nodata } = grid;
  canvas.width = ncols;
  canvas.height = nrows;
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const img = ctx.createImageData(ncols, nrows);
  const data = img.data;

  const azimuth = (315 * Math.PI) / 180;
  const altitude = (45 * Math.PI) / 180;
  const lx = Math.sin(azimuth) * Math.cos(altitude);
  const ly = Math.cos(azimuth) * Math.cos(altitude);
  const lz = Math.sin(altitude);

  const at = (r: number, c: number): number => {
    const rr = Math.min(nrows - 1, Math.max(0, r));
    const cc = Math.min(ncols - 1, Math.max(0, c));
    const v = values[rr * ncols + cc];
    return isNoData(v, nodata) ? 0 : v;
  };

  for (let r = 0; r < nrows; r++) {
    for (let c = 0; c < ncols; c++) {
      const i = (r * ncols + c) * 4;
      const v = values[r * ncols + c];
      if (isNoData(v, nodata)) {
        data[i] = 148;
        data[i + 1] = 148;
        data[i + 2] = 156;
        data[i + 3] = 255;
        continue;
      }
      // central differences; row index grows southward so dz/dy flips sign
      const dzdx = (at(r, c + 1) - at(r, c - 1)) / (2 * cellsize);
      const dzdy = (at(r - 1, c) - at(r + 1, c)) / (2 * cellsize);
      const norm = Math.sqrt(dzdx * dzdx + dzdy * dzdy + 1);
      const shade = Math.max(0, (-dzdx * lx - dzdy * ly + lz) / norm);
      const base = 92 + 130 * shade;
      // faint elevation tint so low ground reads slightly green
      const low = v < 2 ? 12 : 0;
      data[i] = base - low;
      data[i + 1] = base;
      data[i + 2] = base - low * 0.5;
      data[i + 3] = 255;
    }
  }
  ctx.putImageData(img, 0, 0);
}

export function renderMask(canvas: HTMLCanvasElement, mask: MaskGrid | null): void {
  if (mask === null) return;
  canvas.width = mask.ncols;
  canvas.height = mask.nrows;
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const img = ctx.createImageData(mask.ncols, mask.nrows);
  const data = img.data;
  for (let i = 0; i < mask.cells.length; i++) {
    if (mask.cells[i]) {
      const j = i * 4;
      data[j] = 28;
      data[j + 1] = 106;
      data[j + 2] = 208;
      data[j + 3] = 150; // ~0.59 alpha over the hillshade
    }
  }
  ctx.putImageData(img, 0, 0);
}

export const MARKER_SCALE = 6; // marker canvas backing pixels per cell

/** Scene-local meters -> marker-canvas pixels (row 0 = north edge). */
export function localToPixel(
  meta: Meta,
  x: number,
  y: number,
): { px: number; py: number } {
  const cs = meta.dem.cellsize;
  return {
    px: ((x - meta.extent.xmin) / cs) * MARKER_SCALE,
    py: (meta.dem.nrows - (y - meta.extent.ymin) / cs) * MARKER_SCALE,
  };
}

export function renderMarkers(
  canvas: HTMLCanvasElement,
  meta: Meta,
  pois: Poi[],
  selectedId: string | null,
): void {
  canvas.width = meta.dem.ncols * MARKER_SCALE;
  canvas.height = meta.dem.nrows * MARKER_SCALE;
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (const poi of pois) {
    const { px, py } = localToPixel(meta, poi.local.x, poi.local.y);
    const selected = poi.id === selectedId;
    ctx.beginPath();
    ctx.arc(px, py, selected ? 9 : 6, 0, Math.PI * 2);
    ctx.fillStyle = selected ? "#ffb400" : "#ffffff";
    ctx.fill();
    ctx.lineWidth = 2.5;
    ctx.strokeStyle = "#1d2730";
    ctx.stroke();
  }
}

/** North-up rose; the map never rotates, so the needle just points up. */
export function renderCompass(canvas: HTMLCanvasElement): void {
  const s = canvas.width;
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const cx = s / 2;
  const cy = s / 2;
  const r = s * 0.42;
  ctx.clearRect(0, 0, s, s);
  ctx.beginPath();
  ctx.arc(cx, cy, r, 0, Math.PI * 2);
  ctx.fillStyle = "rgba(20, 28, 36, 0.82)";
  ctx.fill();
  ctx.strokeStyle = "#9fb4c8";
  ctx.lineWidth = 1.5;
  ctx.stroke();
  // needle: red half to north
  ctx.beginPath();
  ctx.moveTo(cx, cy - r * 0.72);
  ctx.lineTo(cx - r * 0.2, cy);
  ctx.lineTo(cx + r * 0.2, cy);
  ctx.closePath();
  ctx.fillStyle = "#e2453c";
  ctx.fill();
  ctx.beginPath();
  ctx.moveTo(cx, cy + r * 0.72);
  ctx.lineTo(cx - r * 0.2, cy);
  ctx.lineTo(cx + r * 0.2, cy);
  ctx.closePath();
  ctx.fillStyle = "#d8e2ec";
  ctx.fill();
  ctx.fillStyle = "#f2f6fa";
  ctx.font = `${Math.round(s * 0.18)}px system-ui, sans-serif`;
  ctx.textAlign = "center";
  ctx.textBaseline = "top";
  ctx.fillText("N", cx, 1);
}
