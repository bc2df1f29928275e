/**
 * Thin typed client for the flood service HTTP API. Everything the
 * viewer knows about the backend comes through these calls.
 */

import { decodeRle, decodePgm, MaskGrid, RlePayload } from "./decode.js";

export interface Meta {
  dem: {
    nrows: number;
    ncols: number;
    cellsize: number;
    xllcorner: number;
    yllcorner: number;
    nodata_value: number;
  };
  extent: { xmin: number; ymin: number; xmax: number; ymax: number };
  anchor: {
    origin_lat: number;
    origin_lon: number;
    origin_x: number;
    origin_y: number;
  };
  timeline: { start_year: number; end_year: number; step_count: number };
  scene: { vertical_exaggeration: number; connectivity: number };
  poi_count: number;
}

export interface Poi {
  id: string;
  name: string;
  lat: number;
  lon: number;
  local: { x: number; y: number };
  blurb: string;
  media_refs: string[];
}

/** `/api/poi/{id}?year=` — the Poi fields plus that year's flood facts. */
export interface PoiStatus extends Poi {
  year: number;
  water_level: number;
  ground_elevation: number;
  flooded: boolean;
  depth: number;
}

export interface YearStats {
  year: number;
  level: number;
  flooded_cells: number;
  flooded_area_m2: number;
  flooded_fraction: number;
}

export type CurvePoint = { year: number; level: number };

async function getJson<T>(url: string): Promise<T> {
  const res = await fetch(url);
  if (!res.ok) {
    throw new Error(`${url}: HTTP ${res.status}`);
  }
  return (await res.json()) as T;
}

export function fetchMeta(): Promise<Meta> {
  return getJson<Meta>("/api/meta");
}

export function fetchPois(): Promise<Poi[]> {
  return getJson<Poi[]>("/api/pois");
}

export function fetchPoiStatus(id: string, year: number): Promise<PoiStatus> {
  return getJson<PoiStatus>(`/api/poi/${encodeURIComponent(id)}?year=${year}`);
}

export function fetchStats(year: number): Promise<YearStats> {
  return getJson<YearStats>(`/api/stats?year=${year}`);
}

export async function fetchFloodRle(year: number): Promise<MaskGrid> {
  const payload = await getJson<RlePayload>(`/api/flood?year=${year}`);
  return decodeRle(payload);
}

export async function fetchFloodPgm(year: number): Promise<MaskGrid> {
  const res = await fetch(`/api/flood.pgm?year=${year}`);
  if (!res.ok) throw new Error(`/api/flood.pgm: HTTP ${res.status}`);
  return decodePgm(new Uint8Array(await res.arrayBuffer()));
}

/**
 * The curve endpoint serves the anchor CSV verbatim (comment lines with
 * `#`, then `year,level` rows).
 */
export function parseCurveCsv(text: string): CurvePoint[] {
  const points: CurvePoint[] = [];
  for (const raw of text.split("\n")) {
    const line = raw.trim();
    if (line === "" || line.startsWith("#")) continue;
    const [y, lv] = line.split(",");
    const year = Number(y);
    const level = Number(lv);
    if (!Number.isFinite(year) || !Number.isFinite(level)) {
      throw new Error(`bad curve row: ${raw}`);
    }
    points.push({ year, level });
  }
  return points;
}

export async function fetchCurve(): Promise<CurvePoint[]> {
  const res = await fetch("/api/curve");
  if (!res.ok) throw new Error(`/api/curve: HTTP ${res.status}`);
  return parseCurveCsv(await res.text());
}

export async function fetchTerrainObj(): Promise<string> {
  const res = await fetch("/api/mesh/terrain.obj");
  if (!res.ok) throw new Error(`/api/mesh/terrain.obj: HTTP ${res.status}`);
  return res.text();
}
