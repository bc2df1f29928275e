/**
 * Minimal OBJ vertex reader. The terrain endpoint emits one vertex per
 * DEM cell in row-major order (north row first), with z carrying the
 * exaggerated elevation — enough to rebuild the elevation grid for the
 * basemap without a second data channel.
 */

export interface ElevationGrid {
  nrows: number;
  ncols: number;
  /** Row-major, true elevations (exaggeration divided back out). */
  values: Float64Array;
  nodata: number;
}

export function elevationGridFromObj(
  objText: string,
  nrows: number,
  ncols: number,
  exaggeration: number,
  nodata: number,
): ElevationGrid {
  const values = new Float64Array(nrows * ncols);
  let count = 0;
  for (const line of objText.split("\n")) {
    if (!line.startsWith("v ")) continue; // vt/f/# lines are irrelevant here
    if (count >= values.length) {
      throw new Error(`more vertices than ${nrows}x${ncols} cells`);
    }
    const parts = line.split(" ");
    values[count++] = Number(parts[3]) / exaggeration;
  }
  if (count !== values.length) {
    throw new Error(`expected ${values.length} vertices, found ${count}`);
  }
  return { nrows, ncols, values, nodata };
}
