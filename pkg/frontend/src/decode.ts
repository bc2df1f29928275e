/**
 * Mask decoding for the two flood-mask wire formats the service offers.
 *
 * Both decode to the same thing: a row-major Uint8Array (1 = wet,
 * 0 = dry) whose row 0 is the northernmost DEM row.
 *
 * - RLE JSON (`/api/flood`): alternating run lengths starting with a dry
 *   run (which may be 0 when the first cell is wet).
 * - Binary PGM (`/api/flood.pgm`): P5, maxval 255, wet = 255, dry = 0.
 */

export interface MaskGrid {
  nrows: number;
  ncols: number;
  /** Water level in meters; PGM carries no level so it is null there. */
  level: number | null;
  cells: Uint8Array;
}

export interface RlePayload {
  nrows: number;
  ncols: number;
  level: number;
  runs: number[];
}

export function decodeRle(payload: RlePayload): MaskGrid {
  const { nrows, ncols, level, runs } = payload;
  const total = nrows * ncols;
  const cells = new Uint8Array(total);
  let idx = 0;
  let wet = 0; // runs always start dry; a leading 0 flips immediately
  for (const run of runs) {
    if (!Number.isInteger(run) || run < 0) {
      throw new Error(`bad run length ${run}`);
    }
    if (wet) cells.fill(1, idx, idx + run);
    idx += run;
    wet = 1 - wet;
  }
  if (idx !== total) {
    throw new Error(`runs cover ${idx} cells, grid has ${total}`);
  }
  return { nrows, ncols, level, cells };
}

/**
 * Parse a binary PGM (P5) mask. The service writes the minimal header
 * form `P5\n<w> <h>\n255\n` but any whitespace/comment layout allowed by
 * the format is accepted here.
 */
export function decodePgm(bytes: Uint8Array): MaskGrid {
  const fields: number[] = [];
  let pos = 2; // past the "P5" magic
  if (bytes[0] !== 0x50 || bytes[1] !== 0x35) {
    throw new Error("not a P5 PGM");
  }
  while (fields.length < 3) {
    // skip whitespace and # comments between header fields
    while (pos < bytes.length) {
      const b = bytes[pos];
      if (b === 0x23) {
        while (pos < bytes.length && bytes[pos] !== 0x0a) pos++;
      } else if (b === 0x20 || b === 0x09 || b === 0x0a || b === 0x0d) {
        pos++;
      } else {
        break;
      }
    }
    let value = 0;
    let digits = 0;
    while (pos < bytes.length && bytes[pos] >= 0x30 && bytes[pos] <= 0x39) {
      value = value * 10 + (bytes[pos] - 0x30);
      digits++;
      pos++;
    }
    if (digits === 0) throw new Error("truncated PGM header");
    fields.push(value);
  }
  pos++; // exactly one whitespace byte separates header from raster
  const [ncols, nrows, maxval] = fields;
  if (maxval !== 255) throw new Error(`unsupported maxval ${maxval}`);
  const total = nrows * ncols;
  if (bytes.length - pos !== total) {
    throw new Error(`raster is ${bytes.length - pos} bytes, expected ${total}`);
  }
  const cells = new Uint8Array(total);
  for (let i = 0; i < total; i++) {
    cells[i] = bytes[pos + i] > 127 ? 1 : 0;
  }
  return { nrows, ncols, level: null, cells };
}

export function countWet(mask: MaskGrid): number {
  let n = 0;
  for (let i = 0; i < mask.cells.length; i++) n += mask.cells[i];
  return n;
}
