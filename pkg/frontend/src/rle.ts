// Run-length decoding for masks as the service sends them:
//   {"size": [height, width], "runs": [[value, length], ...]}
// Runs cover the mask in row-major order and lengths sum to height*width.

export interface RleMask {
  size: [number, number];
  runs: [number, number][];
}

export interface DecodedMask {
  height: number;
  width: number;
  /** Row-major, one byte per pixel, 0 or 1. */
  data: Uint8Array;
}

export function decodeRle(rle: RleMask): DecodedMask {
  const [height, width] = rle.size;
  if (!Number.isInteger(height) || !Number.isInteger(width) || height <= 0 || width <= 0) {
    throw new Error(`bad mask size [${height}, ${width}]`);
  }
  const total = height * width;
  const data = new Uint8Array(total);
  let at = 0;
  for (const [value, length] of rle.runs) {
    if (value !== 0 && value !== 1) {
      throw new Error(`run value must be 0 or 1, got ${value}`);
    }
    if (!Number.isInteger(length) || length <= 0) {
      throw new Error(`run length must be a positive integer, got ${length}`);
    }
    if (at + length > total) {
      throw new Error(`runs overflow the mask: ${at + length} > ${total}`);
    }
    if (value === 1) {
      data.fill(1, at, at + length);
    }
    at += length;
  }
  if (at !== total) {
    throw new Error(`runs cover ${at} of ${total} pixels`);
  }
  return { height, width, data };
}

export function maskArea(mask: DecodedMask): number {
  let n = 0;
  for (let i = 0; i < mask.data.length; i++) n += mask.data[i];
  return n;
}

/** Mean position of the mask's pixels, in pixel coordinates; null when empty. */
export function maskCentroid(mask: DecodedMask): { x: number; y: number } | null {
  let n = 0;
  let sx = 0;
  let sy = 0;
  for (let y = 0; y < mask.height; y++) {
    const row = y * mask.width;
    for (let x = 0; x < mask.width; x++) {
      if (mask.data[row + x]) {
        n += 1;
        sx += x;
        sy += y;
      }
    }
  }
  if (n === 0) return null;
  return { x: sx / n, y: sy / n };
}

export interface Rgba {
  r: number;
  g: number;
  b: number;
  a: number; // 0..255
}

/** Paint the mask into an RGBA buffer: colored where 1, transparent where 0. */
export function maskToImageData(mask: DecodedMask, color: Rgba): ImageData {
  const out = new ImageData(mask.width, mask.height);
  const px = out.data;
  for (let i = 0; i < mask.data.length; i++) {
    if (mask.data[i]) {
      const o = i * 4;
      px[o] = color.r;
      px[o + 1] = color.g;
      px[o + 2] = color.b;
      px[o + 3] = color.a;
    }
  }
  return out;
}
