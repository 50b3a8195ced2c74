// Turn segment results into something the canvas can show: one composited
// RGBA layer plus label anchors for the floating score tags.

import type { MaskResult } from "./api";
import { decodeRle, maskCentroid, type Rgba } from "./rle";

export const PALETTE: Rgba[] = [
  { r: 66, g: 133, b: 244, a: 150 },
  { r: 219, g: 68, b: 55, a: 150 },
  { r: 244, g: 180, b: 0, a: 150 },
  { r: 15, g: 157, b: 88, a: 150 },
  { r: 171, g: 71, b: 188, a: 150 },
  { r: 0, g: 172, b: 193, a: 150 },
  { r: 255, g: 112, b: 67, a: 150 },
  { r: 158, g: 157, b: 36, a: 150 },
];

export interface OverlayLabel {
  /** Pixel position of the mask's centroid in image coordinates. */
  x: number;
  y: number;
  text: string;
  color: Rgba;
}

export interface Overlay {
  image: ImageData;
  labels: OverlayLabel[];
}

export function colorFor(index: number): Rgba {
  return PALETTE[index % PALETTE.length];
}

/**
 * Composite the results into a single translucent layer. Results arrive
 * sorted by descending score and are painted first-wins, so where masks
 * overlap the pixel keeps the stronger mask's color.
 */
export function composeOverlay(
  masks: MaskResult[],
  width: number,
  height: number,
): Overlay {
  const image = new ImageData(width, height);
  const px = image.data;
  const labels: OverlayLabel[] = [];

  masks.forEach((result, i) => {
    const mask = decodeRle(result.mask);
    if (mask.width !== width || mask.height !== height) {
      throw new Error(
        `mask is ${mask.width}x${mask.height}, image is ${width}x${height}`,
      );
    }
    const color = colorFor(i);
    for (let p = 0; p < mask.data.length; p++) {
      const o = p * 4;
      if (mask.data[p] && px[o + 3] === 0) {
        px[o] = color.r;
        px[o + 1] = color.g;
        px[o + 2] = color.b;
        px[o + 3] = color.a;
      }
    }
    const at = maskCentroid(mask);
    if (at) {
      const name = result.category ? `${result.category} ` : "";
      labels.push({
        x: at.x,
        y: at.y,
        text: `${name}${result.score.toFixed(2)}`,
        color,
      });
    }
  });

  return { image, labels };
}
