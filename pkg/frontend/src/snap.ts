import type { ArrangementDoc } from './types.js';

export interface SnapHit {
  circle: string;
  angle: number;
  x: number;
  y: number;
  distancePx: number;
}

/**
 * Snap a pointer position (world coordinates) to the nearest point on any
 * circle, if one lies within snapPx screen pixels. pxPerUnit converts
 * world distance to screen pixels.
 */
export function snapToCircle(
  doc: ArrangementDoc,
  wx: number,
  wy: number,
  pxPerUnit: number,
  snapPx = 8
): SnapHit | null {
  let best: SnapHit | null = null;
  for (const c of doc.circles) {
    const dx = wx - c.cx;
    const dy = wy - c.cy;
    const d = Math.hypot(dx, dy);
    const gapPx = Math.abs(d - c.r) * pxPerUnit;
    if (gapPx > snapPx) continue;
    if (best === null || gapPx < best.distancePx) {
      const angle = Math.atan2(dy, dx);
      best = {
        circle: c.id,
        angle,
        x: c.cx + c.r * Math.cos(angle),
        y: c.cy + c.r * Math.sin(angle),
        distancePx: gapPx
      };
    }
  }
  return best;
}
