import type { ArrangementDoc, MoveReportDoc } from './types.js';
import type { SnapHit } from './snap.js';

export interface Viewport {
  pxPerUnit: number;
  offsetX: number; // world origin in canvas pixels
  offsetY: number;
}

export function fitViewport(doc: ArrangementDoc, width: number, height: number): Viewport {
  const xs = doc.circles.flatMap((c) => [c.cx - c.r, c.cx + c.r]);
  const ys = doc.circles.flatMap((c) => [c.cy - c.r, c.cy + c.r]);
  const xmin = Math.min(...xs);
  const xmax = Math.max(...xs);
  const ymin = Math.min(...ys);
  const ymax = Math.max(...ys);
  const span = Math.max(xmax - xmin, ymax - ymin) * 1.25;
  const pxPerUnit = Math.min(width, height) / span;
  return {
    pxPerUnit,
    offsetX: width / 2 - ((xmin + xmax) / 2) * pxPerUnit,
    offsetY: height / 2 + ((ymin + ymax) / 2) * pxPerUnit
  };
}

export function toWorld(view: Viewport, px: number, py: number): [number, number] {
  return [(px - view.offsetX) / view.pxPerUnit, (view.offsetY - py) / view.pxPerUnit];
}

export function toScreen(view: Viewport, wx: number, wy: number): [number, number] {
  return [view.offsetX + wx * view.pxPerUnit, view.offsetY - wy * view.pxPerUnit];
}

export function drawScene(
  ctx: CanvasRenderingContext2D,
  doc: ArrangementDoc,
  view: Viewport,
  hover: SnapHit | null,
  preview: MoveReportDoc | null
): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = '#ffffff';
  ctx.fillRect(0, 0, width, height);

  for (const c of doc.circles) {
    const [sx, sy] = toScreen(view, c.cx, c.cy);
    ctx.beginPath();
    ctx.arc(sx, sy, c.r * view.pxPerUnit, 0, 2 * Math.PI);
    ctx.strokeStyle = c.region_side === 'inside' ? '#333333' : '#8a5a00';
    ctx.lineWidth = 1.4;
    ctx.stroke();
  }

  const [seedX, seedY] = toScreen(view, doc.seed[0], doc.seed[1]);
  ctx.strokeStyle = '#000000';
  ctx.beginPath();
  ctx.moveTo(seedX - 5, seedY);
  ctx.lineTo(seedX + 5, seedY);
  ctx.moveTo(seedX, seedY - 5);
  ctx.lineTo(seedX, seedY + 5);
  ctx.stroke();

  if (hover) {
    const [hx, hy] = toScreen(view, hover.x, hover.y);
    ctx.fillStyle = '#d62728';
    ctx.beginPath();
    ctx.arc(hx, hy, 4, 0, 2 * Math.PI);
    ctx.fill();
  }

  if (preview) {
    const [px, py] = toScreen(view, preview.move.point[0], preview.move.point[1]);
    ctx.beginPath();
    ctx.setLineDash([4, 3]);
    ctx.arc(px, py, preview.radius * view.pxPerUnit, 0, 2 * Math.PI);
    ctx.strokeStyle = preview.verdict === 'ok' ? '#2ca02c' : '#d62728';
    ctx.lineWidth = 1.6;
    ctx.stroke();
    ctx.setLineDash([]);
  }
}
