import type { GraphDoc } from './types.js';

/**
 * Draw a service-provided level graph as a small inline SVG: vertices at
 * their label positions on a horizontal track, parallel edges bowed apart.
 * Pure presentation of verbatim service data.
 */
export function graphSvg(g: GraphDoc, width = 280, height = 90, color = '#1f77b4'): string {
  if (g.vertices.length === 0) return `<svg width="${width}" height="${height}"></svg>`;
  const values = g.vertices.map((v) => v.value);
  const vmin = Math.min(...values);
  const vmax = Math.max(...values);
  const span = Math.max(vmax - vmin, 1e-9);
  const px = (v: number) => 14 + ((v - vmin) / span) * (width - 28);
  const ymid = height / 2;
  const byId = new Map(g.vertices.map((v) => [v.id, v.value]));

  const parts: string[] = [];
  const laneUse: Array<[number, number, number]> = [];
  g.edges.forEach((e) => {
    const a = byId.get(e.src) ?? 0;
    const b = byId.get(e.dst) ?? 0;
    let lane = 0;
    while (laneUse.some(([ua, ub, ul]) => ul === lane && !(b <= ua || a >= ub))) lane += 1;
    laneUse.push([a, b, lane]);
    const bend = (lane - 0.5) * 26;
    parts.push(
      `<path d="M${px(a).toFixed(1)} ${ymid} Q ${((px(a) + px(b)) / 2).toFixed(1)} ${(
        ymid + bend
      ).toFixed(1)} ${px(b).toFixed(1)} ${ymid}" fill="none" stroke="${color}" stroke-width="1.4"/>`
    );
  });
  for (const v of g.vertices) {
    parts.push(
      `<circle cx="${px(v.value).toFixed(1)}" cy="${ymid}" r="3.2" fill="${color}"/>`,
      `<text x="${px(v.value).toFixed(1)}" y="${ymid - 8}" font-size="9" text-anchor="middle">` +
        `${v.id}:${Number(v.value.toPrecision(5))}</text>`
    );
  }
  return `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}">${parts.join(
    ''
  )}</svg>`;
}
