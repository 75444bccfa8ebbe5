import { ServiceClient } from './api.js';
import { Session } from './session.js';
import { snapToCircle, type SnapHit } from './snap.js';
import { drawScene, fitViewport, toWorld } from './canvas.js';
import { graphSvg } from './graphview.js';

const DEFAULT_DOC =
  '{"circles":[{"cx":0,"cy":0,"id":"c0","r":1,"region_side":"inside"}],"seed":[0,0],"tolerance":1.0000000000000001e-09}';

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

export function boot(): void {
  const params = new URLSearchParams(window.location.search);
  const base = params.get('service') ?? 'http://127.0.0.1:8765';
  const session = new Session(new ServiceClient(base));

  const canvas = el<HTMLCanvasElement>('scene');
  const ctx = canvas.getContext('2d');
  if (!ctx) throw new Error('canvas 2d context unavailable');
  const badge = el<HTMLSpanElement>('badge');
  const bannerBox = el<HTMLDivElement>('banner');
  const diffBox = el<HTMLDivElement>('graphs');
  const axisButton = el<HTMLButtonElement>('axis');
  const undoButton = el<HTMLButtonElement>('undo');
  const redoButton = el<HTMLButtonElement>('redo');

  let hover: SnapHit | null = null;

  function redraw(): void {
    const doc = session.document;
    if (!doc) return;
    const view = fitViewport(doc, canvas.width, canvas.height);
    drawScene(ctx!, doc, view, hover, session.preview);
    badge.textContent = session.badge() ?? '';
    bannerBox.textContent = session.banner ? session.banner.text : '';
    bannerBox.className = session.banner ? `banner ${session.banner.kind}` : 'banner hidden';
    axisButton.textContent = `axis: ${session.axis}`;
    undoButton.disabled = !session.canUndo;
    redoButton.disabled = !session.canRedo;

    const report = session.preview;
    if (report) {
      const ax = report.axes.find((a) => a.axis === session.axis);
      if (ax) {
        const predicted = ax.matched !== null ? ax.candidates[ax.matched] : ax.candidates[0];
        diffBox.innerHTML =
          `<div class="pane"><h4>before</h4>${graphSvg(ax.pre)}</div>` +
          `<div class="pane"><h4>predicted (${predicted?.tag ?? '?'})</h4>` +
          `${predicted ? graphSvg(predicted.graph, 280, 90, '#9467bd') : ''}</div>` +
          `<div class="pane"><h4>recomputed (${ax.verdict})</h4>${graphSvg(
            ax.recomputed,
            280,
            90,
            '#2ca02c'
          )}</div>`;
      }
    } else {
      diffBox.innerHTML = '';
    }
  }

  session.onChange = redraw;

  canvas.addEventListener('mousemove', (ev) => {
    const doc = session.document;
    if (!doc) return;
    const view = fitViewport(doc, canvas.width, canvas.height);
    const rect = canvas.getBoundingClientRect();
    const [wx, wy] = toWorld(view, ev.clientX - rect.left, ev.clientY - rect.top);
    const hit = snapToCircle(doc, wx, wy, view.pxPerUnit, 8);
    const changed =
      (hit === null) !== (hover === null) ||
      (hit !== null && hover !== null && (hit.circle !== hover.circle || hit.angle !== hover.angle));
    hover = hit;
    if (changed) {
      if (hit) {
        void session.requestPreview({ circle: hit.circle, angle: hit.angle, radius: null });
      } else {
        session.clearPreview();
      }
      redraw();
    }
  });

  canvas.addEventListener('click', () => {
    if (hover) {
      void session.commitMove({ circle: hover.circle, angle: hover.angle, radius: null });
    }
  });

  axisButton.addEventListener('click', () => session.toggleAxis());
  undoButton.addEventListener('click', () => session.undo());
  redoButton.addEventListener('click', () => session.redo());

  el<HTMLButtonElement>('export').addEventListener('click', () => {
    const blob = new Blob([session.exportDocument()], { type: 'application/json' });
    const a = document.createElement('a');
    a.href = URL.createObjectURL(blob);
    a.download = 'arrangement.json';
    a.click();
    URL.revokeObjectURL(a.href);
  });

  el<HTMLInputElement>('import').addEventListener('change', async (ev) => {
    const input = ev.target as HTMLInputElement;
    const file = input.files?.[0];
    if (file) {
      await session.importDocument(await file.text());
    }
    input.value = '';
  });

  void session.importDocument(DEFAULT_DOC);
}

if (typeof document !== 'undefined' && document.getElementById('scene')) {
  boot();
}
