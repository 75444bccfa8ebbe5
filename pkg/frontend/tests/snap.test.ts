import { describe, expect, it } from 'vitest';
import { snapToCircle } from '../src/snap.js';
import type { ArrangementDoc } from '../src/types.js';

const doc: ArrangementDoc = {
  circles: [
    { id: 'c0', cx: 0, cy: 0, r: 1, region_side: 'inside' },
    { id: 'c1', cx: 3, cy: 0, r: 0.5, region_side: 'outside' }
  ],
  seed: [0, 0],
  tolerance: 1e-9
};

describe('snapToCircle', () => {
  it('snaps a pointer within 8 px to the circle point', () => {
    const hit = snapToCircle(doc, 1.001, 0, 100);
    expect(hit).not.toBeNull();
    expect(hit!.circle).toBe('c0');
    expect(hit!.angle).toBeCloseTo(0, 6);
    expect(hit!.x).toBeCloseTo(1, 9);
    expect(hit!.y).toBeCloseTo(0, 9);
  });

  it('ignores pointers farther than 8 px', () => {
    expect(snapToCircle(doc, 1.2, 0, 100)).toBeNull();
    expect(snapToCircle(doc, 1.2, 0, 10)).not.toBeNull(); // coarser zoom, same point
  });

  it('prefers the nearest circle', () => {
    const hit = snapToCircle(doc, 2.52, 0.0, 100);
    expect(hit!.circle).toBe('c1');
    expect(hit!.angle).toBeCloseTo(Math.PI, 4);
  });

  it('snaps along the radial direction', () => {
    const hit = snapToCircle(doc, 0.02, 1.001, 200);
    expect(hit!.circle).toBe('c0');
    const onCircle = Math.hypot(hit!.x, hit!.y);
    expect(onCircle).toBeCloseTo(1, 9);
  });
});
