import { describe, expect, it } from 'vitest';
import { UndoManager } from '../src/undo.js';

describe('UndoManager', () => {
  it('restores snapshots byte for byte', () => {
    const m = new UndoManager();
    m.pushSnapshot('doc-v1');
    const prev = m.undo('doc-v2');
    expect(prev).toBe('doc-v1');
    const next = m.redo('doc-v1');
    expect(next).toBe('doc-v2');
  });

  it('clears redo on a new mutation', () => {
    const m = new UndoManager();
    m.pushSnapshot('a');
    m.undo('b');
    expect(m.canRedo).toBe(true);
    m.pushSnapshot('c');
    expect(m.canRedo).toBe(false);
  });

  it('reports emptiness', () => {
    const m = new UndoManager();
    expect(m.canUndo).toBe(false);
    expect(m.undo('x')).toBeNull();
    expect(m.redo('x')).toBeNull();
  });

  it('caps the stack size', () => {
    const m = new UndoManager(3);
    for (let i = 0; i < 10; i++) m.pushSnapshot(`v${i}`);
    expect(m.undo('cur')).toBe('v9');
    expect(m.undo('v9')).toBe('v8');
    expect(m.undo('v8')).toBe('v7');
    expect(m.undo('v7')).toBeNull();
  });
});
