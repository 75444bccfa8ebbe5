/**
 * Snapshot-based undo/redo over the document's exact canonical text.
 * Undo restores the previous snapshot and parks the current one on the
 * redo stack; any new mutation clears the redo stack.
 */
export class UndoManager {
  private undoStack: string[] = [];
  private redoStack: string[] = [];

  constructor(private readonly maxSize = 100) {}

  pushSnapshot(current: string): void {
    this.undoStack.push(current);
    if (this.undoStack.length > this.maxSize) {
      this.undoStack.shift();
    }
    this.redoStack.length = 0;
  }

  undo(current: string): string | null {
    const snapshot = this.undoStack.pop();
    if (snapshot === undefined) return null;
    this.redoStack.push(current);
    return snapshot;
  }

  redo(current: string): string | null {
    const snapshot = this.redoStack.pop();
    if (snapshot === undefined) return null;
    this.undoStack.push(current);
    return snapshot;
  }

  get canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  get canRedo(): boolean {
    return this.redoStack.length > 0;
  }
}
