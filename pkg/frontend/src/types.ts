/** Wire shapes of the circlesweep service (canonical JSON documents). */

export interface CircleSpec {
  id: string;
  cx: number;
  cy: number;
  r: number;
  region_side: 'inside' | 'outside';
}

export interface ArrangementDoc {
  circles: CircleSpec[];
  seed: [number, number];
  tolerance: number;
}

export interface GraphVertex {
  id: string;
  value: number;
  degree: number;
  provenance: Array<Record<string, unknown>>;
}

export interface GraphDoc {
  axis: string;
  vertices: GraphVertex[];
  edges: Array<{ src: string; dst: string }>;
}

export interface AxisReportDoc {
  axis: string;
  case: string;
  verdict: 'ok' | 'mismatch';
  pre: GraphDoc;
  recomputed: GraphDoc;
  candidates: Array<{ tag: string; graph: GraphDoc }>;
  matched: number | null;
  classification: Record<string, unknown>;
}

export interface MoveReportDoc {
  move: { circle: string; angle: number; point: [number, number] };
  radius: number;
  new_circle: string;
  verdict: 'ok' | 'mismatch';
  axes: AxisReportDoc[];
  arrangement_after: ArrangementDoc;
  render?: string;
}

export interface MoveRequest {
  circle: string;
  angle: number;
  radius: number | null;
}

export interface ValidationDoc {
  valid: boolean;
  violations: Array<{ clause: string; detail: string }>;
}
