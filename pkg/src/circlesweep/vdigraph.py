"""Vertex-labeled oriented graphs: invariants, isomorphism, rewrites.

Vertices carry real labels; every edge is oriented toward the larger
label. Isomorphism preserves adjacency, direction, and the full order
pattern of labels including ties (ties map to ties, strict inequalities
to strict inequalities).
"""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace

from .errors import BadAnchor, LabelOrderViolation
from .geom import Point


@dataclass(frozen=True)
class Provenance:
    kind: str  # "pole" | "corner"
    circles: tuple[str, ...]
    point: Point

    def to_dict(self) -> dict:
        if self.kind == "pole":
            return {"kind": "pole", "circle": self.circles[0], "point": [self.point.x, self.point.y]}
        return {"kind": "corner", "circles": list(self.circles), "point": [self.point.x, self.point.y]}


@dataclass(frozen=True)
class Vertex:
    id: str
    value: float
    provenance: tuple[Provenance, ...] = ()


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str


@dataclass(frozen=True)
class VDigraph:
    axis: str
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    def vertex(self, vid: str) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def has_vertex(self, vid: str) -> bool:
        return any(v.id == vid for v in self.vertices)

    def value(self, vid: str) -> float:
        return self.vertex(vid).value

    def in_edges(self, vid: str) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.dst == vid]

    def out_edges(self, vid: str) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.src == vid]

    def degree(self, vid: str) -> int:
        return len(self.in_edges(vid)) + len(self.out_edges(vid))

    def to_dict(self) -> dict:
        return {
            "axis": self.axis,
            "vertices": [
                {
                    "id": v.id,
                    "value": v.value,
                    "degree": self.degree(v.id),
                    "provenance": [p.to_dict() for p in v.provenance],
                }
                for v in self.vertices
            ],
            "edges": [{"src": e.src, "dst": e.dst} for e in self.edges],
        }

    def to_dot(self) -> str:
        lines = ["digraph g {"]
        for v in self.vertices:
            lines.append(f'  "{v.id}" [label="{v.id}\\n{v.value:g}"];')
        for e in self.edges:
            lines.append(f'  "{e.src}" -> "{e.dst}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def graph_from_dict(data: dict) -> VDigraph:
    vertices = []
    for vd in data["vertices"]:
        prov = []
        for p in vd.get("provenance", ()):
            circles = (p["circle"],) if p["kind"] == "pole" else tuple(p["circles"])
            prov.append(Provenance(p["kind"], circles, Point(*p["point"])))
        vertices.append(Vertex(vd["id"], float(vd["value"]), tuple(prov)))
    edges = tuple(Edge(ed["src"], ed["dst"]) for ed in data["edges"])
    return VDigraph(data.get("axis", "x"), tuple(vertices), edges)


@dataclass(frozen=True)
class InvariantReport:
    passed: bool
    failures: tuple[str, ...] = ()


def check_invariants(g: VDigraph, declared_degrees: dict[str, int] | None = None) -> InvariantReport:
    """No loops, strictly increasing labels along edges, connectivity."""
    failures = []
    ids = [v.id for v in g.vertices]
    if len(set(ids)) != len(ids):
        failures.append("duplicate_vertex_ids")
    known = set(ids)
    values = {v.id: v.value for v in g.vertices}
    for e in g.edges:
        if e.src not in known or e.dst not in known:
            failures.append("dangling_edge")
            continue
        if e.src == e.dst:
            failures.append("no_loops")
        elif not values[e.dst] > values[e.src]:
            failures.append("orientation")
    if not failures and len(g.vertices) > 1:
        adj = defaultdict(set)
        for e in g.edges:
            adj[e.src].add(e.dst)
            adj[e.dst].add(e.src)
        seen = {ids[0]}
        stack = [ids[0]]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if seen != known:
            failures.append("connectivity")
    if declared_degrees is not None and "dangling_edge" not in failures:
        for vid, deg in declared_degrees.items():
            if g.degree(vid) != deg:
                failures.append("degree_mismatch")
                break
    return InvariantReport(not failures, tuple(dict.fromkeys(failures)))


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    witness: dict[str, str] | None = None


def _tie_groups(g: VDigraph) -> list[list[str]]:
    by_value: dict[float, list[str]] = defaultdict(list)
    for v in g.vertices:
        by_value[v.value].append(v.id)
    return [by_value[val] for val in sorted(by_value)]


def _adj_counter(g: VDigraph) -> Counter:
    return Counter((e.src, e.dst) for e in g.edges)


def isomorphic(g1: VDigraph, g2: VDigraph) -> IsoResult:
    """Order-pattern-preserving digraph isomorphism (ties map to ties).

    Backtracking within tie groups; graphs here are desk scale, so
    correctness wins over asymptotics.
    """
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return IsoResult(False)
    groups1, groups2 = _tie_groups(g1), _tie_groups(g2)
    if [len(gr) for gr in groups1] != [len(gr) for gr in groups2]:
        return IsoResult(False)

    def signature(g: VDigraph):
        ins = Counter(e.dst for e in g.edges)
        outs = Counter(e.src for e in g.edges)
        return {v.id: (ins[v.id], outs[v.id]) for v in g.vertices}

    sig1, sig2 = signature(g1), signature(g2)
    for gr1, gr2 in zip(groups1, groups2):
        if sorted(sig1[v] for v in gr1) != sorted(sig2[v] for v in gr2):
            return IsoResult(False)

    adj1, adj2 = _adj_counter(g1), _adj_counter(g2)
    mapping: dict[str, str] = {}

    def consistent_so_far(new_pairs: list[tuple[str, str]]) -> bool:
        # every edge between already-mapped vertices must match multiplicity
        for u1, u2 in new_pairs:
            for w1, w2 in mapping.items():
                if adj1[(u1, w1)] != adj2[(u2, w2)] or adj1[(w1, u1)] != adj2[(w2, u2)]:
                    return False
            if adj1[(u1, u1)] != adj2[(u2, u2)]:
                return False
        # edges inside the batch of new pairs
        for (u1, u2), (w1, w2) in itertools.combinations(new_pairs, 2):
            if adj1[(u1, w1)] != adj2[(u2, w2)] or adj1[(w1, u1)] != adj2[(w2, u2)]:
                return False
        return True

    def backtrack(k: int) -> bool:
        if k == len(groups1):
            return True
        gr1, gr2 = groups1[k], groups2[k]
        for perm in itertools.permutations(gr2):
            if any(sig1[a] != sig2[b] for a, b in zip(gr1, perm)):
                continue
            pairs = list(zip(gr1, perm))
            if not consistent_so_far(pairs):
                continue
            for a, b in pairs:
                mapping[a] = b
            if backtrack(k + 1):
                return True
            for a, _ in pairs:
                del mapping[a]
        return False

    if backtrack(0):
        return IsoResult(True, dict(mapping))
    return IsoResult(False)


def reversed_graph(g: VDigraph) -> VDigraph:
    """Negate labels and flip edges; models an axis-value reversal."""
    vertices = tuple(replace(v, value=-v.value) for v in g.vertices)
    edges = tuple(Edge(e.dst, e.src) for e in g.edges)
    return VDigraph(g.axis, vertices, edges)


# -- rewrites ---------------------------------------------------------------

EdgeKey = tuple[str, str, int]  # (src, dst, index among parallel copies)


@dataclass(frozen=True)
class SubdivideEdge:
    edge: EdgeKey
    values: tuple[float, ...]  # strictly between the endpoint labels, sorted


@dataclass(frozen=True)
class AttachLeaf:
    at: str
    value: float  # direction implied: below if < label(at), above if >


@dataclass(frozen=True)
class RelabelVertex:
    vertex: str
    value: float


@dataclass(frozen=True)
class SplitLeaf:
    """Leaf split: two new leaves beyond a degree-1 vertex, which is relabeled."""

    vertex: str
    leaf_values: tuple[float, float]
    new_value: float


@dataclass(frozen=True)
class SplitAtVertex:
    """Subdivide the two same-side edges of a degree-3 vertex and relabel it."""

    vertex: str
    tie_value: float
    new_value: float


@dataclass(frozen=True)
class ReattachEdge:
    """Move one endpoint of an edge to another vertex."""

    edge: EdgeKey
    old: str
    new: str


@dataclass(frozen=True)
class RemoveVertex:
    """Smooth out a degree-2 pass-through vertex (one in, one out)."""

    vertex: str


Rewrite = (
    SubdivideEdge | AttachLeaf | RelabelVertex | SplitLeaf | SplitAtVertex | ReattachEdge | RemoveVertex
)


class _Builder:
    """Mutable edit buffer over a VDigraph."""

    def __init__(self, g: VDigraph):
        self.axis = g.axis
        self.labels = {v.id: v.value for v in g.vertices}
        self.prov = {v.id: v.provenance for v in g.vertices}
        self.edges: list[list[str]] = [[e.src, e.dst] for e in g.edges]
        self._fresh = 0

    def new_vertex(self, value: float) -> str:
        while True:
            vid = f"n{self._fresh}"
            self._fresh += 1
            if vid not in self.labels:
                break
        self.labels[vid] = value
        self.prov[vid] = ()
        return vid

    def edge_index(self, key: EdgeKey) -> int:
        src, dst, which = key
        hits = [i for i, (s, d) in enumerate(self.edges) if s == src and d == dst]
        if which >= len(hits):
            raise BadAnchor(f"edge {key} not present")
        return hits[which]

    def in_indices(self, vid: str) -> list[int]:
        return [i for i, (_, d) in enumerate(self.edges) if d == vid]

    def out_indices(self, vid: str) -> list[int]:
        return [i for i, (s, _) in enumerate(self.edges) if s == vid]

    def subdivide(self, idx: int, values: tuple[float, ...]) -> list[str]:
        src, dst = self.edges[idx]
        lo, hi = self.labels[src], self.labels[dst]
        vals = sorted(values)
        if not all(lo < v < hi for v in vals):
            raise LabelOrderViolation(f"subdivision labels {vals} outside ({lo}, {hi})")
        chain = [src] + [self.new_vertex(v) for v in vals] + [dst]
        del self.edges[idx]
        for a, b in zip(chain, chain[1:]):
            self.edges.append([a, b])
        return chain[1:-1]

    def attach_leaf(self, at: str, value: float) -> str:
        if at not in self.labels:
            raise BadAnchor(f"vertex {at} not present")
        if value == self.labels[at]:
            raise LabelOrderViolation("leaf label equals anchor label")
        leaf = self.new_vertex(value)
        if value > self.labels[at]:
            self.edges.append([at, leaf])
        else:
            self.edges.append([leaf, at])
        return leaf

    def graph(self) -> VDigraph:
        order = sorted(self.labels, key=lambda vid: (self.labels[vid], vid))
        vertices = tuple(Vertex(vid, self.labels[vid], self.prov.get(vid, ())) for vid in order)
        edges = tuple(Edge(s, d) for s, d in self.edges)
        return VDigraph(self.axis, vertices, edges)


def apply_rewrite(g: VDigraph, r: Rewrite) -> VDigraph:
    """Apply one edit; the result must pass check_invariants."""
    b = _Builder(g)
    if isinstance(r, SubdivideEdge):
        b.subdivide(b.edge_index(r.edge), r.values)
    elif isinstance(r, AttachLeaf):
        b.attach_leaf(r.at, r.value)
    elif isinstance(r, RelabelVertex):
        if r.vertex not in b.labels:
            raise BadAnchor(f"vertex {r.vertex} not present")
        b.labels[r.vertex] = r.value
    elif isinstance(r, SplitLeaf):
        vid = r.vertex
        if vid not in b.labels:
            raise BadAnchor(f"vertex {vid} not present")
        ins, outs = b.in_indices(vid), b.out_indices(vid)
        if len(ins) + len(outs) != 1:
            raise BadAnchor(f"vertex {vid} is not a leaf")
        b.labels[vid] = r.new_value
        for lv in r.leaf_values:
            b.attach_leaf(vid, lv)
    elif isinstance(r, SplitAtVertex):
        vid = r.vertex
        if vid not in b.labels:
            raise BadAnchor(f"vertex {vid} not present")
        ins, outs = b.in_indices(vid), b.out_indices(vid)
        if len(ins) == 2 and len(outs) == 1:
            side = ins
        elif len(outs) == 2 and len(ins) == 1:
            side = outs
        else:
            raise BadAnchor(f"vertex {vid} lacks a two-edge side")
        b.labels[vid] = r.new_value
        for idx in sorted(side, reverse=True):
            b.subdivide(idx, (r.tie_value,))
    elif isinstance(r, ReattachEdge):
        idx = b.edge_index(r.edge)
        src, dst = b.edges[idx]
        if r.new not in b.labels:
            raise BadAnchor(f"vertex {r.new} not present")
        if src == r.old:
            b.edges[idx][0] = r.new
        elif dst == r.old:
            b.edges[idx][1] = r.new
        else:
            raise BadAnchor(f"edge {r.edge} not incident to {r.old}")
    elif isinstance(r, RemoveVertex):
        vid = r.vertex
        ins, outs = b.in_indices(vid), b.out_indices(vid)
        if len(ins) != 1 or len(outs) != 1:
            raise BadAnchor(f"vertex {vid} is not a pass-through")
        src = b.edges[ins[0]][0]
        dst = b.edges[outs[0]][1]
        for idx in sorted((ins[0], outs[0]), reverse=True):
            del b.edges[idx]
        del b.labels[vid]
        b.prov.pop(vid, None)
        b.edges.append([src, dst])
    else:
        raise BadAnchor(f"unknown rewrite {r!r}")
    out = b.graph()
    report = check_invariants(out)
    if not report.passed:
        raise LabelOrderViolation(f"rewrite produced invalid graph: {report.failures}")
    return out


def apply_rewrites(g: VDigraph, rewrites: list[Rewrite]) -> VDigraph:
    for r in rewrites:
        g = apply_rewrite(g, r)
    return g
