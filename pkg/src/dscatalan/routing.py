"""The triangular Dehn-Sommerville digraph and vertex-disjoint routings.

Grid geometry (all edges point east or north; s = ceil((d+1)/2) sources):

* nodes are the lattice points (x, y) with 0 <= x <= s-1 and
  (s-1) - x <= y <= (d+1-s) + x, a triangle whose east column x = s-1
  carries the full range y = 0..d;
* sink j (1 <= j <= d+1) is the east-column node (s-1, j-1);
* source k (1 <= k <= s) is the southwest-border node (s-k, k-1), so
  source 1 coincides with sink 1's node.

This reproduces the even/odd shapes of the defining figure: column x of the
even-dimension graph holds 2x+1 nodes and of the odd-dimension graph 2x+2
nodes.  A routing is a family of pairwise vertex-disjoint directed paths,
one per source, ending at distinct chosen sinks.  Existence is decided by
unit-vertex-capacity maximum flow (node splitting), which also produces an
explicit witness.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import BadCardinalityError
from .linalg import ExactMatrix

Node = tuple[int, int]


@dataclass(frozen=True)
class DSGraph:
    d: int
    sources: tuple[Node, ...]
    sinks: tuple[Node, ...]
    nodes: frozenset[Node]

    @property
    def num_sources(self) -> int:
        return len(self.sources)

    def out_neighbors(self, v: Node) -> tuple[Node, ...]:
        east = (v[0] + 1, v[1])
        north = (v[0], v[1] + 1)
        return tuple(w for w in (east, north) if w in self.nodes)

    def in_neighbors(self, v: Node) -> tuple[Node, ...]:
        west = (v[0] - 1, v[1])
        south = (v[0], v[1] - 1)
        return tuple(w for w in (west, south) if w in self.nodes)

    def edges(self) -> list[tuple[Node, Node]]:
        return [(v, w) for v in sorted(self.nodes) for w in self.out_neighbors(v)]


@dataclass(frozen=True)
class Routing:
    """Vertex-disjoint paths; paths[k] runs from source k+1 to sink sink_labels[k]."""

    sink_labels: tuple[int, ...]
    paths: tuple[tuple[Node, ...], ...]


def build_ds_graph(d: int) -> DSGraph:
    """Construct the dimension-d source/sink digraph described above."""
    if d < 1:
        raise ValueError("the graph is defined for d >= 1")
    s = (d + 2) // 2
    nodes = frozenset(
        (x, y)
        for x in range(s)
        for y in range((s - 1) - x, (d + 1 - s) + x + 1)
    )
    sources = tuple((s - k, k - 1) for k in range(1, s + 1))
    sinks = tuple((s - 1, j - 1) for j in range(1, d + 2))
    return DSGraph(d, sources, sinks, nodes)


def _validated_sinks(g: DSGraph, sinks: Sequence[int]) -> tuple[int, ...]:
    labels = tuple(sinks)
    if len(labels) != g.num_sources:
        raise BadCardinalityError(
            f"need exactly {g.num_sources} sinks, got {len(labels)}"
        )
    if len(set(labels)) != len(labels) or any(
        not 1 <= j <= g.d + 1 for j in labels
    ):
        raise ValueError("sinks must be distinct labels in [d+1]")
    return tuple(sorted(labels))


def _max_flow(g: DSGraph, labels: tuple[int, ...]) -> tuple[int, dict]:
    """Unit-vertex-capacity max flow from the sources to the chosen sinks.

    Every grid node v splits into v_in -> v_out with capacity 1, so flow
    paths are vertex-disjoint.  Returns (value, flow) where flow maps edge
    pairs to 0/1.
    """
    order = sorted(g.nodes)
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    node_in = lambda v: 2 * idx[v]
    node_out = lambda v: 2 * idx[v] + 1
    source, target = 2 * n, 2 * n + 1

    cap: dict[int, dict[int, int]] = {u: {} for u in range(2 * n + 2)}

    def add_edge(u, v):
        cap[u][v] = cap[u].get(v, 0) + 1
        cap[v].setdefault(u, 0)

    for v in order:
        add_edge(node_in(v), node_out(v))
        for w in g.out_neighbors(v):
            add_edge(node_out(v), node_in(w))
    for src in g.sources:
        add_edge(source, node_in(src))
    for j in labels:
        add_edge(node_out(g.sinks[j - 1]), target)

    initial = {u: dict(vs) for u, vs in cap.items()}
    value = 0
    while True:
        # BFS for an augmenting path in the residual graph.
        parent = {source: None}
        queue = deque([source])
        while queue and target not in parent:
            u = queue.popleft()
            for v, c in cap[u].items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if target not in parent:
            break
        v = target
        while parent[v] is not None:
            u = parent[v]
            cap[u][v] -= 1
            cap[v][u] += 1
            v = u
        value += 1

    flow = {
        (u, v): initial[u][v] - cap[u][v]
        for u in initial
        for v in initial[u]
        if initial[u][v] - cap[u][v] > 0
    }
    # Decode grid-level flow: for each node with outgoing flow, its successor.
    successor: dict[Node, Node | str] = {}
    for v in order:
        if flow.get((node_in(v), node_out(v)), 0) != 1:
            continue
        if flow.get((node_out(v), target), 0) == 1:
            successor[v] = "END"
            continue
        nxt = [w for w in g.out_neighbors(v) if flow.get((node_out(v), node_in(w)), 0) == 1]
        if len(nxt) != 1:
            raise RuntimeError("flow decomposition failed")
        successor[v] = nxt[0]
    return value, successor


def _check_routing(g: DSGraph, labels: tuple[int, ...], paths) -> None:
    if len(paths) != g.num_sources:
        raise RuntimeError("routing must contain one path per source")
    seen: set[Node] = set()
    for k, path in enumerate(paths):
        if path[0] != g.sources[k]:
            raise RuntimeError(f"path {k + 1} does not start at source {k + 1}")
        if path[-1] != g.sinks[labels[k] - 1]:
            raise RuntimeError(f"path {k + 1} does not end at sink {labels[k]}")
        for a, b in zip(path, path[1:]):
            if b not in g.out_neighbors(a):
                raise RuntimeError("path uses a non-edge")
        overlap = seen.intersection(path)
        if overlap:
            raise RuntimeError(f"paths share the vertices {sorted(overlap)}")
        seen.update(path)


def find_routing(g: DSGraph, sinks: Sequence[int]) -> Routing | None:
    """A vertex-disjoint routing onto exactly the given sinks, or None.

    Disjoint monotone paths in this planar grid cannot cross, so source k
    always reaches the k-th smallest chosen sink; the witness is verified
    before being returned.
    """
    labels = _validated_sinks(g, sinks)
    value, successor = _max_flow(g, labels)
    if value < g.num_sources:
        return None
    paths = []
    for src in g.sources:
        path = [src]
        while successor[path[-1]] != "END":
            path.append(successor[path[-1]])
        paths.append(tuple(path))
    routing = Routing(labels, tuple(paths))
    _check_routing(g, labels, routing.paths)
    return routing


def routing_exists(g: DSGraph, sinks: Sequence[int]) -> bool:
    """True iff all sources can be routed disjointly onto exactly these sinks."""
    return find_routing(g, sinks) is not None


def routing_flow_value(g: DSGraph, sinks: Sequence[int]) -> int:
    """Maximum number of vertex-disjoint source-to-chosen-sink paths."""
    labels = _validated_sinks(g, sinks)
    value, _ = _max_flow(g, labels)
    return value


def ds_basis_predicate(b: Sequence[int], d: int) -> bool:
    """Closed-form basis test for the column matroid of dimension d.

    Even d = 2n: the sorted labels must satisfy b_1 = 1 and b_i <= 2i - 1.
    Odd d: prepend 1 and shift everything up by one, then apply the even
    test in dimension d + 1.
    """
    if d < 0:
        raise ValueError("dimension must be non-negative")
    labels = tuple(sorted(b))
    s = (d + 2) // 2
    if len(labels) != s or len(set(labels)) != s:
        raise BadCardinalityError(f"expected {s} distinct labels")
    if any(not 1 <= x <= d + 1 for x in labels):
        raise ValueError("labels must lie in [d+1]")
    if d % 2 == 0:
        # b_1 <= 1 already forces b_1 = 1.
        return all(x <= 2 * i + 1 for i, x in enumerate(labels))
    return ds_basis_predicate((1,) + tuple(x + 1 for x in labels), d + 1)


def unit_path_matrix(g: DSGraph) -> ExactMatrix:
    """Entry (i, j) counts the directed paths from source i+1 to sink j+1.

    Computed by dynamic programming over the grid in topological order
    (sorting by (x, y) works because edges only increase a coordinate); all
    edge weights are 1.
    """
    order = sorted(g.nodes)
    entries = []
    for src in g.sources:
        count = {v: 0 for v in order}
        count[src] = 1
        for v in order:
            if count[v]:
                for w in g.out_neighbors(v):
                    count[w] += count[v]
        entries.extend(count[snk] for snk in g.sinks)
    return ExactMatrix(g.num_sources, g.d + 1, tuple(entries))


def render_routing(g: DSGraph, routing: Routing) -> str:
    """Deterministic plain-text drawing of a routing on the grid.

    North is up and the sink column is rightmost.  Nodes on path k are drawn
    as the digit k, other grid nodes as ``o``; edges used by a path are
    doubled (``===`` and ``#``).  Each east-column row is annotated with its
    sink label, starred when the sink is a routing destination.
    """
    s = g.num_sources
    y_max = g.d
    on_path: dict[Node, int] = {}
    used_edges = set()
    for k, path in enumerate(routing.paths, start=1):
        for v in path:
            on_path[v] = k
        used_edges.update(zip(path, path[1:]))

    lines = []
    for y in range(y_max, -1, -1):
        row = []
        for x in range(s):
            v = (x, y)
            if v not in g.nodes:
                row.append(" ")
            elif v in on_path:
                row.append(str(on_path[v]))
            else:
                row.append("o")
            if x < s - 1:
                e = ((x, y), (x + 1, y))
                if e[0] in g.nodes and e[1] in g.nodes:
                    row.append("===" if e in used_edges else "---")
                else:
                    row.append("   ")
        sink_label = y + 1
        marker = "*" if sink_label in routing.sink_labels else " "
        lines.append("".join(row) + f"  {sink_label}{marker}")
        if y > 0:
            gap = []
            for x in range(s):
                e = ((x, y - 1), (x, y))
                if e[0] in g.nodes and e[1] in g.nodes:
                    gap.append("#" if e in used_edges else "|")
                else:
                    gap.append(" ")
                if x < s - 1:
                    gap.append("   ")
            lines.append("".join(gap))
    return "\n".join(lines)
