"""Core graph representation and the random/typed/pattern constructors.

Graphs are small (tens of nodes), simple (no self-loops, no duplicate
edges) and optionally weighted and labeled. Constructors draw all
randomness from an explicit :class:`~gvbench.rng.Rng` so that a (seed,
parameters) pair always yields a structurally identical graph with a
byte-identical JSON serialization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import ParameterError
from .rng import Rng

GRAPH_CLASSES = ("acyclic", "bipartite", "complete", "cyclic", "mesh", "planar", "tree")
PATTERN_KINDS = ("chain", "clique", "star")


class Edge(NamedTuple):
    u: int
    v: int
    weight: int | None = None


@dataclass
class Graph:
    """Simple graph with optional labels, direction flag and edge weights.

    ``meta`` carries construction certificates that some checks rely on:
    ``mesh_dims`` for grid graphs, ``pos`` (a list of [x, y]) for graphs
    built with a crossing-free straight-line embedding.
    """

    node_count: int
    edges: list[Edge]
    directed: bool = False
    labels: list[str] | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.node_count < 0:
            raise ParameterError(f"node_count must be >= 0, got {self.node_count}")
        if self.labels is not None and len(self.labels) != self.node_count:
            raise ParameterError(
                f"labels length {len(self.labels)} != node_count {self.node_count}"
            )
        self.edges = [Edge(*e) for e in self.edges]
        seen: set[tuple[int, int]] = set()
        for u, v, w in self.edges:
            if u == v:
                raise ParameterError(f"self-loop at node {u}")
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise ParameterError(f"edge ({u}, {v}) endpoint out of range")
            key = (u, v) if self.directed else (min(u, v), max(u, v))
            if key in seen:
                raise ParameterError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            if w is not None and not isinstance(w, int):
                raise ParameterError(f"edge ({u}, {v}) weight {w!r} is not an integer")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_keys(self) -> set[tuple[int, int]]:
        """Edge identity set: ordered pairs when directed, sorted otherwise."""
        if self.directed:
            return {(u, v) for u, v, _ in self.edges}
        return {(min(u, v), max(u, v)) for u, v, _ in self.edges}

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if self.directed else (min(u, v), max(u, v))
        return key in self.edge_keys()

    def neighbors(self) -> list[list[int]]:
        """Adjacency lists; direction is ignored."""
        adj: list[list[int]] = [[] for _ in range(self.node_count)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def out_neighbors(self) -> list[list[tuple[int, int | None]]]:
        """Directed adjacency (both directions for undirected graphs),
        as (target, weight) pairs."""
        adj: list[list[tuple[int, int | None]]] = [[] for _ in range(self.node_count)]
        for u, v, w in self.edges:
            adj[u].append((v, w))
            if not self.directed:
                adj[v].append((u, w))
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.node_count
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def to_json_dict(self) -> dict:
        """Documented serialization shape:
        {node_count, directed, labels, edges: [[u, v] | [u, v, w], ...], meta?}.
        """
        edges = [[u, v] if w is None else [u, v, w] for u, v, w in self.edges]
        out: dict = {
            "node_count": self.node_count,
            "directed": self.directed,
            "labels": self.labels,
            "edges": edges,
        }
        if self.meta:
            out["meta"] = self.meta
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "Graph":
        edges = [Edge(e[0], e[1], e[2] if len(e) > 2 else None) for e in data["edges"]]
        return cls(
            node_count=data["node_count"],
            edges=edges,
            directed=data["directed"],
            labels=data["labels"],
            meta=data.get("meta", {}),
        )

    def with_labels(self) -> "Graph":
        """Copy with node indices as labels (identity labeling)."""
        return Graph(
            node_count=self.node_count,
            edges=list(self.edges),
            directed=self.directed,
            labels=[str(i) for i in range(self.node_count)],
            meta=dict(self.meta),
        )


def random_graph(
    n: int,
    p: float,
    directed: bool = False,
    weights: tuple[int, int] | None = None,
    rng: Rng | None = None,
) -> Graph:
    """G(n, p) graph: each node pair carries an edge independently with
    probability ``p``.

    The pair enumeration order is fixed and documented so the draw
    sequence can be replayed by an external checker: undirected graphs
    visit (u, v) for u < v in row-major order; directed graphs visit all
    ordered pairs (u, v), u != v, in row-major order. One uniform draw
    decides each pair; a weighted edge consumes one extra randint draw
    from [wmin, wmax] immediately after its acceptance draw.
    """
    if rng is None:
        raise ParameterError("random_graph requires an Rng")
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if not (0.0 <= p <= 1.0):
        raise ParameterError(f"p must be in [0, 1], got {p}")
    if weights is not None and weights[1] < weights[0]:
        raise ParameterError(f"empty weight range {weights}")

    edges: list[Edge] = []
    if directed:
        pairs: Iterable[tuple[int, int]] = (
            (u, v) for u in range(n) for v in range(n) if u != v
        )
    else:
        pairs = ((u, v) for u in range(n) for v in range(u + 1, n))
    for u, v in pairs:
        if rng.random() < p:
            w = rng.randint(weights[0], weights[1]) if weights is not None else None
            edges.append(Edge(u, v, w))
    return Graph(node_count=n, edges=edges, directed=directed)


def _tree_edges(n: int, rng: Rng) -> list[Edge]:
    # random recursive tree: node i attaches to a uniformly chosen earlier node
    return [Edge(rng.randbelow(i), i) for i in range(1, n)]


def _acyclic_graph(n: int, rng: Rng) -> Graph:
    # directed: a random topological order with a spine plus forward extras
    order = list(range(n))
    rng.shuffle(order)
    edges = [Edge(order[i], order[i + 1]) for i in range(n - 1)]
    for i in range(n):
        for j in range(i + 2, n):
            if rng.random() < 0.25:
                edges.append(Edge(order[i], order[j]))
    return Graph(node_count=n, edges=edges, directed=True)


def _cyclic_graph(n: int, rng: Rng) -> Graph:
    if n < 3:
        raise ParameterError("cyclic graphs need at least 3 nodes")
    edges = _tree_edges(n, rng)
    present = {(min(u, v), max(u, v)) for u, v, _ in edges}
    missing = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present
    ]
    extra = 1 + rng.randbelow(min(3, len(missing)))
    for u, v in rng.sample(missing, extra):
        edges.append(Edge(u, v))
    return Graph(node_count=n, edges=edges)


def _bipartite_graph(n: int, rng: Rng) -> Graph:
    if n < 2:
        raise ParameterError("bipartite graphs need at least 2 nodes")
    a = 1 if n < 4 else rng.randint(2, n - 2)
    edges = [Edge(i, a + j) for i in range(a) for j in range(n - a)]
    g = Graph(node_count=n, edges=edges)
    g.meta["bipartition"] = [a, n - a]
    return g


def _mesh_graph(dims: tuple[int, int]) -> Graph:
    rows, cols = dims
    if rows < 2 or cols < 2:
        raise ParameterError(f"mesh dims must be at least 2x2, got {rows}x{cols}")
    edges = []
    for i in range(rows):
        for j in range(cols):
            node = i * cols + j
            if j + 1 < cols:
                edges.append(Edge(node, node + 1))
            if i + 1 < rows:
                edges.append(Edge(node, node + cols))
    g = Graph(node_count=rows * cols, edges=edges)
    g.meta["mesh_dims"] = [rows, cols]
    g.meta["pos"] = [
        [j / (cols - 1), 1.0 - i / (rows - 1)] for i in range(rows) for j in range(cols)
    ]
    return g


def _planar_graph(n: int, rng: Rng, drop_probability: float = 0.25) -> Graph:
    """Planar by construction: grow a triangulation by inserting each new
    node at the centroid of an existing face, then thin random edges while
    keeping the graph connected. The straight-line embedding built along
    the way is stored as the ``pos`` certificate; removing edges cannot
    introduce a crossing, so it stays valid.
    """
    if n < 3:
        raise ParameterError("planar construction needs at least 3 nodes")
    pos = [(0.0, 0.0), (1.0, 0.0), (0.5, 0.8660254037844386)]
    faces = [(0, 1, 2)]
    edges = [Edge(0, 1), Edge(1, 2), Edge(0, 2)]
    for v in range(3, n):
        # restrict to the larger faces so points do not pile up in one corner
        areas = []
        for a, b, c in faces:
            (ax, ay), (bx, by), (cx, cy) = pos[a], pos[b], pos[c]
            areas.append(abs((bx - ax) * (cy - ay) - (cx - ax) * (by - ay)))
        cutoff = 0.6 * max(areas)
        candidates = [i for i, ar in enumerate(areas) if ar >= cutoff]
        idx = rng.choice(candidates)
        a, b, c = faces.pop(idx)
        pos.append(
            (
                (pos[a][0] + pos[b][0] + pos[c][0]) / 3.0,
                (pos[a][1] + pos[b][1] + pos[c][1]) / 3.0,
            )
        )
        edges.extend([Edge(a, v), Edge(b, v), Edge(c, v)])
        faces.extend([(a, b, v), (b, c, v), (a, c, v)])

    kept = list(edges)
    rng.shuffle(kept)
    for e in list(kept):
        if rng.random() < drop_probability:
            trial = [x for x in kept if x is not e]
            if _connected(n, trial):
                kept = trial
    kept.sort(key=lambda e: (e.u, e.v))
    g = Graph(node_count=n, edges=kept)
    g.meta["pos"] = [[x, y] for x, y in pos]
    return g


def _connected(n: int, edges: list[Edge]) -> bool:
    if n == 0:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v, _ in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n


def typed_graph(kind: str, n: int | tuple[int, int], rng: Rng) -> Graph:
    """Graph guaranteed by construction to belong to ``kind``.

    ``n`` is a node count, except for ``mesh`` where it is a (rows, cols)
    pair. Membership can always be re-verified with
    :func:`gvbench.oracles.classify_check`.
    """
    if kind not in GRAPH_CLASSES:
        raise ParameterError(f"unknown graph class {kind!r}")
    if kind == "mesh":
        if not isinstance(n, tuple):
            raise ParameterError("mesh requires (rows, cols) dims")
        return _mesh_graph(n)
    if not isinstance(n, int):
        raise ParameterError(f"{kind} requires an integer node count")
    if kind == "tree":
        if n < 1:
            raise ParameterError("tree needs at least 1 node")
        return Graph(node_count=n, edges=_tree_edges(n, rng))
    if kind == "complete":
        if n < 2:
            raise ParameterError("complete graph needs at least 2 nodes")
        edges = [Edge(u, v) for u in range(n) for v in range(u + 1, n)]
        return Graph(node_count=n, edges=edges)
    if kind == "acyclic":
        if n < 2:
            raise ParameterError("acyclic graph needs at least 2 nodes")
        return _acyclic_graph(n, rng)
    if kind == "cyclic":
        return _cyclic_graph(n, rng)
    if kind == "bipartite":
        return _bipartite_graph(n, rng)
    return _planar_graph(n, rng)


def pattern_graph(components: list[tuple[str, int]], rng: Rng) -> Graph:
    """Disjoint union whose connected components realize exactly the
    requested (kind, size) multiset, with contiguous node indices per
    component. Component order is shuffled for visual variety.

    Size minimums: chain >= 2, clique >= 3, star >= 3 (center plus at
    least two leaves). Note that a 3-node star is the same graph as a
    3-node chain and will be counted as a chain by the census; use sizes
    >= 4 when the census must round-trip.
    """
    if not components:
        raise ParameterError("pattern census must not be empty")
    for kind, size in components:
        if kind not in PATTERN_KINDS:
            raise ParameterError(f"unknown pattern kind {kind!r}")
        minimum = {"chain": 2, "clique": 3, "star": 3}[kind]
        if size < minimum:
            raise ParameterError(f"{kind} needs size >= {minimum}, got {size}")

    parts = list(components)
    rng.shuffle(parts)
    edges: list[Edge] = []
    base = 0
    for kind, size in parts:
        if kind == "chain":
            edges.extend(Edge(base + i, base + i + 1) for i in range(size - 1))
        elif kind == "clique":
            edges.extend(
                Edge(base + i, base + j)
                for i in range(size)
                for j in range(i + 1, size)
            )
        else:  # star: first node of the block is the center
            edges.extend(Edge(base, base + i) for i in range(1, size))
        base += size
    return Graph(node_count=base, edges=edges)
