"""Ground-truth algorithms.

These are the reference answers for every generated instance, and they
double as cross-checks for the by-construction generators: whatever a
generator claims about its output is re-derived here before an instance
is emitted.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import ClassificationError, ParameterError, UnsupportedInputError
from .graphs import GRAPH_CLASSES, Graph


@dataclass
class PathResult:
    """A concrete path: node sequence plus total traversed weight."""

    nodes: list[int]
    total_weight: int


def find_bridges(g: Graph) -> set[tuple[int, int]]:
    """All bridges (cut-edges) of an undirected graph, as sorted pairs.

    Iterative Tarjan low-link traversal; an edge (u, v) with v a DFS child
    of u is a bridge exactly when low[v] > disc[u].
    """
    if g.directed:
        raise UnsupportedInputError("find_bridges requires an undirected graph")
    n = g.node_count
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for idx, (u, v, _) in enumerate(g.edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))

    disc = [-1] * n
    low = [0] * n
    bridges: set[tuple[int, int]] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]  # node, in-edge, child ptr
        while stack:
            node, in_edge, ptr = stack.pop()
            if ptr == 0:
                disc[node] = low[node] = timer
                timer += 1
            if ptr < len(adj[node]):
                stack.append((node, in_edge, ptr + 1))
                nxt, edge_idx = adj[node][ptr]
                if edge_idx == in_edge:
                    continue
                if disc[nxt] == -1:
                    stack.append((nxt, edge_idx, 0))
                else:
                    low[node] = min(low[node], disc[nxt])
            else:
                if in_edge != -1:
                    u, v, _ = g.edges[in_edge]
                    parent = u if v == node else v
                    low[parent] = min(low[parent], low[node])
                    if low[node] > disc[parent]:
                        bridges.add((min(u, v), max(u, v)))
    return bridges


def shortest_path(g: Graph, source: int, target: int) -> PathResult | None:
    """Minimum-weight path from source to target, or None when unreachable.

    Unweighted edges count as weight 1. Among all minimum-weight paths the
    lexicographically smallest node sequence is returned, which keeps
    golden answers stable: after computing distances from both endpoints,
    the walk greedily picks the smallest next node that still lies on some
    optimal path.
    """
    if not (0 <= source < g.node_count and 0 <= target < g.node_count):
        raise ParameterError("source/target out of range")
    for u, v, w in g.edges:
        if w is not None and w < 0:
            raise ParameterError(f"negative weight on edge ({u}, {v})")
    if source == target:
        return PathResult([source], 0)

    forward = g.out_neighbors()
    backward: list[list[tuple[int, int | None]]] = [[] for _ in range(g.node_count)]
    for u, v, w in g.edges:
        backward[v].append((u, w))
        if not g.directed:
            backward[u].append((v, w))

    def dijkstra(adj, start):
        dist = [None] * g.node_count
        heap = [(0, start)]
        while heap:
            d, x = heapq.heappop(heap)
            if dist[x] is not None:
                continue
            dist[x] = d
            for y, w in adj[x]:
                if dist[y] is None:
                    heapq.heappush(heap, (d + (1 if w is None else w), y))
        return dist

    dist_s = dijkstra(forward, source)
    dist_t = dijkstra(backward, target)
    if dist_s[target] is None:
        return None
    total = dist_s[target]

    # Walk the shortest-path DAG greedily. Any edge (current, y) with
    # dist_s[current] + w + dist_t[y] == total extends to an optimal path,
    # so picking the smallest such y at each step yields the
    # lexicographically smallest optimal node sequence.
    nodes = [source]
    current = source
    visited = {source}
    while current != target:
        best = None
        for y, w in forward[current]:
            if y in visited or dist_t[y] is None:
                continue
            step = 1 if w is None else w
            if dist_s[current] + step + dist_t[y] == total:
                if best is None or y < best:
                    best = y
        if best is None:
            # unreachable with positive weights; zero-weight cycles only
            raise ParameterError("shortest_path walk stalled (zero-weight cycle)")
        visited.add(best)
        nodes.append(best)
        current = best
    return PathResult(nodes, total)


def _two_colorable(g: Graph) -> bool:
    color = [-1] * g.node_count
    adj = g.neighbors()
    for root in range(g.node_count):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def _component_count(g: Graph) -> int:
    adj = g.neighbors()
    seen = [False] * g.node_count
    count = 0
    for root in range(g.node_count):
        if seen[root]:
            continue
        count += 1
        seen[root] = True
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
    return count


def _has_cycle(g: Graph) -> bool:
    if g.directed:
        # iterative three-color DFS over directed edges
        state = [0] * g.node_count  # 0 unseen, 1 on stack, 2 done
        adj: list[list[int]] = [[] for _ in range(g.node_count)]
        for u, v, _ in g.edges:
            adj[u].append(v)
        for root in range(g.node_count):
            if state[root] != 0:
                continue
            stack: list[tuple[int, int]] = [(root, 0)]
            state[root] = 1
            while stack:
                node, ptr = stack.pop()
                if ptr < len(adj[node]):
                    stack.append((node, ptr + 1))
                    nxt = adj[node][ptr]
                    if state[nxt] == 1:
                        return True
                    if state[nxt] == 0:
                        state[nxt] = 1
                        stack.append((nxt, 0))
                else:
                    state[node] = 2
        return False
    # undirected: a forest has exactly n - #components edges
    return g.edge_count > g.node_count - _component_count(g)


def _segments_cross(p1, p2, p3, p4) -> bool:
    """Proper or degenerate-overlap intersection of segments p1p2 and p3p4
    that do not share an endpoint."""

    def orient(a, b, c):
        val = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        if abs(val) < 1e-12:
            return 0
        return 1 if val > 0 else -1

    def on_segment(a, b, c):
        return (
            min(a[0], b[0]) - 1e-12 <= c[0] <= max(a[0], b[0]) + 1e-12
            and min(a[1], b[1]) - 1e-12 <= c[1] <= max(a[1], b[1]) + 1e-12
        )

    o1, o2 = orient(p1, p2, p3), orient(p1, p2, p4)
    o3, o4 = orient(p3, p4, p1), orient(p3, p4, p2)
    if o1 != o2 and o3 != o4:
        return True
    for a, b, c in ((p1, p2, p3), (p1, p2, p4), (p3, p4, p1), (p3, p4, p2)):
        if orient(a, b, c) == 0 and on_segment(a, b, c):
            return True
    return False


def _valid_planar_certificate(g: Graph) -> bool:
    pos = g.meta.get("pos")
    if pos is None or len(pos) != g.node_count:
        return False
    segs = [(tuple(pos[u]), tuple(pos[v]), (u, v)) for u, v, _ in g.edges]
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            a1, a2, (u1, v1) = segs[i]
            b1, b2, (u2, v2) = segs[j]
            if {u1, v1} & {u2, v2}:
                continue
            if _segments_cross(a1, a2, b1, b2):
                return False
    return True


def _is_grid(g: Graph) -> bool:
    dims = g.meta.get("mesh_dims")
    if not dims:
        return False
    rows, cols = dims
    if rows < 2 or cols < 2 or g.node_count != rows * cols:
        return False
    expected = set()
    for i in range(rows):
        for j in range(cols):
            node = i * cols + j
            if j + 1 < cols:
                expected.add((node, node + 1))
            if i + 1 < rows:
                expected.add((node, node + cols))
    return g.edge_keys() == expected


def classify_check(g: Graph, kind: str) -> bool:
    """True iff the graph satisfies the class predicate.

    mesh and planar are certified by construction metadata: mesh checks
    the stored dims against the exact grid edge set, planar validates the
    stored embedding geometrically (no two non-adjacent edges cross).
    """
    if kind not in GRAPH_CLASSES:
        raise ParameterError(f"unknown graph class {kind!r}")
    if kind == "tree":
        return (
            not g.directed
            and g.edge_count == g.node_count - 1
            and _component_count(g) == 1
        )
    if kind == "complete":
        full = g.node_count * (g.node_count - 1) // 2
        return not g.directed and g.edge_count == full
    if kind == "bipartite":
        return _two_colorable(g)
    if kind == "acyclic":
        return not _has_cycle(g)
    if kind == "cyclic":
        return _has_cycle(g)
    if kind == "mesh":
        return _is_grid(g)
    return _valid_planar_certificate(g)


def component_census(g: Graph) -> dict[str, int]:
    """Count each component shape, returned as {kind: how_many}.

    Shape predicates, applied in the precedence order clique > star >
    chain so ambiguous components resolve deterministically:
      clique: k >= 3 nodes, all pairs present (K3 is a clique, not a cycle)
      star:   k >= 4 nodes, one center of degree k-1, k-1 leaves
              (the 3-node star is the same graph as a 3-node chain and
              counts as a chain)
      chain:  path graph, k >= 2
    """
    adj = g.neighbors()
    seen = [False] * g.node_count
    census: dict[str, int] = {}
    for root in range(g.node_count):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        k = len(comp)
        degs = sorted(len(adj[x]) for x in comp)
        edge_count = sum(degs) // 2
        if k >= 3 and edge_count == k * (k - 1) // 2:
            kind = "clique"
        elif k >= 4 and degs == [1] * (k - 1) + [k - 1]:
            kind = "star"
        elif k >= 2 and edge_count == k - 1 and degs == [1, 1] + [2] * (k - 2):
            kind = "chain"
        else:
            raise ClassificationError(
                f"component {sorted(comp)} is not a chain, clique or star"
            )
        census[kind] = census.get(kind, 0) + 1
    return census


def structural_equal(a: Graph, b: Graph) -> bool:
    """Label-respecting structural equality.

    Two labeled graphs are equal when their label sets match and every
    edge, keyed by endpoint labels (ordered when directed, plus weight),
    is present in both. Styling plays no role; isomorphic graphs with
    permuted labels compare unequal.
    """
    for g in (a, b):
        if g.labels is None:
            raise UnsupportedInputError("structural_equal requires labeled graphs")
        if len(set(g.labels)) != g.node_count:
            raise UnsupportedInputError("structural_equal requires unique labels")
    if a.directed != b.directed:
        return False
    if set(a.labels) != set(b.labels):
        return False

    def label_edges(g: Graph) -> set[tuple]:
        out = set()
        for u, v, w in g.edges:
            lu, lv = g.labels[u], g.labels[v]
            if not g.directed and lv < lu:
                lu, lv = lv, lu
            out.add((lu, lv, w))
        return out

    return label_edges(a) == label_edges(b)
