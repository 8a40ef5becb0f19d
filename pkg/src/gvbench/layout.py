"""2-D node placement.

Seven layout kinds cover the stylistic axis of the benchmark. All of
them return positions normalized into the unit square, are pure
functions of (graph, kind, rng seed), and run on graphs of at most a few
dozen nodes, so the numerical workhorses here favour exactness and
determinism over asymptotic speed: the spectral layout uses a dense
cyclic Jacobi eigensolver, and the spring layout runs a fixed 50
iteration schedule.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ParameterError, UnsupportedInputError
from .graphs import Graph
from .rng import Rng

LAYOUT_KINDS = (
    "spring",
    "circular",
    "spectral",
    "random",
    "shell",
    "kamada_kawai",
    "planar",
)

SPRING_ITERATIONS = 50
SPRING_INITIAL_TEMPERATURE = 0.1
# iterations at the end of the spring schedule that must not increase energy
SPRING_MONOTONE_WINDOW = 10


def laplacian(g: Graph) -> np.ndarray:
    """Unweighted graph Laplacian L = D - A over the underlying
    undirected structure."""
    n = g.node_count
    lap = np.zeros((n, n), dtype=float)
    for u, v, _ in g.edges:
        lap[u, v] -= 1.0
        lap[v, u] -= 1.0
        lap[u, u] += 1.0
        lap[v, v] += 1.0
    return lap


def jacobi_eigh(matrix: np.ndarray, tol: float = 1e-10, max_sweeps: int = 100):
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm drops below ``tol``.
    Returns (eigenvalues ascending, eigenvectors as columns); equal
    eigenvalues keep a stable order, and each eigenvector is flipped so
    its first component of magnitude > 1e-9 is positive.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ParameterError("jacobi_eigh requires a square matrix")
    n = a.shape[0]
    vecs = np.eye(n)
    for _ in range(max_sweeps):
        off = math.sqrt(float(np.sum(np.square(a - np.diag(np.diag(a))))))
        if off <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                sign = 1.0 if theta >= 0 else -1.0
                t = sign / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vec_p = vecs[:, p].copy()
                vecs[:, p] = c * vec_p - s * vecs[:, q]
                vecs[:, q] = s * vec_p + c * vecs[:, q]
    vals = np.diag(a).copy()
    order = np.argsort(vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    for j in range(n):
        nonzero = np.nonzero(np.abs(vecs[:, j]) > 1e-9)[0]
        if nonzero.size and vecs[nonzero[0], j] < 0:
            vecs[:, j] = -vecs[:, j]
    return vals, vecs


def _normalize(pos: np.ndarray) -> np.ndarray:
    """Isotropic min-max fit into [0, 1]^2, preserving aspect ratio.
    A degenerate axis (or a single point) centers at 0.5."""
    pos = np.asarray(pos, dtype=float)
    if not np.all(np.isfinite(pos)):
        raise ParameterError("non-finite coordinates in layout")
    lo = pos.min(axis=0)
    hi = pos.max(axis=0)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1]))
    center = (lo + hi) / 2.0
    if span <= 0.0:
        out = np.full_like(pos, 0.5)
        return out
    out = (pos - center) / span + 0.5
    return np.clip(out, 0.0, 1.0)


def _circular_positions(n: int, radius: float = 0.5, center=(0.5, 0.5)) -> np.ndarray:
    angles = [-math.pi / 2.0 + 2.0 * math.pi * i / n for i in range(n)]
    return np.array(
        [[center[0] + radius * math.cos(a), center[1] + radius * math.sin(a)] for a in angles]
    )


def _spring_energy(pos: np.ndarray, edge_idx: np.ndarray, k: float) -> float:
    # potential whose negative gradient matches the force model below:
    # attraction d^3 / (3k) per edge, repulsion -k^2 * log(d) per pair
    delta = pos[:, None, :] - pos[None, :, :]
    dist = np.sqrt((delta**2).sum(axis=2))
    n = pos.shape[0]
    iu = np.triu_indices(n, k=1)
    d = np.maximum(dist[iu], 1e-9)
    energy = float(-(k * k) * np.log(d).sum())
    if edge_idx.size:
        ed = np.maximum(dist[edge_idx[:, 0], edge_idx[:, 1]], 1e-9)
        energy += float((ed**3).sum() / (3.0 * k))
    return energy


def _spring_positions(g: Graph, rng: Rng) -> np.ndarray:
    n = g.node_count
    pos = np.array([[rng.random(), rng.random()] for _ in range(n)])
    if n == 1:
        return pos
    k = 1.0 / math.sqrt(n)
    edge_idx = np.array([[u, v] for u, v, _ in g.edges], dtype=int).reshape(-1, 2)

    def displacement(p: np.ndarray) -> np.ndarray:
        delta = p[:, None, :] - p[None, :, :]
        dist = np.sqrt((delta**2).sum(axis=2))
        np.fill_diagonal(dist, 1.0)
        dist = np.maximum(dist, 1e-9)
        disp = (delta / dist[:, :, None]) * (k * k / dist)[:, :, None]
        np.fill_diagonal(disp[:, :, 0], 0.0)
        np.fill_diagonal(disp[:, :, 1], 0.0)
        total = disp.sum(axis=1)
        for u, v in edge_idx:
            d = p[u] - p[v]
            length = max(math.sqrt(float(d @ d)), 1e-9)
            pull = d / length * (length * length / k)
            total[u] -= pull
            total[v] += pull
        return total

    for it in range(SPRING_ITERATIONS):
        t = SPRING_INITIAL_TEMPERATURE * (1.0 - it / SPRING_ITERATIONS)
        disp = displacement(pos)
        lengths = np.maximum(np.sqrt((disp**2).sum(axis=1)), 1e-9)
        step = disp / lengths[:, None] * np.minimum(lengths, t)[:, None]
        if it >= SPRING_ITERATIONS - SPRING_MONOTONE_WINDOW:
            # convergence window: never let a step raise the energy
            before = _spring_energy(pos, edge_idx, k)
            scale = 1.0
            for _ in range(5):
                trial = pos + scale * step
                if _spring_energy(trial, edge_idx, k) <= before:
                    pos = trial
                    break
                scale *= 0.5
        else:
            pos = pos + step
    return pos


def _spectral_positions(g: Graph) -> np.ndarray:
    n = g.node_count
    if n == 1:
        return np.array([[0.5, 0.5]])
    vals, vecs = jacobi_eigh(laplacian(g))
    xs = vecs[:, 1]
    ys = vecs[:, 2] if n >= 3 else np.zeros(n)
    return np.column_stack([xs, ys])


def _shell_positions(g: Graph) -> np.ndarray:
    # concentric rings grouped by degree, highest degree innermost
    degs = g.degrees()
    distinct = sorted(set(degs), reverse=True)
    shells = {d: i for i, d in enumerate(distinct)}
    n_shells = len(distinct)
    pos = np.zeros((g.node_count, 2))
    members: list[list[int]] = [[] for _ in range(n_shells)]
    for node in range(g.node_count):
        members[shells[degs[node]]].append(node)
    for ring, nodes in enumerate(members):
        radius = 0.5 if n_shells == 1 else 0.5 * (ring + 1) / n_shells
        ring_pos = _circular_positions(len(nodes), radius=radius)
        for slot, node in enumerate(nodes):
            pos[node] = ring_pos[slot]
    return pos


def _graph_distances(g: Graph) -> np.ndarray:
    n = g.node_count
    adj = g.neighbors()
    dist = np.full((n, n), np.inf)
    for start in range(n):
        dist[start, start] = 0
        queue = [start]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            for y in adj[x]:
                if not np.isfinite(dist[start, y]):
                    dist[start, y] = dist[start, x] + 1
                    queue.append(y)
    finite = dist[np.isfinite(dist)]
    surrogate = (finite.max() if finite.size else 0.0) + 1.0
    dist[~np.isfinite(dist)] = surrogate
    return dist


def _kamada_kawai_positions(g: Graph, iterations: int = 120) -> np.ndarray:
    """Stress majorization against the graph-distance matrix (SMACOF
    update), started from the circular layout for determinism."""
    n = g.node_count
    if n == 1:
        return np.array([[0.5, 0.5]])
    d = _graph_distances(g)
    np.fill_diagonal(d, 1.0)  # avoid divide-by-zero; diagonal is masked below
    w = 1.0 / (d * d)
    np.fill_diagonal(w, 0.0)
    pos = _circular_positions(n)
    w_rowsum = w.sum(axis=1)
    for _ in range(iterations):
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.sqrt((delta**2).sum(axis=2))
        np.fill_diagonal(dist, 1.0)
        ratio = w * d / np.maximum(dist, 1e-12)
        b_off = -ratio
        np.fill_diagonal(b_off, 0.0)
        b_diag = -b_off.sum(axis=1)
        new = (b_diag[:, None] * pos + b_off @ pos) / np.maximum(w_rowsum, 1e-12)[:, None]
        pos = new
    return pos


def compute_layout(g: Graph, kind: str, rng: Rng) -> np.ndarray:
    """Positions for every node, normalized into [0, 1]^2.

    Deterministic given (graph, kind, rng seed). The ``planar`` kind uses
    the straight-line embedding stored by the planar/mesh constructors
    and refuses graphs that lack one.
    """
    if kind not in LAYOUT_KINDS:
        raise ParameterError(f"unknown layout kind {kind!r}")
    if g.node_count < 1:
        raise ParameterError("layout requires at least one node")
    n = g.node_count
    if kind == "random":
        return np.array([[rng.random(), rng.random()] for _ in range(n)])
    if kind == "circular":
        pos = np.array([[0.5, 0.5]]) if n == 1 else _circular_positions(n)
    elif kind == "spring":
        pos = _spring_positions(g, rng)
    elif kind == "spectral":
        pos = _spectral_positions(g)
    elif kind == "shell":
        pos = _shell_positions(g)
    elif kind == "kamada_kawai":
        pos = _kamada_kawai_positions(g)
    else:  # planar
        cert = g.meta.get("pos")
        if cert is None:
            raise UnsupportedInputError(
                "planar layout requires a construction certificate (meta['pos'])"
            )
        pos = np.array(cert, dtype=float)
    return _normalize(pos)


def inject_overlap(
    pos: np.ndarray, severity: float, rng: Rng, diameter: float = 0.04
) -> np.ndarray:
    """Force a severity-determined number of node pairs to overlap.

    Exactly floor(severity * floor(n / 2)) disjoint pairs are chosen; in
    each, the second node moves to within one node diameter of the first
    (default diameter 0.04 matches a 12 px radius on the 600 px canvas).
    Positions stay inside the unit square.
    """
    if not (0.0 <= severity <= 1.0):
        raise ParameterError(f"severity must be in [0, 1], got {severity}")
    pos = np.array(pos, dtype=float)
    n = pos.shape[0]
    count = int(severity * (n // 2))
    if count == 0:
        return pos
    order = list(range(n))
    rng.shuffle(order)
    for i in range(count):
        anchor, mover = order[2 * i], order[2 * i + 1]
        angle = rng.uniform(0.0, 2.0 * math.pi)
        radius = rng.uniform(0.0, 0.9 * diameter)
        pos[mover, 0] = pos[anchor, 0] + radius * math.cos(angle)
        pos[mover, 1] = pos[anchor, 1] + radius * math.sin(angle)
    return np.clip(pos, 0.0, 1.0)
