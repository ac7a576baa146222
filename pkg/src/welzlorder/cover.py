"""Compact neighborhood covers built from a low-crossing order.

The input graph is its open-neighborhood set system (set v = N(v)). Each
vertex u is anchored at the order-minimum element of its closed
neighborhood N[u]; the cluster of an anchor w is the union of the closed
neighborhoods it anchors. Every cluster member is then within distance 2
of w, so clusters have weak diameter at most 4, and N[v] is contained in
the cluster of anchor(v) by construction.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .ordering import Order, OrderError
from .setsystem import SetSystem


@dataclass(frozen=True)
class Cover:
    clusters: tuple             # cluster index -> sorted tuple of vertices
    assignment: tuple           # vertex -> cluster index with N[v] inside
    anchors: tuple              # cluster index -> anchoring vertex

    def serialize(self) -> str:
        lines = []
        for ci, cluster in enumerate(self.clusters):
            lines.append(" ".join([str(ci), str(len(cluster))]
                                  + [str(v) for v in cluster]))
        for v, ci in enumerate(self.assignment):
            lines.append(f"{v} {ci}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CoverAudit:
    coverage_ok: bool
    max_weak_diameter: int
    overlap: int
    overlap_target: float

    @property
    def overlap_ratio(self) -> float:
        return self.overlap / self.overlap_target if self.overlap_target else 0.0


def closed_neighborhood(graph: SetSystem, v: int):
    nb = graph.set_members[v]
    if v in nb:
        raise ValueError(f"vertex {v} has a self-loop; not a neighborhood system")
    return sorted((v,) + nb)


def build_cover(graph: SetSystem, order: Order) -> Cover:
    """Anchor-based compact neighborhood cover of a graph given as its
    neighborhood set system, using the supplied vertex order."""
    n = graph.n_elements
    if graph.n_sets != n:
        raise ValueError("expected a neighborhood set system (|A| == |B|)")
    pos = order.positions()
    if len(pos) != n or any(v not in pos for v in range(n)):
        raise OrderError(f"order is not a permutation of 0..{n - 1}")

    anchor = [0] * n
    for u in range(n):
        anchor[u] = min(closed_neighborhood(graph, u), key=pos.__getitem__)

    cluster_index = {}
    members = []
    anchors = []
    for u in range(n):
        w = anchor[u]
        ci = cluster_index.get(w)
        if ci is None:
            ci = len(members)
            cluster_index[w] = ci
            members.append(set())
            anchors.append(w)
        members[ci].update(closed_neighborhood(graph, u))

    clusters = tuple(tuple(sorted(m)) for m in members)
    assignment = tuple(cluster_index[anchor[v]] for v in range(n))
    return Cover(clusters=clusters, assignment=assignment, anchors=tuple(anchors))


def _bfs_distances(graph: SetSystem, source: int, limit=None):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if limit is not None and du >= limit:
            continue
        for v in graph.set_members[u]:
            if v not in dist:
                dist[v] = du + 1
                queue.append(v)
    return dist


def weak_diameter(graph: SetSystem, cluster, exact_limit: int = 64,
                  beyond: int = 5) -> int:
    """Maximum G-distance between cluster members (distances in the whole
    graph), saturated at `beyond` for anything further than beyond - 1.

    Exact depth-limited BFS from every member for small clusters; for large
    ones a radius-2 certificate from some center bounds the answer by 4.
    """
    if len(cluster) <= 1:
        return 0
    if len(cluster) <= exact_limit:
        best = 0
        members = set(cluster)
        for v in cluster:
            dist = _bfs_distances(graph, v, limit=beyond)
            for u in members:
                du = dist.get(u, beyond)
                if du > best:
                    best = du
        return best
    # radius-2 certificate from some member
    for center in cluster:
        dist = _bfs_distances(graph, center, limit=2)
        if all(dist.get(u, 3) <= 2 for u in cluster):
            return 4
    return beyond


def audit_cover(graph: SetSystem, cover: Cover, overlap_target: float) -> CoverAudit:
    """Check coverage and weak diameter, measure overlap.

    Coverage: N[v] inside the assigned cluster for every v. Weak diameter is
    the max over clusters. Overlap is the max number of clusters containing
    one vertex, reported against `overlap_target` (not hard-checked).
    """
    n = graph.n_elements
    coverage_ok = True
    for v in range(n):
        cluster = set(cover.clusters[cover.assignment[v]])
        if not set(closed_neighborhood(graph, v)) <= cluster:
            coverage_ok = False
            break

    max_diam = 0
    for cluster in cover.clusters:
        max_diam = max(max_diam, weak_diameter(graph, cluster))

    counts = [0] * n
    for cluster in cover.clusters:
        for v in cluster:
            counts[v] += 1
    overlap = max(counts, default=0)

    return CoverAudit(coverage_ok=coverage_ok, max_weak_diameter=max_diam,
                      overlap=overlap, overlap_target=overlap_target)


def overlap_target(c: float, n: int) -> float:
    """Reference overlap bound 1 + 12 c^2 log2(n)^2."""
    lg = math.log2(n) if n > 1 else 0.0
    return 1.0 + 12.0 * c * c * lg * lg
