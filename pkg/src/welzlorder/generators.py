"""Seeded instance families with known or measurable shatter behavior."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .setsystem import SetSystem, build


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: tuple
    seed: int = 0

    def describe(self) -> str:
        args = " ".join(str(p) for p in self.params)
        return f"gen {self.family} {args} seed={self.seed}"


def generate(spec: GenSpec) -> SetSystem:
    """Dispatch a GenSpec to its family generator."""
    fam = spec.family
    if fam == "prefix":
        return gen_prefix(*spec.params)
    if fam == "grid":
        return gen_grid(*spec.params)
    if fam == "bounded_degree":
        return gen_bounded_degree(*spec.params, seed=spec.seed)
    if fam == "halfplane":
        return gen_halfplane(*spec.params, seed=spec.seed)
    raise ValueError(f"unknown instance family {fam!r}")


def gen_prefix(n: int) -> SetSystem:
    """Ground set {0..n-1} with all n+1 prefixes {0..t-1} as sets.

    Any k-subset sees exactly k+1 distinct traces, so the family has
    linearity <= 2. Note the quadratic total size.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    edges = [(t, v) for t in range(n + 1) for v in range(t)]
    return build(edges, n_elements=n, n_sets=n + 1)


def grid_neighbors(rows: int, cols: int, v: int):
    r, c = divmod(v, cols)
    if r > 0:
        yield v - cols
    if r < rows - 1:
        yield v + cols
    if c > 0:
        yield v - 1
    if c < cols - 1:
        yield v + 1


def gen_grid(rows: int, cols: int) -> SetSystem:
    """Open-neighborhood set system of the rows x cols grid graph.

    Set v contains the grid neighbors of vertex v; the system is self-dual.
    """
    if rows < 2 or cols < 2:
        raise ValueError("rows and cols must be >= 2")
    n = rows * cols
    edges = [(v, u) for v in range(n) for u in grid_neighbors(rows, cols, v)]
    return build(edges, n_elements=n, n_sets=n)


def neighborhood_system(adjacency) -> SetSystem:
    """Open-neighborhood set system of a graph given as adjacency lists."""
    n = len(adjacency)
    edges = [(v, u) for v in range(n) for u in adjacency[v]]
    return build(edges, n_elements=n, n_sets=n)


def gen_bounded_degree(n: int, degree: int, seed: int = 0,
                       max_retries: int = 1000) -> SetSystem:
    """Neighborhood system of a random simple degree-regular graph.

    Configuration model: pair up degree stubs per vertex, reject pairings
    with loops or multi-edges and retry.
    """
    if degree < 3:
        raise ValueError("degree must be >= 3")
    if n * degree % 2 != 0:
        raise ValueError("n * degree must be even")
    if degree >= n:
        raise ValueError("degree must be < n")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(degree)]
    for _ in range(max_retries):
        rng.shuffle(stubs)
        seen = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in seen:
                ok = False
                break
            seen.add((min(u, v), max(u, v)))
        if ok:
            adjacency = [[] for _ in range(n)]
            for u, v in seen:
                adjacency[u].append(v)
                adjacency[v].append(u)
            return neighborhood_system(adjacency)
    raise ValueError(f"no simple {degree}-regular graph found after "
                     f"{max_retries} pairings (n={n})")


def halfplane_system(points, lines, n_elements=None) -> SetSystem:
    """Points vs halfplanes: set i holds the points p with p . n_i <= t_i.

    `lines` is a list of (angle, offset) pairs; the halfplane normal is
    (cos angle, sin angle) and offset is the threshold on the projection.
    Membership is evaluated vectorized; these systems have quadratically
    many edges.
    """
    if n_elements is None:
        n_elements = len(points)
    n_sets = len(lines)
    px = np.array([p[0] for p in points], dtype=np.float64)
    py = np.array([p[1] for p in points], dtype=np.float64)
    mask = np.zeros((n_sets, n_elements), dtype=bool)
    for i, (angle, offset) in enumerate(lines):
        mask[i, :len(points)] = px * math.cos(angle) + py * math.sin(angle) <= offset
    set_members = tuple(tuple(np.nonzero(row)[0].tolist()) for row in mask)
    element_sets = tuple(tuple(np.nonzero(col)[0].tolist()) for col in mask.T)
    return SetSystem(
        n_elements=n_elements,
        n_sets=n_sets,
        set_members=tuple(set_members),
        element_sets=tuple(tuple(s) for s in element_sets),
    )


def gen_halfplane(n_points: int, n_sets: int, seed: int = 0) -> SetSystem:
    """Random points in the unit square against random halfplanes.

    Primal and dual shatter functions are O(k^2); this is the d = 2 test
    family.
    """
    if n_points < 1 or n_sets < 1:
        raise ValueError("n_points and n_sets must be >= 1")
    rng = random.Random(seed)
    points = [(rng.random(), rng.random()) for _ in range(n_points)]
    diag = math.sqrt(2.0)
    lines = [(rng.uniform(0.0, 2.0 * math.pi), rng.uniform(-diag, diag))
             for _ in range(n_sets)]
    return halfplane_system(points, lines, n_elements=n_points)


def add_twins(system: SetSystem, duplication_factor: int, seed: int = 0) -> SetSystem:
    """Duplicate each ground element into 1..factor copies (uniform per element).

    Copies get fresh ids above the originals and identical set memberships,
    exercising the twin-contraction path of the order engines.
    """
    if duplication_factor < 1:
        raise ValueError("duplication_factor must be >= 1")
    rng = random.Random(seed)
    edges = [(x, v) for x, mem in enumerate(system.set_members) for v in mem]
    next_id = system.n_elements
    for v in range(system.n_elements):
        copies = rng.randint(1, duplication_factor) - 1
        for _ in range(copies):
            for x in system.element_sets[v]:
                edges.append((x, next_id))
            next_id += 1
    return build(edges, n_elements=next_id, n_sets=system.n_sets)
