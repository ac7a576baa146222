"""Ground-truth oracles: crossing numbers, bound certification, exhaustive
minimum-crossing search, and shatter-function probes.

All oracles here are independent of the order engines, so they can certify
engine output without sharing code paths with it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, permutations

from .engine import poly_thresholds
from .ordering import Order, OrderError
from .setsystem import (
    LinearityParams,
    Partition,
    SetSystem,
    near_twin_max_diff,
    restrict,
    twin_partition,
    uniform_sample,
)


@dataclass(frozen=True)
class CrossingReport:
    per_set: tuple              # set id -> crossing count
    max: int
    bound: float | None = None
    passed: bool | None = None

    def format(self) -> str:
        lines = [f"{x} {cnt}" for x, cnt in enumerate(self.per_set)]
        bound = "none" if self.bound is None else repr(self.bound)
        ok = "-" if self.passed is None else str(int(self.passed))
        lines.append(f"max={self.max} bound={bound} pass={ok}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ShatterProbe:
    samples: tuple              # (k, observed trace count) pairs
    c_hat: float
    exact: bool
    d: int = 1


def crossing_number(system: SetSystem, order: Order,
                    params: LinearityParams | None = None) -> CrossingReport:
    """Exact per-set crossing counts of the order, in O(size_norm) time.

    For each set, its member positions are sorted and grouped into maximal
    runs of consecutive positions; a run contributes its two ends unless an
    end sits at the boundary of the order.
    """
    n = system.n_elements
    seq = order.to_list()
    if len(seq) != n or set(seq) != set(range(n)):
        raise OrderError(f"order is not a permutation of 0..{n - 1}")
    pos = [0] * n
    for i, v in enumerate(seq):
        pos[v] = i

    per_set = []
    for mem in system.set_members:
        if not mem or len(mem) == n:
            per_set.append(0)
            continue
        ps = sorted(pos[v] for v in mem)
        runs = 1
        for a, b in zip(ps, ps[1:]):
            if b != a + 1:
                runs += 1
        crossings = 2 * runs - (ps[0] == 0) - (ps[-1] == n - 1)
        per_set.append(crossings)

    max_cross = max(per_set, default=0)
    bound = passed = None
    if params is not None:
        bound = crossing_bound(params, n)
        passed = max_cross <= bound
    return CrossingReport(per_set=tuple(per_set), max=max_cross,
                          bound=bound, passed=passed)


def crossing_number_naive(system: SetSystem, order: Order) -> CrossingReport:
    """O(|A|*|B|) recount over all adjacent pairs; oracle for the fast path."""
    seq = order.to_list()
    member_sets = [set(mem) for mem in system.set_members]
    per_set = [0] * system.n_sets
    for u, v in zip(seq, seq[1:]):
        for x, mem in enumerate(member_sets):
            if (u in mem) != (v in mem):
                per_set[x] += 1
    return CrossingReport(per_set=tuple(per_set), max=max(per_set, default=0))


EXHAUSTIVE_LIMIT = 9


def min_crossing_exhaustive(system: SetSystem):
    """Exact minimum crossing number over all |A|! orders, with a witness.

    Reversal symmetry halves the enumeration. Only for |A| <= 9.
    """
    n = system.n_elements
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"|A|={n} exceeds exhaustive limit {EXHAUSTIVE_LIMIT}")
    if n == 0:
        return 0, Order()
    best = None
    witness = None
    for perm in permutations(range(n)):
        if n > 1 and perm[0] > perm[-1]:
            continue                       # reversal gives identical crossings
        order = Order(perm)
        value = crossing_number(system, order).max
        if best is None or value < best:
            best, witness = value, order
            if best == 0:
                break
    return best, witness


def crossing_bound(params: LinearityParams, n: int) -> float:
    """Theoretical crossing bound for a system of size n under params."""
    lg = math.log2(n) if n > 1 else 0.0
    if params.d == 1:
        return 12.0 * params.c * params.c * lg * lg
    return poly_thresholds(params.c, params.d, n, n)[3]


def certify(system: SetSystem, order: Order, params: LinearityParams):
    """Compare the exact crossing number against the theoretical bound."""
    report = crossing_number(system, order, params=params)
    return report.passed, report


def shatter_probe(system: SetSystem, mode: str, sizes, trials: int = 100,
                  seed: int = 0, d: int = 1) -> ShatterProbe:
    """Trace counts over k-subsets of the ground set, primal side.

    Exact mode enumerates every subset of each requested size (|A| <= 20);
    sampled mode draws `trials` random k-subsets per size, so its maximum is
    only a lower bound on the shatter function. c_hat is the smallest c with
    all observed counts <= c * k**d.
    """
    n = system.n_elements
    if mode not in ("exact", "sampled"):
        raise ValueError(f"mode must be 'exact' or 'sampled', got {mode!r}")
    if mode == "exact" and n > 20:
        raise ValueError(f"exact shatter probe limited to |A| <= 20, got {n}")

    rng = random.Random(seed)
    all_sets = range(system.n_sets)
    samples = []
    c_hat = 0.0
    for k in sizes:
        k = min(k, n)
        best = 0
        if mode == "exact":
            subsets = combinations(range(n), k)
        else:
            subsets = (uniform_sample(n, k, rng) for _ in range(trials))
        for subset in subsets:
            sub = restrict(system, subset, all_sets).system
            count = twin_partition(sub, "B").n_classes
            if count > best:
                best = count
        samples.append((k, best))
        if k >= 1:
            c_hat = max(c_hat, best / k ** d)
    return ShatterProbe(samples=tuple(samples), c_hat=c_hat,
                        exact=(mode == "exact"), d=d)


def audit_near_twin(system: SetSystem, partition: Partition, k: float):
    """Is `partition` a k-near twin partition of B? Returns (pass, observed)."""
    observed = near_twin_max_diff(system, partition)
    return observed <= k, observed
