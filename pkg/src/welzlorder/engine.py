"""Randomized near-linear computation of low-crossing orders.

Both engines share one loop: repeatedly sample part of the remaining ground
elements, collapse the sets to representatives of their twin classes over
the sample, collapse the elements to representatives of their twin classes
over the surviving sets, and remember every removed element together with
its representative. A base order on the small remaining core is then blown
back up by re-inserting each removed element right after its representative.

The linear engine handles systems whose primal/dual shatter functions are
at most c*k; the poly engine handles c*k^d for d >= 2 with three adjusted
parameters (sample size, loop guard, near-twin tolerance).
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field

from .ordering import Order, reconstruct
from .setsystem import SetSystem, uniform_sample


class LinearityCapExceeded(RuntimeError):
    """Every guess for the shatter constant up to the cap failed."""


@dataclass(frozen=True)
class IterationRecord:
    a_size: int                 # |A_cur| at iteration start
    b_size: int                 # |B_cur| at iteration start
    sample_size: int
    observed_diff: int          # max near-twin symmetric difference found
    near_twin_threshold: float
    guard: float                # loop guard the iteration ran under


@dataclass
class RunTrace:
    engine: str                 # "linear" or "poly"
    n_elements: int
    c: float
    d: int
    seed: int
    rows: list = field(default_factory=list)
    outcome: str = "false"      # "order" or "false"
    failure_reason: str = ""
    final_a_size: int = 0

    @property
    def iterations(self) -> int:
        return len(self.rows)

    def a_sizes(self):
        """|A_cur| at the start of each iteration plus the final size."""
        return [r.a_size for r in self.rows] + [self.final_a_size]

    def to_json(self) -> str:
        return json.dumps({
            "engine": self.engine,
            "n_elements": self.n_elements,
            "c": self.c,
            "d": self.d,
            "seed": self.seed,
            "iterations": self.iterations,
            "outcome": self.outcome,
            "failure_reason": self.failure_reason,
            "final_a_size": self.final_a_size,
            "rows": [vars(r) for r in self.rows],
        }, sort_keys=True)


def iteration_cap(n: int) -> int:
    """Largest admissible iteration count: floor(log2(n) - 1)."""
    if n <= 2:
        return 0
    return math.floor(math.log2(n) - 1)


@dataclass(frozen=True)
class LinearThresholds:
    """Loop parameters of the linear engine for original ground size n."""

    c: float
    n: int

    @property
    def d(self) -> int:
        return 1

    @property
    def guard(self) -> float:
        return 12.0 * self.c * self.c * math.log2(self.n)

    @property
    def near_twin_k(self) -> float:
        return 6.0 * self.c * self.c * math.log2(self.n)

    @property
    def crossing_bound(self) -> float:
        lg = math.log2(self.n) if self.n > 1 else 0.0
        return 12.0 * self.c * self.c * lg * lg

    def sample_size(self, a_cur: int) -> int:
        s = math.ceil(a_cur / (2.0 * self.c * self.c))
        return min(s, a_cur)


def _ceil_snapped_root(q: float, power: int) -> int:
    # snap near-integer roots before ceiling so e.g. 256**0.25 -> 4 on
    # every platform
    p = q ** (1.0 / power)
    r = round(p)
    if abs(p - r) < 1e-9:
        p = r
    return math.ceil(p)


def poly_thresholds(c: float, d: int, n: int, a_cur: int):
    """(guard, sample_size, near_twin_k, crossing_bound) of the poly engine."""
    if c < 1:
        raise ValueError("c must be >= 1")
    if d < 2:
        raise ValueError("poly thresholds require d >= 2")
    lg = math.log2(n) if n > 1 else 0.0
    dd = d * d
    guard = 4.0 * c ** (d + 1) * (2 * dd) ** dd * lg
    sample = min(_ceil_snapped_root(a_cur / (4.0 * c ** (d + 1)), dd), a_cur)
    near_twin_k = 12.0 * c * d * n ** (1.0 - 1.0 / dd) * lg
    crossing_bound = guard + 24.0 * c * d * n ** (1.0 - 1.0 / dd) * lg * lg
    return guard, sample, near_twin_k, crossing_bound


@dataclass(frozen=True)
class PolyThresholds:
    c: float
    d: int
    n: int

    @property
    def guard(self) -> float:
        return poly_thresholds(self.c, self.d, self.n, self.n)[0]

    @property
    def near_twin_k(self) -> float:
        return poly_thresholds(self.c, self.d, self.n, self.n)[2]

    @property
    def crossing_bound(self) -> float:
        return poly_thresholds(self.c, self.d, self.n, self.n)[3]

    def sample_size(self, a_cur: int) -> int:
        return poly_thresholds(self.c, self.d, self.n, a_cur)[1]


def _run(system: SetSystem, thresholds, seed: int, engine: str,
         check_guarantee: bool = True):
    """Shared main loop; returns (Order or None, RunTrace)."""
    n = system.n_elements
    trace = RunTrace(engine=engine, n_elements=n, c=thresholds.c,
                     d=thresholds.d, seed=seed)
    if n <= 1:
        trace.outcome = "order"
        trace.final_a_size = n
        return Order(range(n)), trace

    rng = random.Random(seed)
    guard = thresholds.guard
    near_twin_k = thresholds.near_twin_k
    cap = iteration_cap(n)

    a_cur = list(range(n))
    b_cur = list(range(system.n_sets))
    b_adj = None                # built only if the loop runs at all
    if n > guard:
        b_adj = {x: list(system.set_members[x]) for x in b_cur}
    stack = []
    mark = bytearray(n)

    while len(a_cur) > guard:
        if len(trace.rows) >= cap:
            # the theoretical iteration bound would be exceeded; the
            # crossing guarantee no longer follows, so give up
            trace.failure_reason = "iteration cap reached"
            trace.final_a_size = len(a_cur)
            return None, trace

        s = thresholds.sample_size(len(a_cur))
        w_set = {a_cur[i] for i in uniform_sample(len(a_cur), s, rng)}

        # twin partition of B_cur over the sample
        b_class_by_sig = {}
        b_reps = []
        b_class_members = []
        for b in b_cur:
            sig = tuple(v for v in b_adj[b] if v in w_set)
            ci = b_class_by_sig.get(sig)
            if ci is None:
                ci = len(b_reps)
                b_class_by_sig[sig] = ci
                b_reps.append(b)
                b_class_members.append([])
            b_class_members[ci].append(b)

        # near-twin guarantee over the full current graph
        observed = 0
        if check_guarantee:
            for ci, rep in enumerate(b_reps):
                if len(b_class_members[ci]) == 1:
                    continue
                rep_mem = b_adj[rep]
                for v in rep_mem:
                    mark[v] = 1
                rep_len = len(rep_mem)
                for b in b_class_members[ci]:
                    if b == rep:
                        continue
                    mem = b_adj[b]
                    inter = 0
                    for v in mem:
                        inter += mark[v]
                    diff = rep_len + len(mem) - 2 * inter
                    if diff > observed:
                        observed = diff
                for v in rep_mem:
                    mark[v] = 0

        trace.rows.append(IterationRecord(
            a_size=len(a_cur), b_size=len(b_cur), sample_size=s,
            observed_diff=observed, near_twin_threshold=near_twin_k,
            guard=guard))

        if check_guarantee and observed > near_twin_k:
            trace.failure_reason = "near-twin guarantee failed"
            trace.final_a_size = len(a_cur)
            return None, trace

        # twin partition of A_cur over the representative sets
        sig_of = {a: [] for a in a_cur}
        for ci, rep in enumerate(b_reps):
            for v in b_adj[rep]:
                sig_of[v].append(ci)
        a_rep_by_sig = {}
        a_reps = []
        for a in a_cur:                       # ascending, so reps are minima
            sig = tuple(sig_of[a])
            rep = a_rep_by_sig.get(sig)
            if rep is None:
                a_rep_by_sig[sig] = a
                a_reps.append(a)
            else:
                stack.append((a, rep))

        a_cur = a_reps
        a_set = set(a_cur)
        b_cur = sorted(b_reps)
        b_adj = {b: [v for v in b_adj[b] if v in a_set] for b in b_cur}

    trace.final_a_size = len(a_cur)
    base = Order(a_cur)                       # ascending ids, deterministic
    order = reconstruct(base, stack)
    trace.outcome = "order"
    return order, trace


def compute_order_linear(system: SetSystem, c: float, seed: int):
    """Run the linear engine once; returns (Order or None, RunTrace)."""
    if c < 1:
        raise ValueError("c must be >= 1")
    return _run(system, LinearThresholds(c=c, n=system.n_elements), seed, "linear")


def compute_order_poly(system: SetSystem, c: float, d: int, seed: int):
    """Run the poly engine (d >= 2) once; d == 1 delegates to the linear engine."""
    if c < 1:
        raise ValueError("c must be >= 1")
    if d < 1:
        raise ValueError("d must be >= 1")
    if d == 1:
        return compute_order_linear(system, c, seed)
    return _run(system, PolyThresholds(c=c, d=d, n=system.n_elements), seed, "poly")


def boosted(system: SetSystem, c: float, trials: int, seed: int, d: int = 1,
            engine=None):
    """Up to `trials` independent runs on split rng streams; first success wins.

    Returns (Order or None, list of RunTrace). Runs after the first success
    are never executed. `engine` may override the run function (used by
    tests to inject stubs); it takes (system, c, d, sub_seed).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if engine is None:
        engine = lambda s, cc, dd, sd: compute_order_poly(s, cc, dd, sd)
    master = random.Random(seed)
    traces = []
    for _ in range(trials):
        sub_seed = master.getrandbits(64)
        order, trace = engine(system, c, d, sub_seed)
        traces.append(trace)
        if order is not None:
            return order, traces
    return None, traces


def with_unknown_c(system: SetSystem, seed: int, c0: float = 1.0,
                   trials_per_level: int = 3, d: int = 1,
                   c_cap: float = 2.0 ** 20):
    """Double the guess for c until a boosted run succeeds.

    Returns (Order, c_used, traces). Raises LinearityCapExceeded once the
    guess would exceed c_cap.
    """
    if system.n_elements == 0:
        raise ValueError("empty ground set")
    master = random.Random(seed)
    c = c0
    traces = []
    while c <= c_cap:
        level_seed = master.getrandbits(64)
        order, level_traces = boosted(system, c, trials_per_level, level_seed, d=d)
        traces.extend(level_traces)
        if order is not None:
            return order, c, traces
        c *= 2.0
    raise LinearityCapExceeded(f"linearity cap exceeded (cap={c_cap})")
