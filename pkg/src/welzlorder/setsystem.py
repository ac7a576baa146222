"""Set systems as bipartite incidence structures.

A set system (U, F) is stored as a bipartite graph (A, B, E): ground
elements A with dense ids 0..|A|-1, sets B with dense ids 0..|B|-1, and
membership edges E. Both adjacency views (set -> members, element -> sets)
are kept sorted and mutually consistent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class SetSystemError(ValueError):
    """Malformed input to a set-system constructor or parser."""


@dataclass(frozen=True)
class SetSystem:
    n_elements: int
    n_sets: int
    set_members: tuple          # set id -> sorted tuple of element ids
    element_sets: tuple         # element id -> sorted tuple of set ids

    @property
    def n_edges(self) -> int:
        return sum(len(m) for m in self.set_members)

    @property
    def size_norm(self) -> int:
        """Canonical input size: |A| + total membership count."""
        return self.n_elements + self.n_edges

    def members(self, set_id):
        return self.set_members[set_id]

    def sets_of(self, element_id):
        return self.element_sets[element_id]

    def validate(self):
        """Check transpose consistency and sortedness; raises on violation."""
        seen = set()
        for x, mem in enumerate(self.set_members):
            prev = -1
            for v in mem:
                if not 0 <= v < self.n_elements:
                    raise SetSystemError(f"element id {v} out of range")
                if v <= prev:
                    raise SetSystemError(f"set {x} member list not strictly increasing")
                prev = v
                seen.add((x, v))
        mirrored = set()
        for v, sets in enumerate(self.element_sets):
            prev = -1
            for x in sets:
                if not 0 <= x < self.n_sets:
                    raise SetSystemError(f"set id {x} out of range")
                if x <= prev:
                    raise SetSystemError(f"element {v} set list not strictly increasing")
                prev = x
                mirrored.add((x, v))
        if seen != mirrored:
            raise SetSystemError("adjacency views are not transposes of each other")


@dataclass(frozen=True)
class Partition:
    """Partition of one side of a SetSystem into classes with representatives.

    Representatives are the smallest id of each class; class ids are
    contiguous, ordered by their representative.
    """

    side: str                   # "A" or "B"
    class_of: tuple             # member id -> class id
    representative: tuple       # class id -> member id

    @property
    def n_classes(self) -> int:
        return len(self.representative)

    def classes(self):
        """Class id -> list of member ids, in increasing id order."""
        out = [[] for _ in range(self.n_classes)]
        for v, c in enumerate(self.class_of):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class LinearityParams:
    c: float
    d: int = 1

    def __post_init__(self):
        if self.c < 1:
            raise ValueError("shatter constant c must be >= 1")
        if self.d < 1:
            raise ValueError("shatter exponent d must be >= 1")


@dataclass(frozen=True)
class Restriction:
    """Induced subsystem plus the id maps back to the parent system."""

    system: SetSystem
    element_ids: tuple          # new element id -> original element id
    set_ids: tuple              # new set id -> original set id


def build(edges, n_elements=None, n_sets=None) -> SetSystem:
    """Build a canonical SetSystem from (set_id, element_id) pairs.

    Duplicate edges are dropped. Side sizes default to 1 + max id seen;
    explicit sizes may only extend the sides (isolated ids are kept).
    """
    max_set = -1
    max_elem = -1
    pairs = set()
    for x, v in edges:
        if x < 0 or v < 0:
            raise SetSystemError(f"negative id in edge ({x}, {v})")
        pairs.add((x, v))
        if x > max_set:
            max_set = x
        if v > max_elem:
            max_elem = v
    if n_sets is None:
        n_sets = max_set + 1
    elif n_sets <= max_set:
        raise SetSystemError(f"declared |B|={n_sets} but saw set id {max_set}")
    if n_elements is None:
        n_elements = max_elem + 1
    elif n_elements <= max_elem:
        raise SetSystemError(f"declared |A|={n_elements} but saw element id {max_elem}")

    set_members = [[] for _ in range(n_sets)]
    element_sets = [[] for _ in range(n_elements)]
    for x, v in sorted(pairs):
        set_members[x].append(v)
        element_sets[v].append(x)
    for lst in element_sets:
        lst.sort()
    return SetSystem(
        n_elements=n_elements,
        n_sets=n_sets,
        set_members=tuple(tuple(m) for m in set_members),
        element_sets=tuple(tuple(s) for s in element_sets),
    )


def dual(s: SetSystem) -> SetSystem:
    """Swap the roles of elements and sets.

    Isolated ids on either side survive as isolated ids on the other, so
    dual(dual(s)) has the same shape as s.
    """
    return SetSystem(
        n_elements=s.n_sets,
        n_sets=s.n_elements,
        set_members=s.element_sets,
        element_sets=s.set_members,
    )


def restrict(s: SetSystem, elements, sets) -> Restriction:
    """Induced subsystem on the given element and set ids."""
    elem_ids = sorted(set(elements))
    set_ids = sorted(set(sets))
    for v in elem_ids:
        if not 0 <= v < s.n_elements:
            raise SetSystemError(f"element id {v} out of range")
    for x in set_ids:
        if not 0 <= x < s.n_sets:
            raise SetSystemError(f"set id {x} out of range")
    new_elem = {v: i for i, v in enumerate(elem_ids)}
    set_members = []
    for x in set_ids:
        set_members.append(tuple(new_elem[v] for v in s.set_members[x] if v in new_elem))
    element_sets = [[] for _ in elem_ids]
    for xi, mem in enumerate(set_members):
        for v in mem:
            element_sets[v].append(xi)
    sub = SetSystem(
        n_elements=len(elem_ids),
        n_sets=len(set_ids),
        set_members=tuple(set_members),
        element_sets=tuple(tuple(lst) for lst in element_sets),
    )
    return Restriction(system=sub, element_ids=tuple(elem_ids), set_ids=tuple(set_ids))


def _group_by_signature(n, signatures, side) -> Partition:
    """Group ids 0..n-1 by hashable signature; representative = smallest id."""
    class_by_sig = {}
    class_of = [0] * n
    representative = []
    for v in range(n):
        sig = signatures(v)
        c = class_by_sig.get(sig)
        if c is None:
            c = len(representative)
            class_by_sig[sig] = c
            representative.append(v)
        class_of[v] = c
    return Partition(side=side, class_of=tuple(class_of), representative=tuple(representative))


def twin_partition(s: SetSystem, side: str) -> Partition:
    """Coarsest partition of one side into classes of equal neighborhoods.

    Linear in |A| + |B| + |E| (expected, via hashing of the sorted
    neighborhood lists, which are canonical).
    """
    if side == "A":
        return _group_by_signature(s.n_elements, lambda v: s.element_sets[v], "A")
    if side == "B":
        return _group_by_signature(s.n_sets, lambda x: s.set_members[x], "B")
    raise ValueError(f"side must be 'A' or 'B', got {side!r}")


def near_twin_max_diff(s: SetSystem, p: Partition) -> int:
    """Smallest k such that p is a k-near twin partition of B with its reps.

    k = max over classes i, members v of |N(rep_i) symdiff N(v)|, computed
    via |N(u)| + |N(v)| - 2|N(u) & N(v)| with a flat mark array, so the
    whole scan is O(|A| + |B| + |E|).
    """
    if p.side != "B":
        raise ValueError("near-twin audit partitions the set side B")
    mark = bytearray(s.n_elements)
    best = 0
    for c, rep in enumerate(p.representative):
        rep_members = s.set_members[rep]
        for v in rep_members:
            mark[v] = 1
        rep_len = len(rep_members)
        for x in range(s.n_sets):
            if p.class_of[x] != c or x == rep:
                continue
            mem = s.set_members[x]
            inter = 0
            for v in mem:
                inter += mark[v]
            diff = rep_len + len(mem) - 2 * inter
            if diff > best:
                best = diff
        for v in rep_members:
            mark[v] = 0
    return best


def uniform_sample(n, s, rng):
    """Uniform s-subset of {0, .., n-1} via reservoir sampling, O(n) time.

    Returns a sorted list of s distinct ids; deterministic given rng state.
    """
    if not 0 <= s <= n:
        raise ValueError(f"sample size {s} out of range for universe {n}")
    reservoir = list(range(s))
    for i in range(s, n):
        j = rng.randrange(i + 1)
        if j < s:
            reservoir[j] = i
    reservoir.sort()
    return reservoir


# --- "ssys v1" text format and the JSON equivalent -------------------------

def to_ssys(s: SetSystem, comment=None) -> str:
    lines = []
    if comment:
        for line in comment.splitlines():
            lines.append(f"# {line}")
    lines.append(f"ssys {s.n_elements} {s.n_sets} {s.n_edges}")
    for x, mem in enumerate(s.set_members):
        lines.append(" ".join([str(x), str(len(mem))] + [str(v) for v in mem]))
    return "\n".join(lines) + "\n"


def from_ssys(text: str) -> SetSystem:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise SetSystemError("empty ssys input")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "ssys":
        raise SetSystemError(f"bad ssys header: {lines[0]!r}")
    try:
        n_a, n_b, n_e = int(head[1]), int(head[2]), int(head[3])
    except ValueError as exc:
        raise SetSystemError(f"bad ssys header: {lines[0]!r}") from exc
    edges = []
    seen_sets = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) < 2:
            raise SetSystemError(f"bad set line: {ln!r}")
        x, k = int(parts[0]), int(parts[1])
        if len(parts) != 2 + k:
            raise SetSystemError(f"set {x}: declared {k} members, got {len(parts) - 2}")
        if x in seen_sets:
            raise SetSystemError(f"duplicate set line for id {x}")
        seen_sets.add(x)
        for tok in parts[2:]:
            edges.append((x, int(tok)))
    s = build(edges, n_elements=n_a, n_sets=n_b)
    if s.n_edges != n_e:
        raise SetSystemError(f"header declares {n_e} edges, body has {s.n_edges}")
    return s


def to_json(s: SetSystem) -> str:
    return json.dumps({
        "a": s.n_elements,
        "b": s.n_sets,
        "e": s.n_edges,
        "sets": [list(m) for m in s.set_members],
    })


def from_json(text: str) -> SetSystem:
    try:
        obj = json.loads(text)
        n_a, n_b, n_e = obj["a"], obj["b"], obj["e"]
        members = obj["sets"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise SetSystemError(f"bad json set system: {exc}") from exc
    if len(members) != n_b:
        raise SetSystemError(f"declared |B|={n_b}, got {len(members)} sets")
    edges = [(x, v) for x, mem in enumerate(members) for v in mem]
    s = build(edges, n_elements=n_a, n_sets=n_b)
    if s.n_edges != n_e:
        raise SetSystemError(f"declared {n_e} edges, body has {s.n_edges}")
    return s
