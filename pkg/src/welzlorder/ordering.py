"""Total orders on ground elements with O(1) insert-after.

The order is a linked chain over element ids (successor/predecessor maps),
which is what the reconstruction phase of the order engines needs: popping
(v, v_rep) pairs off a stack and splicing each v right after its
representative costs O(1) per insertion.
"""

from __future__ import annotations


class OrderError(ValueError):
    pass


_HEAD = -1  # sentinel before the first element


class Order:
    """A total order on a set of element ids."""

    def __init__(self, elements=()):
        self._succ = {_HEAD: None}
        self._pred = {}
        self._tail = _HEAD
        for v in elements:
            self.append(v)

    def __len__(self):
        return len(self._pred)

    def __contains__(self, v):
        return v in self._pred

    def __iter__(self):
        v = self._succ[_HEAD]
        while v is not None:
            yield v
            v = self._succ[v]

    def append(self, v):
        self.insert_after(v, self._tail)

    def insert_after(self, v, anchor):
        """Splice v immediately after anchor (anchor must be present)."""
        if v in self._pred:
            raise OrderError(f"element {v} already in order")
        if anchor != _HEAD and anchor not in self._pred:
            raise OrderError(f"anchor {anchor} not in order")
        nxt = self._succ[anchor]
        self._succ[anchor] = v
        self._succ[v] = nxt
        self._pred[v] = anchor
        if nxt is None:
            self._tail = v
        else:
            self._pred[nxt] = v

    def to_list(self):
        return list(self)

    def positions(self):
        """Element id -> 0-based position in the order."""
        return {v: i for i, v in enumerate(self)}

    def __eq__(self, other):
        if not isinstance(other, Order):
            return NotImplemented
        return self.to_list() == other.to_list()

    def __repr__(self):
        seq = self.to_list()
        if len(seq) > 12:
            shown = ", ".join(map(str, seq[:12]))
            return f"Order([{shown}, ... {len(seq)} elements])"
        return f"Order({seq})"


def check_permutation(order: Order, n_elements: int):
    """Require the order to be a bijection on ids 0..n_elements-1."""
    seen = order.to_list()
    if len(seen) != n_elements or set(seen) != set(range(n_elements)):
        raise OrderError(f"order is not a permutation of 0..{n_elements - 1}")


def reconstruct(base: Order, stack) -> Order:
    """Pop (v, v_rep) pairs in reverse insertion order; insert v after v_rep.

    The base order is extended in place and returned. Each first coordinate
    must be absent from the base; a representative missing at pop time is an
    internal invariant violation and raises hard.
    """
    for v, rep in reversed(stack):
        if rep not in base:
            raise OrderError(f"representative {rep} missing when inserting {v}")
        base.insert_after(v, rep)
    return base


def serialize_order(order: Order) -> str:
    """One element id per line, in order position."""
    return "\n".join(str(v) for v in order) + "\n"


def parse_order(text: str) -> Order:
    elems = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        try:
            elems.append(int(ln))
        except ValueError as exc:
            raise OrderError(f"bad order line: {ln!r}") from exc
    order = Order()
    for v in elems:
        order.append(v)
    return order
