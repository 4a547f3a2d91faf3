"""Cyclic orders: seatings of n labelled items around a table.

A cyclic order is an arrangement up to rotation; it is stored canonically as
the unique rotation whose sequence starts with label 0, so there are (n-1)!
distinct values for each n.  Relabelling by a permutation is a left action.
The module also provides the two enumeration orders used throughout (the
"paper" reference order for n in {4, 5}, which lists reversal pairs together,
and the lexicographic "canonical" order for any n), the fixed-order counting
character of the relabelling action both in closed form and by brute force,
transposition distance on the set of cyclic orders, and orbit classification
of ordered pairs under simultaneous relabelling.
"""
from __future__ import annotations

import json
import os
import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _words
from math import factorial

from .symmetric_group import (
    LETTERS,
    ClassFunction,
    Partition,
    Permutation,
    class_function,
    generators,
)

#: Reference enumeration for n=4: reversal pairs adjacent, (ACBD) first.
PAPER_ORDER_4 = ("ACBD", "ADBC", "ABCD", "ADCB", "ABDC", "ACDB")

#: Reference enumeration for n=5: reversal pairs adjacent, (ABCDE) first.
PAPER_ORDER_5 = (
    "ABCDE", "AEDCB", "ABCED", "ADECB", "ABDCE", "AECDB",
    "ABDEC", "ACEDB", "ABECD", "ADCEB", "ABEDC", "ACDEB",
    "ACBDE", "AEDBC", "ACDBE", "AEBDC", "ACEBD", "ADBEC",
    "ADBCE", "AECBD", "AEBCD", "ADCBE", "ACBED", "ADEBC",
)


@dataclass(frozen=True, order=True)
class CyclicOrder:
    """A cyclic order in canonical rotation: seq is a permutation starting at 0."""

    seq: tuple[int, ...]

    def __post_init__(self):
        n = len(self.seq)
        if sorted(self.seq) != list(range(n)):
            raise ValueError(f"labels must be 0..{n - 1} exactly once: {self.seq!r}")
        if self.seq[0] != 0:
            raise ValueError(f"not in canonical rotation (must start at 0): {self.seq!r}")

    @property
    def n(self) -> int:
        return len(self.seq)

    def __str__(self) -> str:
        return format_order(self)


def canonicalize(raw) -> CyclicOrder:
    """The unique rotation of raw that starts with label 0.

    >>> str(canonicalize((2, 1, 3, 0)))
    '(ACBD)'
    """
    raw = tuple(raw)
    if 0 not in raw:
        raise ValueError(f"no label 0 in {raw!r}")
    k = raw.index(0)
    return CyclicOrder(raw[k:] + raw[:k])


def format_order(x: CyclicOrder) -> str:
    if x.n > len(LETTERS):
        return "(" + ",".join(str(i) for i in x.seq) + ")"
    return "(" + "".join(LETTERS[i] for i in x.seq) + ")"


def parse_order(text: str) -> CyclicOrder:
    """Parse "(ACBD)", "ACBD", or "(0,2,1,3)"; any rotation is accepted."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1].strip()
    if re.fullmatch(r"[A-Z]+", body):
        labels = [LETTERS.index(ch) for ch in body]
    else:
        try:
            labels = [int(t) for t in re.split(r"[\s,]+", body) if t]
        except ValueError:
            raise ValueError(f"bad cyclic-order literal: {text!r}") from None
    if len(set(labels)) != len(labels) or sorted(labels) != list(range(len(labels))):
        raise ValueError(f"bad cyclic-order literal: {text!r}")
    return canonicalize(labels)


def act_on_order(sigma: Permutation, x: CyclicOrder) -> CyclicOrder:
    """Relabel every item of x by sigma (a left action).

    >>> from .symmetric_group import parse_permutation
    >>> str(act_on_order(parse_permutation("(0 1)", 4), parse_order("(ABCD)")))
    '(ACDB)'
    """
    if sigma.n != x.n:
        raise ValueError(f"degree mismatch: {sigma.n} vs {x.n}")
    return canonicalize(sigma.images[i] for i in x.seq)


def reverse_order(x: CyclicOrder) -> CyclicOrder:
    """The cyclic order read backwards; an involution.

    >>> str(reverse_order(parse_order("(ABCDE)")))
    '(AEDCB)'
    """
    return canonicalize(tuple(reversed(x.seq)))


@dataclass(frozen=True)
class OrderingTable:
    """An indexed enumeration of all cyclic orders for one n."""

    n: int
    kind: str
    orders: tuple[CyclicOrder, ...]

    def __len__(self) -> int:
        return len(self.orders)

    def __iter__(self):
        return iter(self.orders)

    def __getitem__(self, i: int) -> CyclicOrder:
        return self.orders[i]

    def index_of(self, x: CyclicOrder) -> int:
        return _table_index(self)[x]


@lru_cache(maxsize=None)
def _table_index(table: OrderingTable) -> dict[CyclicOrder, int]:
    return {x: i for i, x in enumerate(table.orders)}


@lru_cache(maxsize=None)
def enumerate_orders(n: int, kind: str = "canonical") -> OrderingTable:
    """All (n-1)! cyclic orders, in the requested enumeration order."""
    if n < 1:
        raise ValueError("n must be positive")
    if kind == "paper":
        if n == 4:
            words = PAPER_ORDER_4
        elif n == 5:
            words = PAPER_ORDER_5
        else:
            raise ValueError(f"no paper ordering for n={n}; use canonical")
        return OrderingTable(n, kind, tuple(parse_order(w) for w in words))
    if kind != "canonical":
        raise ValueError(f"unknown ordering kind: {kind!r}")
    orders = tuple(CyclicOrder((0, *rest)) for rest in _words(range(1, n)))
    return OrderingTable(n, kind, orders)


def count_fixed_orders(sigma: Permutation) -> int:
    """Brute-force count of cyclic orders left unchanged by sigma."""
    return sum(1 for x in enumerate_orders(sigma.n) if act_on_order(sigma, x) == x)


def _totient(d: int) -> int:
    count = 0
    for k in range(1, d + 1):
        a, b = k, d
        while b:
            a, b = b, a % b
        count += a == 1
    return count


def co_character(n: int) -> ClassFunction:
    """Fixed-order counts of the relabelling action, in closed form.

    Only cycle types with all parts equal to some divisor d of n fix any
    cyclic order; such a class with e = n/d parts has e! * d**e * phi(d) / n
    fixed orders.  Everything else contributes zero.
    """
    if n < 3:
        raise ValueError("cyclic orders need n >= 3")

    def value(mu: Partition) -> int:
        d = mu.parts[0]
        if any(p != d for p in mu.parts):
            return 0
        e = n // d
        return factorial(e) * d**e * _totient(d) // n

    return class_function(n, value)


# -- transposition distance -------------------------------------------------

def _cache_path(n: int) -> str | None:
    root = os.environ.get("CYCLEVOTE_CACHE_DIR")
    if not root:
        return None
    return os.path.join(root, f"distance{n}.json")


def _adjacent_swaps(x: CyclicOrder) -> list[CyclicOrder]:
    """Orders obtained by one simple transposition: swap two adjacent seats."""
    out = []
    n = x.n
    for i in range(n):
        word = list(x.seq)
        word[i], word[(i + 1) % n] = word[(i + 1) % n], word[i]
        out.append(canonicalize(word))
    return out


@lru_cache(maxsize=None)
def _distance_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """All-pairs transposition distance on the canonical table, BFS per source."""
    path = _cache_path(n)
    if path and os.path.exists(path):
        with open(path) as fh:
            return tuple(tuple(row) for row in json.load(fh))
    table = enumerate_orders(n)
    neighbours = [
        [table.index_of(y) for y in _adjacent_swaps(x)] for x in table
    ]
    rows = []
    for src in range(len(table)):
        dist = [-1] * len(table)
        dist[src] = 0
        queue = deque([src])
        while queue:
            i = queue.popleft()
            for j in neighbours[i]:
                if dist[j] < 0:
                    dist[j] = dist[i] + 1
                    queue.append(j)
        rows.append(tuple(dist))
    matrix = tuple(rows)
    if path:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w") as fh:
            json.dump([list(r) for r in matrix], fh)
    return matrix


def transposition_distance(x: CyclicOrder, y: CyclicOrder) -> int:
    """Fewest simple transpositions (adjacent-seat swaps) turning x into y.

    Swapping the labels at two adjacent seats is the relabelling by the
    transposition of those two labels, so this is a graph distance on the set
    of cyclic orders and is invariant under joint relabelling.
    """
    if x.n != y.n:
        raise ValueError(f"degree mismatch: {x.n} vs {y.n}")
    table = enumerate_orders(x.n)
    return _distance_matrix(x.n)[table.index_of(x)][table.index_of(y)]


# -- orbit classification of pairs ------------------------------------------

@dataclass(frozen=True)
class PairClass:
    """The orbit of an ordered pair of cyclic orders under joint relabelling."""

    tag: str
    representative: tuple[CyclicOrder, CyclicOrder]

    def __str__(self) -> str:
        return self.tag


#: Orbit names for n=5, each anchored at a pair whose first entry is (ABCDE).
_PAIR_NAMES_5 = (
    ("Same", "ABCDE"),
    ("Reversal", "AEDCB"),
    ("Transposition", "ABCED"),
    ("TranspositionReversal", "ADECB"),
    ("ThreeCycle", "ABDEC"),
    ("DoubleTransposition", "ACEDB"),
    ("Step", "ACEBD"),
    ("StepReversal", "ADBEC"),
)

_PAIR_NAMES_4 = (
    ("Same", "ACBD"),
    ("Reversal", "ADBC"),
    ("Other", "ABCD"),
)


def _orbit_representative(x: CyclicOrder, y: CyclicOrder) -> tuple[CyclicOrder, CyclicOrder]:
    gens = generators(x.n)
    seen = {(x, y)}
    queue = deque([(x, y)])
    while queue:
        a, b = queue.popleft()
        for g in gens:
            nxt = (act_on_order(g, a), act_on_order(g, b))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return min(seen)


@lru_cache(maxsize=None)
def _named_representatives(n: int) -> dict[tuple[CyclicOrder, CyclicOrder], str]:
    names = {4: _PAIR_NAMES_4, 5: _PAIR_NAMES_5}.get(n, ())
    base = parse_order("ABCDE" if n == 5 else "ACBD") if names else None
    out = {}
    for tag, second in names:
        out[_orbit_representative(base, parse_order(second))] = tag
    return out


def classify_pair(x: CyclicOrder, y: CyclicOrder) -> PairClass:
    """The orbit of (x, y) under the diagonal relabelling action.

    For n in {4, 5} the orbits carry fixed names (for n=5: Same, Reversal,
    Transposition, TranspositionReversal, ThreeCycle, DoubleTransposition,
    Step, StepReversal); elsewhere the tag is the canonical representative.
    """
    if x.n != y.n:
        raise ValueError(f"degree mismatch: {x.n} vs {y.n}")
    rep = _orbit_representative(x, y)
    tag = _named_representatives(x.n).get(rep)
    if tag is None:
        tag = f"{rep[0]}~{rep[1]}"
    return PairClass(tag, rep)


def pair_orbit_count(n: int) -> int:
    """Number of diagonal orbits on ordered pairs of cyclic orders."""
    table = enumerate_orders(n)
    reps = {_orbit_representative(x, y) for x in table for y in table}
    return len(reps)
