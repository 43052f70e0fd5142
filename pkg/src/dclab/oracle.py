"""Brute-force ground truth for small graphs.

Everything here favors obviousness over speed: exhaustive enumeration with
loud guards on the feasible sizes.  These routines are the reference against
which the solver, the closed-form probabilities, and every bound are checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .graph import Graph
from .probmap import ProbMap

ENUM_DC_LIMIT = 25
ENUM_PROB_LIMIT = 20
ENUM_EVENT_LIMIT = 15
MAX_CLIQUE_LIMIT = 200


def _bits_to_set(bits: int) -> frozenset[int]:
    out = set()
    while bits:
        low = bits & -bits
        out.add(low.bit_length() - 1)
        bits ^= low
    return frozenset(out)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    """Pairwise adjacency check; empty sets and singletons count as cliques."""
    vs = sorted(set(s))
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            if not g.has_edge(vs[a], vs[b]):
                return False
    return True


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex outside s has a neighbor in s (empty set never dominates)."""
    members = set(s)
    if not members:
        return False
    for v in range(1, g.n + 1):
        if v in members:
            continue
        if not any(u in members for u in g.adj[v]):
            return False
    return True


def is_dominating_clique(g: Graph, s: Iterable[int]) -> bool:
    return is_clique(g, s) and is_dominating(g, s)


@dataclass(frozen=True)
class EventPredicate:
    """A named family of vertex subsets: clique, dominating, their conjunction,
    or an explicit custom list."""

    kind: str
    members: tuple[frozenset[int], ...] | None = None

    _KINDS = ("clique", "dominating", "dominating-clique", "custom")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown predicate kind {self.kind!r}")
        if (self.kind == "custom") != (self.members is not None):
            raise ValueError("custom predicates take a member list; named kinds do not")

    @classmethod
    def clique(cls) -> "EventPredicate":
        return cls("clique")

    @classmethod
    def dominating(cls) -> "EventPredicate":
        return cls("dominating")

    @classmethod
    def dominating_clique(cls) -> "EventPredicate":
        return cls("dominating-clique")

    @classmethod
    def custom(cls, subsets: Iterable[Iterable[int]]) -> "EventPredicate":
        return cls("custom", tuple(sorted({frozenset(s) for s in subsets}, key=sorted)))

    def checker(self, g: Graph) -> Callable[[frozenset[int]], bool]:
        if self.kind == "clique":
            return lambda s: is_clique(g, s)
        if self.kind == "dominating":
            return lambda s: is_dominating(g, s)
        if self.kind == "dominating-clique":
            return lambda s: is_dominating_clique(g, s)
        members = set(self.members or ())
        return lambda s: s in members


def event_members(g: Graph, pred: EventPredicate) -> list[frozenset[int]]:
    """All subsets of V satisfying the predicate, by full enumeration."""
    if g.n > ENUM_EVENT_LIMIT:
        raise ValueError(f"event enumeration limited to n <= {ENUM_EVENT_LIMIT}, got {g.n}")
    if pred.kind == "custom":
        return list(pred.members or ())
    holds = pred.checker(g)
    out = []
    for bits in range(1 << g.n):
        s = frozenset(v + 1 for v in range(g.n) if (bits >> v) & 1)
        if holds(s):
            out.append(s)
    return out


def is_increasing_event(members: Iterable[frozenset[int]], n: int) -> bool:
    """True iff the family is closed under supersets (checked by enumeration)."""
    family = set(members)
    for s in family:
        for v in range(1, n + 1):
            if v not in s and frozenset(s | {v}) not in family:
                return False
    return True


def is_decreasing_event(members: Iterable[frozenset[int]], n: int) -> bool:
    """True iff the family is closed under subsets (checked by enumeration)."""
    family = set(members)
    for s in family:
        for v in s:
            if frozenset(s - {v}) not in family:
                return False
    return True


def enumerate_dominating_cliques(g: Graph) -> tuple[list[frozenset[int]], int | None]:
    """All dominating cliques and the minimum size, or ([], None) when none exist.

    Enumerates cliques by recursive extension (cheaper than scanning all 2^n
    subsets on sparse graphs) and keeps the ones that also dominate.
    """
    if g.n > ENUM_DC_LIMIT:
        raise ValueError(f"dominating-clique enumeration limited to n <= {ENUM_DC_LIMIT}, got {g.n}")
    found: list[frozenset[int]] = []

    def extend(clique_bits: int, cover_bits: int, cand: int, min_next: int) -> None:
        if cover_bits == g.all_bits:
            found.append(_bits_to_set(clique_bits))
        rest = cand & ~((1 << min_next) - 1)
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            extend(clique_bits | low, cover_bits | g.closed_bits[v], cand & g.adj_bits[v], v + 1)
            rest ^= low

    extend(0, 0, g.all_bits, 1)
    if not found:
        return [], None
    return found, min(len(s) for s in found)


def exact_event_probability(g: Graph, pm: ProbMap, pred: EventPredicate) -> float:
    """Exact measure of the event under the product Bernoulli model."""
    if g.n > ENUM_PROB_LIMIT:
        raise ValueError(f"probability enumeration limited to n <= {ENUM_PROB_LIMIT}, got {g.n}")
    if pm.n != g.n:
        raise ValueError("probability map does not match graph")
    if pred.kind == "custom":
        total = 0.0
        for s in set(pred.members or ()):
            prob = 1.0
            for v in range(1, g.n + 1):
                prob *= pm.p[v - 1] if v in s else 1.0 - pm.p[v - 1]
            total += prob
        return total
    holds = pred.checker(g)
    total = 0.0

    def walk(v: int, bits: frozenset[int], prob: float) -> None:
        nonlocal total
        if v > g.n:
            if holds(bits):
                total += prob
            return
        pv = pm.p[v - 1]
        if pv < 1.0:
            walk(v + 1, bits, prob * (1.0 - pv))
        if pv > 0.0:
            walk(v + 1, bits | {v}, prob * pv)

    walk(1, frozenset(), 1.0)
    return total


def event_from_permutation(g: Graph, order) -> list[frozenset[int]]:
    """Materialize the subset family generated by a vertex permutation.

    Position i contributes every subset that contains order[i], avoids all
    earlier vertices, and stays inside the closed neighborhood of order[i].
    """
    if g.n > ENUM_EVENT_LIMIT:
        raise ValueError(f"event materialization limited to n <= {ENUM_EVENT_LIMIT}, got {g.n}")
    seq = list(order)
    if sorted(seq) != list(range(1, g.n + 1)):
        raise ValueError("order must be a permutation of 1..n")
    out: list[frozenset[int]] = []
    earlier: set[int] = set()
    for v in seq:
        free = [u for u in g.adj[v] if u not in earlier]
        for bits in range(1 << len(free)):
            s = {v}
            for k, u in enumerate(free):
                if (bits >> k) & 1:
                    s.add(u)
            out.append(frozenset(s))
        earlier.add(v)
    return out


def exact_max_clique(g: Graph) -> tuple[frozenset[int], int]:
    """A maximum clique and its (exact) size, via branch and bound.

    Candidates are greedily colored at each node; the color count plus the
    current clique size bounds what the subtree can reach, pruning most of it.
    """
    if g.n > MAX_CLIQUE_LIMIT:
        raise ValueError(f"max-clique search limited to n <= {MAX_CLIQUE_LIMIT}, got {g.n}")
    best: list[int] = []
    adj = g.adj_bits

    def color_sort(cand: int) -> list[tuple[int, int]]:
        # Greedy coloring: returns (vertex, color) ordered by ascending color.
        # Each color class is an independent set, so |current| + color bounds
        # the largest clique reachable through the candidates up to that point.
        ordered: list[tuple[int, int]] = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                ordered.append((v, color))
                rest ^= low
                avail &= ~adj[v]
                avail &= ~low
        return ordered

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        ordered = color_sort(cand)
        for v, color in reversed(ordered):
            if len(current) + color <= len(best):
                return
            current.append(v)
            sub = cand & adj[v]
            if sub:
                expand(current, sub)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    expand([], g.all_bits)
    return frozenset(best), len(best)
