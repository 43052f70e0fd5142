"""Undirected simple graphs with 1-based vertices, G(n,p) generation, DIMACS I/O.

Vertices are numbered 1..n throughout (DIMACS convention).  Bitmask views use
bit position v for vertex v, so bit 0 is always clear.
"""

from __future__ import annotations

from .rng import RngStream


class DimacsError(ValueError):
    """Raised for malformed DIMACS edge-format input."""


class Graph:
    """Immutable undirected simple graph.

    Attributes:
        n: vertex count; vertices are 1..n.
        edges: frozenset of (u, v) pairs with u < v.
        adj: tuple indexed by vertex (entry 0 unused) of sorted neighbor tuples.
        adj_bits: per-vertex open-neighborhood bitmask (bit v = vertex v).
        closed_bits: per-vertex closed-neighborhood bitmask (includes the vertex).
        all_bits: bitmask with bits 1..n set.
    """

    __slots__ = ("n", "edges", "adj", "adj_bits", "closed_bits", "all_bits")

    def __init__(self, n: int, edges):
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        seen = set()
        nbrs: list[set[int]] = [set() for _ in range(n + 1)]
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"vertex out of range in edge {e}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.edges = frozenset(seen)
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        bits = [0] * (n + 1)
        for u, v in seen:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.adj_bits = tuple(bits)
        self.closed_bits = tuple(b | (1 << v) for v, b in enumerate(bits))
        self.all_bits = (1 << (n + 1)) - 2

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_bits[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def gnp_generate(n: int, p: float, seed: int) -> Graph:
    """Seeded G(n,p): each pair joined independently with probability p.

    Pairs are decided in lexicographic order (1,2), (1,3), ..., (n-1,n); a pair
    is an edge iff the stream's next unit draw is < p.  One draw is consumed per
    pair regardless of outcome, so graphs for the same (n, seed) are coupled
    across p: raising p only ever adds edges.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = RngStream(seed)
    edges = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.next_unit() < p:
                edges.append((i, j))
    return Graph(n, edges)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS edge format: header ``p edge n m`` then m lines ``e u v``.

    Comment lines starting with 'c' and blank lines are ignored.  Raises
    :class:`DimacsError` naming the offending 1-based line on malformed input.
    """
    n = m = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n >= 0:
                raise DimacsError(f"duplicate header, line {lineno}")
            if len(parts) != 4 or parts[1] != "edge":
                raise DimacsError(f"malformed header, line {lineno}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"malformed header, line {lineno}") from None
            if n < 1 or m < 0:
                raise DimacsError(f"malformed header, line {lineno}")
        elif parts[0] == "e":
            if n < 0:
                raise DimacsError(f"edge before header, line {lineno}")
            if len(parts) != 3:
                raise DimacsError(f"malformed edge, line {lineno}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(f"malformed edge, line {lineno}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"vertex out of range, line {lineno}")
            if u == v:
                raise DimacsError(f"self-loop, line {lineno}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DimacsError(f"duplicate edge, line {lineno}")
            seen.add(key)
            edges.append(key)
        else:
            raise DimacsError(f"unrecognized line type {parts[0]!r}, line {lineno}")
    if n < 0:
        raise DimacsError("missing header")
    if len(edges) != m:
        raise DimacsError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def write_dimacs(g: Graph) -> str:
    """Canonical DIMACS text: header then edges sorted by (u, v)."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
