"""Exact dominating-clique search with pluggable branching heuristics.

The existence solver keeps a partial clique D, the set S of variables still
compatible with D (candidates adjacent to everything in D), and the set U of
clauses not yet satisfied.  At each node one clause of U is chosen by the
branch selector, and its candidate variables are assigned 1 in turn; a failed
variable is removed from the running candidate set so sibling subtrees never
revisit it.

The minimization solver explores the whole tree, keeps the smallest dominating
clique seen, orders a clause's variables by how many unsatisfied clauses each
one would satisfy, and can optionally backjump: an improved incumbent unwinds
three recursion levels, and reaching a depth equal to the incumbent size
unwinds two.  Both prunings are lossless for the minimum size under the
coverage-descending variable order (a one-step completion, if any exists, is
always tried first), so backjumping changes branch counts but never min_size.

Branch accounting: one branch per assignment of a variable to 1.  Recursive
calls are counted separately in SolveReport.calls.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .cnf import CnfInstance, encode_cnf
from .graph import Graph
from .oracle import is_dominating_clique
from .probmap import ProbMap
from .probmodel import _accurate_entropy, _xlog2x, bernoulli_entropy, softmax_reweigh

POLICIES = ("mrv", "entropy-fast", "entropy-accurate")
VAR_ORDERS = ("index", "coverage")


@dataclass(frozen=True)
class BranchSelector:
    """Clause-choice policy; entropy policies need a probability map."""

    policy: str = "mrv"
    probmap: ProbMap | None = None
    temperature: float = 1.0

    def __post_init__(self):
        if self.policy not in POLICIES:
            raise ValueError(f"unknown policy {self.policy!r}; expected one of {POLICIES}")
        if self.policy != "mrv" and self.probmap is None:
            raise ValueError(f"policy {self.policy!r} requires a probability map")
        if self.temperature <= 0.0:
            raise ValueError(f"temperature must be positive, got {self.temperature}")


@dataclass
class SearchState:
    """One node of the search: partial clique, candidates, open clauses.

    S and U are bitmasks (bit v = vertex v / clause v); D grows by one vertex
    per recursion level, so depth == len(D).
    """

    graph: Graph
    cnf: CnfInstance
    D: list[int]
    S: int
    U: int
    depth: int = 0
    branches: int = 0
    var_order: str = "index"

    @classmethod
    def initial(cls, cnf: CnfInstance, g: Graph, var_order: str = "index") -> "SearchState":
        if var_order not in VAR_ORDERS:
            raise ValueError(f"unknown variable order {var_order!r}; expected one of {VAR_ORDERS}")
        all_bits = (1 << (g.n + 1)) - 2
        return cls(g, cnf, [], all_bits, all_bits, var_order=var_order)

    def candidate_vars(self) -> set[int]:
        return set(_bit_list(self.S))

    def open_clauses(self) -> set[int]:
        return set(_bit_list(self.U))


@dataclass(frozen=True)
class SolveReport:
    outcome: str                    # "found" | "not-found"
    solution: tuple[int, ...] = ()
    min_size: int | None = None
    branches: int = 0
    calls: int = 0
    backjumps: int = 0
    elapsed: float = 0.0

    @property
    def found(self) -> bool:
        return self.outcome == "found"


def _bit_list(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def _containing_masks(cnf: CnfInstance) -> list[int]:
    """For each variable, the bitmask of clause indices that contain it."""
    masks = [0] * (cnf.n + 1)
    for i, clause in enumerate(cnf.clauses, start=1):
        bit = 1 << i
        for v in clause:
            masks[v] |= bit
    return masks


def _node_weights(sel: BranchSelector, S: int, n: int) -> list[float]:
    """Softmax re-weighting of the map's probabilities over the active variables.

    Recomputed at every branching node; returns a 0-based per-vertex list with
    zeros for variables outside S.
    """
    active = _bit_list(S)
    pvals = sel.probmap.p
    weights = softmax_reweigh([pvals[v - 1] for v in active], sel.temperature)
    arr = [0.0] * n
    for v, w in zip(active, weights):
        arr[v - 1] = w
    return arr


def _ordered_vars(cand: int, U: int, containing: list[int], var_order: str) -> list[int]:
    """Iteration order of a clause's candidate variables.

    "index": ascending vertex index.  "coverage": descending count of open
    clauses the variable would satisfy, ties by ascending index.
    """
    vs = _bit_list(cand)
    if var_order == "coverage":
        vs.sort(key=lambda v: (-(containing[v] & U).bit_count(), v))
    return vs


def _select_clause(g: Graph, cnf: CnfInstance, S: int, U: int,
                   sel: BranchSelector, var_order: str,
                   containing: list[int]) -> int:
    """Clause of U minimizing the selector's score; ties to the smallest index."""
    clause_bits = cnf.clause_bits
    if S == 0:
        # No candidates anywhere: every clause scores the same, tie rule applies
        # (the caller then fails on the empty intersection).
        return (U & -U).bit_length() - 1
    if sel.policy == "mrv":
        best_c, best = -1, 1 << 62
        u = U
        while u:
            low = u & -u
            c = low.bit_length() - 1
            size = (clause_bits[c - 1] & S).bit_count()
            if size < best:
                best, best_c = size, c
            u ^= low
        return best_c

    weights = _node_weights(sel, S, g.n)
    h_cache: dict[int, float] = {}
    hsum_cache: dict[int, float] = {}
    fast = sel.policy == "entropy-fast"
    best_c, best_score = -1, float("inf")
    u = U
    while u:
        low = u & -u
        c = low.bit_length() - 1
        cand = clause_bits[c - 1] & S
        if fast:
            score = 0.0
            q = 1.0
            rest = cand
            while rest:
                lv = rest & -rest
                v = lv.bit_length() - 1
                h = h_cache.get(v)
                if h is None:
                    h = bernoulli_entropy(weights[v - 1])
                    h_cache[v] = h
                score += h
                q *= 1.0 - weights[v - 1]
                rest ^= lv
            score -= _xlog2x(q)
        else:
            vs = _ordered_vars(cand, U, containing, var_order)
            score = _accurate_entropy(g.adj_bits, weights, vs, h_cache, hsum_cache)
        if score < best_score:
            best_score, best_c = score, c
        u ^= low
    return best_c


def select_branch_clause(state: SearchState, sel: BranchSelector) -> int:
    """Public selector entry point; requires a non-empty clause set."""
    if state.U == 0:
        raise ValueError("no open clauses to select from")
    containing = _containing_masks(state.cnf)
    return _select_clause(state.graph, state.cnf, state.S, state.U, sel,
                          state.var_order, containing)


def _validate(cnf: CnfInstance, g: Graph, sel: BranchSelector) -> None:
    if cnf != encode_cnf(g):
        raise ValueError("CNF instance does not encode this graph")
    if sel.probmap is not None and sel.probmap.n != g.n:
        raise ValueError(f"probability map has {sel.probmap.n} entries, graph has {g.n} vertices")


def _assert_invariants(g: Graph, containing: list[int], D: list[int], S: int, U: int) -> None:
    for i, a in enumerate(D):
        for b in D[i + 1:]:
            assert g.has_edge(a, b), f"partial solution {D} is not a clique"
    for v in _bit_list(S):
        assert v not in D, f"candidate {v} already chosen"
        for d in D:
            assert g.has_edge(v, d), f"candidate {v} not adjacent to chosen {d}"
    cover = 0
    for d in D:
        cover |= containing[d]
    assert U == ((1 << (g.n + 1)) - 2) & ~cover, "open-clause set out of sync with D"


def solve_dc(cnf: CnfInstance, g: Graph, sel: BranchSelector,
             check_invariants: bool = False) -> SolveReport:
    """Decide dominating-clique existence; returns the first one found."""
    _validate(cnf, g, sel)
    start = time.perf_counter()
    containing = _containing_masks(cnf)
    clause_bits = cnf.clause_bits
    adj = g.adj_bits
    branches = 0
    calls = 0
    solution: list[int] = []
    D: list[int] = []

    def rec(S: int, U: int) -> bool:
        nonlocal branches, calls
        calls += 1
        if check_invariants:
            _assert_invariants(g, containing, D, S, U)
        if U == 0:
            solution.extend(D)
            return True
        c = _select_clause(g, cnf, S, U, sel, "index", containing)
        cand = clause_bits[c - 1] & S
        if cand == 0:
            return False
        running = S
        for v in _ordered_vars(cand, U, containing, "index"):
            branches += 1
            D.append(v)
            if rec(running & adj[v], U & ~containing[v]):
                return True
            D.pop()
            running &= ~(1 << v)
        return False

    all_bits = (1 << (g.n + 1)) - 2
    found = rec(all_bits, all_bits)
    elapsed = time.perf_counter() - start
    if found:
        assert is_dominating_clique(g, solution), f"solver returned a non-solution {solution}"
        return SolveReport("found", tuple(solution), None, branches, calls, 0, elapsed)
    return SolveReport("not-found", (), None, branches, calls, 0, elapsed)


def solve_min_dc(cnf: CnfInstance, g: Graph, sel: BranchSelector,
                 backjumping: bool = True, check_invariants: bool = False) -> SolveReport:
    """Find a minimum dominating clique by exhausting the search tree.

    The incumbent's size also prunes: with backjumping enabled, an improved
    incumbent returns an unwind budget of 2 (three levels including the
    discovery node) and hitting depth == incumbent size returns 1 (two
    levels); each ancestor receiving a positive budget skips its remaining
    siblings and passes the budget down by one.
    """
    _validate(cnf, g, sel)
    start = time.perf_counter()
    containing = _containing_masks(cnf)
    clause_bits = cnf.clause_bits
    adj = g.adj_bits
    branches = 0
    calls = 0
    backjumps = 0
    best: list[int] | None = None
    D: list[int] = []

    def rec(S: int, U: int, depth: int) -> int:
        nonlocal branches, calls, backjumps, best
        calls += 1
        if check_invariants:
            _assert_invariants(g, containing, D, S, U)
        if U == 0:
            if best is None or len(D) < len(best):
                best = list(D)
                if backjumping:
                    backjumps += 1
                    return 2
            elif backjumping and depth >= len(best):
                backjumps += 1
                return 1
            return 0
        if backjumping and best is not None and depth >= len(best):
            backjumps += 1
            return 1
        c = _select_clause(g, cnf, S, U, sel, "coverage", containing)
        cand = clause_bits[c - 1] & S
        if cand == 0:
            return 0
        running = S
        for v in _ordered_vars(cand, U, containing, "coverage"):
            branches += 1
            D.append(v)
            jump = rec(running & adj[v], U & ~containing[v], depth + 1)
            D.pop()
            running &= ~(1 << v)
            if jump > 0:
                return jump - 1
        return 0

    all_bits = (1 << (g.n + 1)) - 2
    rec(all_bits, all_bits, 0)
    elapsed = time.perf_counter() - start
    if best is not None:
        assert is_dominating_clique(g, best), f"solver returned a non-solution {best}"
        return SolveReport("found", tuple(best), len(best), branches, calls, backjumps, elapsed)
    return SolveReport("not-found", (), None, branches, calls, backjumps, elapsed)
