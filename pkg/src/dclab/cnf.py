"""CNF encoding of the dominating-clique decision problem.

One variable per vertex (X_v = 1 means v is in the solution) and one clause
per vertex holding the variables of its closed neighborhood: clause i is
satisfied when v_i itself or one of its neighbors is picked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph


@dataclass(frozen=True)
class CnfInstance:
    """Clause i (1-based) lists the variable indices of N[v_i], sorted ascending."""

    n: int
    clauses: tuple[tuple[int, ...], ...]
    clause_bits: tuple[int, ...] = field(compare=False)

    def clause(self, i: int) -> tuple[int, ...]:
        return self.clauses[i - 1]

    def bits(self, i: int) -> int:
        return self.clause_bits[i - 1]


def encode_cnf(g: Graph) -> CnfInstance:
    clauses = tuple(tuple(sorted(g.adj[v] + (v,))) for v in range(1, g.n + 1))
    bits = tuple(g.closed_bits[v] for v in range(1, g.n + 1))
    return CnfInstance(g.n, clauses, bits)
