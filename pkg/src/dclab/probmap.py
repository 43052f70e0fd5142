"""Per-vertex Bernoulli parameters and their interchange text format.

The ``probmap v1`` format is the contract between the trainer and the solver:

    probmap v1 <n>
    1 <p1>
    ...
    n <pn>

Probabilities are written with 12 decimal places so a round trip preserves
values to within 1e-12 absolute.
"""

from __future__ import annotations

from dataclasses import dataclass


class ProbMapError(ValueError):
    """Raised for malformed probmap v1 input."""


@dataclass(frozen=True)
class ProbMap:
    """Bernoulli parameter per vertex; entry i-1 belongs to vertex i."""

    n: int
    p: tuple[float, ...]

    def __post_init__(self):
        if len(self.p) != self.n:
            raise ProbMapError(f"expected {self.n} probabilities, got {len(self.p)}")
        for i, x in enumerate(self.p, start=1):
            if not 0.0 <= x <= 1.0:
                raise ProbMapError(f"probability out of range for vertex {i}: {x}")

    @classmethod
    def uniform(cls, n: int, p0: float) -> "ProbMap":
        return cls(n, (p0,) * n)

    @classmethod
    def from_values(cls, values) -> "ProbMap":
        vals = tuple(float(x) for x in values)
        return cls(len(vals), vals)

    def value(self, v: int) -> float:
        """Probability for vertex v (1-based)."""
        return self.p[v - 1]


def read_probmap(text: str) -> ProbMap:
    """Parse probmap v1 text; raises :class:`ProbMapError` on any malformation."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ProbMapError("empty probmap")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "probmap" or head[1] != "v1":
        raise ProbMapError(f"malformed header: {lines[0]!r}")
    try:
        n = int(head[2])
    except ValueError:
        raise ProbMapError(f"malformed header: {lines[0]!r}") from None
    if len(lines) - 1 != n:
        raise ProbMapError(f"header declares {n} entries, found {len(lines) - 1}")
    values = []
    for k, line in enumerate(lines[1:], start=1):
        parts = line.split()
        if len(parts) != 2:
            raise ProbMapError(f"malformed entry, line {k + 1}")
        try:
            idx, val = int(parts[0]), float(parts[1])
        except ValueError:
            raise ProbMapError(f"malformed entry, line {k + 1}") from None
        if idx != k:
            raise ProbMapError(f"index mismatch, line {k + 1}: expected {k}, got {idx}")
        if not 0.0 <= val <= 1.0:
            raise ProbMapError(f"probability out of range, line {k + 1}: {val}")
        values.append(val)
    return ProbMap(n, tuple(values))


def write_probmap(pm: ProbMap) -> str:
    lines = [f"probmap v1 {pm.n}"]
    lines.extend(f"{i} {x:.12f}" for i, x in enumerate(pm.p, start=1))
    return "\n".join(lines) + "\n"
