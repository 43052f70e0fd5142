"""Interchange formats shared with the solver package: DIMACS graphs in,
probmap v1 files out, manifests for locating instances.

This package talks to the solver exclusively through these files; the parsers
here are intentionally minimal re-implementations of the published formats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class GraphFile:
    n: int
    edges: tuple[tuple[int, int], ...]  # 1-based, u < v


def read_dimacs(path: Path | str) -> GraphFile:
    n = m = -1
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"{path}: malformed header, line {lineno}")
            n, m = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            u, v = int(parts[1]), int(parts[2])
            if u == v or not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"{path}: bad edge, line {lineno}")
            edges.append((min(u, v), max(u, v)))
        else:
            raise ValueError(f"{path}: unrecognized line, line {lineno}")
    if n < 1 or len(edges) != m:
        raise ValueError(f"{path}: inconsistent header")
    return GraphFile(n, tuple(edges))


def write_probmap_file(path: Path | str, probs) -> None:
    """probmap v1: header then one '<index> <p>' line per vertex, 12 decimals."""
    values = list(probs)
    lines = [f"probmap v1 {len(values)}"]
    lines.extend(f"{i} {p:.12f}" for i, p in enumerate(values, start=1))
    Path(path).write_text("\n".join(lines) + "\n")


def read_probmap_file(path: Path | str) -> list[float]:
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    head = lines[0].split()
    if head[:2] != ["probmap", "v1"]:
        raise ValueError(f"{path}: not a probmap v1 file")
    n = int(head[2])
    if len(lines) - 1 != n:
        raise ValueError(f"{path}: expected {n} entries")
    return [float(ln.split()[1]) for ln in lines[1:]]


@dataclass(frozen=True)
class ManifestRow:
    instance_id: str
    n: int
    p: float
    seed: int
    path: str


def read_manifest(path: Path | str) -> list[ManifestRow]:
    doc = json.loads(Path(path).read_text())
    if "entries" not in doc:
        raise ValueError(f"{path}: no entries in manifest")
    return [ManifestRow(e["instance_id"], e["n"], e["p"], e["seed"], e["path"])
            for e in doc["entries"]]
