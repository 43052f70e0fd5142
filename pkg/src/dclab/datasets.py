"""Dataset presets, deterministic instance seeds, and the manifest format.

A manifest pins (instance id, n, p, seed, file path) for every instance plus
the base seed it was derived from, so regenerating from a manifest is
byte-identical.  Per-instance seeds are splitmix64(base_seed XOR ordinal),
where the ordinal is the instance's position in the full preset enumeration
(filters select a subset without renumbering, so a filtered run reproduces
the matching slice of the full preset).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path

from .graph import Graph, gnp_generate, parse_dimacs, write_dimacs
from .rng import RngStream, derive_seed, splitmix64

# Hard existence instances: per-n edge probabilities near the phase transition,
# 50 instances per cell.
HARD_DC_CELLS: tuple[tuple[int, float], ...] = (
    (75, 0.3698), (100, 0.3685), (150, 0.3663), (200, 0.3689), (225, 0.368),
    (250, 0.3669), (275, 0.3669), (300, 0.3674), (325, 0.3685), (350, 0.3671),
    (375, 0.3725), (400, 0.3698), (425, 0.3685), (450, 0.37), (475, 0.3663),
    (525, 0.366), (550, 0.3689), (575, 0.368), (600, 0.3669), (625, 0.3669),
    (675, 0.3685), (700, 0.3671), (725, 0.3675), (750, 0.368), (800, 0.366),
)

# Minimization instances: dense enough to have dominating cliques but few of
# minimum size, 50 instances per cell.
MIN_DC_CELLS: tuple[tuple[int, float], ...] = (
    (75, 0.4045), (100, 0.4006), (150, 0.4047), (200, 0.406), (225, 0.4095),
    (250, 0.405), (275, 0.4023), (300, 0.4033), (325, 0.4087), (350, 0.4016),
    (375, 0.4095), (400, 0.4018), (425, 0.4085), (450, 0.4075), (475, 0.4085),
    (525, 0.4031), (550, 0.407), (575, 0.4041), (600, 0.4017), (625, 0.4044),
    (650, 0.407), (675, 0.4057), (700, 0.4012), (725, 0.4045), (800, 0.4062),
)

INSTANCES_PER_HARD_CELL = 50
EASY_COUNT = 1400
EASY_N_CHOICES = tuple(range(75, 801, 25))
GRID_N_VALUES = tuple(range(25, 401, 25))
GRID_P_VALUES = (0.1, 0.3, 0.5, 0.7, 0.9)
GRID_PER_CELL = 32

PRESETS = ("dc-hard", "dc-easy", "mindc", "gridB")

MANIFEST_FORMAT = "dclab-manifest v1"


@dataclass(frozen=True)
class ManifestEntry:
    instance_id: str
    n: int
    p: float
    seed: int
    path: str


@dataclass(frozen=True)
class DatasetManifest:
    preset: str
    base_seed: int
    entries: tuple[ManifestEntry, ...]

    def save(self, path: Path | str) -> None:
        doc = {
            "format": MANIFEST_FORMAT,
            "preset": self.preset,
            "base_seed": self.base_seed,
            "entries": [asdict(e) for e in self.entries],
        }
        Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")

    @classmethod
    def load(cls, path: Path | str) -> "DatasetManifest":
        doc = json.loads(Path(path).read_text())
        if doc.get("format") != MANIFEST_FORMAT:
            raise ValueError(f"unrecognized manifest format: {doc.get('format')!r}")
        entries = tuple(ManifestEntry(**e) for e in doc["entries"])
        return cls(doc["preset"], doc["base_seed"], entries)


def _easy_params(instance_seed: int) -> tuple[int, float]:
    """n and p for an easy instance, drawn from a stream split off the instance seed.

    p is uniform over (0, 0.35) and (0.4, 1) with mass proportional to length;
    the edge-generation stream is left untouched.
    """
    rng = RngStream(splitmix64(instance_seed))
    n = EASY_N_CHOICES[rng.next_u64() % len(EASY_N_CHOICES)]
    v = rng.next_unit() * 0.95
    p = v if v < 0.35 else 0.4 + (v - 0.35)
    return n, max(p, 1e-12)


def _preset_params(preset: str, base_seed: int) -> list[tuple[int, int, float, int]]:
    """Full enumeration of (ordinal, n, p, seed) for a preset."""
    out: list[tuple[int, int, float, int]] = []
    ordinal = 0

    def push(n: int, p: float) -> None:
        nonlocal ordinal
        out.append((ordinal, n, p, derive_seed(base_seed, ordinal)))
        ordinal += 1

    if preset == "dc-hard":
        for n, p in HARD_DC_CELLS:
            for _ in range(INSTANCES_PER_HARD_CELL):
                push(n, p)
    elif preset == "mindc":
        for n, p in MIN_DC_CELLS:
            for _ in range(INSTANCES_PER_HARD_CELL):
                push(n, p)
    elif preset == "dc-easy":
        for _ in range(EASY_COUNT):
            seed = derive_seed(base_seed, ordinal)
            n, p = _easy_params(seed)
            out.append((ordinal, n, p, seed))
            ordinal += 1
    elif preset == "gridB":
        for n in GRID_N_VALUES:
            for p in GRID_P_VALUES:
                for _ in range(GRID_PER_CELL):
                    push(n, p)
    else:
        raise ValueError(f"unknown preset {preset!r}; expected one of {PRESETS}")
    return out


def gen_dataset(preset: str, base_seed: int, out_dir: Path | str | None = None,
                count_per_cell: int | None = None, only_n=None,
                write_files: bool = True) -> DatasetManifest:
    """Build a preset's manifest and (optionally) write its DIMACS files.

    ``count_per_cell`` keeps only the first k instances of every (n, p) cell;
    ``only_n`` restricts to the listed vertex counts.  Both select from the
    full enumeration, so seeds match the unfiltered preset.
    """
    params = _preset_params(preset, base_seed)
    if only_n is not None:
        wanted = set(only_n)
        params = [row for row in params if row[1] in wanted]
    if count_per_cell is not None:
        kept: list[tuple[int, int, float, int]] = []
        counts: dict[tuple[int, float], int] = {}
        for row in params:
            cell = (row[1], row[2])
            if counts.get(cell, 0) < count_per_cell:
                counts[cell] = counts.get(cell, 0) + 1
                kept.append(row)
        params = kept

    entries = []
    for ordinal, n, p, seed in params:
        instance_id = f"{preset}-{ordinal:05d}"
        entries.append(ManifestEntry(instance_id, n, p, seed, f"{instance_id}.dimacs"))
    manifest = DatasetManifest(preset, base_seed, tuple(entries))

    if write_files:
        if out_dir is None:
            raise ValueError("out_dir is required when writing instance files")
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for entry in manifest.entries:
            graph = gnp_generate(entry.n, entry.p, entry.seed)
            (out / entry.path).write_text(write_dimacs(graph))
        manifest.save(out / "manifest.json")
    return manifest


def load_instance(manifest_dir: Path | str, entry: ManifestEntry) -> Graph:
    return parse_dimacs((Path(manifest_dir) / entry.path).read_text())


def regenerate_instance(entry: ManifestEntry) -> Graph:
    """Rebuild an instance from its manifest row alone (no files needed)."""
    return gnp_generate(entry.n, entry.p, entry.seed)
