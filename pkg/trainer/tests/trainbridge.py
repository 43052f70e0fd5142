"""Helpers bridging the solver package's generated artifacts into trainer tests.

The trainer itself only ever touches files; tests may use dclab directly to
produce those files and to cross-check numbers.
"""

import dclab
import torch

from dctrainer.data import GraphData
from dctrainer.formats import GraphFile


def graphdata_from_dclab(g: dclab.Graph, name: str = "g") -> GraphData:
    return GraphData.from_graph_file(name, GraphFile(g.n, tuple(sorted(g.edges))))


def random_graph_and_map(n: int, p: float, seed: int):
    g = dclab.gnp_generate(n, p, seed)
    rng = dclab.RngStream(seed ^ 0x5EED)
    pm = dclab.ProbMap(n, tuple(0.05 + 0.9 * rng.next_unit() for _ in range(n)))
    tensor = torch.tensor(pm.p, dtype=torch.float64)
    return g, pm, tensor
