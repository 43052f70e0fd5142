"""Network properties: output range, equivariance, batching, serialization."""

import dclab
import torch
from trainbridge import graphdata_from_dclab

from dctrainer.data import GraphData, collate
from dctrainer.formats import GraphFile
from dctrainer.model import ProbMapNet, load_model, save_model
from dctrainer.train import infer_probabilities


def fresh_model(seed: int = 0, hidden: int = 32) -> ProbMapNet:
    torch.manual_seed(seed)
    model = ProbMapNet(hidden=hidden)
    model.eval()
    return model


def test_outputs_strictly_inside_unit_interval():
    model = fresh_model()
    for seed in range(5):
        g = graphdata_from_dclab(dclab.gnp_generate(30, 0.4, seed))
        p = infer_probabilities(model, g)
        assert len(p) == 30
        assert all(0.0 < x < 1.0 for x in p)


def test_permutation_equivariance():
    model = fresh_model(1)
    g = dclab.gnp_generate(25, 0.35, 77)
    perm = list(range(1, 26))
    rng = dclab.RngStream(3)
    for i in range(24, 0, -1):
        j = rng.next_u64() % (i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    relabeled = dclab.Graph(25, [(perm[u - 1], perm[v - 1]) for u, v in g.edges])
    base = infer_probabilities(model, graphdata_from_dclab(g))
    moved = infer_probabilities(model, graphdata_from_dclab(relabeled))
    for v in range(25):
        assert abs(moved[perm[v] - 1] - base[v]) <= 1e-5


def test_batched_forward_matches_individual():
    model = fresh_model(2)
    graphs = [graphdata_from_dclab(dclab.gnp_generate(12 + k, 0.5, k), name=f"g{k}")
              for k in range(4)]
    batch = collate(graphs)
    with torch.no_grad():
        joint = model(batch.x, batch.edge_index)
    for g, a, b in batch.slices():
        single = infer_probabilities(model, g)
        assert torch.allclose(joint[a:b], torch.tensor(single), atol=1e-6)


def test_edgeless_graph_forward():
    model = fresh_model(3)
    g = GraphData.from_graph_file("iso", GraphFile(5, ()))
    p = infer_probabilities(model, g)
    assert len(p) == 5 and len(set(p)) == 1  # identical isolated vertices


def test_save_load_round_trip(tmp_path):
    model = fresh_model(4, hidden=16)
    g = graphdata_from_dclab(dclab.gnp_generate(10, 0.5, 1))
    before = infer_probabilities(model, g)
    save_model(model, tmp_path / "m.pt")
    again = infer_probabilities(load_model(tmp_path / "m.pt"), g)
    assert before == again


def test_layer_counts():
    model = ProbMapNet(hidden=8)
    assert len(model.gins) == 6
    assert isinstance(model.lin1, torch.nn.Linear) and isinstance(model.lin2, torch.nn.Linear)
