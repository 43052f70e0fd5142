"""Training objectives against the solver package's closed forms."""

import dclab
import pytest
import torch
from trainbridge import graphdata_from_dclab, random_graph_and_map

from dctrainer.losses import (graph_loss, loss_dc, loss_max_clique,
                              loss_min_dc_perm, loss_min_dc_plain,
                              permutation_expected_size)

CASES = [(8, 0.3, 1), (12, 0.5, 2), (15, 0.7, 3), (10, 0.2, 4), (20, 0.4, 5)]


@pytest.mark.parametrize("n,p,seed", CASES)
def test_dc_and_maxclq_match_solver_package(n, p, seed):
    g, pm, t = random_graph_and_map(n, p, seed)
    gd = graphdata_from_dclab(g)
    assert float(loss_dc(t, gd)) == pytest.approx(dclab.loss_dc(g, pm), abs=1e-4)
    assert float(loss_max_clique(t, gd)) == pytest.approx(dclab.loss_max_clique(g, pm), abs=1e-4)
    assert float(loss_min_dc_plain(t, gd)) == pytest.approx(dclab.loss_min_dc(g, pm), abs=1e-4)


@pytest.mark.parametrize("n,p,seed", CASES)
def test_permutation_losses_match_solver_package(n, p, seed):
    g, pm, t = random_graph_and_map(n, p, seed)
    gd = graphdata_from_dclab(g)
    order0 = torch.randperm(n, generator=torch.Generator().manual_seed(seed))
    order1 = [int(v) + 1 for v in order0]
    assert float(permutation_expected_size(t, gd, order0)) == \
        pytest.approx(dclab.permutation_event_expectation(g, pm, order1), abs=1e-6)
    assert float(loss_min_dc_perm(t, gd, order0)) == \
        pytest.approx(dclab.loss_min_dc(g, pm, order=order1), abs=1e-4)


def test_losses_are_differentiable():
    g, _, t = random_graph_and_map(10, 0.4, 9)
    gd = graphdata_from_dclab(g)
    p = t.clone().requires_grad_(True)
    loss = loss_dc(p, gd)
    loss.backward()
    assert p.grad is not None and torch.isfinite(p.grad).all()


def test_graph_loss_dispatch_and_fresh_permutations():
    g, _, t = random_graph_and_map(14, 0.4, 11)
    gd = graphdata_from_dclab(g)
    gen = torch.Generator().manual_seed(0)
    a = float(graph_loss("mindc-perm", t, gd, gen))
    b = float(graph_loss("mindc-perm", t, gd, gen))
    assert a != b  # a new permutation is drawn every call
    gen2 = torch.Generator().manual_seed(0)
    assert float(graph_loss("mindc-perm", t, gd, gen2)) == a  # but seeded


def test_graph_loss_unknown_mode():
    g, _, t = random_graph_and_map(6, 0.5, 12)
    with pytest.raises(ValueError, match="unknown loss mode"):
        graph_loss("first-moment", t, graphdata_from_dclab(g))
