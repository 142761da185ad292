import numpy as np
import pytest

from coincnet.bipartite import BipartiteNetwork
from coincnet.errors import DomainError
from coincnet.generator import (
    GeneratorConfig,
    between_group_fraction,
    generate,
    reference_model,
    rewire,
)

from oracles import scripted_rewire


def test_reference_model_single_block():
    net, truth = reference_model(GeneratorConfig(1, 2, 3))
    assert net.weights.tolist() == [[1, 1, 1], [1, 1, 1]]
    assert truth.a_groups == (0, 0) and truth.b_groups == (0, 0, 0)


def test_reference_model_blocks():
    net, truth = reference_model(GeneratorConfig(3, 5, 10))
    W = net.weights
    assert W.shape == (15, 30)
    assert W.sum() == 3 * 5 * 10
    for g in range(3):
        assert np.all(W[5 * g:5 * g + 5, 10 * g:10 * g + 10] == 1)
    ga, gb = np.array(truth.a_groups), np.array(truth.b_groups)
    assert np.array_equal(W, (ga[:, None] == gb[None, :]).astype(float))
    assert np.all(W.sum(axis=1) == 10) and np.all(W.sum(axis=0) == 5)
    assert np.bincount(ga).tolist() == [5, 5, 5]
    assert np.bincount(gb).tolist() == [10, 10, 10]


@pytest.mark.parametrize("kw", [
    dict(n_groups=0, a_per_group=1, b_per_group=1),
    dict(n_groups=1, a_per_group=1, b_per_group=1, rewire_p=1.5),
    dict(n_groups=1, a_per_group=1, b_per_group=1, seed=-1),
    dict(n_groups=1, a_per_group=1, b_per_group=1, seed=2**64),
    dict(n_groups=1, a_per_group=1, b_per_group=1, partners="some"),
])
def test_config_validation(kw):
    with pytest.raises(DomainError):
        GeneratorConfig(**kw)


def test_rewire_p0_identity():
    net, _ = reference_model(GeneratorConfig(4, 3, 6))
    assert rewire(net, 0.0, 1) == net


@pytest.mark.parametrize("partners", ["selected", "all"])
def test_rewire_single_complete_block_is_invariant(partners):
    net, _ = reference_model(GeneratorConfig(1, 4, 7))
    assert rewire(net, 1.0, 5, partners=partners) == net


def test_rewire_rejects_weighted_input():
    with pytest.raises(DomainError):
        rewire(BipartiteNetwork.from_matrix([[2.0, 1.0]]), 0.5, 0)


@pytest.mark.parametrize("p", [0.1, 0.3, 0.7, 1.0])
@pytest.mark.parametrize("partners", ["selected", "all"])
def test_rewire_preserves_degrees(p, partners):
    net, _ = reference_model(GeneratorConfig(5, 5, 10))
    for seed in range(30):
        out = rewire(net, p, seed, partners=partners)
        assert out.is_binary()
        assert np.array_equal(out.weights.sum(axis=1), net.weights.sum(axis=1))
        assert np.array_equal(out.weights.sum(axis=0), net.weights.sum(axis=0))


def test_generate_deterministic():
    cfg = GeneratorConfig(3, 5, 10, 0.1, seed=123)
    a, ta = generate(cfg)
    b, tb = generate(cfg)
    assert a == b and ta == tb
    assert a.weights.tobytes() == b.weights.tobytes()
    assert generate(cfg.with_seed(124))[0] != a


def test_generate_p0_is_reference():
    cfg = GeneratorConfig(3, 5, 10, 0.0, seed=9)
    assert generate(cfg)[0] == reference_model(cfg)[0]


def test_generate_link_count():
    net, _ = generate(GeneratorConfig(5, 5, 10, 0.2, seed=77))
    assert net.weights.sum() == 250


def test_generate_weighted_option():
    cfg = GeneratorConfig(3, 4, 5, 0.2, seed=1, max_weight=4)
    net, _ = generate(cfg)
    binary, _ = generate(GeneratorConfig(3, 4, 5, 0.2, seed=1))
    assert np.array_equal(net.weights > 0, binary.weights > 0)
    vals = set(np.unique(net.weights[net.weights > 0]).tolist())
    assert vals <= {1.0, 2.0, 3.0, 4.0} and len(vals) > 1


@pytest.mark.parametrize("partners", ["selected", "all"])
def test_displaced_fraction_matches_scripted_oracle(partners):
    # independent procedure, independent RNG: compare ensemble means
    n, p = 1000, 0.3
    ours = np.array([between_group_fraction(*generate(GeneratorConfig(5, 5, 10, p, seed=s, partners=partners)))
                     for s in range(n)])
    ref = np.array([scripted_rewire(5, 5, 10, p, seed=s, partners=partners) for s in range(n)])
    se = np.sqrt(ours.var() / n + ref.var() / n)
    assert abs(ours.mean() - ref.mean()) < 5 * se
    # about p*(1 - 1/N_g) of links leave their block with the default pool
    if partners == "selected":
        assert 0.5 * p * 0.8 < ours.mean() < 1.5 * p * 0.8


def test_disruption_grows_with_p():
    means = []
    for p in (0.0, 0.1, 0.2, 0.3, 0.5, 0.8):
        fr = [between_group_fraction(*generate(GeneratorConfig(5, 5, 10, p, seed=s))) for s in range(100)]
        means.append(np.mean(fr))
    assert means[0] == 0.0
    assert all(a <= b for a, b in zip(means, means[1:]))


def test_selected_pool_moves_about_p_of_links():
    net, _ = reference_model(GeneratorConfig(5, 5, 10))
    moved = [np.mean((rewire(net, 0.3, s).weights != net.weights)[net.weights > 0]) for s in range(200)]
    assert np.mean(moved) == pytest.approx(0.3, abs=0.03)
