import pytest
from hypothesis import given, settings, strategies as st

from mmcc import SynthSpec, build_intersection_table, compute_clb, max_disagreement, planted_partition_graph, run_A
from mmcc.synth import _pair_from_index, planted_edges


def edge_set(g):
    return set(g.edges())


def test_unflipped_cliques():
    g = planted_partition_graph(SynthSpec(10, 10, 0, 123))
    assert g.node_count == 100 and g.edge_count == 450


def test_deterministic():
    spec = SynthSpec(10, 10, 200, 99)
    assert edge_set(planted_partition_graph(spec)) == edge_set(planted_partition_graph(spec))
    assert edge_set(planted_partition_graph(spec)) != edge_set(planted_partition_graph(SynthSpec(10, 10, 200, 100)))


def test_single_flip():
    spec = SynthSpec(2, 3, 1, 5)
    assert len(edge_set(planted_partition_graph(spec)) ^ planted_edges(spec)) == 1


def test_pair_index_bijection():
    n = 9
    u, v = _pair_from_index(__import__("numpy").arange(n * (n - 1) // 2), n)
    pairs = list(zip(u.tolist(), v.tolist()))
    assert pairs == [(a, b) for a in range(n) for b in range(a + 1, n)]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(1, 6), st.data(), st.integers(0, 2**63 - 1))
def test_hamming_distance_is_flips(k, s, data, seed):
    n = k * s
    f = data.draw(st.integers(0, n * (n - 1) // 2))
    spec = SynthSpec(k, s, f, seed)
    assert len(edge_set(planted_partition_graph(spec)) ^ planted_edges(spec)) == f


def test_invalid_specs():
    with pytest.raises(ValueError):
        SynthSpec(2, 2, 7, 0)
    with pytest.raises(ValueError):
        SynthSpec(0, 2, 0, 0)


def test_zero_flips_have_no_gap():
    for seed in range(3):
        g = planted_partition_graph(SynthSpec(10, 10, 0, seed))
        assert compute_clb(g, build_intersection_table(g))[0] == 0
        assert max_disagreement(g, run_A(g)) == 0
