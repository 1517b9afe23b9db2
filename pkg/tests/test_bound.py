import random

import pytest

from mmcc import Graph, build_intersection_table, check_feasibility, components_pi_d, compute_clb
from mmcc.bound import clb_witness

from conftest import naive_clb, naive_feasible, nbhd, random_graph


def clb(g, **kw):
    return compute_clb(g, build_intersection_table(g), **kw)


def test_pi_d_examples(fig_a, fig_b):
    ta, tb = build_intersection_table(fig_a), build_intersection_table(fig_b)
    assert len(components_pi_d(fig_a, ta, 2)) == 7
    assert components_pi_d(fig_b, tb, 1).as_sets() == {frozenset(c) for c in ({0}, {1}, {2}, {3, 4, 5})}
    assert components_pi_d(fig_b, tb, 0).as_sets() == {frozenset(range(6))}


def test_fig_a_infeasible_at_2(fig_a):
    cert = check_feasibility(fig_a, build_intersection_table(fig_a), 2)
    assert not cert.feasible
    assert cert.witness == 4
    assert cert.per_node_bound[4] == 3
    assert cert.upper_set(4) == {0, 4, 5, 6}
    n4 = nbhd(fig_a, 4)
    assert cert.per_node_bound[4] == len(n4 - {0, 4, 5, 6}) + len({4} - n4)


def test_fig_b_feasible_at_1(fig_b):
    cert = check_feasibility(fig_b, build_intersection_table(fig_b), 1)
    assert cert.feasible
    assert [cert.upper_set(v) for v in (0, 1, 2, 3)] == [{0, 1, 2}, {0, 1}, {0, 2}, {3, 4, 5}]


def test_fig_a_feasible_at_3(fig_a):
    assert check_feasibility(fig_a, build_intersection_table(fig_a), 3).feasible


def test_clb_examples(fig_a, fig_b, p3):
    assert clb(fig_a)[0] == 3
    assert clb(fig_b)[0] == 1
    assert clb(p3)[0] == 1
    t = build_intersection_table(p3)
    assert not check_feasibility(p3, t, 0).feasible and check_feasibility(p3, t, 1).feasible


def test_degenerate_graphs():
    assert clb(Graph.from_edges(0, []))[0] == 0
    assert clb(Graph.from_edges(4, []))[0] == 0
    d, cert = clb(Graph.from_edges(5, [(0, 1), (2, 3)]))
    assert d == 0 and cert.feasible


def test_matches_set_definitions():
    rng = random.Random(17)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 10))
        table = build_intersection_table(g)
        for d in range(g.max_degree + 1):
            cert = check_feasibility(g, table, d)
            feasible, bounds = naive_feasible(g, d)
            assert cert.feasible == feasible
            if bounds is not None:
                assert cert.per_node_bound.tolist() == bounds


def test_bisection_boundary_and_range():
    rng = random.Random(23)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 12))
        table = build_intersection_table(g)
        d, cert = compute_clb(g, table, scan=True)
        assert 0 <= d <= g.max_degree
        assert cert.feasible and cert.d == d
        assert d == 0 or not check_feasibility(g, table, d - 1).feasible
        assert d == naive_clb(g)


def test_witness_certificate(fig_a):
    t = build_intersection_table(fig_a)
    below = clb_witness(fig_a, t, 3)
    assert below.d == 2 and below.witness == 4
    assert clb_witness(fig_a, t, 0) is None


def test_negative_budget(fig_a):
    with pytest.raises(ValueError):
        check_feasibility(fig_a, build_intersection_table(fig_a), -1)
