import json
import random
from fractions import Fraction
from math import gcd

import pytest

from quiverbelt import exgraph
from quiverbelt.exmatrix import spherical_matrix
from quiverbelt.intpoly import euler_totient
from quiverbelt.planegeom import length_along
from quiverbelt.seedgeom import initial_seed, planar_mutate, t_invariant

GRAPHS = {}


def graph(d, depth=10):
    if (d, depth) not in GRAPHS:
        GRAPHS[(d, depth)] = exgraph.bfs(initial_seed(d), depth_limit=depth)
    return GRAPHS[(d, depth)]


def test_bfs_depths_and_edges_are_consistent():
    g = graph(5)
    assert g.depth[g.initial_key] == 0
    for pair, label in g.edges.items():
        a, b = tuple(pair)
        assert abs(g.depth[a] - g.depth[b]) <= 1
        assert 0 <= label < 3
    # edge endpoints really are one mutation apart
    rng = random.Random(0)
    keys = list(g.edges)
    for pair in rng.sample(keys, 12):
        a, b = tuple(pair)
        k = g.edges[pair]
        assert planar_mutate(g.vertices[a], k) == g.vertices[b]


def test_vertex_budget():
    with pytest.raises(exgraph.BudgetExceeded) as err:
        exgraph.bfs(initial_seed(5), vertex_limit=50)
    assert err.value.partial.order() == 50


def test_growth_table_and_round_trip():
    t = exgraph.growth(initial_seed(3), 12)
    assert t.entries[0] == (0, 1)
    assert t.entries[1] == (1, 4)
    values = [g for _, g in t.entries]
    assert values == sorted(values)
    assert exgraph.GrowthTable.from_csv(t.to_csv()).entries == t.entries


def test_acyclic_belt_structure():
    for d in (3, 5, 7):
        belt = exgraph.acyclic_belt(initial_seed(d), 7)
        assert len(belt) == 15
        t0 = belt[7].chart.t0
        for s in belt:
            assert s.kind == "triangle"
            assert t_invariant(s) == t0
        assert belt[7] == initial_seed(d)
        # consecutive members are one mutation apart and the d=3 belt is
        # made of equilateral triangles throughout
        if d == 3:
            assert all(s.angle_triple() == (1, 1, 1) for s in belt)


def test_belt_translation_every_sixth_seed():
    for d in (3, 5, 7):
        s0 = initial_seed(d)
        belt = exgraph.acyclic_belt(s0, 9)
        from quiverbelt.seedgeom import translation_between

        for n in range(len(belt) - 6):
            w = translation_between(belt[n], belt[n + 6])
            assert w is not None
            assert length_along(d, w, s0.chart.belt.dir_class) == 4 * s0.chart.t0


def test_lattice_report_odd():
    rep = exgraph.lattice_report(graph(5, 12), 5)
    assert rep.rank_r == 2 == rep.predicted_rank_r
    assert rep.rank_observed == 2
    assert rep.reflection_witness
    assert len(rep.generator_lengths) == 2  # s_1 and s_2
    assert rep.common_denominator is not None


def test_lattice_report_even():
    rep = exgraph.lattice_report(graph(4, 12), 4)
    assert rep.rank_r == 1 == euler_totient(4) // 2
    assert rep.rank_observed in rep.predicted_l_ranks


def test_s_k_lengths_match_the_sine_formula():
    import math

    for d in (5, 7):
        n = d // 2
        for k in range(1, n + 1):
            if gcd(k, d) != 1:
                continue
            expect = (
                math.sin(math.pi / d)
                * math.sin(n * math.pi / d)
                / math.sin(k * math.pi / d) ** 2
            )
            assert abs(exgraph.s_k_length(d, k).to_float() - expect) < 1e-12


def test_quotient_census_d5():
    census, triples = exgraph.quotient_census(graph(5, 12))
    assert triples == exgraph.gcd_one_triples(5) == {(1, 1, 3), (1, 2, 2)}
    for cls, tags in census.items():
        assert sorted(tags) == [-1, 1]
        assert all(v == 1 for v in tags.values())


def test_gcd_one_triples():
    assert exgraph.gcd_one_triples(9) == {
        (1, 1, 7),
        (1, 2, 6),
        (1, 3, 5),
        (2, 3, 4),
        (1, 4, 4),
        (2, 2, 5),
    }
    assert (3, 3, 3) not in exgraph.gcd_one_triples(9)


def test_belt_subgraph_check():
    g = graph(5, 12)
    zero = initial_seed(5).chart.belt.e.scale(0)
    assert exgraph.belt_subgraph_check(g, zero, steps=5)
    e = initial_seed(5).chart.belt.e
    for k in (1, 2):
        w = e.scale(exgraph.s_k_length(5, k))
        assert exgraph.belt_subgraph_check(g, w, steps=5)
    # a translation by half a generator misses the graph entirely
    assert not exgraph.belt_subgraph_check(
        g, e.scale(exgraph.s_k_length(5, 1) * Fraction(1, 2)), steps=5
    )


def test_exports_are_deterministic_and_well_formed():
    g = graph(3, 6)
    dot = exgraph.export_dot(g)
    assert dot.startswith("graph exchange {")
    assert dot.count(" -- ") == g.size()
    assert dot == exgraph.export_dot(g)
    svg = exgraph.export_svg(g)
    assert svg.startswith("<svg") and "line" in svg
    data = json.loads(exgraph.export_json(g))
    assert len(data["vertices"]) == g.order()
    assert len(data["edges"]) == g.size()


def test_empty_like_graph_exports():
    g = exgraph.bfs(initial_seed(3), depth_limit=0)
    assert g.order() == 1 and g.size() == 0
    assert "s0" in exgraph.export_dot(g)


def test_dot_of_40_seed_graph_has_60_edges():
    rng = random.Random(12)
    B = spherical_matrix(Fraction(1, 5), Fraction(2, 5))
    _, g = exgraph.compatible_spherical_graph(B, rng, vertex_cap=56)
    dot = exgraph.export_dot(g)
    assert dot.count(" -- ") == 60
    assert g.order() == 40


def test_graph_isomorphism_checker():
    g1 = graph(3, 5)
    g2 = exgraph.bfs(initial_seed(3), depth_limit=5)
    assert exgraph.graphs_isomorphic(g1, g2)
    g3 = exgraph.bfs(initial_seed(5), depth_limit=5)
    assert not exgraph.graphs_isomorphic(g1, g3)
