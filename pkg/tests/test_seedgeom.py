import math
import random
from fractions import Fraction

import pytest

from quiverbelt import exgraph
from quiverbelt.cycfield import sin_product
from quiverbelt.exmatrix import affine_normal_form, classify, markov_matrix
from quiverbelt.planegeom import cross_q, from_rationals, length_along
from quiverbelt.seedgeom import (
    NotAcyclic,
    UnsupportedClass,
    _source_sink,
    belt_line,
    designated_feet,
    feet_on_belt,
    initial_seed,
    orientation_tag,
    planar_mutate,
    positivity,
    realize,
    reflect_across_belt,
    side_length,
    t_invariant,
    translation_between,
)


def test_initial_seed_odd():
    s = initial_seed(5)
    assert s.kind == "triangle"
    assert sorted(s.angle_triple()) == [1, 2, 2]
    assert s.is_acute()
    src, snk = _source_sink(s.B)
    assert src is not None and snk is not None
    # unit d1: the two larger sides have length one
    lengths = sorted(side_length(s, k).to_float() for k in range(3))
    assert abs(lengths[1] - 1) < 1e-12 and abs(lengths[2] - 1) < 1e-12


def test_initial_seed_even():
    s = initial_seed(6)
    assert sorted(s.angle_triple()) == [1, 2, 3]
    s8 = initial_seed(8)
    assert sorted(s8.angle_triple()) == [1, 3, 4]


def test_initial_seed_d3_is_equilateral():
    s = initial_seed(3)
    assert s.angle_triple() == (1, 1, 1)
    assert all(side_length(s, k) == 1 for k in range(3))


def test_t_invariant_definition_and_symmetry():
    for d in (5, 7, 9):
        s = initial_seed(d)
        n = d // 2
        assert s.chart.t0 == sin_product(d, 1, n)
        assert t_invariant(s) == s.chart.t0


def test_t_invariant_numeric_oracle():
    # a_1 sin(A_2) sin(A_3) with d1 = 1 against floating point
    d = 5
    s = initial_seed(d)
    expect = math.sin(math.pi / 5) * math.sin(2 * math.pi / 5)
    assert abs(t_invariant(s).to_float() - expect) < 1e-12


def test_t_conserved_and_involution_along_random_walks():
    rng = random.Random(9)
    for d in (5, 6, 7):
        s0 = initial_seed(d)
        s = s0
        for _ in range(25):
            k = rng.randrange(3)
            s2 = planar_mutate(s, k)
            assert t_invariant(s2) == s0.chart.t0
            assert planar_mutate(s2, k) == s
            s = s2


def test_belt_line_contains_the_named_feet():
    for d in (3, 5, 7, 6):
        s = initial_seed(d)
        belt = belt_line(s)
        for foot in designated_feet(s):
            assert belt.contains(foot)
        assert feet_on_belt(s)


def test_belt_line_requires_acyclicity():
    s = initial_seed(5)
    obtuse = next(
        x
        for x in (planar_mutate(s, k) for k in range(3))
        if x.kind == "triangle" and x.is_obtuse()
    )
    with pytest.raises(NotAcyclic):
        belt_line(obtuse)


def test_positivity_signs_at_the_initial_seed():
    for d in (3, 5, 7, 9, 6, 8):
        s = initial_seed(d)
        src, snk = _source_sink(s.B)
        assert positivity(s, src) == 1
        assert positivity(s, snk) == -1


def test_source_mutations_reproduce_the_belt_figure():
    # the first six source mutations are reflections: triangle moves, stays
    # acute, keeps two vertices each time
    s = initial_seed(5)
    for _ in range(6):
        src, _ = _source_sink(s.B)
        s2 = planar_mutate(s, src)
        shared = sum(1 for v in s2.vertices if v in s.vertices)
        assert s2.kind == "triangle" and shared == 2
        assert s2.is_acute()
        s = s2


def test_translation_between():
    s = initial_seed(5)
    assert translation_between(s, s).is_zero()
    w = s.chart.belt.e.scale(Fraction(3, 2))
    assert translation_between(s, s.translate(w)) is not None
    other = planar_mutate(s, 0)
    assert translation_between(s, other) is None
    # a translate off the belt direction trips the parallelism assertion
    with pytest.raises(RuntimeError):
        translation_between(s, s.translate(from_rationals(5, 0, 1)))


def test_hand_shifted_triangle_leaves_the_belt():
    s = initial_seed(5)
    off = s.translate(from_rationals(5, 0, 1))
    assert not feet_on_belt(off)


def test_reflect_across_belt_preserves_structure():
    for d in (5, 7):
        s = initial_seed(d)
        r = reflect_across_belt(s)
        assert sorted(r.angle_triple()) == sorted(s.angle_triple())
        assert t_invariant(r) == t_invariant(s)
        assert feet_on_belt(r)
        assert orientation_tag(r) == -orientation_tag(s)


def test_realize_affine_and_unsupported():
    B = affine_normal_form(5)
    seed = realize(B)
    assert seed.kind == "triangle" and seed.chart.d == 5
    with pytest.raises(UnsupportedClass):
        realize(markov_matrix())


def test_regions_appear_and_translate():
    g = exgraph.bfs(initial_seed(5), depth_limit=6)
    regions = [s for s in g.vertices.values() if s.kind == "region"]
    assert regions
    for region in regions[:4]:
        f = region.finite_side_index()
        assert region.side_dirs[f] == region.chart.belt.dir_class
        k = exgraph.region_transversal_multiple(region)
        assert 1 <= k < 5
        # mutation at a parallel side translates the region along its
        # finite side by exactly s_k
        for side in range(3):
            if side == f:
                continue
            image = planar_mutate(region, side)
            if image.kind != "region":
                continue
            w = translation_between(region, image)
            if w is None or w.is_zero():
                continue
            length = length_along(5, w, region.chart.belt.dir_class)
            assert length == exgraph.s_k_length(5, k)


def test_exactness_closure_under_random_mutation():
    rng = random.Random(17)
    s = initial_seed(7)
    for _ in range(40):
        s = planar_mutate(s, rng.randrange(3))
        for v in s.vertices:
            if v is not None:
                assert v.x.level == 7 and v.y.level == 7
