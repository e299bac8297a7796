import random
from fractions import Fraction

import pytest

from quiverbelt.cycfield import FieldElem, cos_multiple
from quiverbelt.exmatrix import (
    SPHERICAL_PAIRS,
    ExchangeMatrix,
    NotCosineForm,
    SearchBudgetExceeded,
    affine_normal_form,
    classify,
    entry_cosine_form,
    is_acyclic,
    markov_constant,
    markov_matrix,
    mutate,
    mutation_class,
    spherical_matrix,
)


def float_mutate(rows, k):
    out = [[0.0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            if i == k or j == k:
                out[i][j] = -rows[i][j]
            else:
                out[i][j] = rows[i][j] + (
                    rows[i][k] * abs(rows[k][j]) + abs(rows[i][k]) * rows[k][j]
                ) / 2
    return out


def test_mutation_matches_float_oracle():
    B = spherical_matrix(Fraction(1, 3), Fraction(1, 3))
    expected = float_mutate(B.to_float(), 1)
    got = mutate(B, 1).to_float()
    for i in range(3):
        for j in range(3):
            assert abs(got[i][j] - expected[i][j]) < 1e-10


def test_mutation_is_involution():
    rng = random.Random(5)
    for pair in SPHERICAL_PAIRS:
        B = spherical_matrix(*pair)
        for _ in range(4):
            B = mutate(B, rng.randrange(3))
        for k in range(3):
            assert mutate(mutate(B, k), k) == B


def test_skew_symmetry_preserved():
    B = affine_normal_form(7)
    for seq in ((0, 1, 2, 0), (2, 2, 1)):
        cur = B
        for k in seq:
            cur = mutate(cur, k)
            for i in range(3):
                assert cur[i, i].is_zero()
                for j in range(3):
                    assert (cur[i, j] + cur[j, i]).is_zero()


def test_acyclicity():
    zero = FieldElem.zero(5)
    z3 = ExchangeMatrix.from_upper(zero, zero, zero)
    assert is_acyclic(z3)
    assert not is_acyclic(markov_matrix())
    for pair in SPHERICAL_PAIRS:
        assert is_acyclic(spherical_matrix(*pair))


def test_markov_constant_values():
    assert markov_constant(markov_matrix()) == 4  # 4 + 4 + 4 - 8
    assert markov_constant(affine_normal_form(3)) == 4
    # affine representative of Prop Classification (5) at t = pi/3
    w = cos_multiple(3, 1)
    two = FieldElem.from_rational(3, 2)
    b = ExchangeMatrix([[0 * w, two, -w], [-two, 0 * w, w], [w, -w, 0 * w]])
    assert markov_constant(b) == 4
    assert markov_constant(spherical_matrix(Fraction(1, 3), Fraction(1, 3))) == 2


def test_markov_constant_is_mutation_invariant():
    rng = random.Random(11)
    for B in (
        spherical_matrix(Fraction(1, 5), Fraction(2, 5)),
        affine_normal_form(5),
        markov_matrix(),
    ):
        c = markov_constant(B)
        cur = B
        for _ in range(8):
            cur = mutate(cur, rng.randrange(3))
            assert markov_constant(cur) == c


def test_markov_class_is_a_single_point():
    members, closed = mutation_class(markov_matrix())
    assert closed and len(members) == 1
    assert (
        mutate(markov_matrix(), 0).canonical_key() == markov_matrix().canonical_key()
    )


def test_classification_of_normal_forms():
    for pair in SPHERICAL_PAIRS:
        res = classify(spherical_matrix(*pair))
        assert res.kind == "finite"
        assert res.pair == pair
        assert (res.markov - 4).sign() < 0
    for d in (3, 4, 5, 6, 7):
        res = classify(affine_normal_form(d))
        assert res.kind == "affine"
        assert res.level == d
        assert res.markov == 4
    assert classify(markov_matrix()).kind == "markov"


def test_classification_is_mutation_invariant():
    rng = random.Random(2)
    B = spherical_matrix(Fraction(1, 3), Fraction(2, 5))
    for _ in range(5):
        B = mutate(B, rng.randrange(3))
        assert classify(B).pair == (Fraction(1, 3), Fraction(2, 5))


def test_hyperbolic_certificate():
    big = ExchangeMatrix.from_upper(
        cos_multiple(7, 1), FieldElem.zero(7), cos_multiple(7, 1)
    )
    res = classify(big)
    assert res.kind == "mutation_infinite"
    assert (res.markov - 4).sign() > 0


def test_budget_exhaustion_reports_partial():
    big = ExchangeMatrix.from_upper(
        cos_multiple(7, 1), cos_multiple(7, 2), cos_multiple(7, 3)
    )
    with pytest.raises(SearchBudgetExceeded) as err:
        mutation_class(big, budget=16)
    assert len(err.value.partial) == 16


def test_entry_cosine_form():
    assert entry_cosine_form(FieldElem.zero(5)) == (1, 2)
    assert entry_cosine_form(FieldElem.from_rational(5, 1)) == (1, 3)
    assert entry_cosine_form(FieldElem.from_rational(5, -2)) == (0, 1)
    assert entry_cosine_form(cos_multiple(15, 6)) == (2, 5)
    with pytest.raises(NotCosineForm):
        entry_cosine_form(FieldElem.from_rational(5, Fraction(1, 2)))


def test_all_class_entries_are_cosines():
    for pair in SPHERICAL_PAIRS[:3]:
        members, closed = mutation_class(spherical_matrix(*pair))
        assert closed
        for m in members.values():
            for i in range(3):
                for j in range(i + 1, 3):
                    entry_cosine_form(m[i, j])


def test_json_round_trip():
    B = affine_normal_form(6)
    assert ExchangeMatrix.from_json(B.to_json()) == B
