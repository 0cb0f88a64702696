from fractions import Fraction as F
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthocheck import (
    Frame,
    GenerationError,
    ShapeError,
    SpanMembershipError,
    derive_seed,
    determinant,
    frame_of,
    invert_matrix,
    is_independent,
    linear_combination,
    matrix_rank,
    sample_coefficients,
    sample_frame,
    sample_span_point,
    solve_coordinates,
    span_contains,
    vec,
)
from orthocheck.linalg import mat_mul, identity_matrix, transpose

from oracles import det_cofactor, rank_by_minors, solve_2x2_cramer

rationals = st.fractions(
    min_value=-6, max_value=6, max_denominator=4
)


def square(n):
    return st.lists(
        st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n
    )


# --- vectors ---

def test_vec_builds_fraction_tuple():
    v = vec(1, "1/2", F(3, 4))
    assert v == (F(1), F(1, 2), F(3, 4))
    assert all(isinstance(c, F) for c in v)


def test_linear_combination():
    fr = frame_of((1, 0), (1, 1))
    assert linear_combination(fr.vectors, (F(-2), F(5))) == (F(3), F(5))


# --- determinant and rank against naive oracles ---

@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_determinant_matches_cofactor_expansion(rows):
    assert determinant(rows) == det_cofactor(rows)


@settings(max_examples=150, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(-3, 3), min_size=3, max_size=3),
        min_size=1,
        max_size=4,
    )
)
def test_rank_matches_minor_enumeration(rows):
    frac_rows = [[F(c) for c in row] for row in rows]
    assert matrix_rank(rows) == rank_by_minors(frac_rows)


def test_determinant_basics():
    assert determinant([]) == 1
    assert determinant([[F(5)]]) == 5
    assert determinant([[1, 2], [2, 4]]) == 0
    assert determinant(identity_matrix(4)) == 1
    with pytest.raises(ShapeError):
        determinant([[1, 2, 3], [4, 5, 6]])


def test_determinant_row_swap_flips_sign():
    rows = [[F(2), F(7), F(1)], [F(0), F(3), F(5)], [F(4), F(1), F(9)]]
    swapped = [rows[1], rows[0], rows[2]]
    assert determinant(swapped) == -determinant(rows)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 3).flatmap(square), st.integers(2, 3).flatmap(square))
def test_determinant_multiplicative(a, b):
    if len(a) != len(b):
        return
    assert determinant(mat_mul(a, b)) == determinant(a) * determinant(b)


def test_invert_matrix_round_trip():
    rows = [[F(1), F(1)], [F(0), F(1)]]
    inv = invert_matrix(rows)
    assert mat_mul(rows, inv) == tuple(map(tuple, identity_matrix(2)))
    with pytest.raises(ShapeError):
        invert_matrix([[1, 2], [2, 4]])


def test_transpose_involution():
    rows = [[F(1), F(2), F(3)], [F(4), F(5), F(6)]]
    assert transpose(transpose(rows)) == tuple(map(tuple, rows))


# --- frames ---

def test_frame_rejects_bad_shapes():
    with pytest.raises(ShapeError):
        Frame(((F(1),),))  # single vector
    with pytest.raises(ShapeError):
        frame_of((1, 0), (1, 0, 0))  # mixed dimensions
    with pytest.raises(ShapeError):
        frame_of((1, 0), (0, 1), (1, 1))  # m > n
    with pytest.raises(ValueError):
        frame_of((1, 2), (2, 4))  # dependent


def test_frame_accessors():
    fr = frame_of((1, 0, 0), (0, 2, 0))
    assert fr.dim == 3 and fr.size == 2
    assert len(fr) == 2
    assert fr[1] == (F(0), F(2), F(0))
    assert list(fr) == [fr[0], fr[1]]


def test_is_independent_exhaustive_pairs_2d():
    # every ordered pair with entries in [-3, 3] against the minor oracle
    span = range(-3, 4)
    vectors = [(F(a), F(b)) for a in span for b in span]
    for v in vectors:
        for w in vectors:
            expected = rank_by_minors([list(v), list(w)]) == 2
            assert is_independent([v, w]) == expected


@pytest.mark.parametrize("dim,m,count", [(3, 2, 150), (3, 3, 150), (4, 3, 100), (4, 4, 100)])
def test_is_independent_seeded_sweep_matches_oracle(dim, m, count):
    rng = Random(dim * 100 + m)
    for _ in range(count):
        vectors = [
            tuple(F(rng.randint(-3, 3)) for _ in range(dim)) for _ in range(m)
        ]
        expected = rank_by_minors([list(v) for v in vectors]) == m
        assert is_independent(vectors) == expected


def test_is_independent_edge_cases():
    assert is_independent([(F(1), F(0)), (F(0), F(1))])
    assert not is_independent([(F(1), F(2)), (F(2), F(4))])
    assert not is_independent([(F(1), F(0)), (F(0), F(1)), (F(1), F(1))])
    with pytest.raises(ShapeError):
        is_independent([])
    with pytest.raises(ShapeError):
        is_independent([(F(1), F(0)), (F(1),)])


# --- coordinates ---

def test_solve_coordinates_fixture():
    fr = frame_of((1, 0), (1, 1))
    assert solve_coordinates(fr, (3, 5)) == (F(-2), F(5))


def test_solve_coordinates_matches_cramer():
    rng = Random(4)
    for _ in range(200):
        v = (F(rng.randint(-5, 5)), F(rng.randint(-5, 5)))
        w = (F(rng.randint(-5, 5)), F(rng.randint(-5, 5)))
        if v[0] * w[1] - v[1] * w[0] == 0:
            continue
        x = (F(rng.randint(-9, 9)), F(rng.randint(-9, 9)))
        assert solve_coordinates(frame_of(v, w), x) == solve_2x2_cramer(v, w, x)


@settings(max_examples=120, deadline=None)
@given(
    st.lists(rationals, min_size=2, max_size=2),
    st.integers(-3, 3),
)
def test_solve_round_trip_in_3d(coeffs, shear):
    fr = frame_of((1, 0, shear), (0, 1, 0))
    x = linear_combination(fr.vectors, tuple(map(F, coeffs)))
    assert solve_coordinates(fr, x) == tuple(map(F, coeffs))


def test_solve_outside_span_raises():
    fr = frame_of((1, 0, 0), (0, 1, 0))
    with pytest.raises(SpanMembershipError):
        solve_coordinates(fr, (0, 0, 1))
    assert not span_contains(fr, (0, 0, 1))
    assert span_contains(fr, (3, -2, 0))


def test_solve_rejects_wrong_dimension():
    fr = frame_of((1, 0), (0, 1))
    with pytest.raises(ShapeError):
        solve_coordinates(fr, (1, 0, 0))


# --- seeding and sampling ---

def test_derive_seed_frozen_values():
    # splitmix64 outputs; fixed so cross-platform payloads stay identical
    assert derive_seed(0, 0) == 16294208416658607535
    assert derive_seed(0, 1) == 7960286522194355700
    assert derive_seed(42, 3, 7) == 8984740033306438383
    assert derive_seed(0) == 0
    assert derive_seed(2**64 + 5) == derive_seed(5)


def test_derive_seed_decorrelates_indices():
    seen = {derive_seed(7, k) for k in range(100)}
    assert len(seen) == 100


def test_sample_frame_deterministic_and_bounded():
    a = sample_frame(3, 2, 4, seed=11)
    b = sample_frame(3, 2, 4, seed=11)
    assert a == b
    assert all(abs(c) <= 4 for v in a for c in v)
    assert is_independent(a.vectors)
    assert sample_frame(3, 2, 4, seed=12) != a


def test_sample_frame_validates_arguments():
    with pytest.raises(ShapeError):
        sample_frame(2, 1, 5, seed=0)
    with pytest.raises(ShapeError):
        sample_frame(2, 3, 5, seed=0)
    with pytest.raises(ShapeError):
        sample_frame(2, 2, -1, seed=0)


def test_sample_frame_bound_zero_fails_loudly():
    with pytest.raises(GenerationError):
        sample_frame(2, 2, 0, seed=0)


def test_sample_span_point_stays_in_span():
    fr = sample_frame(4, 2, 3, seed=5)
    for t in range(20):
        x = sample_span_point(fr, 3, seed=derive_seed(5, t))
        assert span_contains(fr, x)


def test_sample_coefficients_deterministic():
    assert sample_coefficients(3, 5, seed=9) == sample_coefficients(3, 5, seed=9)
