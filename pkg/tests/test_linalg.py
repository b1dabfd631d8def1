"""Exact elimination: nullspaces, span bases, and dense field operations."""

from fractions import Fraction

import pytest

from birevnf.errors import DimensionError
from birevnf.linalg import (
    Echelon,
    SpanBasis,
    identity_matrix,
    mat_inverse,
    mat_mul,
    mat_rank,
    matrix_from_rows,
    nullspace,
    polymap_from_vector,
    polynomial_from_vector,
    solve_combination,
    vectorize_polymap,
    vectorize_polynomial,
)
from birevnf.poly import GaussianRational

from conftest import make_rng, random_polymap, random_polynomial


def test_nullspace_of_simple_relation():
    # x + 2y = 0 over columns (0, 1, 2)
    basis = nullspace([{0: 1, 1: 2}], [0, 1, 2])
    assert len(basis) == 2
    assert basis[0] == {1: Fraction(1), 0: Fraction(-2)}
    assert basis[1] == {2: Fraction(1)}


def test_nullspace_full_rank_is_empty():
    basis = nullspace([{0: 1}, {1: 3}], [0, 1])
    assert basis == []


def test_fraction_free_matches_plain_on_random_systems():
    from birevnf.oracle import _plain_nullspace

    rng = make_rng(42)
    for _ in range(20):
        ncols = rng.randint(2, 7)
        rows = []
        for _ in range(rng.randint(1, 6)):
            row = {
                c: Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                for c in range(ncols)
                if rng.random() < 0.6
            }
            row = {c: v for c, v in row.items() if v}
            if row:
                rows.append(row)
        cols = list(range(ncols))
        a = nullspace([dict(r) for r in rows], cols)
        b = _plain_nullspace([dict(r) for r in rows], cols)
        assert len(a) == len(b)
        span = SpanBasis(a)
        for vec in b:
            assert span.contains(vec)


def test_span_basis_membership_and_dimension():
    span = SpanBasis([{0: Fraction(1), 1: Fraction(1)}, {1: Fraction(2)}])
    assert span.dimension == 2
    assert span.contains({0: Fraction(3)})
    assert not span.contains({2: Fraction(1)})
    assert not span.insert({0: Fraction(1), 1: Fraction(-7)})
    assert span.insert({2: Fraction(5)})


def test_solve_combination_finds_exact_coefficients():
    vectors = [{0: 1, 1: 1}, {1: 1, 2: 1}]
    target = {0: 2, 1: 5, 2: 3}
    coeffs = solve_combination(vectors, target)
    assert coeffs == [2, 3]
    assert solve_combination(vectors, {0: 1, 2: 1}) is None


def test_solve_combination_over_gaussian_entries():
    i = GaussianRational(0, 1)
    one = GaussianRational(1)
    vectors = [{0: i}, {1: one}]
    target = {0: GaussianRational(0, 3), 1: GaussianRational(-2)}
    coeffs = solve_combination(vectors, target)
    assert coeffs == [GaussianRational(3), GaussianRational(-2)]


def test_matrix_inverse_and_rank():
    m = matrix_from_rows([[1, 1], [0, 2]])
    assert mat_rank(m) == 2
    assert mat_mul(m, mat_inverse(m)) == identity_matrix(2)
    singular = matrix_from_rows([[1, 2], [2, 4]])
    assert mat_rank(singular) == 1
    with pytest.raises(DimensionError):
        mat_inverse(singular)


def test_vectorize_round_trip_polynomial():
    p = random_polynomial(make_rng(3), 2, max_degree=4)
    assert polynomial_from_vector(vectorize_polynomial(p), p.nvars) == p


def test_vectorize_round_trip_polymap():
    g = random_polymap(make_rng(4), 2, max_degree=3)
    assert polymap_from_vector(vectorize_polymap(g), 2) == g


def test_echelon_rank_is_row_order_independent():
    rows = [{0: 1, 1: 2}, {0: 2, 1: 4}, {1: 1, 2: 1}]
    e1, e2 = Echelon(), Echelon()
    for r in rows:
        e1.insert(dict(r))
    for r in reversed(rows):
        e2.insert(dict(r))
    assert e1.rank == e2.rank == 2
    assert sorted(e1.pivots) == sorted(e2.pivots)
