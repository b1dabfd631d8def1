"""Exact arithmetic, substitution, and rendering of the polynomial layer."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from birevnf.continuous import phi_matrix, psi_matrix
from birevnf.errors import IncompatibleMatrix
from birevnf.linalg import identity_matrix, mat_mul
from birevnf.poly import (
    GaussianRational,
    I,
    PolyMap,
    Polynomial,
    im_part,
    parse_polymap,
    parse_polynomial,
    re_part,
    render_polymap,
    render_polynomial,
    z_index,
    zbar_index,
)

from conftest import make_rng, random_polymap, random_polynomial


def var(nvars, index):
    return Polynomial.variable(nvars, index)


def test_additive_inverse():
    x1 = var(4, 0)
    assert (x1 + (-x1)).is_zero()


def test_product_of_conjugate_pair_is_norm_monomial():
    nvars = 4
    z1 = var(nvars, z_index(1))
    zb1 = var(nvars, zbar_index(1))
    prod = z1 * zb1
    mono = [0] * nvars
    mono[z_index(1)] = 1
    mono[zbar_index(1)] = 1
    assert prod == Polynomial.monomial(nvars, tuple(mono))


def test_resonant_re_im_square_identity():
    # Re(w)^2 + Im(w)^2 == |z1|^(2 n2) |z2|^(2 n1) for w = z1^n2 conj(z2)^n1
    n1, n2 = 1, 2
    nvars = 8
    mono = [0] * nvars
    mono[z_index(1)] = n2
    mono[zbar_index(2)] = n1
    w = Polynomial.monomial(nvars, tuple(mono))
    v4 = re_part(w)
    v5 = im_part(w)
    norm1 = [0] * nvars
    norm1[z_index(1)] = 1
    norm1[zbar_index(1)] = 1
    v2 = Polynomial.monomial(nvars, tuple(norm1))
    norm2 = [0] * nvars
    norm2[z_index(2)] = 1
    norm2[zbar_index(2)] = 1
    v3 = Polynomial.monomial(nvars, tuple(norm2))
    assert v4 * v4 + v5 * v5 == v2 ** n2 * v3 ** n1


def test_substitution_by_first_involution_negates_x2():
    nvars = 8
    x2 = var(nvars, 1)
    assert x2.substitute_linear(phi_matrix(3)) == -x2


def test_substitution_by_identity():
    rng = make_rng(1)
    p = random_polynomial(rng, 2)
    assert p.substitute_linear(identity_matrix(6)) == p


@pytest.mark.parametrize("a1", [1, -1])
def test_norm_square_invariant_under_second_involution(a1):
    nvars = 4
    mono = [0] * nvars
    mono[z_index(1)] = 1
    mono[zbar_index(1)] = 1
    norm = Polynomial.monomial(nvars, tuple(mono))
    assert norm.substitute_linear(psi_matrix((1, a1))) == norm
    assert norm.substitute_linear(psi_matrix((-1, a1))) == norm


def test_homogeneous_component_examples():
    nvars = 4
    x1 = var(nvars, 0)
    p = x1 + x1 * x1
    assert p.homogeneous_component(1) == x1
    assert p.homogeneous_component(3).is_zero()


def test_resonant_invariant_is_homogeneous():
    n1, n2 = 2, 3
    nvars = 8
    mono = [0] * nvars
    mono[z_index(1)] = n2
    mono[zbar_index(2)] = n1
    v4 = re_part(Polynomial.monomial(nvars, tuple(mono)))
    assert v4.is_homogeneous()
    assert v4.homogeneous_component(n1 + n2) == v4


@given(st.integers(0, 10_000), st.integers(0, 10_000), st.integers(0, 10_000))
def test_ring_axioms_on_random_inputs(sa, sb, sc):
    rng_a, rng_b, rng_c = make_rng(sa), make_rng(sb), make_rng(sc)
    a = random_polynomial(rng_a, 1, max_degree=4)
    b = random_polynomial(rng_b, 1, max_degree=4)
    c = random_polynomial(rng_c, 1, max_degree=4)
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(st.integers(0, 10_000))
def test_conjugation_is_an_involution(seed):
    p = random_polynomial(make_rng(seed), 2)
    assert p.conj().conj() == p


@given(st.integers(0, 10_000))
def test_substitution_composes(seed):
    p = random_polynomial(make_rng(seed), 2, max_degree=3)
    a = phi_matrix(2)
    b = psi_matrix((-1, 1, -1))
    assert p.substitute_linear(a).substitute_linear(b) == p.substitute_linear(
        mat_mul(a, b)
    )


def test_substitution_general_matrix_matches_monomial_fast_path():
    # a non-monomial conjugation-compatible matrix: x1 -> x1 + x2 shear
    nvars = 4
    rows = [[0] * nvars for _ in range(nvars)]
    rows[0][0] = 1
    rows[1][0] = 1
    rows[1][1] = 1
    rows[2][2] = 1
    rows[3][3] = 1
    from birevnf.linalg import matrix_from_rows

    shear = matrix_from_rows(rows)
    p = var(nvars, 1) ** 2  # x2^2 -> (x1 + x2)^2
    x1, x2 = var(nvars, 0), var(nvars, 1)
    assert p.substitute_linear(shear) == (x1 + x2) * (x1 + x2)


def test_incompatible_matrix_rejected():
    # swapping x1 with z1 breaks the conjugation pairing
    nvars = 4
    rows = [[0] * nvars for _ in range(nvars)]
    rows[0][z_index(1)] = 1
    rows[1][1] = 1
    rows[z_index(1)][0] = 1
    rows[zbar_index(1)][zbar_index(1)] = 1
    from birevnf.linalg import matrix_from_rows

    with pytest.raises(IncompatibleMatrix):
        var(nvars, 0).substitute_linear(matrix_from_rows(rows))


@given(st.integers(0, 10_000))
def test_reality_preserved_by_arithmetic_and_substitution(seed):
    rng = make_rng(seed)
    p = random_polynomial(rng, 2, max_degree=4)
    real = p + p.conj()
    assert real.is_real_valued()
    assert (real + real).is_real_valued()
    assert real.scale(Fraction(3, 7)).is_real_valued()
    assert real.substitute_linear(phi_matrix(2)).is_real_valued()


@given(st.integers(0, 10_000))
def test_polynomial_render_parse_round_trip(seed):
    p = random_polynomial(make_rng(seed), 2, max_degree=4)
    assert parse_polynomial(render_polynomial(p), 2) == p


@given(st.integers(0, 10_000))
def test_polymap_render_parse_round_trip(seed):
    g = random_polymap(make_rng(seed), 2, max_degree=3)
    assert parse_polymap(render_polymap(g), 2) == g


def test_render_is_deterministic_and_graded():
    nvars = 4
    p = var(nvars, 0) + var(nvars, 1) ** 2 + Polynomial.constant(nvars, I)
    assert render_polynomial(p) == "x2^2 + x1 + i"
    assert render_polynomial(p) == render_polynomial(p)


def test_polymap_reality_enforced():
    nvars = 4
    z1 = var(nvars, z_index(1))
    with pytest.raises(IncompatibleMatrix):
        PolyMap((z1, Polynomial.zero(nvars)), (Polynomial.zero(nvars),))


def test_polymap_conjugate_components_are_implicit():
    rng = make_rng(7)
    g = random_polymap(rng, 1, max_degree=3)
    comps = g.components()
    assert comps[zbar_index(1)] == g.z_components[0].conj()


def test_gaussian_rational_field_ops():
    a = GaussianRational(Fraction(1, 2), Fraction(-3))
    b = GaussianRational(0, 1)
    assert a * b / b == a
    assert (a - a) == GaussianRational(0)
    assert b ** 2 == GaussianRational(-1)
    assert b ** 3 == -b
