"""Signed groups: closure, sign maps, semidirect condition, membership."""

import pytest

from birevnf.continuous import LinearPart, phi_element, psi_element
from birevnf.errors import (
    ConditionViolated,
    DimensionError,
    NotAHomomorphism,
    OrderExceeded,
    SignInconsistency,
)
from birevnf.group import (
    GroupContext,
    SignedElement,
    anticommute_check,
    check_semidirect_condition,
    close_group,
    element_from_json,
    element_to_json,
    membership,
    product_sigma,
)
from birevnf.linalg import identity_matrix, matrix_from_rows
from birevnf.poly import (
    GaussianRational,
    I,
    Polynomial,
    z_index,
    zbar_index,
)


def scaling_on_block(n, j, factor):
    """Diagonal map z_j -> factor * z_j (conjugate on the paired slot)."""
    nvars = 2 * n + 2
    rows = [[GaussianRational(0)] * nvars for _ in range(nvars)]
    rows[0][0] = GaussianRational(1)
    rows[1][1] = GaussianRational(1)
    for k in range(1, n + 1):
        c = factor if k == j else GaussianRational(1)
        rows[z_index(k)][z_index(k)] = c
        rows[zbar_index(k)][zbar_index(k)] = c.conjugate()
    return matrix_from_rows(rows)


def swap_blocks(n=2):
    nvars = 2 * n + 2
    rows = [[GaussianRational(0)] * nvars for _ in range(nvars)]
    rows[0][0] = GaussianRational(1)
    rows[1][1] = GaussianRational(1)
    rows[z_index(1)][z_index(2)] = GaussianRational(1)
    rows[zbar_index(1)][zbar_index(2)] = GaussianRational(1)
    rows[z_index(2)][z_index(1)] = GaussianRational(1)
    rows[zbar_index(2)][zbar_index(1)] = GaussianRational(1)
    return matrix_from_rows(rows)


def test_closure_of_the_two_involutions_is_klein_four():
    phi = phi_element(2)
    psi = psi_element((-1, -1, -1))
    group = close_group([phi, psi])
    assert group.order == 4
    assert sorted(el.sign for el in group.elements) == [-1, -1, 1, 1]
    # every element is its own inverse: the Klein four-group
    for el in group.elements:
        assert el.is_involution()


def test_closure_is_closed_and_sign_is_homomorphism():
    phi = phi_element(2)
    psi = psi_element((-1, 1, -1))
    group = close_group([phi, psi])
    from birevnf.linalg import mat_mul, matrix_key

    keys = {el.key(): el.sign for el in group.elements}
    for a in group.elements:
        for b in group.elements:
            product = mat_mul(a.matrix, b.matrix)
            key = matrix_key(product)
            assert key in keys
            assert keys[key] == a.sign * b.sign


def test_closure_of_identity_alone():
    ident = SignedElement(identity_matrix(4), 1)
    assert close_group([ident]).order == 1


def test_closure_of_single_involution():
    phi = phi_element(1)
    group = close_group([phi])
    assert group.order == 2
    assert group.sign_of(phi.matrix) == -1
    assert group.sign_of(identity_matrix(4)) == 1


def test_closure_order_bound():
    nvars = 4
    rows = [[0] * nvars for _ in range(nvars)]
    rows[0][0] = 1
    rows[1][0] = 1
    rows[1][1] = 1
    rows[2][2] = 1
    rows[3][3] = 1
    shear = SignedElement(matrix_from_rows(rows), 1)
    with pytest.raises(OrderExceeded):
        close_group([shear], max_order=16)


def test_closure_sign_inconsistency():
    phi = phi_element(1)
    wrong = SignedElement(phi.matrix, 1)
    with pytest.raises(SignInconsistency):
        close_group([phi, wrong])


def test_product_sigma_values():
    phi = phi_element(2)
    psi = psi_element((-1, -1, -1))
    ps = product_sigma([phi], [psi])
    assert ps.sigma(phi, psi) == 1
    ident1 = SignedElement(identity_matrix(6), 1)
    assert ps.sigma(ident1, ident1) == 1
    assert ps.sigma_tilde(phi, ident1) == 1  # first factor acts as symmetries
    assert ps.sigma_tilde(phi, psi) == -1


def test_product_sigma_conjugation_must_stay_in_factor():
    n = 2
    rot = SignedElement(scaling_on_block(n, 1, I), -1)
    kappa = SignedElement(swap_blocks(n), -1)
    with pytest.raises(NotAHomomorphism):
        product_sigma([rot], [kappa])


def test_product_sigma_conjugation_must_preserve_signs():
    n = 2
    minus1 = SignedElement(scaling_on_block(n, 1, GaussianRational(-1)), -1, "u")
    minus2 = SignedElement(scaling_on_block(n, 2, GaussianRational(-1)), 1, "v")
    kappa = SignedElement(swap_blocks(n), -1)
    with pytest.raises(NotAHomomorphism):
        product_sigma([minus1, minus2], [kappa])


def test_semidirect_condition_on_infinitesimal_generators():
    linear = LinearPart(2)
    phi = phi_element(2)
    report = check_semidirect_condition(
        [], [phi], infinitesimal_generators=linear.infinitesimal_generators()
    )
    assert report.infinitesimal_checked == 3
    assert report.ok


def test_semidirect_condition_finite_part_with_explicit_automorphism():
    phi = phi_element(1)
    psi = psi_element((-1, -1))
    report = check_semidirect_condition(
        [psi], [phi], mu=lambda eta, rho: psi  # commuting pair: trivial twist
    )
    assert report.finite_pairs_checked == 1


def x_z_swap(n=1):
    """Conjugation-compatible map exchanging the x-plane with the z1-plane."""
    from fractions import Fraction

    nvars = 2 * n + 2
    half = GaussianRational(Fraction(1, 2))
    half_i = GaussianRational(0, Fraction(1, 2))
    rows = [[GaussianRational(0)] * nvars for _ in range(nvars)]
    rows[0][z_index(1)] = half
    rows[0][zbar_index(1)] = half
    rows[1][z_index(1)] = -half_i
    rows[1][zbar_index(1)] = half_i
    rows[z_index(1)][0] = GaussianRational(1)
    rows[z_index(1)][1] = I
    rows[zbar_index(1)][0] = GaussianRational(1)
    rows[zbar_index(1)][1] = -I
    for k in range(2, n + 1):
        rows[z_index(k)][z_index(k)] = GaussianRational(1)
        rows[zbar_index(k)][zbar_index(k)] = GaussianRational(1)
    return matrix_from_rows(rows)


def test_semidirect_condition_violated_by_x_z_swap():
    linear = LinearPart(1)
    kappa = SignedElement(x_z_swap(1), -1)
    with pytest.raises(ConditionViolated):
        check_semidirect_condition(
            [], [kappa], infinitesimal_generators=linear.infinitesimal_generators()
        )


def test_semidirect_condition_violated_by_resonant_block_swap():
    # swapping z1 and z2 maps the (1,2) weight direction outside the lattice
    linear = LinearPart(3, ((-2, 1, 0),))
    nvars = 8
    rows = [[GaussianRational(0)] * nvars for _ in range(nvars)]
    rows[0][0] = GaussianRational(1)
    rows[1][1] = GaussianRational(1)
    rows[z_index(1)][z_index(2)] = GaussianRational(1)
    rows[zbar_index(1)][zbar_index(2)] = GaussianRational(1)
    rows[z_index(2)][z_index(1)] = GaussianRational(1)
    rows[zbar_index(2)][zbar_index(1)] = GaussianRational(1)
    rows[z_index(3)][z_index(3)] = GaussianRational(1)
    rows[zbar_index(3)][zbar_index(3)] = GaussianRational(1)
    kappa = SignedElement(matrix_from_rows(rows), -1)
    with pytest.raises(ConditionViolated):
        check_semidirect_condition(
            [], [kappa], infinitesimal_generators=linear.infinitesimal_generators()
        )


def test_block_swap_normalizes_nonresonant_torus():
    # without a resonance the swap is a legitimate normalizer
    linear = LinearPart(2)
    kappa = SignedElement(swap_blocks(2), -1)
    report = check_semidirect_condition(
        [], [kappa], infinitesimal_generators=linear.infinitesimal_generators()
    )
    assert report.ok


def test_membership_examples():
    n = 1
    nvars = 4
    phi = phi_element(n)
    ctx = GroupContext((phi,))
    mono = [0] * nvars
    mono[z_index(1)] = 1
    mono[zbar_index(1)] = 1
    norm = Polynomial.monomial(nvars, tuple(mono))
    assert membership(norm, ctx, "invariant")
    x2 = Polynomial.variable(nvars, 1)
    assert membership(x2, ctx, "anti_invariant")
    assert not membership(x2, ctx, "invariant")
    from birevnf.poly import PolyMap

    zero = Polynomial.zero(nvars)
    h3 = PolyMap((zero, zero), (Polynomial.variable(nvars, z_index(1)).scale(I),))
    assert membership(h3, ctx, "reversible_equivariant")
    assert not membership(h3, ctx, "equivariant")
    h2 = PolyMap((zero, zero), (Polynomial.variable(nvars, z_index(1)),))
    assert membership(h2, ctx, "equivariant")
    assert not membership(h2, ctx, "reversible_equivariant")


def test_reversible_membership_is_conjugation_invariant():
    # membership(g) agrees with membership(sign * kappa . g . kappa) for every
    # group element, member or not
    from conftest import make_rng, random_polymap
    from birevnf.symmetry_ops import transfer_T

    phi = phi_element(2)
    psi = psi_element((-1, 1, -1))
    ctx = GroupContext((phi, psi))
    rng = make_rng(11)
    for k in range(8):
        g = random_polymap(rng, 2, max_degree=3)
        if k % 2 == 0:
            g = transfer_T(transfer_T(g, phi), psi)  # often a genuine member
        for el in (phi, psi):
            twisted = (
                g.compose_linear(el.matrix).apply_linear(el.matrix).scale(el.sign)
            )
            assert membership(g, ctx, "reversible_equivariant") == membership(
                twisted, ctx, "reversible_equivariant"
            )


def test_anticommute_examples():
    linear = LinearPart(2)
    phi = phi_element(2)
    assert anticommute_check(phi, linear)
    ident = SignedElement(identity_matrix(6), 1)
    assert not anticommute_check(ident, linear)
    with pytest.raises(DimensionError):
        anticommute_check(phi_element(3), linear)


def test_semidirect_spec_builds_verified_extension():
    from birevnf.group import SemidirectSpec

    linear = LinearPart(2)
    phi = phi_element(2)
    psi = psi_element((-1, 1, -1))
    spec = SemidirectSpec.build((phi,), psi, linear.infinitesimal_generators())
    assert spec.kappa == psi
    assert spec.mu_check_report.finite_pairs_checked == 1
    assert spec.mu_check_report.infinitesimal_checked == 3
    from birevnf.continuous import SymmetryContext, catalog

    ctx = SymmetryContext.build(linear, catalog("non_resonant", (2,)), (-1, 1, -1))
    first, second = ctx.semidirect
    assert first.kappa == ctx.phi
    assert second.kappa == ctx.psi
    assert second.gamma1_finite == (ctx.phi,)


def test_signed_element_json_round_trip():
    psi = psi_element((-1, 1, -1))
    text = element_to_json(psi)
    back = element_from_json(text)
    assert back == psi
    assert back.sign == -1
