"""Continuous symmetry of the linearization: shear, torus, involutions, catalogs.

The linearization acts on R^2 x C^n through a 2x2 nilpotent block and n
rotation blocks with nonzero frequencies.  The closure of its exponential
flow is a shear factor times a k-torus, where k counts algebraically
independent frequencies; the torus is described purely by an integer weight
lattice derived from the declared resonance relations, never by numeric
frequency values, so no accidental resonances can sneak in.

Invariance and equivariance under the continuous group reduce to exact
integer conditions on exponents (torus) plus polynomial identities for the
shear, implemented here.  The module also enumerates the inequivalent pairs
of commuting reversing involutions, classifies the sign regimes into the
four normal-form types, and ships the built-in catalogs of Hilbert bases
and equivariant generators for the supported resonance cases.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product as iter_product
from math import gcd
from typing import Sequence

from .errors import DimensionError, UnsupportedCase
from .group import (
    GroupContext,
    SemidirectSpec,
    SignedElement,
    anticommute_check,
    product_sigma,
)
from .linalg import (
    Echelon,
    Matrix,
    identity_matrix,
    mat_add,
    mat_equal,
    mat_mul,
    mat_neg,
    mat_nullity,
    matrix_from_rows,
)
from .poly import (
    GaussianRational,
    I,
    ONE,
    PolyMap,
    Polynomial,
    im_part,
    re_part,
    x_index,
    z_index,
    zbar_index,
)

TYPE_NAMES = ("A", "B", "C", "D")


# -- the linearization -------------------------------------------------------


@dataclass(frozen=True)
class LinearPart:
    """Nilpotent 2x2 block plus n rotation blocks with symbolic frequencies.

    resonance_relations rows (c_1, ..., c_n) assert sum_j c_j omega_j = 0;
    the frequencies are otherwise algebraically independent.  Rows that
    would force some omega_j = 0 are rejected, matching the requirement
    that every frequency is nonzero.
    """

    n: int
    resonance_relations: tuple[tuple[int, ...], ...] = ()
    omegas: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError("at least one rotation block is required")
        if not self.omegas:
            object.__setattr__(
                self, "omegas", tuple(f"omega{j}" for j in range(1, self.n + 1))
            )
        if len(self.omegas) != self.n:
            raise DimensionError("one frequency label per rotation block")
        rels = []
        for row in self.resonance_relations:
            row = tuple(int(c) for c in row)
            if len(row) != self.n:
                raise DimensionError("resonance relation of wrong length")
            if not any(row):
                raise DimensionError("zero resonance relation")
            rels.append(row)
        object.__setattr__(self, "resonance_relations", tuple(rels))
        # a frequency forced to zero contradicts the nonzero-frequency requirement
        ech = Echelon()
        for row in self.resonance_relations:
            ech.insert({j: c for j, c in enumerate(row) if c})
        rank = ech.rank
        for j in range(self.n):
            probe = Echelon()
            for row in self.resonance_relations:
                probe.insert({k: c for k, c in enumerate(row) if c})
            if not probe.insert({j: 1}):
                raise DimensionError(
                    f"relations force omega{j + 1} = 0; frequencies must be nonzero"
                )
        object.__setattr__(self, "_rank", rank)

    @property
    def nvars(self) -> int:
        return 2 * self.n + 2

    @property
    def torus_rank(self) -> int:
        return self.n - self._rank

    def torus_weight_rows(self) -> tuple[tuple[int, ...], ...]:
        """Primitive integer basis of the frequency solution lattice."""
        ech = Echelon()
        for row in self.resonance_relations:
            ech.insert({j: c for j, c in enumerate(row) if c})
        basis = ech.nullspace(list(range(self.n)))
        rows = []
        for vec in basis:
            denom = 1
            for value in vec.values():
                denom = denom * value.denominator // gcd(denom, value.denominator)
            ints = [int(vec.get(j, 0) * denom) for j in range(self.n)]
            g = gcd(*(abs(v) for v in ints if v))
            if g > 1:
                ints = [v // g for v in ints]
            lead = next(v for v in ints if v)
            if lead < 0:
                ints = [-v for v in ints]
            rows.append(tuple(ints))
        return tuple(sorted(rows, reverse=True))

    def shear_generator(self) -> Matrix:
        rows = [[0] * self.nvars for _ in range(self.nvars)]
        rows[x_index(2)][x_index(1)] = 1
        return matrix_from_rows(rows)

    def torus_generator(self, weights: Sequence[int]) -> Matrix:
        rows = [[GaussianRational(0)] * self.nvars for _ in range(self.nvars)]
        for j, w in enumerate(weights, start=1):
            rows[z_index(j)][z_index(j)] = GaussianRational(0, w)
            rows[zbar_index(j)][zbar_index(j)] = GaussianRational(0, -w)
        return matrix_from_rows(rows)

    def infinitesimal_generators(self) -> tuple[Matrix, ...]:
        gens = [self.shear_generator()]
        for row in self.torus_weight_rows():
            gens.append(self.torus_generator(row))
        return tuple(gens)


# -- the closure group data --------------------------------------------------


@dataclass(frozen=True)
class SGroupData:
    """Torus weights, shear flag, and the catalog of invariants/equivariants.

    Every stored Hilbert-basis element and equivariant generator is checked
    against the infinitesimal conditions at construction.
    """

    nblocks: int
    torus_weights: tuple[tuple[int, ...], ...]
    has_shear: bool
    hilbert_basis: tuple[Polynomial, ...] = ()
    equivariant_generators: tuple[PolyMap, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "hilbert_basis", tuple(self.hilbert_basis))
        object.__setattr__(
            self, "equivariant_generators", tuple(self.equivariant_generators)
        )
        for row in self.torus_weights:
            if len(row) != self.nblocks:
                raise DimensionError("weight row length must match block count")
        for p in self.hilbert_basis:
            if not p.is_real_valued():
                raise DimensionError("Hilbert basis elements must be real-valued")
            if p.degree() < 1:
                raise DimensionError("Hilbert basis elements must be non-constant")
            if not self.infinitesimal_ok(p, "invariant"):
                raise DimensionError(f"basis element fails invariance: {p}")
        for g in self.equivariant_generators:
            if not self.infinitesimal_ok(g, "equivariant"):
                raise DimensionError(f"generator fails equivariance: {g}")

    @property
    def nvars(self) -> int:
        return 2 * self.nblocks + 2

    def monomial_weight_defect(self, mono, weights: Sequence[int]) -> int:
        return sum(
            w * (mono[z_index(j)] - mono[zbar_index(j)])
            for j, w in enumerate(weights, start=1)
        )

    def component_weight(self, comp: int, weights: Sequence[int]) -> int:
        """Torus weight of coordinate component comp (0,1 = x; 2+j = z_{j+1})."""
        return 0 if comp < 2 else weights[comp - 2]

    def infinitesimal_ok(self, obj, kind: str) -> bool:
        if kind == "invariant":
            if not isinstance(obj, Polynomial):
                raise TypeError("invariance applies to Polynomial")
            for weights in self.torus_weights:
                for mono in obj.monomials():
                    if self.monomial_weight_defect(mono, weights) != 0:
                        return False
            if self.has_shear:
                x1 = Polynomial.variable(obj.nvars, x_index(1))
                if x1 * obj.partial(x_index(2)):
                    return False
            return True
        if kind == "equivariant":
            if not isinstance(obj, PolyMap):
                raise TypeError("equivariance applies to PolyMap")
            comps = (*obj.x_components, *obj.z_components)
            for weights in self.torus_weights:
                for c, poly in enumerate(comps):
                    target = self.component_weight(c, weights)
                    for mono in poly.monomials():
                        if self.monomial_weight_defect(mono, weights) != target:
                            return False
            if self.has_shear:
                nvars = obj.nvars
                x1 = Polynomial.variable(nvars, x_index(1))
                gx1, gx2 = obj.x_components
                if x1 * gx1.partial(x_index(2)):
                    return False
                if x1 * gx2.partial(x_index(2)) != gx1:
                    return False
                for poly in obj.z_components:
                    if x1 * poly.partial(x_index(2)):
                        return False
            return True
        raise ValueError(f"unknown infinitesimal kind {kind!r}")


def structure_of_S(linear_part: LinearPart) -> SGroupData:
    """Shear/torus skeleton of the closure group (no catalog attached)."""
    return SGroupData(
        nblocks=linear_part.n,
        torus_weights=linear_part.torus_weight_rows(),
        has_shear=True,
    )


def infinitesimal_check(obj, data: SGroupData, kind: str) -> bool:
    return data.infinitesimal_ok(obj, kind)


# -- involutions -------------------------------------------------------------


def phi_matrix(n: int) -> Matrix:
    """(x1, x2, z) -> (x1, -x2, conj z)."""
    nvars = 2 * n + 2
    rows = [[GaussianRational(0)] * nvars for _ in range(nvars)]
    rows[0][0] = ONE
    rows[1][1] = -ONE
    for j in range(1, n + 1):
        rows[z_index(j)][zbar_index(j)] = ONE
        rows[zbar_index(j)][z_index(j)] = ONE
    return matrix_from_rows(rows)


def psi_matrix(signs: Sequence[int]) -> Matrix:
    """(x1, x2, z) -> (a0 x1, -a0 x2, a_j conj z_j) for signs (a0, ..., an)."""
    signs = tuple(int(s) for s in signs)
    if any(s not in (1, -1) for s in signs):
        raise DimensionError("signs must be +1 or -1")
    n = len(signs) - 1
    if n < 1:
        raise DimensionError("need signs (a0, a1, ..., an) with n >= 1")
    nvars = 2 * n + 2
    rows = [[GaussianRational(0)] * nvars for _ in range(nvars)]
    rows[0][0] = GaussianRational(signs[0])
    rows[1][1] = GaussianRational(-signs[0])
    for j in range(1, n + 1):
        rows[z_index(j)][zbar_index(j)] = GaussianRational(signs[j])
        rows[zbar_index(j)][z_index(j)] = GaussianRational(signs[j])
    return matrix_from_rows(rows)


def phi_element(n: int) -> SignedElement:
    return SignedElement(phi_matrix(n), -1, "phi")


def psi_element(signs: Sequence[int]) -> SignedElement:
    return SignedElement(psi_matrix(signs), -1, "psi")


def fix_dimension(element: SignedElement) -> int:
    """Real dimension of the fixed-point space of a linear involution."""
    diff = mat_add(element.matrix, mat_neg(identity_matrix(element.size)))
    return mat_nullity(diff)


@dataclass(frozen=True)
class InvolutionPair:
    """A reversing pair (phi, psi) determined by the block signs of psi."""

    signs: tuple[int, ...]
    phi: SignedElement
    psi: SignedElement

    def __post_init__(self):
        if not self.phi.is_involution() or not self.psi.is_involution():
            raise DimensionError("both elements must be involutions")
        if not mat_equal(
            mat_mul(self.phi.matrix, self.psi.matrix),
            mat_mul(self.psi.matrix, self.phi.matrix),
        ):
            raise DimensionError("the two involutions must commute")


def enumerate_involution_pairs(linear_part: LinearPart) -> tuple[InvolutionPair, ...]:
    """The 2^n inequivalent reversing pairs, one per sign class.

    The first involution is fixed; the second runs over the block sign
    tuples (a0, ..., an) normalized to a0 = +1, picking one representative
    from each global sign-flip class.  Every returned element anti-commutes
    with the linearization and has an (n+1)-dimensional fixed-point space.
    """
    n = linear_part.n
    phi = phi_element(n)
    if not anticommute_check(phi, linear_part):
        raise DimensionError("constructed involution fails to anti-commute")
    pairs = []
    for tail in iter_product((1, -1), repeat=n):
        signs = (1, *tail)
        psi = psi_element(signs)
        pair = InvolutionPair(signs, phi, psi)
        if not anticommute_check(psi, linear_part):
            raise DimensionError("constructed involution fails to anti-commute")
        pairs.append(pair)
    return tuple(pairs)


def classify_type(signs: Sequence[int], exponents: Sequence[int]) -> str:
    """Normal-form type A/B/C/D from (a0, a1, a2) and the resonance pair."""
    if len(signs) < 3:
        raise DimensionError("need at least signs (a0, a1, a2)")
    n1, n2 = exponents
    if n1 < 1 or n2 < 1:
        raise DimensionError("resonance exponents must be >= 1")
    a0, a1, a2 = signs[0], signs[1], signs[2]
    if any(s not in (1, -1) for s in (a0, a1, a2)):
        raise DimensionError("signs must be +1 or -1")
    twist = a1 ** n2 * a2 ** n1
    if a0 == 1:
        return "A" if twist == 1 else "B"
    return "C" if twist == 1 else "D"


# -- catalog construction ----------------------------------------------------


def _norm_sq(nvars: int, j: int) -> Polynomial:
    mono = [0] * nvars
    mono[z_index(j)] = 1
    mono[zbar_index(j)] = 1
    return Polynomial.monomial(nvars, tuple(mono))


def _cross_monomial(nvars: int, j1: int, e1: int, j2: int, e2: int) -> Polynomial:
    """z_{j1}^{e1} * conj(z_{j2})^{e2} as a polynomial."""
    mono = [0] * nvars
    mono[z_index(j1)] = e1
    mono[zbar_index(j2)] = e2
    return Polynomial.monomial(nvars, tuple(mono))


def _unit_map(n: int, comp: int, poly: Polynomial) -> PolyMap:
    nvars = 2 * n + 2
    zero = Polynomial.zero(nvars)
    xs = [zero, zero]
    zs = [zero] * n
    if comp < 2:
        xs[comp] = poly
    else:
        zs[comp - 2] = poly
    return PolyMap(tuple(xs), tuple(zs))


def _x_pair_map(n: int) -> PolyMap:
    nvars = 2 * n + 2
    zero = Polynomial.zero(nvars)
    return PolyMap(
        (Polynomial.variable(nvars, 0), Polynomial.variable(nvars, 1)),
        (zero,) * n,
    )


def _rotation_pair(n: int, j: int) -> tuple[PolyMap, PolyMap]:
    """The z_j and i*z_j generators in component z_j."""
    nvars = 2 * n + 2
    zj = Polynomial.variable(nvars, z_index(j))
    return (
        _unit_map(n, 2 + (j - 1), zj),
        _unit_map(n, 2 + (j - 1), zj.scale(I)),
    )


def _resonant_block_maps(
    n: int, j1: int, j2: int, e1: int, e2: int
) -> tuple[PolyMap, PolyMap, PolyMap, PolyMap]:
    """Cross-term generators for a resonant pair of blocks.

    Returns (w, i*w, w', i*w') with w = conj(z_{j1})^{e1-1} z_{j2}^{e2} in
    component z_{j1} and w' = z_{j1}^{e1} conj(z_{j2})^{e2-1} in component
    z_{j2}; these carry the torus weights of z_{j1} and z_{j2}.
    """
    nvars = 2 * n + 2
    mono1 = [0] * nvars
    mono1[zbar_index(j1)] = e1 - 1
    mono1[z_index(j2)] = e2
    w1 = Polynomial.monomial(nvars, tuple(mono1))
    mono2 = [0] * nvars
    mono2[z_index(j1)] = e1
    mono2[zbar_index(j2)] = e2 - 1
    w2 = Polynomial.monomial(nvars, tuple(mono2))
    c1 = 2 + (j1 - 1)
    c2 = 2 + (j2 - 1)
    return (
        _unit_map(n, c1, w1),
        _unit_map(n, c1, w1.scale(I)),
        _unit_map(n, c2, w2),
        _unit_map(n, c2, w2.scale(I)),
    )


def linear_part_for_case(case: str, params: Sequence[int]) -> LinearPart:
    """The linearization whose closure group the named catalog describes."""
    if case == "non_resonant":
        (n,) = params
        return LinearPart(n)
    if case == "res_n1n2_C3":
        n1, n2 = params
        return LinearPart(3, ((-n2, n1, 0),))
    if case == "res_n1n2_Cn":
        n1, n2, n = params
        return LinearPart(n, ((-n2, n1) + (0,) * (n - 2),))
    if case == "res_double_C4":
        n1, n2, m1, m2 = params
        return LinearPart(4, ((-n2, n1, 0, 0), (0, 0, -m2, m1)))
    raise UnsupportedCase(f"unknown catalog case {case!r}")


def catalog(case: str, params: Sequence[int]) -> SGroupData:
    """Built-in Hilbert bases and equivariant generators for the closure group.

    Supported cases: non_resonant(n), res_n1n2_C3(n1, n2),
    res_n1n2_Cn(n1, n2, n), res_double_C4(n1, n2, m1, m2).  Resonance
    exponent pairs must be coprime (a common factor names the same subtorus
    as the reduced pair, but the catalog formulas assume the reduced form).
    """
    params = tuple(int(p) for p in params)
    if any(p < 1 for p in params):
        raise UnsupportedCase("catalog parameters must be >= 1")
    if case == "non_resonant":
        if len(params) != 1:
            raise UnsupportedCase("non_resonant expects (n,)")
        (n,) = params
        return _catalog_non_resonant(n)
    if case == "res_n1n2_C3":
        if len(params) != 2:
            raise UnsupportedCase("res_n1n2_C3 expects (n1, n2)")
        n1, n2 = params
        _require_coprime(n1, n2)
        return _catalog_single_resonance(n1, n2, 3)
    if case == "res_n1n2_Cn":
        if len(params) != 3:
            raise UnsupportedCase("res_n1n2_Cn expects (n1, n2, n)")
        n1, n2, n = params
        if n < 3:
            raise UnsupportedCase("res_n1n2_Cn requires n >= 3")
        _require_coprime(n1, n2)
        return _catalog_single_resonance(n1, n2, n)
    if case == "res_double_C4":
        if len(params) != 4:
            raise UnsupportedCase("res_double_C4 expects (n1, n2, m1, m2)")
        n1, n2, m1, m2 = params
        _require_coprime(n1, n2)
        _require_coprime(m1, m2)
        return _catalog_double_resonance(n1, n2, m1, m2)
    raise UnsupportedCase(f"unknown catalog case {case!r}")


def _require_coprime(a: int, b: int):
    if gcd(a, b) != 1:
        raise UnsupportedCase(
            f"resonance exponents ({a}, {b}) share a factor; use the reduced pair"
        )
    if a == 1 and b == 1:
        raise UnsupportedCase(
            "equal frequencies (the 1:1 case) are outside the shipped catalogs; "
            "supply the closure-group data manually"
        )


def _catalog_non_resonant(n: int) -> SGroupData:
    linear = LinearPart(n)
    nvars = 2 * n + 2
    basis = [Polynomial.variable(nvars, x_index(1))]
    basis += [_norm_sq(nvars, j) for j in range(1, n + 1)]
    gens: list[PolyMap] = [
        _x_pair_map(n),
        _unit_map(n, 1, Polynomial.constant(nvars, 1)),
    ]
    for j in range(1, n + 1):
        gens.extend(_rotation_pair(n, j))
    return SGroupData(
        nblocks=n,
        torus_weights=linear.torus_weight_rows(),
        has_shear=True,
        hilbert_basis=tuple(basis),
        equivariant_generators=tuple(gens),
    )


def _catalog_single_resonance(n1: int, n2: int, n: int) -> SGroupData:
    linear = linear_part_for_case("res_n1n2_Cn", (n1, n2, n))
    nvars = 2 * n + 2
    cross = _cross_monomial(nvars, 1, n2, 2, n1)
    basis = [
        Polynomial.variable(nvars, x_index(1)),
        _norm_sq(nvars, 1),
        _norm_sq(nvars, 2),
        re_part(cross),
        im_part(cross),
    ]
    basis += [_norm_sq(nvars, j) for j in range(3, n + 1)]
    gens: list[PolyMap] = [
        _x_pair_map(n),
        _unit_map(n, 1, Polynomial.constant(nvars, 1)),
    ]
    z1_pair = _rotation_pair(n, 1)
    res1, ires1, res2, ires2 = _resonant_block_maps(n, 1, 2, n2, n1)
    z2_pair = _rotation_pair(n, 2)
    gens.extend([z1_pair[0], z1_pair[1], res1, ires1])
    gens.extend([z2_pair[0], z2_pair[1], res2, ires2])
    for j in range(3, n + 1):
        gens.extend(_rotation_pair(n, j))
    return SGroupData(
        nblocks=n,
        torus_weights=linear.torus_weight_rows(),
        has_shear=True,
        hilbert_basis=tuple(basis),
        equivariant_generators=tuple(gens),
    )


def _catalog_double_resonance(n1: int, n2: int, m1: int, m2: int) -> SGroupData:
    n = 4
    linear = linear_part_for_case("res_double_C4", (n1, n2, m1, m2))
    nvars = 2 * n + 2
    cross12 = _cross_monomial(nvars, 1, n2, 2, n1)
    cross34 = _cross_monomial(nvars, 3, m2, 4, m1)
    basis = [
        Polynomial.variable(nvars, x_index(1)),
        _norm_sq(nvars, 1),
        _norm_sq(nvars, 2),
        re_part(cross12),
        im_part(cross12),
        _norm_sq(nvars, 3),
        _norm_sq(nvars, 4),
        re_part(cross34),
        im_part(cross34),
    ]
    gens: list[PolyMap] = [
        _x_pair_map(n),
        _unit_map(n, 1, Polynomial.constant(nvars, 1)),
    ]
    z1_pair = _rotation_pair(n, 1)
    r1, ir1, r2, ir2 = _resonant_block_maps(n, 1, 2, n2, n1)
    z2_pair = _rotation_pair(n, 2)
    gens.extend([z1_pair[0], z1_pair[1], r1, ir1])
    gens.extend([z2_pair[0], z2_pair[1], r2, ir2])
    z3_pair = _rotation_pair(n, 3)
    r3, ir3, r4, ir4 = _resonant_block_maps(n, 3, 4, m2, m1)
    z4_pair = _rotation_pair(n, 4)
    gens.extend([z3_pair[0], z3_pair[1], r3, ir3])
    gens.extend([z4_pair[0], z4_pair[1], r4, ir4])
    return SGroupData(
        nblocks=n,
        torus_weights=linear.torus_weight_rows(),
        has_shear=True,
        hilbert_basis=tuple(basis),
        equivariant_generators=tuple(gens),
    )


# -- the full problem datum --------------------------------------------------


@dataclass(frozen=True)
class SymmetryContext:
    """Linearization, closure-group data, and the reversing involution pair.

    Construction verifies the whole tower: both involutions anti-commute
    with the linearization, each extension satisfies the semidirect
    compatibility condition (conjugation preserves the infinitesimal
    generator lattice and the finite factor), and the product sign map is
    well defined.
    """

    linear_part: LinearPart
    sgroup: SGroupData
    signs: tuple[int, ...]
    phi: SignedElement
    psi: SignedElement
    semidirect: tuple[SemidirectSpec, SemidirectSpec]

    @classmethod
    def build(
        cls,
        linear_part: LinearPart,
        sgroup: SGroupData,
        signs: Sequence[int],
    ) -> "SymmetryContext":
        signs = tuple(int(s) for s in signs)
        if len(signs) != linear_part.n + 1:
            raise DimensionError(
                f"expected {linear_part.n + 1} signs (a0..an), got {len(signs)}"
            )
        phi = phi_element(linear_part.n)
        psi = psi_element(signs)
        for el in (phi, psi):
            if not anticommute_check(el, linear_part):
                raise DimensionError("involution does not anti-commute with L")
        infinitesimals = linear_part.infinitesimal_generators()
        first = SemidirectSpec.build((), phi, infinitesimals)
        second = SemidirectSpec.build((phi,), psi, infinitesimals)
        product_sigma([phi], [psi])
        return cls(linear_part, sgroup, signs, phi, psi, (first, second))

    @classmethod
    def from_case(
        cls, case: str, params: Sequence[int], signs: Sequence[int]
    ) -> "SymmetryContext":
        return cls.build(
            linear_part_for_case(case, params), catalog(case, params), signs
        )

    @property
    def nblocks(self) -> int:
        return self.linear_part.n

    def full_context(self) -> GroupContext:
        """Both involutions reversing: the product sign map sigma."""
        return GroupContext((self.phi, self.psi), self.sgroup)

    def phi_context(self) -> GroupContext:
        """The first extension only: sign map sigma_1 on S x| Z2(phi)."""
        return GroupContext((self.phi,), self.sgroup)

    def psi_context(self) -> GroupContext:
        return GroupContext((self.psi,), self.sgroup)

    def sigma_tilde_psi_context(self) -> GroupContext:
        """phi acting as a symmetry, psi reversing: the forgetful sign map."""
        return GroupContext((replace(self.phi, sign=1), self.psi), self.sgroup)

    def symmetric_context(self) -> GroupContext:
        """Both involutions acting as plain symmetries."""
        return GroupContext(
            (replace(self.phi, sign=1), replace(self.psi, sign=1)), self.sgroup
        )
