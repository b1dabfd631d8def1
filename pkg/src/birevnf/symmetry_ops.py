"""Two-term Reynolds averages, the transfer projection, and the pipeline.

For an involution kappa acting on V, the operators

    R(f) = (f + f . kappa) / 2          on polynomial functions,
    S(f) = (f - f . kappa) / 2          on polynomial functions,
    T(g) = (g - kappa . g . kappa) / 2  on polynomial mappings,

are exact idempotent projections: R + S is the identity, R projects onto
kappa-invariants, S onto the sign(-1) part, and T onto the mappings that
anti-commute with kappa.  All three are homomorphisms of modules over the
invariants of the extended group, which is what makes the generator
transport work:

  1. extend a Hilbert basis {u_i} along kappa via {R(u_i)} + {S(u_i)S(u_j)};
  2. multiply module generators by {1} + {S(u_i)} to re-express them over
     the smaller coefficient ring;
  3. project the products by T.

The pipeline runs this twice, once per reversing involution, starting from
the closure-group catalog: it yields a Hilbert basis for the full invariant
ring and module generators for the reversible-equivariant mappings under
the whole semidirect product.  Operator outputs keep their exact one-half
prefactors; only the simplification step rescales leading coefficients, so
idempotence identities hold on the nose while presented tables match the
cleaned-up convention.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CertificationFailure, ConditionViolated
from .group import SignedElement, membership
from .linalg import SpanBasis, vectorize_polymap, vectorize_polynomial
from .poly import (
    HALF,
    PolyMap,
    Polynomial,
    latex_polymap,
    latex_polynomial,
    render_polymap,
    render_polynomial,
)
from .continuous import SymmetryContext


def _require_involution(kappa: SignedElement):
    if not kappa.is_involution():
        raise ConditionViolated("the averaging element must be an involution")


def reynolds_R(f: Polynomial, kappa: SignedElement) -> Polynomial:
    """(f + f . kappa)/2: projection onto kappa-invariant functions."""
    _require_involution(kappa)
    return (f + f.substitute_linear(kappa.matrix)).scale(HALF)


def reynolds_S(f: Polynomial, kappa: SignedElement) -> Polynomial:
    """(f - f . kappa)/2: projection onto the kappa-odd functions."""
    _require_involution(kappa)
    return (f - f.substitute_linear(kappa.matrix)).scale(HALF)


def transfer_T(g: PolyMap, kappa: SignedElement) -> PolyMap:
    """(g - kappa . g . kappa)/2: projection onto kappa-reversible mappings."""
    _require_involution(kappa)
    conjugated = g.compose_linear(kappa.matrix).apply_linear(kappa.matrix)
    return (g - conjugated).scale(HALF)


# -- normalization and pruning -----------------------------------------------


def normalize_leading(elem):
    """Rescale by the inverse of the leading rational coefficient.

    Only real rational scalings are allowed (they preserve reality and the
    module structure), so a purely imaginary leading coefficient keeps its
    factor i and is scaled to unit imaginary part.
    """
    c = elem.leading_coefficient()
    if not c:
        return elem
    factor = c.re if c.re else c.im
    return elem.scale(Fraction(1) / factor)


def _canonical(elems):
    return tuple(sorted(elems, key=lambda e: e.sort_key()))


def _dedupe(elems):
    seen = set()
    out = []
    for e in elems:
        if e not in seen:
            seen.add(e)
            out.append(e)
    return out


def _weighted_exponents(degrees: Sequence[int], target: int):
    """Exponent tuples e with sum(e_i * degrees_i) == target, lexicographic."""

    def rec(i: int, remaining: int, prefix: tuple):
        if i == len(degrees):
            if remaining == 0:
                yield prefix
            return
        step = degrees[i]
        for e in range(remaining // step + 1):
            yield from rec(i + 1, remaining - e * step, prefix + (e,))

    yield from rec(0, target, ())


def ring_products(basis: Sequence[Polynomial], degree: int) -> list[Polynomial]:
    """All monomials in the basis elements of the given total degree."""
    if not basis:
        return []
    degrees = [u.degree() for u in basis]
    nvars = basis[0].nvars
    out = []
    for exps in _weighted_exponents(degrees, degree):
        prod = Polynomial.constant(nvars, 1)
        for u, e in zip(basis, exps):
            if e:
                prod = prod * u ** e
        out.append(prod)
    return out


def prune_ring(candidates: Iterable[Polynomial]) -> tuple[Polynomial, ...]:
    """Drop elements that are polynomials in the remaining ones.

    Homogeneous elements can only be generated in their own degree, so a
    degree-d candidate is tested against the span of all degree-d products
    of the others; ties keep the earlier element in canonical order.
    """
    elems = [e for e in _dedupe(_canonical(candidates)) if e]
    alive = list(range(len(elems)))
    for idx in reversed(range(len(elems))):
        others = [elems[i] for i in alive if i != idx]
        degree = elems[idx].degree()
        span = SpanBasis(
            vectorize_polynomial(p) for p in ring_products(others, degree) if p
        )
        if span.contains(vectorize_polynomial(elems[idx])):
            alive.remove(idx)
    return tuple(elems[i] for i in alive)


def prune_module(
    gens: Iterable[PolyMap], ring_basis: Sequence[Polynomial]
) -> tuple[PolyMap, ...]:
    """Drop generators lying in the module generated by the others."""
    elems = [g for g in _dedupe(_canonical(gens)) if g]
    alive = list(range(len(elems)))
    for idx in reversed(range(len(elems))):
        target = elems[idx]
        degree = target.degree()
        span = SpanBasis()
        for i in alive:
            if i == idx:
                continue
            other = elems[i]
            gap = degree - other.degree()
            if gap < 0:
                continue
            if ring_basis:
                coeffs = ring_products(ring_basis, gap)
            elif gap == 0:
                coeffs = [Polynomial.constant(other.nvars, 1)]
            else:
                coeffs = []
            for coeff in coeffs:
                if coeff:
                    span.insert(vectorize_polymap(other.mul_invariant(coeff)))
        if span.contains(vectorize_polymap(target)):
            alive.remove(idx)
    return tuple(elems[i] for i in alive)


# -- generator transport -----------------------------------------------------


def extend_hilbert_basis(
    basis: Sequence[Polynomial], kappa: SignedElement
) -> tuple[Polynomial, ...]:
    """Hilbert basis for the invariants of the group extended by kappa.

    Takes {R(u_i)} together with the pairwise products {S(u_i)S(u_j)},
    removes zeros, rescales, and prunes ring-redundant elements (this is
    where algebraic relations between the products are rewritten away).
    """
    _require_involution(kappa)
    r_images = [reynolds_R(u, kappa) for u in basis]
    s_images = [reynolds_S(u, kappa) for u in basis]
    candidates = [normalize_leading(p) for p in r_images if p]
    for i, si in enumerate(s_images):
        if not si:
            continue
        for sj in s_images[i:]:
            if sj:
                candidates.append(normalize_leading(si * sj))
    return prune_ring(candidates)


def generators_over_extension(
    basis: Sequence[Polynomial],
    gens: Sequence[PolyMap],
    kappa: SignedElement,
) -> tuple[PolyMap, ...]:
    """Products {S(u_i) L_j} (with S(u_0) = 1) generating over the subring."""
    _require_involution(kappa)
    coefficients = [None] + [reynolds_S(u, kappa) for u in basis]
    out = []
    for coeff in coefficients:
        if coeff is not None and not coeff:
            continue
        for g in gens:
            product = g if coeff is None else g.mul_invariant(coeff)
            if product:
                out.append(product)
    return tuple(out)


def project_generators(
    gens: Sequence[PolyMap], kappa: SignedElement
) -> tuple[PolyMap, ...]:
    """Transfer projections {T(G_i)}, zeros removed, rescaled to lead 1."""
    _require_involution(kappa)
    out = []
    for g in gens:
        image = transfer_T(g, kappa)
        if image:
            out.append(normalize_leading(image))
    return tuple(_dedupe(out))


# -- generator sets and the pipeline -----------------------------------------


@dataclass(frozen=True)
class GeneratorSet:
    """Hilbert basis plus module generators for one symmetry context."""

    ring_basis: tuple[Polynomial, ...]
    module_generators: tuple[PolyMap, ...]
    context: SymmetryContext
    certified: bool = False

    def __post_init__(self):
        for p in self.ring_basis:
            if not p.is_homogeneous():
                raise CertificationFailure("ring basis elements must be homogeneous")
        for g in self.module_generators:
            if not g.is_homogeneous():
                raise CertificationFailure("module generators must be homogeneous")


def certify(genset: GeneratorSet) -> GeneratorSet:
    """Check every element against its defining membership predicate."""
    ctx = genset.context.full_context()
    for p in genset.ring_basis:
        if not membership(p, ctx, "invariant"):
            raise CertificationFailure(f"ring element is not invariant: {p}")
    for g in genset.module_generators:
        if not membership(g, ctx, "reversible_equivariant"):
            raise CertificationFailure(f"generator is not reversible-equivariant: {g}")
    return replace(genset, certified=True)


def simplify(genset: GeneratorSet) -> GeneratorSet:
    """Remove zeros, rescale leading coefficients, prune redundancies."""
    ring = prune_ring(normalize_leading(p) for p in genset.ring_basis if p)
    gens = prune_module(
        (normalize_leading(g) for g in genset.module_generators if g), ring
    )
    return replace(genset, ring_basis=ring, module_generators=gens)


def pipeline(context: SymmetryContext) -> GeneratorSet:
    """Run the five-step transport for the semidirect product of both involutions.

    Starting from the closure-group catalog, extends the invariant ring and
    projects the equivariant generators along the first involution, then
    repeats along the second, and certifies every output against the full
    product sign map.
    """
    sdata = context.sgroup
    if not sdata.hilbert_basis or not sdata.equivariant_generators:
        raise CertificationFailure(
            "symmetry context carries no closure-group catalog data"
        )
    phi, psi = context.phi, context.psi

    basis_phi = extend_hilbert_basis(sdata.hilbert_basis, phi)
    step3 = generators_over_extension(
        sdata.hilbert_basis, sdata.equivariant_generators, phi
    )
    gens_phi = prune_module(project_generators(step3, phi), basis_phi)

    basis_full = extend_hilbert_basis(basis_phi, psi)
    step5 = generators_over_extension(basis_phi, gens_phi, psi)
    gens_full = prune_module(project_generators(step5, psi), basis_full)

    genset = GeneratorSet(
        ring_basis=_canonical(basis_full),
        module_generators=_canonical(gens_full),
        context=context,
    )
    return certify(genset)


def intermediate_generators(context: SymmetryContext) -> GeneratorSet:
    """Generators after the first extension only (sign map sigma_1)."""
    sdata = context.sgroup
    phi = context.phi
    basis_phi = extend_hilbert_basis(sdata.hilbert_basis, phi)
    step3 = generators_over_extension(
        sdata.hilbert_basis, sdata.equivariant_generators, phi
    )
    gens_phi = prune_module(project_generators(step3, phi), basis_phi)
    return GeneratorSet(
        ring_basis=_canonical(basis_phi),
        module_generators=_canonical(gens_phi),
        context=context,
    )


# -- serialization -----------------------------------------------------------


def genset_to_json(genset: GeneratorSet) -> str:
    payload = {
        "schema": "genset-v1",
        "signs": list(genset.context.signs),
        "nblocks": genset.context.nblocks,
        "certified": genset.certified,
        "ring_basis": [
            {"name": f"u{i + 1}", "poly": render_polynomial(p), "degree": p.degree()}
            for i, p in enumerate(genset.ring_basis)
        ],
        "module_generators": [
            {"name": f"G{i}", "map": render_polymap(g), "degree": g.degree()}
            for i, g in enumerate(genset.module_generators)
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def genset_to_latex(genset: GeneratorSet) -> str:
    lines = ["\\begin{align*}"]
    for i, p in enumerate(genset.ring_basis):
        lines.append(f"u_{{{i + 1}}} &= {latex_polynomial(p)} \\\\")
    for i, g in enumerate(genset.module_generators):
        sep = " \\\\" if i + 1 < len(genset.module_generators) else ""
        lines.append(f"G_{{{i}}} &= {latex_polymap(g)}{sep}")
    lines.append("\\end{align*}")
    return "\n".join(lines)


def genset_to_text(genset: GeneratorSet) -> str:
    lines = ["ring basis:"]
    for i, p in enumerate(genset.ring_basis):
        lines.append(f"  u{i + 1} = {render_polynomial(p)}")
    lines.append("module generators:")
    for i, g in enumerate(genset.module_generators):
        lines.append(f"  G{i} = {render_polymap(g)}")
    return "\n".join(lines)
