"""Assembly and rendering of truncated formal normal forms.

A certified generator set determines the normal form: the vector field is
the fixed linear part plus, for each module generator G_j, a term f_j(X)G_j
with f_j an arbitrary formal function of the Hilbert-basis invariants X.
Truncation at degree_max is bookkeeping for certification only; the f_j
stay formal.  Generators are ordered by the first coordinate component
they touch (x1, x2, z1, ..., zn) and the f-indices are renumbered
canonically in that order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from .continuous import LinearPart
from .errors import ConfigError, UncertifiedInput
from .poly import (
    PolyMap,
    Polynomial,
    latex_polynomial,
    parse_polymap,
    parse_polynomial,
    render_polymap,
    render_polynomial,
)
from .symmetry_ops import GeneratorSet, ring_products


@dataclass(frozen=True)
class NormalFormTerm:
    f_index: int
    generator: PolyMap


@dataclass(frozen=True)
class NormalForm:
    """Linear part plus formal invariant-coefficient generator terms."""

    linear_part: LinearPart
    degree_max: int
    argument_list: tuple[Polynomial, ...]
    terms: tuple[NormalFormTerm, ...]

    @property
    def nblocks(self) -> int:
        return self.linear_part.n


def assemble(genset: GeneratorSet, linear_part: LinearPart, degree_max: int) -> NormalForm:
    """Normal form from a certified generator set, truncated at degree_max."""
    if degree_max < 2:
        raise ConfigError("degree_max must be at least 2")
    if not genset.certified:
        raise UncertifiedInput(
            "generator set lacks soundness certification; run the pipeline first"
        )
    ordered = sorted(
        genset.module_generators,
        key=lambda g: (_leading_component(g), g.sort_key()),
    )
    terms = tuple(NormalFormTerm(i, g) for i, g in enumerate(ordered))
    return NormalForm(
        linear_part=linear_part,
        degree_max=degree_max,
        argument_list=tuple(genset.ring_basis),
        terms=terms,
    )


def _leading_component(g: PolyMap) -> int:
    for i, comp in enumerate((*g.x_components, *g.z_components)):
        if comp:
            return i
    return g.nblocks + 2


def instantiate_term(nf: NormalForm, term: NormalFormTerm, min_total_degree: int = 2) -> PolyMap:
    """Replace the formal f by the lowest admissible invariant monomial.

    Picks the canonically smallest product of Hilbert-basis elements whose
    degree lifts the term to at least min_total_degree; the constant 1 when
    the generator alone already qualifies.
    """
    gen_degree = term.generator.degree()
    need = max(0, min_total_degree - gen_degree)
    degree = need
    while True:
        products = [p for p in ring_products(nf.argument_list, degree) if p]
        if products:
            coeff = min(products, key=lambda p: p.sort_key())
            return term.generator.mul_invariant(coeff)
        degree += 1
        if degree > need + sum(p.degree() for p in nf.argument_list) + 1:
            raise ConfigError("no invariant coefficient reaches the required degree")


# -- rendering ----------------------------------------------------------------


def _component_names(n: int) -> list[str]:
    return ["x1", "x2"] + [f"z{j}" for j in range(1, n + 1)]


def _linear_text(nf: NormalForm, comp: int) -> str:
    if comp == 0:
        return "x2"
    if comp == 1:
        return ""
    j = comp - 2
    return f"-i*{nf.linear_part.omegas[j]}*z{j + 1}"


def _poly_factor_text(p: Polynomial) -> str:
    text = render_polynomial(p)
    if len(p) > 1 or text.startswith("-"):
        return f"({text})"
    return text


def emit_text(nf: NormalForm) -> str:
    if not nf.terms:
        return "xdot = L x"
    names = _component_names(nf.nblocks)
    lines = []
    for comp, name in enumerate(names):
        pieces = []
        linear = _linear_text(nf, comp)
        if linear:
            pieces.append(linear)
        for term in nf.terms:
            comp_poly = (
                term.generator.x_components[comp]
                if comp < 2
                else term.generator.z_components[comp - 2]
            )
            if not comp_poly:
                continue
            ftxt = f"f{term.f_index}(X)"
            if comp_poly == Polynomial.constant(comp_poly.nvars, 1):
                pieces.append(ftxt)
            else:
                pieces.append(f"{_poly_factor_text(comp_poly)}*{ftxt}")
        rhs = " + ".join(pieces) if pieces else "0"
        lines.append(f"{name}' = {rhs}")
    args = ", ".join(render_polynomial(p) for p in nf.argument_list)
    lines.append(f"X = ({args})")
    lines.append(f"truncation degree = {nf.degree_max}")
    return "\n".join(lines)


def _latex_linear(nf: NormalForm, comp: int) -> str:
    if comp == 0:
        return "x_2"
    if comp == 1:
        return ""
    j = comp - 2
    omega = nf.linear_part.omegas[j]
    # omega labels render as \omega_j
    return f"-i\\omega_{{{j + 1}}}z_{{{j + 1}}}" if omega == f"omega{j + 1}" else f"-i\\,{omega}\\,z_{{{j + 1}}}"


def _latex_component_names(n: int) -> list[str]:
    return ["\\dot{x}_1", "\\dot{x}_2"] + [f"\\dot{{z}}_{{{j}}}" for j in range(1, n + 1)]


def emit_latex(nf: NormalForm, standalone: bool = False) -> str:
    names = _latex_component_names(nf.nblocks)
    lines = ["\\begin{align*}"]
    if not nf.terms:
        lines.append("\\dot{x} &= Lx")
    else:
        for comp, name in enumerate(names):
            pieces = []
            linear = _latex_linear(nf, comp)
            if linear:
                pieces.append(linear)
            for term in nf.terms:
                comp_poly = (
                    term.generator.x_components[comp]
                    if comp < 2
                    else term.generator.z_components[comp - 2]
                )
                if not comp_poly:
                    continue
                ftxt = f"f_{{{term.f_index}}}(X)"
                if comp_poly == Polynomial.constant(comp_poly.nvars, 1):
                    pieces.append(ftxt)
                else:
                    body = latex_polynomial(comp_poly)
                    if len(comp_poly) > 1 or body.startswith("-"):
                        body = f"\\left({body}\\right)"
                    pieces.append(f"{body}\\, {ftxt}")
            rhs = " + ".join(pieces) if pieces else "0"
            sep = " \\\\" if comp + 1 < len(names) else ""
            lines.append(f"{name} &= {rhs}{sep}")
    lines.append("\\end{align*}")
    if nf.terms:
        args = ",\\; ".join(latex_polynomial(p) for p in nf.argument_list)
        lines.append(f"\\[ X = \\left({args}\\right) \\]")
    body = "\n".join(lines)
    if standalone:
        return (
            "\\documentclass{article}\n"
            "\\usepackage{amsmath}\n"
            "\\begin{document}\n" + body + "\n\\end{document}\n"
        )
    return body


def emit_json(nf: NormalForm) -> str:
    payload = {
        "schema": "nf-v1",
        "nblocks": nf.nblocks,
        "omegas": list(nf.linear_part.omegas),
        "resonance_relations": [list(r) for r in nf.linear_part.resonance_relations],
        "degree_max": nf.degree_max,
        "arguments": [render_polynomial(p) for p in nf.argument_list],
        "terms": [
            {"f": t.f_index, "generator": render_polymap(t.generator)} for t in nf.terms
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def parse_normal_form(text: str) -> NormalForm:
    data = json.loads(text)
    if data.get("schema") != "nf-v1":
        raise ConfigError("unsupported normal-form schema")
    n = data["nblocks"]
    linear = LinearPart(
        n,
        tuple(tuple(r) for r in data["resonance_relations"]),
        tuple(data["omegas"]),
    )
    args = tuple(parse_polynomial(s, n) for s in data["arguments"])
    terms = tuple(
        NormalFormTerm(t["f"], parse_polymap(t["generator"], n)) for t in data["terms"]
    )
    return NormalForm(linear, data["degree_max"], args, terms)


def emit(nf: NormalForm, fmt: str) -> str:
    if fmt == "text":
        return emit_text(nf)
    if fmt == "latex":
        return emit_latex(nf)
    if fmt == "latex-standalone":
        return emit_latex(nf, standalone=True)
    if fmt == "json":
        return emit_json(nf)
    raise ConfigError(f"unknown output format {fmt!r}")
