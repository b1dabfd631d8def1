"""Exact linear algebra: Gaussian-rational matrices and sparse rational elimination.

Two layers live here.  Small dense matrices over the Gaussian rationals
represent group elements and infinitesimal generators; plain Gauss-Jordan
over the field is exact and is all they need.  The brute-force oracle and
the redundancy pruning instead reduce large sparse systems over Q: rows are
dicts keyed by arbitrary sortable column keys, eliminated fraction-free
(integer rows, gcd-reduced), with nullspaces returned as a canonical
reduced-echelon basis.  Determinism: pivot columns are the unique
rank-increase columns of the system, independent of row order.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Sequence

from .errors import DimensionError
from .poly import (
    GaussianRational,
    Monomial,
    PolyMap,
    Polynomial,
    ZERO,
    ONE,
    grlex_key,
)

Matrix = tuple[tuple[GaussianRational, ...], ...]
ColKey = Hashable
SparseRow = dict


# -- dense matrices over the Gaussian rationals ------------------------------


def matrix_from_rows(rows: Iterable[Iterable]) -> Matrix:
    out = []
    for row in rows:
        out.append(tuple(c if isinstance(c, GaussianRational) else GaussianRational(c) for c in row))
    width = len(out[0]) if out else 0
    if any(len(r) != width for r in out):
        raise DimensionError("ragged matrix rows")
    return tuple(out)


def identity_matrix(size: int) -> Matrix:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(size)) for i in range(size)
    )


def zero_matrix(size: int) -> Matrix:
    return tuple((ZERO,) * size for _ in range(size))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise DimensionError("matrix size mismatch in product")
    width = len(b[0])
    out = [[ZERO] * width for _ in range(len(a))]
    for i, row in enumerate(a):
        target = out[i]
        for k, x in enumerate(row):
            if not x:
                continue
            for j, y in enumerate(b[k]):
                if y:
                    target[j] = target[j] + x * y
    return tuple(tuple(r) for r in out)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def mat_scale(c: GaussianRational, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def mat_equal(a: Matrix, b: Matrix) -> bool:
    return a == b


def mat_is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def matrix_key(a: Matrix):
    """Deterministic sort/lookup key for a Gaussian-rational matrix."""
    return tuple(tuple(x.sort_key() for x in row) for row in a)


def mat_rank(a: Matrix) -> int:
    rows = [list(r) for r in a]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = ONE / rows[rank][col]
        rows[rank] = [inv * x if x else x for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [
                    x - factor * y if y else x for x, y in zip(rows[r], rows[rank])
                ]
        rank += 1
    return rank


def mat_nullity(a: Matrix) -> int:
    return len(a[0]) - mat_rank(a) if a else 0


def mat_inverse(a: Matrix) -> Matrix:
    size = len(a)
    rows = [list(r) + [ONE if i == j else ZERO for j in range(size)] for i, r in enumerate(a)]
    rank = 0
    for col in range(size):
        pivot = next((r for r in range(rank, size) if rows[r][col]), None)
        if pivot is None:
            raise DimensionError("matrix is singular")
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = ONE / rows[rank][col]
        rows[rank] = [inv * x if x else x for x in rows[rank]]
        for r in range(size):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [
                    x - factor * y if y else x for x, y in zip(rows[r], rows[rank])
                ]
        rank += 1
    return tuple(tuple(row[size:]) for row in rows)


def solve_combination(vectors: Sequence[SparseRow], target: SparseRow):
    """Coefficients expressing target as a combination of the given vectors.

    Entries may be Fractions or GaussianRationals.  Returns a list of
    coefficients, or None when the target lies outside the span.
    """
    keys = sorted({k for v in vectors for k in v} | set(target))
    nvec = len(vectors)
    rows = []
    for key in keys:
        row = [v.get(key, 0) for v in vectors] + [target.get(key, 0)]
        rows.append(row)
    rank = 0
    pivot_cols = []
    for col in range(nvec):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        pivot_cols.append(col)
        rank += 1
    # rows below the rank are zero on every vector column; a nonzero tail
    # there means the target is outside the span
    for r in range(rank, len(rows)):
        if rows[r][nvec]:
            return None
    solution = [0] * nvec
    for r, col in enumerate(pivot_cols):
        solution[col] = rows[r][nvec]
    return solution


# -- sparse fraction-free elimination over Q ---------------------------------


def _to_integer_row(row: SparseRow) -> dict:
    """Clear denominators and divide by the gcd; canonical sign on the lead."""
    entries = {k: Fraction(v) for k, v in row.items() if v}
    if not entries:
        return {}
    denom = lcm(*(v.denominator for v in entries.values()))
    ints = {k: int(v * denom) for k, v in entries.items()}
    g = gcd(*(abs(v) for v in ints.values()))
    if g > 1:
        ints = {k: v // g for k, v in ints.items()}
    lead = min(ints)
    if ints[lead] < 0:
        ints = {k: -v for k, v in ints.items()}
    return ints


def _combine(scale_r, row_r: dict, scale_p, row_p: dict) -> dict:
    out = {k: scale_r * v for k, v in row_r.items()}
    for k, v in row_p.items():
        acc = out.get(k, 0) + scale_p * v
        if acc:
            out[k] = acc
        else:
            out.pop(k, None)
    return out


class Echelon:
    """Incrementally built echelon form with integer gcd-reduced rows."""

    def __init__(self):
        self.pivots: dict = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def residual(self, row: SparseRow) -> dict:
        r = _to_integer_row(row)
        while r:
            col = min(r)
            pivot = self.pivots.get(col)
            if pivot is None:
                return r
            a, b = r[col], pivot[col]
            g = gcd(a, b)
            r = _combine(b // g, r, -(a // g), pivot)
            if r:
                lead = min(r)
                rg = gcd(*(abs(v) for v in r.values()))
                if rg > 1:
                    r = {k: v // rg for k, v in r.items()}
                if r[lead] < 0:
                    r = {k: -v for k, v in r.items()}
        return r

    def insert(self, row: SparseRow) -> bool:
        """Reduce and keep the row; True if it increased the rank."""
        r = self.residual(row)
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    def contains(self, row: SparseRow) -> bool:
        return not self.residual(row)

    def nullspace(self, columns: Sequence[ColKey]) -> list[dict]:
        """Canonical reduced-echelon basis of the solution space.

        `columns` must list every unknown; each basis vector has entry 1 at
        its free column and 0 at the other free columns.
        """
        pivot_cols = sorted(self.pivots, reverse=True)
        free_cols = [c for c in columns if c not in self.pivots]
        basis = []
        for free in free_cols:
            vec = {free: Fraction(1)}
            for pc in pivot_cols:
                row = self.pivots[pc]
                s = Fraction(0)
                for col, val in row.items():
                    if col != pc and col in vec:
                        s += Fraction(val) * vec[col]
                if s:
                    vec[pc] = -s / row[pc]
            basis.append(vec)
        return basis


def nullspace(rows: Iterable[SparseRow], columns: Sequence[ColKey]) -> list[dict]:
    ech = Echelon()
    for row in rows:
        ech.insert(row)
    return ech.nullspace(columns)


class SpanBasis:
    """Reduced row-echelon basis of a span of sparse rational vectors."""

    def __init__(self, vectors: Iterable[SparseRow] = ()):
        self.rows: dict = {}
        for v in vectors:
            self.insert(v)

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def _reduce(self, row: SparseRow) -> dict:
        r = {k: Fraction(v) for k, v in row.items() if v}
        while r:
            col = min(r)
            pivot = self.rows.get(col)
            if pivot is None:
                return r
            factor = r[col]
            for k, v in pivot.items():
                acc = r.get(k, Fraction(0)) - factor * v
                if acc:
                    r[k] = acc
                else:
                    r.pop(k, None)
        return r

    def insert(self, row: SparseRow) -> bool:
        r = self._reduce(row)
        if not r:
            return False
        col = min(r)
        inv = 1 / r[col]
        r = {k: v * inv for k, v in r.items()}
        for other in self.rows.values():
            if col in other:
                factor = other[col]
                for k, v in r.items():
                    acc = other.get(k, Fraction(0)) - factor * v
                    if acc:
                        other[k] = acc
                    else:
                        other.pop(k, None)
        self.rows[col] = r
        return True

    def contains(self, row: SparseRow) -> bool:
        return not self._reduce(row)

    def canonical_rows(self) -> list[dict]:
        return [dict(self.rows[c]) for c in sorted(self.rows)]


# -- vector encodings of polynomials and maps --------------------------------
#
# Column keys are (component, grlex key, part) with part 0 for the real and
# 1 for the imaginary piece of a coefficient; component -1 is used for bare
# polynomials.  Any two encodings of objects over the same coordinate space
# are directly comparable.


def _push(vec: dict, comp: int, mono: Monomial, coeff: GaussianRational):
    if coeff.re:
        vec[(comp, grlex_key(mono), 0)] = coeff.re
    if coeff.im:
        vec[(comp, grlex_key(mono), 1)] = coeff.im


def vectorize_polynomial(p: Polynomial, comp: int = -1) -> dict:
    vec: dict = {}
    for mono, coeff in p.sorted_terms():
        _push(vec, comp, mono, coeff)
    return vec


def vectorize_polymap(g: PolyMap) -> dict:
    vec: dict = {}
    for comp, poly in enumerate((*g.x_components, *g.z_components)):
        for mono, coeff in poly.sorted_terms():
            _push(vec, comp, mono, coeff)
    return vec


def vectorize(obj) -> dict:
    if isinstance(obj, Polynomial):
        return vectorize_polynomial(obj)
    if isinstance(obj, PolyMap):
        return vectorize_polymap(obj)
    raise TypeError(f"cannot vectorize {type(obj).__name__}")


def polynomial_from_vector(vec: SparseRow, nvars: int) -> Polynomial:
    terms: dict = {}
    for (comp, (_deg, mono), part), value in vec.items():
        if comp != -1:
            raise ValueError("vector does not encode a bare polynomial")
        re, im = terms.get(mono, (Fraction(0), Fraction(0)))
        if part == 0:
            terms[mono] = (Fraction(value), im)
        else:
            terms[mono] = (re, Fraction(value))
    return Polynomial(
        nvars, {m: GaussianRational(re, im) for m, (re, im) in terms.items()}
    )


def polymap_from_vector(vec: SparseRow, nblocks: int) -> PolyMap:
    nvars = 2 * nblocks + 2
    comps: list[dict] = [dict() for _ in range(nblocks + 2)]
    for (comp, (_deg, mono), part), value in vec.items():
        if not 0 <= comp < nblocks + 2:
            raise ValueError("vector does not encode a polynomial mapping")
        re, im = comps[comp].get(mono, (Fraction(0), Fraction(0)))
        if part == 0:
            comps[comp][mono] = (Fraction(value), im)
        else:
            comps[comp][mono] = (re, Fraction(value))
    polys = [
        Polynomial(nvars, {m: GaussianRational(re, im) for m, (re, im) in terms.items()})
        for terms in comps
    ]
    return PolyMap(tuple(polys[:2]), tuple(polys[2:]))
