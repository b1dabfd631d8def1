"""Exact multivariate polynomial arithmetic in mixed real/complex coordinates.

Everything downstream computes over the coordinate tuple

    (x1, x2, z1, zb1, ..., zn, zbn)

where zb_j is the formal conjugate of z_j.  A monomial is an exponent tuple
of length 2n+2 in that fixed order; a polynomial maps monomials to Gaussian
rational coefficients.  Carrying zb_j as an explicit variable makes torus
weights integer-linear in the exponents, so invariance checks reduce to
lattice conditions, while a reality constraint on coefficients recovers
real-valued functions of (x, z).

All values are immutable after construction and safe to share between
threads.  The term order is graded lexicographic (degree first, then the
exponent tuple), fixed once so rendering and iteration are deterministic.
No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .errors import DimensionError, IncompatibleMatrix

Monomial = tuple[int, ...]


class GaussianRational:
    """A Gaussian rational a + b*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if not isinstance(re, Fraction):
            re = Fraction(re)
        if not isinstance(im, Fraction):
            im = Fraction(im)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __add__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(other.re / norm, -other.im / norm)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return ONE / self ** (-exponent)
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def sort_key(self):
        return (self.re.numerator, self.re.denominator, self.im.numerator, self.im.denominator)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return render_coefficient(self)


def _coerce(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
HALF = GaussianRational(Fraction(1, 2))


def render_coefficient(c: GaussianRational) -> str:
    """Canonical text for a Gaussian rational: 3, -1/2, i, -2*i, (1/2-3*i)."""
    if c.im == 0:
        return str(c.re)
    if c.re == 0:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{c.im}*i"
    im = c.im
    im_txt = "i" if abs(im) == 1 else f"{abs(im)}*i"
    sign = "+" if im > 0 else "-"
    return f"({c.re}{sign}{im_txt})"


# -- monomial helpers --------------------------------------------------------
#
# Index layout: 0 -> x1, 1 -> x2, 2*j -> z_j, 2*j+1 -> zb_j (j = 1..n).


def nblocks_of(nvars: int) -> int:
    if nvars < 2 or nvars % 2:
        raise DimensionError(f"coordinate count must be 2n+2, got {nvars}")
    return (nvars - 2) // 2


def x_index(k: int) -> int:
    """Index of x_k, k in {1, 2}."""
    return k - 1


def z_index(j: int) -> int:
    """Index of z_j, j >= 1."""
    return 2 * j


def zbar_index(j: int) -> int:
    return 2 * j + 1


def conj_index(i: int) -> int:
    """Coordinate index paired under conjugation (x's are self-paired)."""
    if i < 2:
        return i
    return i + 1 if i % 2 == 0 else i - 1


def conj_monomial(mono: Monomial) -> Monomial:
    out = list(mono)
    for j in range(2, len(mono) - 1, 2):
        out[j], out[j + 1] = out[j + 1], out[j]
    return tuple(out)


def mono_degree(mono: Monomial) -> int:
    return sum(mono)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def grlex_key(mono: Monomial):
    return (sum(mono), mono)


def variable_name(i: int) -> str:
    if i == 0:
        return "x1"
    if i == 1:
        return "x2"
    j = i // 2
    return f"z{j}" if i % 2 == 0 else f"zb{j}"


def variable_index(name: str, nvars: int) -> int:
    if name == "x1":
        return 0
    if name == "x2":
        return 1
    if name.startswith("zb"):
        j = int(name[2:])
        idx = zbar_index(j)
    elif name.startswith("z"):
        j = int(name[1:])
        idx = z_index(j)
    else:
        raise ValueError(f"unknown variable {name!r}")
    if j < 1 or idx >= nvars:
        raise ValueError(f"variable {name!r} out of range for {nblocks_of(nvars)} blocks")
    return idx


def render_monomial(mono: Monomial) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 0:
            continue
        name = variable_name(i)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def monomials_of_degree(nvars: int, degree: int) -> Iterator[Monomial]:
    """All exponent tuples of the given total degree, in descending grlex order."""

    def gen(prefix, remaining, slots):
        if slots == 1:
            yield prefix + (remaining,)
            return
        for e in range(remaining, -1, -1):
            yield from gen(prefix + (e,), remaining - e, slots - 1)

    yield from gen((), degree, nvars)


# -- polynomials -------------------------------------------------------------


class Polynomial:
    """Immutable sparse polynomial over the Gaussian rationals."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, GaussianRational] | None = None):
        clean: dict[Monomial, GaussianRational] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = _coerce(coeff)
                if not coeff:
                    continue
                if len(mono) != nvars:
                    raise DimensionError(f"monomial {mono} has {len(mono)} slots, expected {nvars}")
                clean[mono] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # construction helpers

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: _coerce(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        mono = [0] * nvars
        mono[index] = 1
        return cls(nvars, {tuple(mono): ONE})

    @classmethod
    def monomial(cls, nvars: int, mono: Monomial, coeff=ONE) -> "Polynomial":
        return cls(nvars, {tuple(mono): _coerce(coeff)})

    # inspection

    def coefficient(self, mono: Monomial) -> GaussianRational:
        return self._terms.get(tuple(mono), ZERO)

    def sorted_terms(self) -> list[tuple[Monomial, GaussianRational]]:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def monomials(self):
        return self._terms.keys()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self._terms}
        return len(degs) <= 1

    def is_real_valued(self) -> bool:
        """True iff coeff(conj m) == conj(coeff(m)) for every monomial."""
        for mono, coeff in self._terms.items():
            if self._terms.get(conj_monomial(mono), ZERO) != coeff.conjugate():
                return False
        return True

    # arithmetic

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise DimensionError("polynomials over different coordinate spaces")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = terms.get(mono, ZERO) + coeff
            if acc:
                terms[mono] = acc
            else:
                terms.pop(mono, None)
        return Polynomial(self.nvars, terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            terms: dict[Monomial, GaussianRational] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    mono = mono_mul(m1, m2)
                    acc = terms.get(mono, ZERO) + c1 * c2
                    if acc:
                        terms[mono] = acc
                    else:
                        terms.pop(mono, None)
            return Polynomial(self.nvars, terms)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {m: c * v for m, v in self._terms.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def conj(self) -> "Polynomial":
        """Formal conjugate: conjugate coefficients, swap each z_j/zb_j pair."""
        return Polynomial(
            self.nvars,
            {conj_monomial(m): c.conjugate() for m, c in self._terms.items()},
        )

    def partial(self, index: int) -> "Polynomial":
        terms: dict[Monomial, GaussianRational] = {}
        for mono, coeff in self._terms.items():
            e = mono[index]
            if e == 0:
                continue
            lowered = list(mono)
            lowered[index] = e - 1
            key = tuple(lowered)
            acc = terms.get(key, ZERO) + coeff * e
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
        return Polynomial(self.nvars, terms)

    def homogeneous_component(self, degree: int) -> "Polynomial":
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return Polynomial(
            self.nvars, {m: c for m, c in self._terms.items() if sum(m) == degree}
        )

    def homogeneous_degrees(self) -> list[int]:
        return sorted({sum(m) for m in self._terms})

    def substitute_linear(self, matrix: Sequence[Sequence[GaussianRational]]) -> "Polynomial":
        """Compose with a linear change of coordinates: returns p(A v).

        The matrix acts on the coordinate column vector, (A v)_i = sum_j
        A[i][j] v_j, and must respect the conjugation pairing so that the
        real locus maps to itself.
        """
        check_conjugation_compatible(matrix, self.nvars)
        if self.is_zero():
            return self
        row_support = [
            [(j, matrix[i][j]) for j in range(self.nvars) if matrix[i][j]]
            for i in range(self.nvars)
        ]
        if all(len(entries) <= 1 for entries in row_support):
            # Monomial matrix: variables map to scalar multiples of variables.
            terms: dict[Monomial, GaussianRational] = {}
            for mono, coeff in self._terms.items():
                out = [0] * self.nvars
                c = coeff
                for i, e in enumerate(mono):
                    if e == 0:
                        continue
                    if not row_support[i]:
                        c = ZERO
                        break
                    j, entry = row_support[i][0]
                    out[j] += e
                    c = c * entry ** e if e > 1 else c * entry
                if not c:
                    continue
                key = tuple(out)
                acc = terms.get(key, ZERO) + c
                if acc:
                    terms[key] = acc
                else:
                    terms.pop(key, None)
            return Polynomial(self.nvars, terms)
        forms = [
            Polynomial(self.nvars, {_unit(self.nvars, j): entry for j, entry in entries})
            for entries in row_support
        ]
        result = Polynomial.zero(self.nvars)
        for mono, coeff in self._terms.items():
            term = Polynomial.constant(self.nvars, coeff)
            for i, e in enumerate(mono):
                if e:
                    term = term * forms[i] ** e
            result = result + term
        return result

    # ordering, equality, rendering

    def sort_key(self):
        # grlex-descending term sequence, negated so that tuple order sorts
        # polynomials with larger leading monomials first within a degree
        terms = tuple(
            ((-sum(m), tuple(-e for e in m)), c.sort_key())
            for m, c in self.sorted_terms()
        )
        return (self.degree(), terms)

    def leading_coefficient(self) -> GaussianRational:
        if not self._terms:
            return ZERO
        mono = max(self._terms, key=grlex_key)
        return self._terms[mono]

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.nvars, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return render_polynomial(self)

    def __repr__(self):
        return f"Polynomial({render_polynomial(self)!r})"


def _unit(nvars: int, index: int) -> Monomial:
    mono = [0] * nvars
    mono[index] = 1
    return tuple(mono)


def check_conjugation_compatible(matrix, nvars: int):
    if len(matrix) != nvars or any(len(row) != nvars for row in matrix):
        raise DimensionError(f"matrix must be {nvars}x{nvars}")
    for i in range(nvars):
        ci = conj_index(i)
        for j in range(nvars):
            if matrix[ci][conj_index(j)] != _coerce(matrix[i][j]).conjugate():
                raise IncompatibleMatrix(
                    f"entry ({i},{j}) breaks the conjugation pairing"
                )


def re_part(p: Polynomial) -> Polynomial:
    """(p + conj p)/2 - the real part of a complex-valued polynomial."""
    return (p + p.conj()).scale(HALF)


def im_part(p: Polynomial) -> Polynomial:
    """(p - conj p)/(2i) - the imaginary part, itself real-valued."""
    return (p - p.conj()).scale(GaussianRational(0, Fraction(-1, 2)))


# -- polynomial mappings -----------------------------------------------------


class PolyMap:
    """Polynomial mapping V -> V with one component per coordinate block.

    Stores components for x1, x2 (real-valued) and z_1..z_n; the zb_j
    components are implicit, always the formal conjugate of the z_j ones,
    so the map sends the real locus to itself.
    """

    __slots__ = ("x_components", "z_components", "_hash")

    def __init__(self, x_components: Sequence[Polynomial], z_components: Sequence[Polynomial]):
        x_components = tuple(x_components)
        z_components = tuple(z_components)
        if len(x_components) != 2:
            raise DimensionError("expected exactly two x-components")
        nvars = x_components[0].nvars
        if nblocks_of(nvars) != len(z_components):
            raise DimensionError(
                f"{len(z_components)} z-components incompatible with {nvars} coordinates"
            )
        for comp in (*x_components, *z_components):
            if comp.nvars != nvars:
                raise DimensionError("components over different coordinate spaces")
        for comp in x_components:
            if not comp.is_real_valued():
                raise IncompatibleMatrix("x-components must be real-valued")
        object.__setattr__(self, "x_components", x_components)
        object.__setattr__(self, "z_components", z_components)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMap is immutable")

    @classmethod
    def zero(cls, nblocks: int) -> "PolyMap":
        nvars = 2 * nblocks + 2
        z = Polynomial.zero(nvars)
        return cls((z, z), (z,) * nblocks)

    @property
    def nvars(self) -> int:
        return self.x_components[0].nvars

    @property
    def nblocks(self) -> int:
        return len(self.z_components)

    def components(self) -> tuple[Polynomial, ...]:
        """Full component vector (x1, x2, z1, zb1, ..., zn, zbn)."""
        out = list(self.x_components)
        for comp in self.z_components:
            out.append(comp)
            out.append(comp.conj())
        return tuple(out)

    def component(self, index: int) -> Polynomial:
        if index < 2:
            return self.x_components[index]
        j, rem = divmod(index - 2, 2)
        comp = self.z_components[j]
        return comp if rem == 0 else comp.conj()

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.x_components) and all(
            c.is_zero() for c in self.z_components
        )

    def __bool__(self):
        return not self.is_zero()

    def degree(self) -> int:
        degs = [c.degree() for c in (*self.x_components, *self.z_components)]
        return max(degs)

    def is_homogeneous(self) -> bool:
        degs = set()
        for c in (*self.x_components, *self.z_components):
            degs.update({sum(m) for m in c.monomials()})
        return len(degs) <= 1

    def homogeneous_component(self, degree: int) -> "PolyMap":
        return PolyMap(
            tuple(c.homogeneous_component(degree) for c in self.x_components),
            tuple(c.homogeneous_component(degree) for c in self.z_components),
        )

    def homogeneous_degrees(self) -> list[int]:
        degs = set()
        for c in (*self.x_components, *self.z_components):
            degs.update(c.homogeneous_degrees())
        return sorted(degs)

    def __add__(self, other: "PolyMap") -> "PolyMap":
        return PolyMap(
            tuple(a + b for a, b in zip(self.x_components, other.x_components)),
            tuple(a + b for a, b in zip(self.z_components, other.z_components)),
        )

    def __sub__(self, other: "PolyMap") -> "PolyMap":
        return self + (-other)

    def __neg__(self) -> "PolyMap":
        return PolyMap(
            tuple(-c for c in self.x_components),
            tuple(-c for c in self.z_components),
        )

    def scale(self, c) -> "PolyMap":
        c = _coerce(c)
        if not c.is_real:
            raise IncompatibleMatrix("maps may only be scaled by real rationals")
        return PolyMap(
            tuple(comp.scale(c) for comp in self.x_components),
            tuple(comp.scale(c) for comp in self.z_components),
        )

    def mul_invariant(self, u: Polynomial) -> "PolyMap":
        """Module action: multiply every component by a real-valued polynomial."""
        if not u.is_real_valued():
            raise IncompatibleMatrix("module coefficients must be real-valued")
        return PolyMap(
            tuple(comp * u for comp in self.x_components),
            tuple(comp * u for comp in self.z_components),
        )

    def compose_linear(self, matrix) -> "PolyMap":
        """g . A : substitute the linear map into every component."""
        return PolyMap(
            tuple(c.substitute_linear(matrix) for c in self.x_components),
            tuple(c.substitute_linear(matrix) for c in self.z_components),
        )

    def apply_linear(self, matrix) -> "PolyMap":
        """A . g : act on the output vector by the matrix."""
        check_conjugation_compatible(matrix, self.nvars)
        full = self.components()
        nvars = self.nvars

        def row(i: int) -> Polynomial:
            acc = Polynomial.zero(nvars)
            for j in range(nvars):
                entry = matrix[i][j]
                if entry:
                    acc = acc + full[j].scale(entry)
            return acc

        xs = (row(0), row(1))
        zs = tuple(row(z_index(j)) for j in range(1, self.nblocks + 1))
        return PolyMap(xs, zs)

    def sort_key(self):
        leading = next(
            (i for i, c in enumerate((*self.x_components, *self.z_components)) if c),
            -1,
        )
        comps = tuple(c.sort_key() for c in (*self.x_components, *self.z_components))
        return (self.degree(), leading, comps)

    def leading_coefficient(self) -> GaussianRational:
        for comp in (*self.x_components, *self.z_components):
            if comp:
                return comp.leading_coefficient()
        return ZERO

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return (
            self.x_components == other.x_components
            and self.z_components == other.z_components
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.x_components, self.z_components))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return render_polymap(self)

    def __repr__(self):
        return f"PolyMap({render_polymap(self)!r})"


# -- rendering and parsing ---------------------------------------------------


def render_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    chunks: list[tuple[str, str]] = []
    for mono, coeff in p.sorted_terms():
        mono_txt = render_monomial(mono)
        if coeff.im == 0 or coeff.re == 0:
            # purely real or purely imaginary: pull the sign out
            negative = (coeff.re or coeff.im) < 0
            mag = GaussianRational(abs(coeff.re), abs(coeff.im))
            if not mono_txt:
                body = render_coefficient(mag)
            elif mag == ONE:
                body = mono_txt
            else:
                body = f"{render_coefficient(mag)}*{mono_txt}"
            sign = "-" if negative else "+"
        else:
            body = render_coefficient(coeff)
            if mono_txt:
                body = f"{body}*{mono_txt}"
            sign = "+"
        chunks.append((sign, body))
    first_sign, first_body = chunks[0]
    text = first_body if first_sign == "+" else f"-{first_body}"
    for sign, body in chunks[1:]:
        text += f" {sign} {body}"
    return text


def render_polymap(g: PolyMap) -> str:
    comps = [*g.x_components, *g.z_components]
    return "(" + ", ".join(render_polynomial(c) for c in comps) + ")"


def latex_coefficient(c: GaussianRational) -> str:
    def frac(q: Fraction) -> str:
        if q.denominator == 1:
            return str(q.numerator)
        sign = "-" if q < 0 else ""
        return f"{sign}\\tfrac{{{abs(q.numerator)}}}{{{q.denominator}}}"

    if c.im == 0:
        return frac(c.re)
    if c.re == 0:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{frac(c.im)}i"
    im = c.im
    im_txt = "i" if abs(im) == 1 else f"{frac(abs(im))}i"
    sign = "+" if im > 0 else "-"
    return f"\\left({frac(c.re)}{sign}{im_txt}\\right)"


def latex_variable(i: int) -> str:
    if i == 0:
        return "x_1"
    if i == 1:
        return "x_2"
    j = i // 2
    return f"z_{{{j}}}" if i % 2 == 0 else f"\\bar{{z}}_{{{j}}}"


def latex_monomial(mono: Monomial) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 0:
            continue
        name = latex_variable(i)
        parts.append(name if e == 1 else f"{name}^{{{e}}}")
    return "".join(parts)


def latex_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for mono, coeff in p.sorted_terms():
        mono_txt = latex_monomial(mono)
        if coeff.im == 0 or coeff.re == 0:
            negative = (coeff.re or coeff.im) < 0
            mag = GaussianRational(abs(coeff.re), abs(coeff.im))
            if not mono_txt:
                body = latex_coefficient(mag)
            elif mag == ONE:
                body = mono_txt
            else:
                body = f"{latex_coefficient(mag)}{mono_txt}"
            sign = "-" if negative else "+"
        else:
            body = latex_coefficient(coeff) + mono_txt
            sign = "+"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = first_body if first_sign == "+" else f"-{first_body}"
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def latex_polymap(g: PolyMap) -> str:
    comps = [*g.x_components, *g.z_components]
    return (
        "\\left(" + ",\\; ".join(latex_polynomial(c) for c in comps) + "\\right)"
    )


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.nvars = nvars

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok is None or tok[0] != kind:
            raise ValueError(f"expected {kind}, got {tok}")
        return tok

    def parse(self) -> Polynomial:
        p = self.parse_sum()
        if self.peek() is not None:
            raise ValueError(f"trailing input at token {self.peek()}")
        return p

    def parse_sum(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok and tok[0] in "+-":
            self.next()
            sign = -1 if tok[0] == "-" else 1
        acc = self.parse_product()
        if sign < 0:
            acc = -acc
        while True:
            tok = self.peek()
            if tok is None or tok[0] not in "+-":
                return acc
            self.next()
            term = self.parse_product()
            acc = acc + term if tok[0] == "+" else acc - term

    def parse_product(self) -> Polynomial:
        acc = self.parse_power()
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "*":
                return acc
            self.next()
            acc = acc * self.parse_power()

    def parse_power(self) -> Polynomial:
        base = self.parse_atom()
        tok = self.peek()
        if tok and tok[0] == "^":
            self.next()
            exp = int(self.expect("num")[1])
            return base ** exp
        return base

    def parse_atom(self) -> Polynomial:
        tok = self.next()
        if tok is None:
            raise ValueError("unexpected end of input")
        kind, value = tok
        if kind == "num":
            num = Fraction(int(value))
            tok = self.peek()
            if tok and tok[0] == "/":
                self.next()
                num /= int(self.expect("num")[1])
            return Polynomial.constant(self.nvars, num)
        if kind == "name":
            if value == "i":
                return Polynomial.constant(self.nvars, I)
            index = variable_index(value, self.nvars)
            return Polynomial.variable(self.nvars, index)
        if kind == "(":
            inner = self.parse_sum()
            self.expect(")")
            return inner
        raise ValueError(f"unexpected token {tok}")


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("num", text[i:j]))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum()):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch))
            i += 1
            continue
        raise ValueError(f"unexpected character {ch!r}")
    return tokens


def parse_polynomial(text: str, nblocks: int) -> Polynomial:
    """Parse the canonical polynomial syntax back into a Polynomial."""
    return _Parser(text, 2 * nblocks + 2).parse()


def parse_polymap(text: str, nblocks: int) -> PolyMap:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError("polynomial map must be parenthesized")
    inner = text[1:-1]
    parts = []
    depth = 0
    start = 0
    for i, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(inner[start:i])
            start = i + 1
    parts.append(inner[start:])
    if len(parts) != nblocks + 2:
        raise ValueError(f"expected {nblocks + 2} components, got {len(parts)}")
    comps = [parse_polynomial(part, nblocks) for part in parts]
    return PolyMap(comps[:2], comps[2:])
