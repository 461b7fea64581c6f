"""Real number fields of degree at most 4 with an explicit real embedding.

A field is Q(theta) for theta a root of a monic irreducible integer polynomial;
the embedding is chosen by the index of theta among the ascending real roots.
Elements are rational coordinate vectors over the power basis. All sign
decisions run through Sturm-chain interval refinement, i.e. the kernel layer.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from . import kernels
from .linalg import nullspace, solve
from .polys import Poly, format_terms, is_irreducible, poly_gcd, primitive_int_coeffs
from .sturm import isolate_real_roots

_K = kernels.impl


class FieldMismatchError(ValueError):
    """Raised when elements of different fields are combined."""


class NoRealEmbeddingError(ValueError):
    """Raised when a sign query needs a real root choice the field lacks."""


class NumberField:
    """Q(theta) presented by a monic irreducible integer polynomial.

    root_index selects the real embedding: 0-based position of theta among
    the ascending real roots. It may be None for purely algebraic work, but
    sign queries then fail.
    """

    __slots__ = (
        "defining",
        "degree",
        "root_index",
        "symbol",
        "_chain",
        "_interval",
        "_power_table",
        "_root_count",
    )

    def __init__(self, defining: Poly, root_index: int | None = None, symbol: str = "t"):
        if not isinstance(defining, Poly):
            defining = Poly(defining)
        if defining.degree < 1:
            raise ValueError("defining polynomial must have degree >= 1")
        if defining.degree > 4:
            raise ValueError("fields of degree > 4 are not supported")
        if not defining.is_integral():
            raise ValueError("defining polynomial must have integer coefficients")
        if defining.leading() != 1:
            raise ValueError("defining polynomial must be monic")
        if not is_irreducible(defining):
            raise ValueError("defining polynomial must be irreducible")
        self.defining = defining
        self.degree = defining.degree
        self.symbol = symbol
        ints = primitive_int_coeffs(defining)
        self._chain = _K.sturm_chain(ints)
        roots = isolate_real_roots(defining)
        self._root_count = len(roots)
        if root_index is None:
            self.root_index = None
            self._interval = None
        else:
            if not 0 <= root_index < len(roots):
                raise ValueError(
                    f"root index {root_index} out of range: "
                    f"{len(roots)} real root(s)"
                )
            self.root_index = root_index
            self._interval = roots[root_index]
        # theta^k for k = degree .. 2*degree-2, reduced to the power basis.
        table = []
        d = self.degree
        red = [-c for c in defining.coeffs[:-1]]
        cur = list(red)
        table.append(tuple(cur))
        for _ in range(d - 2):
            shifted = [Fraction(0)] + cur[:-1]
            top = cur[-1]
            cur = [shifted[i] + top * red[i] for i in range(d)]
            table.append(tuple(cur))
        self._power_table = tuple(table)

    def __eq__(self, other):
        if isinstance(other, NumberField):
            return (
                self.defining == other.defining and self.root_index == other.root_index
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.defining.coeffs, self.root_index))

    def __repr__(self):
        emb = "" if self.root_index is None else f", root {self.root_index}"
        return f"NumberField({self.defining}{emb})"

    # --- element constructors -------------------------------------------------

    def element(self, coords) -> "FieldElement":
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coords]
        if len(cs) > self.degree:
            raise ValueError("coordinate vector longer than field degree")
        cs += [Fraction(0)] * (self.degree - len(cs))
        return FieldElement(self, tuple(cs))

    def rational(self, value) -> "FieldElement":
        return self.element([Fraction(value)])

    def zero(self) -> "FieldElement":
        return self.rational(0)

    def one(self) -> "FieldElement":
        return self.rational(1)

    def generator(self) -> "FieldElement":
        if self.degree == 1:
            # theta is the rational root of the linear defining polynomial.
            return self.rational(-self.defining.coeffs[0])
        return self.element([0, 1])

    # --- embedding plumbing ----------------------------------------------------

    def _require_embedding(self):
        if self.root_index is None:
            raise NoRealEmbeddingError("no real embedding selected for this field")

    def _current_interval(self):
        self._require_embedding()
        return self._interval

    def _refine_embedding_once(self):
        """Halve the isolating interval of theta (non-root cut bisection)."""
        lo, hi = self._interval
        coeffs = self._chain[0]
        from .sturm import _nonroot_cut  # shared cut-selection logic

        cut = _nonroot_cut(coeffs, lo, hi, _K)
        if _K.count_roots(
            self._chain, lo.numerator, lo.denominator, cut.numerator, cut.denominator
        ):
            self._interval = (lo, cut)
        else:
            self._interval = (cut, hi)


def rational_field(symbol: str = "t") -> NumberField:
    """The rationals presented as a degree-1 field (defining polynomial x - 1)."""
    return NumberField(Poly((-1, 1)), root_index=0, symbol=symbol)


class FieldElement:
    """Element of a NumberField as a rational vector over the power basis."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple[Fraction, ...]):
        self.field = field
        self.coords = coords

    def __setattr__(self, name, value):
        if hasattr(self, "coords"):
            raise AttributeError("FieldElement is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        if isinstance(other, FieldElement) and other.field != self.field:
            return False
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def __bool__(self):
        return any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def as_rational(self) -> Fraction:
        """Explicit demotion to Fraction; errors when the element is irrational."""
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def poly(self) -> Poly:
        return Poly(self.coords)

    # --- arithmetic -------------------------------------------------------------

    def __neg__(self):
        return FieldElement(self.field, tuple(-c for c in self.coords))

    def __add__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(
            self.field, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(
            self.field, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __rsub__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if b:
                    prod[i + j] += a * b
        out = list(prod[:d])
        table = self.field._power_table
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                row = table[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return FieldElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        m = self.field.defining
        a = self.poly()
        # Extended Euclid: s*a + t*m = gcd = constant.
        r0, r1 = a, m
        s0, s1 = Poly.constant(1), Poly()
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        inv = s0 * Poly.constant(1 / r0.coeffs[0])
        inv = inv % m
        return self.field.element(inv.coeffs)

    def __truediv__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __str__(self):
        return format_terms(self.coords, self.field.symbol)

    def __repr__(self):
        return f"<{self} in {self.field!r}>"


def _coerce(field: NumberField, value):
    if isinstance(value, FieldElement):
        if value.field != field:
            raise FieldMismatchError("elements of different fields cannot be mixed")
        return value
    if isinstance(value, (int, Fraction)):
        return field.rational(value)
    return NotImplemented


# --- derived quantities ------------------------------------------------------


def minimal_polynomial(u: FieldElement) -> Poly:
    """Monic minimal polynomial of u over the rationals.

    Finds the least k with 1, u, ..., u^k linearly dependent; the dependency
    coefficients are the polynomial. Irreducibility is automatic in a field,
    and the degree divides the field degree.
    """
    d = u.field.degree
    powers = [u.field.one().coords]
    cur = u.field.one()
    for k in range(1, d + 1):
        cur = cur * u
        matrix = [[powers[j][i] for j in range(k)] for i in range(d)]
        rhs = list(cur.coords)
        dep = solve(matrix, rhs)
        if dep is not None:
            return Poly(tuple(-c for c in dep) + (Fraction(1),))
        powers.append(cur.coords)
    raise AssertionError("no dependency found below field degree; field invalid")


def is_algebraic_integer(u: FieldElement) -> bool:
    return minimal_polynomial(u).is_integral()


def is_algebraic_unit(u: FieldElement) -> bool:
    """True when u and 1/u are both algebraic integers; errors on zero."""
    if not u:
        raise ValueError("zero is not a candidate unit")
    m = minimal_polynomial(u)
    return m.is_integral() and abs(m.coeffs[0]) == 1


def rational_ratio(c1: FieldElement, c2: FieldElement) -> Fraction | None:
    """c1/c2 as a Fraction when the quotient is rational, else None."""
    if not c2:
        raise ZeroDivisionError("ratio with zero denominator element")
    q = c1 / c2
    if q.is_rational():
        return q.as_rational()
    return None


def subfield_membership(u: FieldElement, gen: FieldElement) -> bool:
    """True when u lies in the Q-span of 1, gen, ..., gen^(d-1)."""
    if u.field != gen.field:
        raise FieldMismatchError("membership test needs elements of one field")
    d = u.field.degree
    powers = []
    cur = u.field.one()
    for _ in range(d):
        powers.append(cur.coords)
        cur = cur * gen
    matrix = [[powers[j][i] for j in range(d)] for i in range(d)]
    return solve(matrix, list(u.coords)) is not None


def fe_sign(u: FieldElement) -> int:
    """Sign of u under the field's real embedding: -1, 0, or 1.

    Nonzero coordinates mean u ~ p(theta) with deg p < deg minpoly, so u is
    exactly zero only when the vector is zero; otherwise the isolating
    interval of theta is refined until p has no root inside it, at which point
    the sign at any interior point is the sign of u.
    """
    if not u:
        return 0
    if u.is_rational():
        r = u.coords[0]
        return -1 if r < 0 else 1
    field = u.field
    field._require_embedding()
    p = u.poly()
    g = poly_gcd(p, p.derivative())
    sqf = p // g if g.degree >= 1 else p
    ints = primitive_int_coeffs(sqf)
    chain = _K.sturm_chain(ints)
    p_ints = primitive_int_coeffs(p)
    while True:
        lo, hi = field._current_interval()
        if (
            _K.count_roots(
                chain, lo.numerator, lo.denominator, hi.numerator, hi.denominator
            )
            == 0
        ):
            mid = (lo + hi) / 2
            s = _K.sign_at(p_ints, mid.numerator, mid.denominator)
            if s != 0:
                # primitive_int_coeffs keeps the leading sign, but p's own
                # leading sign may differ from the primitive rescale only by a
                # positive factor times sign normalization:
                if p.leading() < 0:
                    s = -s
                return s
            field._refine_embedding_once()
            continue
        field._refine_embedding_once()


def approximate(u: FieldElement, width: Fraction = Fraction(1, 10**8)) -> Fraction:
    """Rational approximation of u within the given interval width."""
    if u.is_rational():
        return u.coords[0]
    field = u.field
    field._require_embedding()
    coeffs = u.coords
    while True:
        lo, hi = field._current_interval()
        vlo, vhi = _interval_eval(coeffs, lo, hi)
        if vhi - vlo < width:
            return (vlo + vhi) / 2
        field._refine_embedding_once()


def _interval_eval(coeffs, lo: Fraction, hi: Fraction):
    """Interval-arithmetic Horner evaluation of a rational polynomial."""
    alo = ahi = Fraction(0)
    for c in reversed(coeffs):
        products = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(products) + c, max(products) + c
    return alo, ahi


def sqrt_in_field(v: FieldElement) -> FieldElement | None:
    """An exact square root of v inside its field, or None when no verified
    root is found.

    Complete for rational results in any supported field, for quadratic
    fields, and for cubic fields with rational radicands (an odd-degree field
    has no quadratic subfield). In cubic and quartic fields the search covers
    square roots supported on at most two power-basis coordinates; denser
    roots would need factorization beyond degree 4 and are not attempted.
    Every returned value is verified exactly, so None never hides a wrong
    answer, only an unexplored corner.
    """
    field = v.field
    if not v:
        return field.zero()
    if field.root_index is not None and fe_sign(v) < 0:
        return None
    if v.is_rational():
        r = v.as_rational()
        if r < 0:
            return None
        root = _rational_sqrt(r)
        if root is not None:
            return field.rational(root)
        if field.degree == 1 or field.degree == 3:
            return None
        if field.degree == 2:
            return _sqrt_quadratic_field(field, field.rational(r))
        return _sqrt_sparse_probe(v)
    if field.degree == 2:
        return _sqrt_quadratic_field(field, v)
    return _sqrt_sparse_probe(v)


def _rational_sqrt(r: Fraction) -> Fraction | None:
    num, den = r.numerator, r.denominator
    sn, sd = isqrt(num), isqrt(den)
    if sn * sn == num and sd * sd == den:
        return Fraction(sn, sd)
    return None


def _sqrt_quadratic_field(field: NumberField, v: FieldElement) -> FieldElement | None:
    """Closed-form square root in a quadratic field.

    With theta^2 = p*theta + q, solving (a + b*theta)^2 = v reduces to
    rational square tests on the coefficients.
    """
    c0, c1 = field.defining.coeffs[0], field.defining.coeffs[1]
    p, q = -c1, -c0  # theta^2 = p*theta + q
    v0, v1 = v.coords
    if v1 == 0:
        r = _rational_sqrt(v0)
        if r is not None:
            return field.rational(r)
        # Irrational sqrt of a rational: 2ab + b^2 p = 0 forces a = -b*p/2,
        # and the rational part becomes b^2 (p^2/4 + q) = v0.
        denom = q + p * p / 4
        if denom == 0:
            return None
        b2 = v0 / denom
        if b2 <= 0:
            return None
        b = _rational_sqrt(b2)
        if b is None:
            return None
        w = field.element([-b * p / 2, b])
        return w if w * w == v else None
    # General v: (a + b theta)^2 = v with b != 0 gives
    #   2ab + b^2 p = v1  and  a^2 + b^2 q = v0.
    # Substituting a = (v1 - b^2 p) / (2b) and writing B = b^2:
    #   B^2 (p^2 + 4q) - B (2 p v1 + 4 v0) + v1^2 = 0.
    aa = p * p + 4 * q
    bb = -(2 * p * v1 + 4 * v0)
    cc = v1 * v1
    for broot in _rational_quadratic_roots(aa, bb, cc):
        if broot <= 0:
            continue
        b = _rational_sqrt(broot)
        if b is None:
            continue
        a = (v1 - broot * p) / (2 * b)
        w = field.element([a, b])
        if w * w == v:
            return w
    return None


def _rational_quadratic_roots(a, b, c) -> list[Fraction]:
    """Rational roots of a x^2 + b x + c with rational coefficients."""
    if a == 0:
        if b == 0:
            return []
        return [Fraction(-c, 1) / b]
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    s = _rational_sqrt(Fraction(disc))
    if s is None:
        return []
    return [(-b + s) / (2 * a), (-b - s) / (2 * a)]


def _sqrt_sparse_probe(v: FieldElement) -> FieldElement | None:
    """Bounded search for square roots supported on few power-basis coordinates.

    Solves w^2 = v for w = a*theta^i + b*theta^j. Substituting
    (A, M, B) = (a^2, 2ab, b^2) turns the expansion into a linear system with
    the side condition M^2 = 4AB. When the power columns are dependent the
    system is underdetermined with a one-dimensional solution line (three
    distinct powers of a degree-3 or -4 generator can never be pairwise
    rationally dependent), and the side condition becomes a quadratic in the
    line parameter, solved exactly. Solutions are kept only when they split
    back into rational a and b and the square checks out exactly. Roots
    needing three or more coordinates are not found and yield None.
    """
    field = v.field
    d = field.degree
    powers = [field.one()]
    theta = field.generator()
    for _ in range(2 * d - 2):
        powers.append(powers[-1] * theta)
    target = list(v.coords)
    for i in range(d):
        matrix = [[powers[2 * i].coords[row]] for row in range(d)]
        sol = solve(matrix, target)
        if sol is None:
            continue
        a = _rational_sqrt(sol[0]) if sol[0] >= 0 else None
        if a is None:
            continue
        w = a * powers[i]
        if w * w == v:
            return w
    for i in range(d):
        for j in range(i + 1, d):
            cols = (powers[2 * i].coords, powers[i + j].coords, powers[2 * j].coords)
            matrix = [[col[row] for col in cols] for row in range(d)]
            sol = solve(matrix, target)
            if sol is None:
                continue
            candidates = [sol]
            kernel = nullspace(matrix)
            if kernel:
                a0, m0, b0 = sol
                a1, m1, b1 = kernel[0]
                # (m0 + t m1)^2 = 4 (a0 + t a1)(b0 + t b1), quadratic in t.
                qa = m1 * m1 - 4 * a1 * b1
                qb = 2 * m0 * m1 - 4 * (a0 * b1 + a1 * b0)
                qc = m0 * m0 - 4 * a0 * b0
                for t in _rational_quadratic_roots(qa, qb, qc):
                    candidates.append(
                        [a0 + t * a1, m0 + t * m1, b0 + t * b1]
                    )
            for big_a, big_m, big_b in candidates:
                if big_m * big_m != 4 * big_a * big_b or big_a < 0 or big_b < 0:
                    continue
                if big_a == 0:
                    if big_m != 0:
                        continue
                    b = _rational_sqrt(big_b)
                    if b is None:
                        continue
                    w = b * powers[j]
                else:
                    a = _rational_sqrt(big_a)
                    if a is None:
                        continue
                    b = big_m / (2 * a)
                    w = a * powers[i] + b * powers[j]
                if w * w == v:
                    return w
    return None
