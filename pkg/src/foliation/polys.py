"""Dense univariate polynomials over the rationals, with exact factorization
limited to degree 4.

Coefficients are ``fractions.Fraction`` stored ascending (index = degree).
Factorization clears denominators, strips rational roots by divisor search,
and tests quartics for splits into two integer quadratics; by Gauss's lemma
that is complete up to degree 4.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt


class UnsupportedDegreeError(ValueError):
    """Raised when an exact routine is asked for degrees beyond its design."""


class Poly:
    """Immutable dense polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __getitem__(self, i) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self[i] - other[i] for i in range(n)))

    def __rsub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = other.degree
        lead = other.leading()
        q = [Fraction(0)] * max(len(rem) - dn, 0)
        while len(rem) - 1 >= dn and rem:
            if rem[-1] == 0:
                rem.pop()
                continue
            k = len(rem) - 1 - dn
            c = rem[-1] / lead
            q[k] = c
            for i in range(dn + 1):
                rem[i + k] -= c * other.coeffs[i]
            rem.pop()
        return Poly(q), Poly(rem)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic form")
        lc = self.leading()
        return Poly(tuple(c / lc for c in self.coeffs))

    def evaluate(self, x):
        """Horner evaluation; works for Fraction and for field elements."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0)
        return acc

    def shift_compose(self, inner: "Poly") -> "Poly":
        """p(inner(x)) by Horner on polynomials."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(c)
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __str__(self) -> str:
        return format_terms(self.coeffs, "x")

    def __repr__(self) -> str:
        return f"Poly({self})"


def _as_poly(v):
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly((v,))
    return NotImplemented


def format_terms(coeffs, symbol: str) -> str:
    """Render ascending coefficients as a human-readable polynomial string."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            var = symbol if i == 1 else f"{symbol}^{i}"
            body = var if mag == 1 else f"{mag}*{var}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; errors when both inputs are zero."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def primitive_int_coeffs(p: Poly) -> list[int]:
    """Integer coefficient list of the primitive part, leading coefficient > 0."""
    if p.is_zero():
        raise ValueError("zero polynomial has no primitive part")
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_roots(ints: list[int]):
    """Rational roots of a primitive integer polynomial (zero already stripped)."""
    roots = []
    lead = ints[-1]
    const = ints[0]
    seen = set()
    for a in _divisors(const):
        for b in _divisors(lead):
            if gcd(a, b) != 1:
                continue
            for num in (a, -a):
                r = Fraction(num, b)
                if r in seen:
                    continue
                seen.add(r)
                acc = 0
                dp = 1
                for i in range(len(ints) - 1, -1, -1):
                    acc = acc * num + ints[i] * dp
                    dp *= b
                if acc == 0:
                    roots.append(r)
    return roots


def _quartic_quadratic_split(ints: list[int]):
    """Split a primitive quartic (positive leading, no rational roots) into two
    integer quadratics, or return None.

    Searches divisor pairs of the leading/constant coefficients; the two cross
    coefficients solve a 2x2 linear system, with a bounded enumeration when the
    system degenerates. The enumeration bound is 2^deg times the Cauchy root
    bound, which dominates the coefficients of any factor.
    """
    p0, p1, p2, p3, p4 = ints
    cauchy = 1 + max(abs(c) for c in ints[:-1]) // p4 + 1
    bound = 16 * max(1, cauchy) * max(1, abs(p4))
    for a in _divisors(p4):
        d, rem = divmod(p4, a)
        if rem:
            continue
        for c_abs in _divisors(p0):
            if c_abs == 0:
                continue
            for c in (c_abs, -c_abs):
                f, rem = divmod(p0, c)
                if rem:
                    continue
                # a*x^2+b*x+c times d*x^2+e*x+f: match x^3 and x^1 coefficients.
                det = d * c - a * f
                candidates = []
                if det != 0:
                    bn = c * p3 - a * p1
                    en = d * p1 - f * p3
                    if bn % det == 0 and en % det == 0:
                        candidates.append((bn // det, en // det))
                else:
                    for b in range(-bound, bound + 1):
                        num = p3 - d * b
                        if num % a:
                            continue
                        e = num // a
                        if f * b + c * e == p1:
                            candidates.append((b, e))
                for b, e in candidates:
                    if a * f + b * e + c * d == p2:
                        return (c, b, a), (f, e, d)
    return None


def factor(p: Poly) -> tuple[Fraction, list[tuple[Poly, int]]]:
    """Factor p over the rationals into monic irreducibles with multiplicity.

    Returns (leading unit, [(monic irreducible, multiplicity), ...]) with
    factors sorted by (degree, coefficients). Degrees above 4 raise
    UnsupportedDegreeError; the zero polynomial raises ValueError.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree > 4:
        raise UnsupportedDegreeError(
            f"factorization supports degree <= 4, got {p.degree}"
        )
    unit = p.leading()
    if p.degree == 0:
        return unit, []
    work = p.monic()
    found: dict[Poly, int] = {}

    def add(f: Poly, mult: int = 1):
        found[f] = found.get(f, 0) + mult

    # Strip x^k.
    k = 0
    while work.coeffs[0] == 0:
        work = Poly(work.coeffs[1:])
        k += 1
    if k:
        add(Poly((0, 1)), k)

    # Strip rational roots with multiplicity.
    while work.degree >= 1:
        ints = primitive_int_coeffs(work)
        roots = _rational_roots(ints)
        if not roots:
            break
        r = roots[0]
        lin = Poly((-r, 1))
        while True:
            q, rem = divmod(work, lin)
            if not rem.is_zero():
                break
            work = q
            add(lin)
            if work.degree == 0:
                break

    deg = work.degree
    if deg >= 2:
        if deg in (2, 3):
            add(work)  # no rational root: irreducible at degree 2 or 3
        else:
            ints = primitive_int_coeffs(work)
            split = _quartic_quadratic_split(ints)
            if split is None:
                add(work)
            else:
                q1, q2 = split
                add(Poly(q1).monic())
                add(Poly(q2).monic())
    ordered = sorted(found.items(), key=lambda kv: (kv[0].degree, kv[0].coeffs))
    return unit, ordered


def is_irreducible(p: Poly) -> bool:
    """True when p is irreducible over the rationals (degree >= 1)."""
    if p.degree < 1:
        return False
    _, factors = factor(p)
    return len(factors) == 1 and factors[0][1] == 1
