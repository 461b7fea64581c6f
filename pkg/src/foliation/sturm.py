"""Real root isolation and refinement via Sturm sequences.

Intervals are open, with rational non-root endpoints, each containing exactly
one real root. Endpoint candidates are drawn from deg+1 distinct interior
points so a non-root cut always exists.
"""

from __future__ import annotations

from fractions import Fraction

from . import kernels
from .polys import Poly, poly_gcd, primitive_int_coeffs

_K = kernels.impl


def _sign_at(coeffs, x: Fraction, kernel) -> int:
    return kernel.sign_at(coeffs, x.numerator, x.denominator)


def _count(chain, lo: Fraction, hi: Fraction, kernel) -> int:
    return kernel.count_roots(
        chain, lo.numerator, lo.denominator, hi.numerator, hi.denominator
    )


def _nonroot_cut(coeffs, lo: Fraction, hi: Fraction, kernel) -> Fraction:
    """An interior point that is not a root; tries deg+1 equispaced candidates.

    The polynomial has at most deg roots, so one candidate must work.
    """
    n = len(coeffs) - 1
    width = hi - lo
    mid = lo + width / 2
    if _sign_at(coeffs, mid, kernel) != 0:
        return mid
    for j in range(1, n + 2):
        c = lo + width * Fraction(j, n + 2)
        if c != mid and _sign_at(coeffs, c, kernel) != 0:
            return c
    raise AssertionError("no non-root cut found; polynomial degree inconsistent")


def cauchy_bound(coeffs) -> int:
    """Integer B with every real root strictly inside (-B, B)."""
    lead = abs(coeffs[-1])
    rest = max((abs(c) for c in coeffs[:-1]), default=0)
    return 2 + rest // lead


def isolate_real_roots(p: Poly, kernel=None) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open isolating intervals for the real roots of p, ascending.

    Requires a nonzero squarefree polynomial; errors otherwise.
    """
    kernel = kernel or _K
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree >= 1:
        g = poly_gcd(p, p.derivative())
        if g.degree >= 1:
            raise ValueError("root isolation requires a squarefree polynomial")
    if p.degree < 1:
        return []
    coeffs = primitive_int_coeffs(p)
    chain = kernel.sturm_chain(coeffs)
    b = Fraction(cauchy_bound(coeffs))
    total = _count(chain, -b, b, kernel)
    done: list[tuple[Fraction, Fraction]] = []
    todo = [(-b, b, total)]
    while todo:
        lo, hi, cnt = todo.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            done.append((lo, hi))
            continue
        cut = _nonroot_cut(coeffs, lo, hi, kernel)
        left = _count(chain, lo, cut, kernel)
        todo.append((lo, cut, left))
        todo.append((cut, hi, cnt - left))
    done.sort()
    return done


def refine_isolating_interval(
    p: Poly,
    interval: tuple[Fraction, Fraction],
    max_width: Fraction,
    kernel=None,
) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval below max_width by Sturm bisection."""
    kernel = kernel or _K
    coeffs = primitive_int_coeffs(p)
    chain = kernel.sturm_chain(coeffs)
    lo, hi = interval
    while hi - lo >= max_width:
        cut = _nonroot_cut(coeffs, lo, hi, kernel)
        if _count(chain, lo, cut, kernel) == 1:
            hi = cut
        else:
            lo = cut
    return lo, hi
