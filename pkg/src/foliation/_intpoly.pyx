# cython: language_level=3
"""Integer-polynomial kernels: sign evaluation, Sturm chains, variation counts.

Compiled backend; semantically identical to ``foliation._intpoly_py``.
Coefficients stay Python ints (arbitrary precision); Cython removes the
interpreter overhead of the tight reduction and evaluation loops.
"""

from math import gcd

BACKEND = "compiled"


def normalized(coeffs):
    """Copy with trailing zeros stripped (zero polynomial -> empty list)."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def content(coeffs):
    g = 0
    for c in coeffs:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def primitive(coeffs):
    """Divide out the content (a positive integer, so signs are preserved)."""
    c = normalized(coeffs)
    g = content(c)
    if g > 1:
        c = [x // g for x in c]
    return c


def derivative(coeffs):
    cdef Py_ssize_t i
    return [i * coeffs[i] for i in range(1, len(coeffs))]


def sign_at(coeffs, num, den):
    """Sign of p(num/den) using only integer arithmetic; den > 0."""
    cdef Py_ssize_t i
    acc = 0
    dp = 1
    for i in range(len(coeffs) - 1, -1, -1):
        acc = acc * num + coeffs[i] * dp
        dp *= den
    if acc > 0:
        return 1
    if acc < 0:
        return -1
    return 0


def sign_at_pos_inf(coeffs):
    if not coeffs:
        return 0
    return 1 if coeffs[-1] > 0 else -1


def sign_at_neg_inf(coeffs):
    cdef int s
    if not coeffs:
        return 0
    s = 1 if coeffs[-1] > 0 else -1
    if (len(coeffs) - 1) % 2:
        s = -s
    return s


def _neg_prem_primitive(a, b):
    """primitive(-r) where r is a positive multiple of the remainder of a by b.

    Each reduction step multiplies through by |lc(b)|, a positive factor, so
    the sign semantics needed for Sturm sequences survive.
    """
    cdef Py_ssize_t n = len(b) - 1
    cdef Py_ssize_t i, k
    d = b[-1]
    ad = abs(d)
    s = 1 if d > 0 else -1
    r = list(a)
    while len(r) - 1 >= n:
        lead = r[-1]
        if lead == 0:
            r.pop()
            continue
        k = len(r) - 1 - n
        r = [ad * x for x in r]
        t = lead * s
        for i in range(n + 1):
            r[i + k] = r[i + k] - t * b[i]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return primitive([-x for x in r])


def sturm_chain(coeffs):
    """Sturm chain of a nonzero integer polynomial, each entry primitive."""
    p = primitive(normalized(coeffs))
    chain = [p]
    if len(p) <= 1:
        return chain
    q = primitive(derivative(p))
    while q:
        chain.append(q)
        p, q = q, _neg_prem_primitive(p, q)
    return chain


def variations_at(chain, num, den):
    cdef int prev = 0
    cdef int v = 0
    cdef int s
    for p in chain:
        s = sign_at(p, num, den)
        if s != 0:
            if prev != 0 and s != prev:
                v += 1
            prev = s
    return v


def variations_pos_inf(chain):
    cdef int prev = 0
    cdef int v = 0
    cdef int s
    for p in chain:
        s = sign_at_pos_inf(p)
        if s != 0:
            if prev != 0 and s != prev:
                v += 1
            prev = s
    return v


def variations_neg_inf(chain):
    cdef int prev = 0
    cdef int v = 0
    cdef int s
    for p in chain:
        s = sign_at_neg_inf(p)
        if s != 0:
            if prev != 0 and s != prev:
                v += 1
            prev = s
    return v


def count_roots(chain, an, ad, bn, bd):
    """Number of real roots in the half-open interval (a, b], a < b."""
    return variations_at(chain, an, ad) - variations_at(chain, bn, bd)
