"""The pure and compiled integer-polynomial kernels must agree exactly."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foliation import kernels

pure = kernels.get_backend("pure")
try:
    compiled = kernels.get_backend("compiled")
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled kernel not built"
)

coeff_lists = st.lists(st.integers(-200, 200), min_size=0, max_size=9)


def test_backend_names():
    assert pure.BACKEND == "pure"
    assert kernels.BACKEND in ("pure", "compiled")
    if compiled is not None:
        assert compiled.BACKEND == "compiled"


def test_get_backend_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.get_backend("imaginary")


def test_pure_kernel_basics():
    assert pure.normalized([1, 2, 0, 0]) == [1, 2]
    assert pure.normalized([0]) == []
    assert pure.content([4, -6, 8]) == 2
    assert pure.primitive([4, -6, 8]) == [2, -3, 4]
    assert pure.derivative([5, 3, 1]) == [3, 2]
    # p(x) = x^2 - 2 at 3/2: 9/4 - 2 > 0
    assert pure.sign_at([-2, 0, 1], 3, 2) == 1
    assert pure.sign_at([-2, 0, 1], 1, 1) == -1
    assert pure.sign_at([-4, 0, 1], 2, 1) == 0
    assert pure.sign_at_pos_inf([0, -3]) == -1
    assert pure.sign_at_neg_inf([0, -3]) == 1
    assert pure.sign_at_neg_inf([0, 0, 5]) == 1


def test_pure_count_roots_golden_polynomial():
    chain = pure.sturm_chain([-1, -1, 1])  # x^2 - x - 1
    assert pure.count_roots(chain, -10, 1, 10, 1) == 2
    assert pure.count_roots(chain, 0, 1, 10, 1) == 1
    assert pure.count_roots(chain, -10, 1, 0, 1) == 1


@needs_compiled
@settings(deadline=None, max_examples=200)
@given(coeff_lists)
def test_normalize_and_chain_agree(coeffs):
    assert pure.normalized(coeffs) == compiled.normalized(coeffs)
    assert pure.primitive(coeffs) == compiled.primitive(coeffs)
    assert pure.derivative(coeffs) == compiled.derivative(coeffs)
    assert pure.sign_at_pos_inf(pure.normalized(coeffs)) == compiled.sign_at_pos_inf(
        compiled.normalized(coeffs)
    )
    assert pure.sign_at_neg_inf(pure.normalized(coeffs)) == compiled.sign_at_neg_inf(
        compiled.normalized(coeffs)
    )
    if any(coeffs):
        assert pure.sturm_chain(coeffs) == compiled.sturm_chain(coeffs)


@needs_compiled
@settings(deadline=None, max_examples=200)
@given(
    coeff_lists,
    st.integers(-30, 30),
    st.integers(1, 7),
)
def test_sign_at_agrees(coeffs, num, den):
    assert pure.sign_at(coeffs, num, den) == compiled.sign_at(coeffs, num, den)


@needs_compiled
def test_count_roots_agrees_on_random_intervals():
    rng = random.Random(909)
    for _ in range(150):
        coeffs = [rng.randint(-40, 40) for _ in range(rng.randint(1, 8))]
        if not any(coeffs):
            coeffs.append(1)
        while coeffs[-1] == 0:
            coeffs[-1] = rng.randint(-40, 40)
        cp = pure.sturm_chain(coeffs)
        cc = compiled.sturm_chain(coeffs)
        assert cp == cc
        an, bn = sorted(rng.sample(range(-60, 60), 2))
        ad = rng.randint(1, 5)
        args = (an, ad, bn, ad)
        assert pure.count_roots(cp, *args) == compiled.count_roots(cc, *args)
        assert pure.variations_pos_inf(cp) == compiled.variations_pos_inf(cc)
        assert pure.variations_neg_inf(cp) == compiled.variations_neg_inf(cc)
