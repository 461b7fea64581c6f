"""Affine maps of the line and canonical forms for generator sets."""

import random
from fractions import Fraction

import pytest

from foliation import (
    AffineMap,
    FieldMismatchError,
    GeneratorSet,
    NonCanonicalPresentation,
    ad_eigenvalues,
    normalize_presentation,
    rational_field,
)


def word_reaches(maps, target, depth=6):
    """Breadth-first search for target in the group generated by maps."""
    field = target.field
    identity = AffineMap.identity(field)
    if target == identity:
        return True
    steps = list(maps) + [m.inverse() for m in maps]
    seen = {identity}
    frontier = [identity]
    for _ in range(depth):
        new = []
        for w in frontier:
            for s in steps:
                c = w * s
                if c == target:
                    return True
                if c not in seen:
                    seen.add(c)
                    new.append(c)
        frontier = new
    return False


def random_conjugator(field, rng, span=3):
    coords = [Fraction(rng.randint(-span, span), rng.randint(1, 2))
              for _ in range(field.degree)]
    c = field.element(coords)
    a = c * c + 1  # strictly positive under any embedding
    b = field.element(
        [Fraction(rng.randint(-span, span), rng.randint(1, 2))
         for _ in range(field.degree)]
    )
    return AffineMap(a, b)


def test_affine_map_validation(golden_field, sqrt2_field):
    phi = golden_field.generator()
    with pytest.raises(ValueError):
        AffineMap(golden_field.zero(), phi)  # slope must be positive
    with pytest.raises(ValueError):
        AffineMap(-phi, golden_field.zero())
    with pytest.raises(ValueError):
        AffineMap(1 - phi, golden_field.zero())  # negative under embedding
    with pytest.raises((FieldMismatchError, TypeError, ValueError)):
        AffineMap(phi, sqrt2_field.generator())


def test_compose_apply_inverse(golden_field):
    rng = random.Random(123)
    field = golden_field
    pts = [field.generator(), field.rational(Fraction(-2, 3))]
    identity = AffineMap.identity(field)
    for _ in range(30):
        g = random_conjugator(field, rng)
        h = random_conjugator(field, rng)
        for x in pts:
            assert (g * h).apply(x) == g.apply(h.apply(x))
        assert g * g.inverse() == identity
        assert g.inverse() * g == identity
        assert g**3 == g * g * g
        assert g**-2 == (g.inverse()) ** 2
        assert g**0 == identity
        assert g.conjugate(h) == h * g * h.inverse()


def test_translation_and_dilation_constructors(golden_field):
    phi = golden_field.generator()
    t = AffineMap.translation(phi)
    assert t.is_translation() and not t.is_dilation_like()
    d = AffineMap.dilation(phi)
    assert d.is_dilation_like() and not d.is_translation()
    assert AffineMap.identity(golden_field).is_identity()


def test_ad_eigenvalues(golden_field):
    phi = golden_field.generator()
    g = AffineMap(phi, golden_field.one())
    assert ad_eigenvalues(g) == (phi, golden_field.one())


def test_generator_set_validation(golden_field, sqrt2_field):
    with pytest.raises(ValueError):
        GeneratorSet([])
    g = AffineMap.translation(golden_field.one())
    h = AffineMap.translation(sqrt2_field.one())
    with pytest.raises((FieldMismatchError, ValueError)):
        GeneratorSet([g, h])
    gs = GeneratorSet([g])
    assert len(gs) == 1 and list(gs) == [g]


def test_normalize_pure_translations():
    field = rational_field()
    gs = GeneratorSet(
        [
            AffineMap.translation(field.rational(3)),
            AffineMap.translation(field.rational(Fraction(-3, 2))),
        ]
    )
    np = normalize_presentation(gs)
    assert np.dilation is None
    assert [c.as_rational() for c in np.translations] == [1, 2]
    assert np.scaling_witness.as_rational() == Fraction(3, 2)


def test_normalize_single_dilation(golden_field):
    phi = golden_field.generator()
    gs = GeneratorSet([AffineMap(phi, golden_field.one())])
    np = normalize_presentation(gs)
    assert np.dilation is not None
    assert np.dilation.a == phi
    assert np.dilation.b == 0
    assert np.translations == ()


def test_normalize_reduces_dilation_powers(golden_field):
    phi = golden_field.generator()
    one, zero = golden_field.one(), golden_field.zero()
    gs = GeneratorSet([AffineMap(phi**2, one), AffineMap(phi, zero)])
    np = normalize_presentation(gs)
    assert np.dilation.a == phi
    assert len(np.translations) == 1
    assert np.translations[0] == 1


def test_normalize_finds_base_from_quotients():
    field = rational_field()
    gs = GeneratorSet(
        [
            AffineMap(field.rational(4), field.zero()),
            AffineMap(field.rational(8), field.zero()),
        ]
    )
    np = normalize_presentation(gs)
    # Neither 4 nor 8 is a power of the other; the base comes from their
    # quotient and can be either 2 or 1/2.
    assert np.dilation.a.as_rational() in (2, Fraction(1, 2))


def test_normalize_rejects_incommensurable_dilations():
    field = rational_field()
    gs = GeneratorSet(
        [
            AffineMap(field.rational(2), field.zero()),
            AffineMap(field.rational(3), field.zero()),
        ]
    )
    with pytest.raises(NonCanonicalPresentation):
        normalize_presentation(gs)


def test_normalize_drops_identities(golden_field):
    gs = GeneratorSet(
        [
            AffineMap.identity(golden_field),
            AffineMap.translation(golden_field.one()),
        ]
    )
    np = normalize_presentation(gs)
    assert np.dilation is None
    assert np.translations == (golden_field.one(),)


def test_normalized_presentation_is_conjugation_invariant(golden_field):
    """Conjugation leaves the dilation ratio and the length-ratio set alone.

    The translation lengths themselves are only canonical up to a common
    positive factor, so the stable data is the set of pairwise ratios.
    """
    rng = random.Random(321)
    phi = golden_field.generator()
    one, zero = golden_field.one(), golden_field.zero()
    gs = GeneratorSet([AffineMap(phi, zero), AffineMap(one, one), AffineMap(one, phi + 2)])
    base = normalize_presentation(gs)
    base_ratios = {c / d for c in base.translations for d in base.translations}
    for _ in range(15):
        h = random_conjugator(golden_field, rng)
        np = normalize_presentation(gs.conjugated(h))
        assert np.dilation.a == base.dilation.a
        assert len(np.translations) == len(base.translations)
        assert np.translations[0] == 1
        ratios = {c / d for c in np.translations for d in np.translations}
        assert ratios == base_ratios


def test_conjugator_realizes_the_normal_form(golden_field):
    phi = golden_field.generator()
    one, zero = golden_field.one(), golden_field.zero()
    cases = [
        [AffineMap(phi, one)],
        [AffineMap(phi**2, one), AffineMap(phi, zero)],
        [AffineMap(one, phi), AffineMap(one, 2 * phi)],
    ]
    for gens in cases:
        gs = GeneratorSet(gens)
        np = normalize_presentation(gs)
        normal_maps = np.maps()
        for g in gs:
            moved = g.conjugate(np.conjugator)
            assert word_reaches(normal_maps, moved), (g, moved, normal_maps)


def test_scaling_witness_records_first_length(golden_field):
    phi = golden_field.generator()
    one, zero = golden_field.one(), golden_field.zero()
    gs = GeneratorSet([AffineMap(phi, zero), AffineMap(one, 3 * one)])
    np = normalize_presentation(gs)
    assert np.scaling_witness == 3
    assert np.translations == (one,)


def test_str_forms(golden_field):
    g = AffineMap(golden_field.generator(), golden_field.one())
    s = str(g)
    assert "x" in s and "t" in s
