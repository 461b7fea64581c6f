"""Orientation-preserving affine maps of the real line and their presentations.

A map is x -> a*x + b with a > 0 drawn from a real number field. Finite
generator sets are normalized into a canonical shape: at most one pure
dilation plus pure translations, with the first translation length scaled
to 1. The classification layer consumes that shape.
"""

from __future__ import annotations

from fractions import Fraction

from .numfield import (
    FieldElement,
    FieldMismatchError,
    NumberField,
    fe_sign,
    minimal_polynomial,
)

_EXPONENT_BOUND = 8


class NonCanonicalPresentation(ValueError):
    """Raised when generators cannot be brought to single-dilation form."""


class AffineMap:
    """The map x -> a*x + b with a > 0, over a fixed number field."""

    __slots__ = ("a", "b")

    def __init__(self, a: FieldElement, b: FieldElement):
        if not isinstance(a, FieldElement) or not isinstance(b, FieldElement):
            raise TypeError("affine coefficients must be field elements")
        if a.field != b.field:
            raise FieldMismatchError("coefficients drawn from different fields")
        if fe_sign(a) <= 0:
            raise ValueError("dilation coefficient must be positive")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("AffineMap is immutable")

    @property
    def field(self) -> NumberField:
        return self.a.field

    @classmethod
    def identity(cls, field: NumberField) -> "AffineMap":
        return cls(field.one(), field.zero())

    @classmethod
    def translation(cls, b: FieldElement) -> "AffineMap":
        return cls(b.field.one(), b)

    @classmethod
    def dilation(cls, a: FieldElement) -> "AffineMap":
        return cls(a, a.field.zero())

    def __eq__(self, other):
        if not isinstance(other, AffineMap):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other: x -> self(other(x))."""
        return AffineMap(self.a * other.a, self.a * other.b + self.b)

    __mul__ = compose

    def inverse(self) -> "AffineMap":
        ai = self.a.inverse()
        return AffineMap(ai, -(ai * self.b))

    def __pow__(self, n: int) -> "AffineMap":
        if n < 0:
            return self.inverse() ** (-n)
        out = AffineMap.identity(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self, h: "AffineMap") -> "AffineMap":
        """h o self o h^{-1}."""
        return h * self * h.inverse()

    def apply(self, x: FieldElement) -> FieldElement:
        return self.a * x + self.b

    def is_identity(self) -> bool:
        return self.a == 1 and not self.b

    def is_translation(self) -> bool:
        return self.a == 1

    def is_dilation_like(self) -> bool:
        return self.a != 1

    def __str__(self):
        return f"x -> ({self.a})*x + ({self.b})"

    def __repr__(self):
        return f"AffineMap(a={self.a}, b={self.b})"


def ad_eigenvalues(g: AffineMap) -> tuple[FieldElement, FieldElement]:
    """Eigenvalues of the adjoint action of g on the affine Lie algebra.

    In the basis {e1, e2} with [e1, e2] = e1 the adjoint matrix of
    x -> a*x + b is triangular with diagonal (a, 1), independent of b.
    """
    return (g.a, g.field.one())


class GeneratorSet:
    """A nonempty list of affine maps over one shared field."""

    __slots__ = ("field", "generators")

    def __init__(self, generators):
        gens = list(generators)
        if not gens:
            raise ValueError("generator set must be nonempty")
        field = gens[0].field
        for g in gens:
            if not isinstance(g, AffineMap):
                raise TypeError("generators must be affine maps")
            if g.field != field:
                raise FieldMismatchError("generators drawn from different fields")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "generators", tuple(gens))

    def __setattr__(self, name, value):
        raise AttributeError("GeneratorSet is immutable")

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def conjugated(self, h: AffineMap) -> "GeneratorSet":
        return GeneratorSet([g.conjugate(h) for g in self.generators])


class NormalizedPresentation:
    """Canonical presentation: optional dilation (a, 0) plus translation lengths.

    translations are nonzero, positive under the embedding, sorted by
    (minimal-polynomial degree, coordinates), and scaled so the first is 1.
    scaling_witness is the length the first translation had before scaling.
    conjugator realizes the normalization: conjugating every input generator
    by it lands in the group generated by the normalized maps.
    """

    __slots__ = ("field", "dilation", "translations", "scaling_witness", "conjugator")

    def __init__(self, field, dilation, translations, scaling_witness, conjugator):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dilation", dilation)
        object.__setattr__(self, "translations", tuple(translations))
        object.__setattr__(self, "scaling_witness", scaling_witness)
        object.__setattr__(self, "conjugator", conjugator)

    def __setattr__(self, name, value):
        raise AttributeError("NormalizedPresentation is immutable")

    def maps(self) -> list[AffineMap]:
        out = []
        if self.dilation is not None:
            out.append(self.dilation)
        out.extend(AffineMap.translation(c) for c in self.translations)
        return out

    def __repr__(self):
        lam = "none" if self.dilation is None else str(self.dilation.a)
        ts = ", ".join(str(c) for c in self.translations)
        return f"NormalizedPresentation(dilation={lam}, translations=[{ts}])"


def _power_exponent(base: FieldElement, target: FieldElement, bound: int) -> int | None:
    """n with base**n == target and 1 <= |n| <= bound, else None."""
    pos = base
    inv = base.inverse()
    neg = inv
    for n in range(1, bound + 1):
        if pos == target:
            return n
        if neg == target:
            return -n
        pos = pos * base
        neg = neg * inv
    return None


def _common_dilation_base(dilationlike: list[AffineMap]):
    """A map q from the candidate list with every a-part a power of q.a.

    Candidates are the generators themselves, then pairwise quotients, in
    input order; exponents are searched up to a fixed bound. Returns
    (base_map, {a-part: exponent}) or None.
    """
    candidates: list[AffineMap] = []
    seen: set = set()
    for g in dilationlike:
        if g.a not in seen:
            seen.add(g.a)
            candidates.append(g)
    singles = list(candidates)
    for g in singles:
        for h in singles:
            if g.a == h.a:
                continue
            q = g * h.inverse()
            if q.a not in seen:
                seen.add(q.a)
                candidates.append(q)
    targets = []
    tseen = set()
    for g in dilationlike:
        if g.a not in tseen:
            tseen.add(g.a)
            targets.append(g.a)
    for cand in candidates:
        q = cand.a
        if q == 1:
            continue
        exponents = {}
        for a in targets:
            n = _power_exponent(q, a, _EXPONENT_BOUND)
            if n is None:
                break
            exponents[a] = n
        else:
            return cand, exponents
    return None


def _translation_sort_key(c: FieldElement):
    return (minimal_polynomial(c).degree, tuple(c.coords))


def normalize_presentation(gs: GeneratorSet) -> NormalizedPresentation:
    """Bring a generator set to the canonical dilation-plus-translations form.

    Identity generators are dropped. When maps with a != 1 are present, a
    common dilation base is located (generators and their pairwise quotients,
    powers searched up to a bound), the whole set is conjugated by the
    translation fixing that base's fixed point, and every other a != 1 map is
    reduced to a translation by a power of the base. Translation lengths are
    made positive, deduplicated, sorted, and scaled so the first equals 1.
    """
    if isinstance(gs, (list, tuple)):
        gs = GeneratorSet(gs)
    field = gs.field
    working = [g for g in gs if not g.is_identity()]
    conjugator = AffineMap.identity(field)
    dilation = None
    lengths: list[FieldElement] = []

    dilationlike = [g for g in working if g.is_dilation_like()]
    if dilationlike:
        found = _common_dilation_base(dilationlike)
        if found is None:
            raise NonCanonicalPresentation(
                "no common dilation base found within the exponent bound; "
                "the presentation is outside the canonical single-dilation shape"
            )
        base, exponents = found
        # Conjugate by the translation moving the base's fixed point to 0.
        q = base.a
        fixed_point = base.b / (field.one() - q)
        mover = AffineMap.translation(-fixed_point)
        conjugator = mover
        working = [g.conjugate(mover) for g in working]
        dilation = AffineMap.dilation(q)
        reduced: list[AffineMap] = []
        for g in working:
            if g.is_translation():
                reduced.append(g)
                continue
            n = exponents[g.a]
            t = g * dilation ** (-n)
            if not t.is_translation():
                raise AssertionError("dilation reduction failed to cancel")
            reduced.append(t)
        working = reduced

    for g in working:
        if g.b:
            lengths.append(g.b)

    # Replacing a translation by its inverse preserves the generated group,
    # so lengths are canonicalized to be positive under the embedding.
    lengths = [c if fe_sign(c) > 0 else -c for c in lengths]
    unique: list[FieldElement] = []
    for c in lengths:
        if c not in unique:
            unique.append(c)
    unique.sort(key=_translation_sort_key)

    witness = field.one()
    if unique:
        witness = unique[0]
        scaler = AffineMap.dilation(witness.inverse())
        unique = [c / witness for c in unique]
        conjugator = scaler * conjugator
    return NormalizedPresentation(field, dilation, unique, witness, conjugator)
