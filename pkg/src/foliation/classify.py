"""Type assignment for finitely generated groups of affine maps of the line.

The decision tree runs on normalized presentations: abelian groups split by
the rational rank of their translation lengths (types I and II), groups with
a dilation split by the number of translations and unit/degree conditions on
the dilation coefficient (types IIIa, IIIb, IIIc). Everything outside the
tree raises a dedicated error instead of guessing.
"""

from __future__ import annotations

from .affine import (
    AffineMap,
    GeneratorSet,
    NonCanonicalPresentation,
    NormalizedPresentation,
    ad_eigenvalues,
    normalize_presentation,
)
from .linalg import rank
from .numfield import (
    FieldElement,
    FieldMismatchError,
    is_algebraic_unit,
    minimal_polynomial,
    rational_ratio,
    subfield_membership,
)

TYPE_TAGS = ("I", "II", "IIIa", "IIIb", "IIIc")


class OutOfClassification(Exception):
    """The group is outside the five covered types (or not canonically given)."""

    def __init__(self, message: str, diagnostics: list[str] | None = None):
        super().__init__(message)
        self.diagnostics = list(diagnostics or [])


class FoliationType:
    """A type tag with the parameters that realize it."""

    __slots__ = ("tag", "dilation", "translations")

    def __init__(self, tag, dilation, translations):
        if tag not in TYPE_TAGS:
            raise ValueError(f"unknown type tag {tag!r}")
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "dilation", dilation)
        object.__setattr__(self, "translations", tuple(translations))

    def __setattr__(self, name, value):
        raise AttributeError("FoliationType is immutable")

    def __repr__(self):
        return f"FoliationType({self.tag})"


class ClassificationReport:
    """Full verdict: primary type, matches, and the three boolean criteria."""

    __slots__ = (
        "primary_type",
        "all_matching_types",
        "polycyclic",
        "extension_class_trivial",
        "homogeneous",
        "witnesses",
        "warnings",
        "presentation",
    )

    def __init__(
        self,
        primary_type,
        all_matching_types,
        polycyclic,
        extension_class_trivial,
        witnesses,
        warnings,
        presentation,
    ):
        object.__setattr__(self, "primary_type", primary_type)
        object.__setattr__(self, "all_matching_types", tuple(all_matching_types))
        object.__setattr__(self, "polycyclic", polycyclic)
        object.__setattr__(self, "extension_class_trivial", extension_class_trivial)
        object.__setattr__(self, "homogeneous", polycyclic and extension_class_trivial)
        object.__setattr__(self, "witnesses", tuple(witnesses))
        object.__setattr__(self, "warnings", tuple(warnings))
        object.__setattr__(self, "presentation", presentation)
        if self.primary_type.tag not in self.all_matching_types:
            raise AssertionError("primary type missing from match list")

    def __setattr__(self, name, value):
        raise AttributeError("ClassificationReport is immutable")

    def __repr__(self):
        return (
            f"ClassificationReport(type={self.primary_type.tag}, "
            f"homogeneous={self.homogeneous})"
        )


class ExtensionClassResult:
    """Outcome of the extension-class triviality test with pair diagnostics.

    Each pair entry is (c1, c2, ratio or None, in_dilation_field or None);
    the last flag is only computed when a dilation is present.
    """

    __slots__ = ("trivial", "pairs", "note")

    def __init__(self, trivial, pairs, note=None):
        object.__setattr__(self, "trivial", trivial)
        object.__setattr__(self, "pairs", tuple(pairs))
        object.__setattr__(self, "note", note)

    def __setattr__(self, name, value):
        raise AttributeError("ExtensionClassResult is immutable")

    def __bool__(self):
        return self.trivial


def extension_class_trivial(np: NormalizedPresentation) -> ExtensionClassResult:
    """Decide triviality of the extension class from translation ratios.

    With no dilation the group is abelian and the class is trivial outright;
    the pairwise ratios are still reported. With a dilation the class is
    trivial exactly when every pairwise ratio of translation lengths is
    rational. Membership of each ratio in the dilation coefficient's
    subfield is attached as a diagnostic.
    """
    ts = np.translations
    lam = None if np.dilation is None else np.dilation.a
    pairs = []
    all_rational = True
    for i in range(len(ts)):
        for j in range(i + 1, len(ts)):
            q = rational_ratio(ts[i], ts[j])
            if q is None:
                all_rational = False
            in_sub = None
            if lam is not None:
                in_sub = subfield_membership(ts[i] / ts[j], lam)
            pairs.append((ts[i], ts[j], q, in_sub))
    if lam is None:
        note = None
        if not all_rational:
            note = "abelian presentation: class trivial despite irrational ratios"
        return ExtensionClassResult(True, pairs, note)
    return ExtensionClassResult(all_rational, pairs)


def is_polycyclic_by_eigenvalue_criterion(gs) -> bool:
    """True when every adjoint eigenvalue of every generator is a unit."""
    if isinstance(gs, (list, tuple)):
        gs = GeneratorSet(gs)
    for g in gs:
        for ev in ad_eigenvalues(g):
            if not is_algebraic_unit(ev):
                return False
    return True


def family_conjugate(lam: FieldElement, eps1: FieldElement, eps2: FieldElement) -> bool:
    """Conjugacy test inside the one-dilation family: eps1/eps2 in Q(lam)."""
    if lam.field != eps1.field or lam.field != eps2.field:
        raise FieldMismatchError("family test needs elements of one field")
    if not eps2:
        raise ValueError("second translation length must be nonzero")
    return subfield_membership(eps1 / eps2, lam)


def classify(gs) -> ClassificationReport:
    """Assign a type to the group generated by the given affine maps."""
    if isinstance(gs, (list, tuple)):
        gs = GeneratorSet(gs)
    try:
        np = normalize_presentation(gs)
    except NonCanonicalPresentation as exc:
        raise OutOfClassification(str(exc)) from exc
    return classify_normalized(np)


def classify_normalized(np: NormalizedPresentation) -> ClassificationReport:
    if np.dilation is None:
        return _classify_abelian(np)
    return _classify_with_dilation(np)


def _rational_rank(translations) -> int:
    if not translations:
        return 0
    matrix = [list(c.coords) for c in translations]
    return rank(matrix)


def _classify_abelian(np: NormalizedPresentation) -> ClassificationReport:
    ext = extension_class_trivial(np)
    r = _rational_rank(np.translations)
    witnesses = [("translation span dimension over the rationals", r)]
    if r == 0:
        raise OutOfClassification(
            "trivial group: every generator is the identity",
            ["no dilation and no nonzero translation survives normalization"],
        )
    if r > 2:
        raise OutOfClassification(
            f"translation lengths span dimension {r} over the rationals",
            ["abelian holonomy of rank 3 or more is outside the five types"],
        )
    tag = "I" if r == 1 else "II"
    if tag == "I":
        witnesses.append(("group structure", "infinite cyclic up to finite index"))
    else:
        witnesses.append(("group structure", "dense abelian, affine torus shape"))
    ftype = FoliationType(tag, None, np.translations)
    return ClassificationReport(
        primary_type=ftype,
        all_matching_types=[tag],
        polycyclic=True,
        extension_class_trivial=ext.trivial,
        witnesses=witnesses,
        warnings=[],
        presentation=np,
    )


def _classify_with_dilation(np: NormalizedPresentation) -> ClassificationReport:
    lam = np.dilation.a
    ts = np.translations
    ext = extension_class_trivial(np)
    lam_min = minimal_polynomial(lam)
    lam_unit = is_algebraic_unit(lam)
    witnesses = [
        ("dilation coefficient", lam),
        ("dilation minimal polynomial", lam_min),
        ("dilation is an algebraic unit", lam_unit),
    ]
    warnings: list[str] = []

    if not ts:
        witnesses.append(
            ("group structure", "single dilation generator, infinite cyclic")
        )
        ftype = FoliationType("I", lam, ())
        return ClassificationReport(
            primary_type=ftype,
            all_matching_types=["I"],
            polycyclic=lam_unit,
            extension_class_trivial=ext.trivial,
            witnesses=witnesses,
            warnings=warnings,
            presentation=np,
        )

    if len(ts) == 1:
        diagnostics = []
        if lam_min.degree != 2:
            diagnostics.append(
                f"dilation coefficient has minimal polynomial degree "
                f"{lam_min.degree}, needed 2"
            )
        if not lam_unit:
            diagnostics.append("dilation coefficient is not an algebraic unit")
        if diagnostics:
            raise OutOfClassification(
                "one-translation presentation fails the degree-2 unit conditions",
                diagnostics,
            )
        normal_form = (lam - 1).inverse()
        witnesses.append(
            ("translation length in conjugacy normal form", normal_form)
        )
        witnesses.append(
            (
                "input length times (dilation - 1) equals 1",
                np.scaling_witness * (lam - 1) == 1,
            )
        )
        ftype = FoliationType("IIIa", lam, ts)
        return ClassificationReport(
            primary_type=ftype,
            all_matching_types=["IIIa"],
            polycyclic=True,
            extension_class_trivial=ext.trivial,
            witnesses=witnesses,
            warnings=warnings,
            presentation=np,
        )

    if len(ts) == 2:
        eps = ts[1]
        eps_unit = is_algebraic_unit(eps)
        ratio = rational_ratio(np.field.one(), eps)
        matches = []
        if lam_min.degree == 2 and lam_unit and not eps_unit:
            matches.append("IIIb")
        if lam_unit and ratio is None:
            matches.append("IIIc")
        witnesses.append(("second translation length", eps))
        witnesses.append(("second length is an algebraic unit", eps_unit))
        witnesses.append(
            (
                "ratio of first to second translation length",
                "irrational, not in the rationals" if ratio is None else ratio,
            )
        )
        if not matches:
            raise OutOfClassification(
                "two-translation presentation matches neither unit pattern",
                [
                    f"dilation degree {lam_min.degree}, unit: {lam_unit}",
                    f"second length unit: {eps_unit}, rational ratio: {ratio}",
                ],
            )
        if len(matches) == 2:
            warnings.append(
                "types IIIb and IIIc both match; the classification asserts "
                "exclusivity, so the report keeps IIIb as primary"
            )
        primary = matches[0]
        if primary == "IIIb":
            polycyclic = False
            witnesses.append(
                (
                    "classification criterion",
                    "second translation length is not an algebraic unit",
                )
            )
        else:
            polycyclic = is_polycyclic_by_eigenvalue_criterion(
                [np.dilation] + [AffineMap.translation(c) for c in ts]
            )
        ftype = FoliationType(primary, lam, ts)
        return ClassificationReport(
            primary_type=ftype,
            all_matching_types=matches,
            polycyclic=polycyclic,
            extension_class_trivial=ext.trivial,
            witnesses=witnesses,
            warnings=warnings,
            presentation=np,
        )

    raise OutOfClassification(
        f"{len(ts)} independent translation lengths alongside a dilation",
        ["three or more translations with a dilation is outside the five types"],
    )
