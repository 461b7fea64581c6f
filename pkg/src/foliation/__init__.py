"""Exact classification of line-affine holonomy groups and solvable algebras.

Everything is computed over the rationals or a real number field of degree
at most four, with no floating point anywhere: polynomial factorization,
Sturm root isolation, algebraic-unit tests, canonical forms for affine
generator sets, and the named-type classification of three-dimensional
solvable Lie algebras.
"""

from .affine import (
    AffineMap,
    GeneratorSet,
    NonCanonicalPresentation,
    NormalizedPresentation,
    ad_eigenvalues,
    normalize_presentation,
)
from .classify import (
    ClassificationReport,
    ExtensionClassResult,
    FoliationType,
    OutOfClassification,
    TYPE_TAGS,
    classify,
    classify_normalized,
    extension_class_trivial,
    family_conjugate,
    is_polycyclic_by_eigenvalue_criterion,
)
from .kernels import BACKEND, get_backend
from .liealg import (
    BIANCHI_TAGS,
    AdUnitCheckResult,
    BianchiResult,
    LieAlgebra,
    SemidirectElement,
    SolVerdict,
    SplitResult,
    bianchi_classify,
    build_bianchi_algebra,
    build_sol_holonomy,
    change_basis,
    derived_subalgebra,
    is_split_metabelian,
    solvability_predicates,
    split_metabelian_ad_unit_check,
)
from .numfield import (
    FieldElement,
    FieldMismatchError,
    NoRealEmbeddingError,
    NumberField,
    approximate,
    fe_sign,
    is_algebraic_integer,
    is_algebraic_unit,
    minimal_polynomial,
    rational_field,
    rational_ratio,
    sqrt_in_field,
    subfield_membership,
)
from .polys import Poly, UnsupportedDegreeError, factor, is_irreducible
from .sturm import isolate_real_roots, refine_isolating_interval

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "GeneratorSet",
    "NonCanonicalPresentation",
    "NormalizedPresentation",
    "ad_eigenvalues",
    "normalize_presentation",
    "ClassificationReport",
    "ExtensionClassResult",
    "FoliationType",
    "OutOfClassification",
    "TYPE_TAGS",
    "classify",
    "classify_normalized",
    "extension_class_trivial",
    "family_conjugate",
    "is_polycyclic_by_eigenvalue_criterion",
    "BACKEND",
    "get_backend",
    "BIANCHI_TAGS",
    "AdUnitCheckResult",
    "BianchiResult",
    "LieAlgebra",
    "SemidirectElement",
    "SolVerdict",
    "SplitResult",
    "bianchi_classify",
    "build_bianchi_algebra",
    "build_sol_holonomy",
    "change_basis",
    "derived_subalgebra",
    "is_split_metabelian",
    "solvability_predicates",
    "split_metabelian_ad_unit_check",
    "FieldElement",
    "FieldMismatchError",
    "NoRealEmbeddingError",
    "NumberField",
    "approximate",
    "fe_sign",
    "is_algebraic_integer",
    "is_algebraic_unit",
    "minimal_polynomial",
    "rational_field",
    "rational_ratio",
    "sqrt_in_field",
    "subfield_membership",
    "Poly",
    "UnsupportedDegreeError",
    "factor",
    "is_irreducible",
    "isolate_real_roots",
    "refine_isolating_interval",
    "__version__",
]
