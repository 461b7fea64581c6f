"""Three-dimensional solvable Lie algebras and the semidirect holonomy family."""

import random
from fractions import Fraction

import pytest
import sympy

from foliation import (
    FieldMismatchError,
    LieAlgebra,
    NumberField,
    Poly,
    SemidirectElement,
    bianchi_classify,
    build_bianchi_algebra,
    build_sol_holonomy,
    change_basis,
    derived_subalgebra,
    is_split_metabelian,
    rational_field,
    solvability_predicates,
    split_metabelian_ad_unit_check,
)


def heisenberg():
    return build_bianchi_algebra("II")


def sl2():
    # [h, e] = 2e, [h, f] = -2f, [e, f] = h with basis order (h, e, f).
    return LieAlgebra.from_brackets(
        rational_field(), 3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]}
    )


def random_invertible(rng, n):
    """Random product of elementary row operations, hence invertible."""
    m = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for _ in range(8):
        i, j = rng.sample(range(n), 2)
        c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        for k in range(n):
            m[i][k] += c * m[j][k]
        if rng.random() < 0.3:
            s = Fraction(rng.choice([1, 2, 3]), rng.choice([1, 2]))
            for k in range(n):
                m[i][k] *= s
    return m


def test_from_brackets_validation():
    field = rational_field()
    with pytest.raises(ValueError):
        LieAlgebra.from_brackets(field, 3, {(0, 3): [1, 0, 0]})
    with pytest.raises(ValueError):
        LieAlgebra.from_brackets(field, 3, {(1, 1): [1, 0, 0]})
    with pytest.raises(ValueError):
        LieAlgebra.from_brackets(field, 2, {(0, 1): [1, 0, 0]})


def test_jacobi_identity_is_checked():
    field = rational_field()
    # [e1,e2] = e1, [e2,e3] = e3, [e3,e1] = e2 satisfies the Jacobi identity.
    good = {(0, 1): [1, 0, 0], (1, 2): [0, 0, 1], (0, 2): [0, -1, 0]}
    LieAlgebra.from_brackets(field, 3, good)
    bad = {(0, 1): [1, 0, 0], (1, 2): [0, 0, -1], (0, 2): [0, -1, 0]}
    with pytest.raises(ValueError) as exc:
        LieAlgebra.from_brackets(field, 3, bad)
    assert "Jacobi" in str(exc.value)


def test_antisymmetry_is_checked():
    field = rational_field()
    zero, one = field.zero(), field.one()
    z3 = [zero, zero, zero]
    table = [[list(z3) for _ in range(3)] for _ in range(3)]
    table[0][1] = [one, zero, zero]  # [e1,e2] = e1 but [e2,e1] left at zero
    with pytest.raises(ValueError) as exc:
        LieAlgebra(field, table)
    assert "antisymmetry" in str(exc.value)
    assert "e1" in str(exc.value) and "e2" in str(exc.value)


def test_bracket_bilinearity_and_ad_matrix():
    L = heisenberg()
    field = L.field
    x = (field.rational(2), field.rational(3), field.rational(-1))
    y = (field.one(), field.rational(Fraction(1, 2)), field.zero())
    # Only [e1,e2] = e3 contributes: coefficient 2*(1/2) - 3*1 = -2.
    assert L.bracket(x, y) == (field.zero(), field.zero(), field.rational(-2))
    ad1 = L.ad_matrix(L.basis_vector(0))
    assert ad1[2][1] == 1
    flat = [ad1[i][j] for i in range(3) for j in range(3) if (i, j) != (2, 1)]
    assert all(not v for v in flat)


def test_derived_subalgebra_of_heisenberg():
    basis, dim = derived_subalgebra(heisenberg())
    assert dim == 1
    v = basis[0]
    assert (not v[0]) and (not v[1]) and v[2]


def test_solvability_predicates():
    assert solvability_predicates(heisenberg()) == (True, True, True)
    abelian = build_bianchi_algebra("I")
    assert solvability_predicates(abelian) == (True, True, True)
    vi = build_bianchi_algebra("VI", h=Fraction(1, 2))
    flags = solvability_predicates(vi)
    assert flags.solvable and not flags.nilpotent and flags.metabelian
    flags = solvability_predicates(sl2())
    assert not flags.solvable and not flags.nilpotent and not flags.metabelian


def test_bianchi_round_trips():
    cases = [
        ("I", None),
        ("II", None),
        ("IV", None),
        ("V", None),
        ("VI", Fraction(-1)),
        ("VI", Fraction(1, 2)),
        ("VII", Fraction(2)),
    ]
    for tag, h in cases:
        L = build_bianchi_algebra(tag, h=h)
        result = bianchi_classify(L)
        assert result.tag == tag, (tag, h, result)
        if h is None:
            assert result.h is None
        else:
            assert result.h == h
        assert result.note is None


def test_bianchi_vi_minus_one_is_unimodular():
    result = bianchi_classify(build_bianchi_algebra("VI", h=Fraction(-1)))
    assert result.tag == "VI" and result.h == -1
    assert result.unimodular is True
    other = bianchi_classify(build_bianchi_algebra("VI", h=Fraction(1, 2)))
    assert other.unimodular is False


def test_bianchi_type_iii_and_not_solvable():
    r = bianchi_classify(build_bianchi_algebra("TypeIII"))
    assert r.tag == "TypeIII"
    assert r.note is not None
    assert bianchi_classify(sl2()).tag == "NotSolvable"


def test_bianchi_vii_zero_rotation_case():
    field = rational_field()
    L = LieAlgebra.from_brackets(
        field, 3, {(0, 2): [0, -1, 0], (1, 2): [1, 0, 0]}
    )
    r = bianchi_classify(L)
    assert r.tag == "VII" and r.h is None
    assert "trace zero" in r.note
    assert r.unimodular is True


def test_bianchi_vii_with_irrational_parameter_reports_note():
    field = rational_field()
    # Adjoint action on the derived subalgebra has trace 1 and determinant 1,
    # so the canonical parameter needs sqrt(3), which is outside the rationals.
    L = LieAlgebra.from_brackets(
        field, 3, {(0, 2): [1, 1, 0], (1, 2): [-1, 0, 0]}
    )
    r = bianchi_classify(L)
    assert r.tag == "VII" and r.h is None
    assert "square root" in r.note


def test_bianchi_vi_with_irrational_parameter(golden_field):
    def vi_nine(field):
        return LieAlgebra.from_brackets(
            field, 3, {(0, 2): [1, 1, 0], (1, 2): [1, 2, 0]}
        )

    r = bianchi_classify(vi_nine(rational_field()))
    assert r.tag == "VI" and r.h is None
    assert "square root" in r.note
    # Over a field containing sqrt(5) the parameter materializes: k = 9 and
    # h = (7 - 3*sqrt(5))/2 = 5 - 3*phi is the root with |h| <= 1.
    phi = golden_field.generator()
    r2 = bianchi_classify(vi_nine(golden_field))
    assert r2.tag == "VI"
    assert r2.h == 5 - 3 * phi
    assert r2.note is None


def test_build_bianchi_parameter_validation():
    with pytest.raises(ValueError) as exc:
        build_bianchi_algebra("VI", h=0)
    assert "TypeIII" in str(exc.value) and "V" in str(exc.value)
    with pytest.raises(ValueError) as exc:
        build_bianchi_algebra("VI", h=1)
    assert "V instead" in str(exc.value)
    with pytest.raises(ValueError):
        build_bianchi_algebra("VI")
    with pytest.raises(ValueError):
        build_bianchi_algebra("VII")
    with pytest.raises(ValueError):
        build_bianchi_algebra("V", h=2)
    with pytest.raises(ValueError):
        build_bianchi_algebra("VIII")


def test_bianchi_classification_survives_basis_changes():
    rng = random.Random(4242)
    L = build_bianchi_algebra("VI", h=Fraction(-1))
    for _ in range(15):
        m = random_invertible(rng, 3)
        moved = change_basis(L, m)
        result = bianchi_classify(moved)
        assert result.tag == "VI"
        assert result.h == -1
        assert result.unimodular is True


def test_change_basis_rejects_singular_matrix():
    L = heisenberg()
    with pytest.raises(ValueError):
        change_basis(L, [[1, 0, 0], [0, 1, 0], [1, 1, 0]])


def test_heisenberg_is_not_split():
    result = is_split_metabelian(heisenberg())
    assert result.split is False
    assert result.complement is None
    assert bool(result) is False


def test_heisenberg_grid_oracle_agrees():
    """Brute-force cross-check over the two-parameter complement family.

    Every complement of the derived line span(e3) is the graph
    span(e1 + a*e3, e2 + b*e3). The bracket of the two spanning vectors is
    computed symbolically with sympy and must escape the span for every grid
    point, so no complement is a subalgebra.
    """
    grid = [sympy.Rational(n, d) for n in range(-2, 3) for d in (1, 2, 3)]
    for a in grid:
        for b in grid:
            c1 = [sympy.Integer(1), sympy.Integer(0), a]
            c2 = [sympy.Integer(0), sympy.Integer(1), b]
            # Heisenberg structure constants: [x, y] = (x1*y2 - x2*y1) e3.
            w = [sympy.Integer(0), sympy.Integer(0), c1[0] * c2[1] - c1[1] * c2[0]]
            plane = sympy.Matrix([c1, c2])
            extended = sympy.Matrix([c1, c2, w])
            assert plane.rank() == 2
            assert extended.rank() == 3


def test_vi_h_is_split_with_abelian_complement():
    L = build_bianchi_algebra("VI", h=Fraction(1, 2))
    result = is_split_metabelian(L)
    assert result.split is True
    (c,) = result.complement
    assert c[2]  # the complement line sits outside the derived plane


def test_abelian_is_split():
    result = is_split_metabelian(build_bianchi_algebra("I"))
    assert result.split is True
    assert len(result.complement) == 3


def test_split_complement_is_a_subalgebra_when_found():
    field = rational_field()
    # Four-dimensional: derived plane span(e1, e2), two outside directions
    # that bracket into the plane, arranged so a graph complement exists.
    L = LieAlgebra.from_brackets(
        field,
        4,
        {(0, 2): [1, 0, 0, 0], (1, 3): [0, 1, 0, 0]},
    )
    result = is_split_metabelian(L)
    assert result.split is True
    comp = result.complement
    assert len(comp) == 2
    inside = L.bracket(comp[0], comp[1])
    rows = [list(v) for v in comp]
    from foliation.linalg import in_span

    assert in_span(rows, list(inside)) is not None


def test_split_test_validation():
    with pytest.raises(ValueError):
        is_split_metabelian(sl2())
    field = rational_field()
    big = LieAlgebra.from_brackets(field, 5, {})
    with pytest.raises(ValueError):
        is_split_metabelian(big)


def test_ad_unit_check_companion_of_unit_polynomial():
    result = split_metabelian_ad_unit_check([[0, -1], [1, 3]])
    assert result.all_units is True
    assert bool(result) is True
    assert result.characteristic == Poly((Fraction(1), Fraction(-3), Fraction(1)))
    ((f, mult, ok),) = result.factors
    assert f == Poly((Fraction(1), Fraction(-3), Fraction(1)))
    assert mult == 1 and ok is True


def test_ad_unit_check_rejects_non_unit_spectrum():
    result = split_metabelian_ad_unit_check(
        [[Fraction(2), 0], [0, Fraction(1, 2)]]
    )
    assert result.all_units is False
    verdicts = {str(f): ok for f, _, ok in result.factors}
    assert set(verdicts.values()) == {False}


def test_ad_unit_check_validation(sqrt2_field):
    with pytest.raises(ValueError):
        split_metabelian_ad_unit_check([[1, 0], [0, 0]])  # singular
    with pytest.raises(ValueError):
        split_metabelian_ad_unit_check([[1, 0, 0], [0, 1, 0]])  # not square
    sqrt2 = sqrt2_field.generator()
    with pytest.raises(ValueError) as exc:
        split_metabelian_ad_unit_check([[sqrt2, 0], [0, 1]])
    assert "irrational" in str(exc.value)


def test_ad_unit_check_handles_field_entries(sqrt2_field):
    sqrt2 = sqrt2_field.generator()
    # Conjugate pair sqrt2, -sqrt2: characteristic polynomial x^2 - 2.
    result = split_metabelian_ad_unit_check([[sqrt2, 0], [0, -sqrt2]])
    assert result.all_units is False
    ((f, mult, ok),) = result.factors
    assert f == Poly((Fraction(-2), Fraction(0), Fraction(1)))
    assert ok is False


def test_ad_unit_check_is_similarity_invariant():
    rng = random.Random(77)
    matrices = [
        [[Fraction(0), Fraction(-1)], [Fraction(1), Fraction(3)]],
        [[Fraction(2), Fraction(0)], [Fraction(0), Fraction(1, 2)]],
        [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)]],
    ]
    for m in matrices:
        base = split_metabelian_ad_unit_check(m)
        for _ in range(10):
            p = random_invertible(rng, 2)
            (a, b), (c, d) = p
            dt = a * d - b * c
            pinv = [[d / dt, -b / dt], [-c / dt, a / dt]]
            pm = [
                [sum(p[i][k] * m[k][j] for k in range(2)) for j in range(2)]
                for i in range(2)
            ]
            conj = [
                [sum(pm[i][k] * pinv[k][j] for k in range(2)) for j in range(2)]
                for i in range(2)
            ]
            moved = split_metabelian_ad_unit_check(conj)
            assert moved.all_units == base.all_units
            assert moved.characteristic == base.characteristic


def test_semidirect_element_group_axioms(sqrt2_field):
    field = sqrt2_field
    sqrt2 = field.generator()
    one, zero = field.one(), field.zero()
    mu = 1 + sqrt2
    tau = SemidirectElement((zero, zero), [[mu, zero], [zero, mu.inverse()]])
    sigma = SemidirectElement((one, zero), [[one, zero], [zero, one]])
    rho = SemidirectElement((zero, sqrt2), [[one, zero], [zero, one]])
    identity = SemidirectElement((zero, zero), [[one, zero], [zero, one]])
    for g in (tau, sigma, rho):
        assert g * g.inverse() == identity
        assert g.inverse() * g == identity
    assert (tau * sigma) * rho == tau * (sigma * rho)
    conj = tau * sigma * tau.inverse()
    assert conj.v == (mu, zero)
    assert conj.m == identity.m


def test_semidirect_element_validation(sqrt2_field):
    one, zero = sqrt2_field.one(), sqrt2_field.zero()
    with pytest.raises(ValueError):
        SemidirectElement((one,), [[one, zero], [zero, one]])
    with pytest.raises(ValueError):
        SemidirectElement((one, zero), [[one, zero]])
    with pytest.raises(ValueError):
        SemidirectElement((1, 0), [[1, 0], [0, 1]])  # no field element anywhere
    with pytest.raises(ValueError):
        SemidirectElement((one, zero), [[one, zero], [one, zero]])  # singular


def test_sol_holonomy_obstructed_family(sqrt2_field):
    sqrt2 = sqrt2_field.generator()
    mu = 3 + 2 * sqrt2
    eps = sqrt2_field.rational(Fraction(1, 3))
    gens, verdict = build_sol_holonomy(mu, eps)
    assert len(gens) == 4
    assert verdict.non_homogeneous is True
    assert verdict.obstruction == mu * eps
    assert verdict.obstruction_minimal_polynomial == Poly(
        (Fraction(1, 9), Fraction(-2), Fraction(1))
    )
    assert verdict.notes


def test_sol_holonomy_second_obstructed_family(sqrt2_field):
    sqrt2 = sqrt2_field.generator()
    mu = 1 + sqrt2
    eps = 2 + sqrt2
    gens, verdict = build_sol_holonomy(mu, eps)
    assert verdict.non_homogeneous is True
    assert verdict.obstruction == 4 + 3 * sqrt2
    assert verdict.obstruction_minimal_polynomial == Poly(
        (Fraction(-2), Fraction(-8), Fraction(1))
    )


def test_sol_holonomy_unit_product_is_unobstructed(sqrt2_field):
    sqrt2 = sqrt2_field.generator()
    gens, verdict = build_sol_holonomy(1 + sqrt2, sqrt2_field.one())
    assert verdict.non_homogeneous is False


def test_sol_holonomy_conjugation_scales_translations(sqrt2_field):
    sqrt2 = sqrt2_field.generator()
    mu = 1 + sqrt2
    gens, _ = build_sol_holonomy(mu, sqrt2)
    tau, sigma1, sigma2, rho = gens
    moved = tau * sigma1 * tau.inverse()
    assert moved.v == (mu, sqrt2_field.zero())
    moved2 = tau * sigma2 * tau.inverse()
    assert moved2.v == (sqrt2_field.zero(), mu.inverse())


def test_sol_holonomy_validation(sqrt2_field, golden_field):
    sqrt2 = sqrt2_field.generator()
    with pytest.raises(TypeError):
        build_sol_holonomy(Fraction(2), sqrt2)
    with pytest.raises(FieldMismatchError):
        build_sol_holonomy(golden_field.generator(), sqrt2)
    with pytest.raises(ValueError):
        build_sol_holonomy(1 + sqrt2, sqrt2_field.zero())
    with pytest.raises(ValueError):
        build_sol_holonomy(-(1 + sqrt2), sqrt2_field.one())
    with pytest.raises(ValueError):
        build_sol_holonomy(sqrt2_field.rational(2), sqrt2_field.one())
