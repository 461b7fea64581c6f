"""Lie algebras over a number field from structure constants.

Covers validation (antisymmetry, Jacobi), derived and lower central series,
the solvable/nilpotent/metabelian predicates, a split-metabelian test with a
witness complement, the three-dimensional classification into the named
types, and the semidirect-product elements used by the unit-obstruction
check on homogeneity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .linalg import charpoly, det, in_span, independent_subset, rank, solve
from .numfield import (
    FieldElement,
    FieldMismatchError,
    NumberField,
    fe_sign,
    is_algebraic_unit,
    minimal_polynomial,
    rational_field,
    sqrt_in_field,
)
from .polys import Poly, factor

BIANCHI_TAGS = ("I", "II", "TypeIII", "IV", "V", "VI", "VII", "NotSolvable")


def _fe(field: NumberField, value) -> FieldElement:
    if isinstance(value, FieldElement):
        if value.field != field:
            raise FieldMismatchError("entry drawn from a different field")
        return value
    return field.rational(Fraction(value))


def _vec_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _vec_scale(c, x):
    return tuple(c * a for a in x)


def _is_zero_vec(x):
    return not any(x)


class LieAlgebra:
    """A Lie algebra presented by structure constants over a number field.

    constants[i][j][k] is the e_k coefficient of [e_i, e_j]. Antisymmetry
    and the Jacobi identity are verified exactly at construction, so every
    later computation can trust the table.
    """

    __slots__ = ("field", "dim", "constants")

    def __init__(self, field: NumberField, constants):
        n = len(constants)
        if n < 1 or n > 6:
            raise ValueError("dimension must be between 1 and 6")
        table = []
        for i in range(n):
            if len(constants[i]) != n:
                raise ValueError("structure constant array is not n x n x n")
            row = []
            for j in range(n):
                if len(constants[i][j]) != n:
                    raise ValueError("structure constant array is not n x n x n")
                row.append(tuple(_fe(field, c) for c in constants[i][j]))
            table.append(tuple(row))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "constants", tuple(table))
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    def _validate(self):
        n = self.dim
        c = self.constants
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if c[i][j][k] != -c[j][i][k]:
                        raise ValueError(
                            f"antisymmetry violated at [e{i + 1}, e{j + 1}], "
                            f"component e{k + 1}"
                        )
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s = _vec_add(
                        _vec_add(
                            self.bracket(self.bracket_basis(i, j), self.basis_vector(k)),
                            self.bracket(self.bracket_basis(j, k), self.basis_vector(i)),
                        ),
                        self.bracket(self.bracket_basis(k, i), self.basis_vector(j)),
                    )
                    if not _is_zero_vec(s):
                        raise ValueError(
                            f"Jacobi identity violated on "
                            f"(e{i + 1}, e{j + 1}, e{k + 1})"
                        )

    @classmethod
    def from_brackets(cls, field: NumberField, dim: int, brackets) -> "LieAlgebra":
        """Build from a sparse map {(i, j): coefficient vector} with i < j.

        Indices are 0-based; the antisymmetric counterpart is filled in.
        """
        zero = field.zero()
        table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), vec in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index ({i}, {j}) out of range")
            if i == j:
                raise ValueError("bracket of a basis vector with itself must be zero")
            if len(vec) > dim:
                raise ValueError("bracket coefficient vector longer than dimension")
            coeffs = list(vec) + [0] * (dim - len(vec))
            for k in range(dim):
                v = _fe(field, coeffs[k])
                table[i][j][k] = v
                table[j][i][k] = -v
        return cls(field, table)

    def zero_vector(self):
        return tuple(self.field.zero() for _ in range(self.dim))

    def basis_vector(self, i: int):
        return tuple(
            self.field.one() if k == i else self.field.zero() for k in range(self.dim)
        )

    def bracket_basis(self, i: int, j: int):
        return self.constants[i][j]

    def bracket(self, x, y):
        """[x, y] for coordinate vectors x, y."""
        out = list(self.zero_vector())
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                row = self.constants[i][j]
                coeff = xi * yj
                for k in range(self.dim):
                    if row[k]:
                        out[k] = out[k] + coeff * row[k]
        return tuple(out)

    def ad_matrix(self, x):
        """Matrix of [x, -] acting on coordinates; columns are images of e_j."""
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim})"


def _span_of_brackets(L: LieAlgebra, basis_a, basis_b):
    """Independent spanning set of [A, B] for subspaces given by bases."""
    products = []
    for a in basis_a:
        for b in basis_b:
            v = L.bracket(a, b)
            if not _is_zero_vec(v):
                products.append(list(v))
    if not products:
        return []
    return [tuple(products[i]) for i in independent_subset(products)]


def derived_subalgebra(L: LieAlgebra):
    """Basis and dimension of the span of all brackets."""
    basis = [L.basis_vector(i) for i in range(L.dim)]
    d = _span_of_brackets(L, basis, basis)
    return tuple(d), len(d)


class SolvabilityFlags(NamedTuple):
    solvable: bool
    nilpotent: bool
    metabelian: bool


def solvability_predicates(L: LieAlgebra) -> SolvabilityFlags:
    """Exact derived-series and lower-central-series computation."""
    full = [L.basis_vector(i) for i in range(L.dim)]
    first_derived = _span_of_brackets(L, full, full)
    metabelian = not _span_of_brackets(L, first_derived, first_derived)
    series = first_derived
    prev = L.dim + 1
    while series and len(series) < prev:
        prev = len(series)
        series = _span_of_brackets(L, series, series)
    solvable = not series
    lower = first_derived
    prev = L.dim + 1
    while lower and len(lower) < prev:
        prev = len(lower)
        lower = _span_of_brackets(L, full, lower)
    nilpotent = not lower
    return SolvabilityFlags(solvable, nilpotent, metabelian)


class SplitResult(NamedTuple):
    split: bool
    complement: tuple | None

    def __bool__(self):
        return self.split


def is_split_metabelian(L: LieAlgebra) -> SplitResult:
    """Does an abelian subalgebra complement the derived subalgebra?

    Complements of [g, g] are graphs of linear maps from a fixed coordinate
    complement into [g, g]. Because [g, g] is abelian here, the closure and
    commutativity constraints on such a graph are linear in the map's
    entries, so one exact linear solve decides existence.
    """
    if L.dim > 4:
        raise ValueError("split test is limited to dimension <= 4")
    flags = solvability_predicates(L)
    if not flags.metabelian:
        raise ValueError("split test needs a metabelian algebra")
    dba, d = derived_subalgebra(L)
    n = L.dim
    if d == 0:
        basis = tuple(L.basis_vector(i) for i in range(n))
        return SplitResult(True, basis)
    derived_rows = [list(v) for v in dba]
    outside = []
    for i in range(n):
        probe = derived_rows + [list(v) for v in outside] + [list(L.basis_vector(i))]
        if rank(probe) == len(probe):
            outside.append(L.basis_vector(i))
    m = len(outside)
    if m + d != n:
        raise AssertionError("complement completion failed")
    if m == 1:
        return SplitResult(True, (outside[0],))
    # Unknown phi sends outside[p] to sum_q phi[p][q] * dba[q]; the candidate
    # complement is spanned by outside[p] + phi(outside[p]). For p < r:
    # [c_p, c_r] + [c_p, phi(c_r)] - [c_r, phi(c_p)] = 0.
    unknowns = m * d
    rows = []
    rhs = []
    zero = L.field.zero()
    ad_out = [[L.bracket(c, v) for v in dba] for c in outside]
    for p in range(m):
        for r in range(p + 1, m):
            base = L.bracket(outside[p], outside[r])
            for comp in range(n):
                row = [zero] * unknowns
                for q in range(d):
                    row[r * d + q] = row[r * d + q] + ad_out[p][q][comp]
                    row[p * d + q] = row[p * d + q] - ad_out[r][q][comp]
                rows.append(row)
                rhs.append(-base[comp])
    sol = solve(rows, rhs)
    if sol is None:
        return SplitResult(False, None)
    complement = []
    for p in range(m):
        vec = list(outside[p])
        for q in range(d):
            coeff = sol[p * d + q]
            if coeff:
                vec = list(_vec_add(vec, _vec_scale(coeff, dba[q])))
        complement.append(tuple(vec))
    return SplitResult(True, tuple(complement))


class BianchiResult(NamedTuple):
    tag: str
    h: FieldElement | None
    unimodular: bool
    note: str | None


def _ad_trace(L: LieAlgebra, i: int) -> FieldElement:
    mat = L.ad_matrix(L.basis_vector(i))
    t = L.field.zero()
    for k in range(L.dim):
        t = t + mat[k][k]
    return t


def bianchi_classify(L: LieAlgebra) -> BianchiResult:
    """Name a 3-dimensional algebra within the solvable classification.

    Splits on the derived subalgebra's dimension; the 2-dimensional case is
    decided by the scale-invariant k = tr(M)^2 / det(M) of the adjoint action
    M of a vector outside the derived subalgebra, restricted to it.
    """
    if L.dim != 3:
        raise ValueError("three-dimensional classification needs dim = 3")
    unimodular = all(not _ad_trace(L, i) for i in range(3))
    flags = solvability_predicates(L)
    if not flags.solvable:
        return BianchiResult("NotSolvable", None, unimodular, None)
    dba, d = derived_subalgebra(L)
    if d == 0:
        return BianchiResult("I", None, unimodular, None)
    if d == 1:
        if flags.nilpotent:
            return BianchiResult("II", None, unimodular, None)
        return BianchiResult(
            "TypeIII",
            None,
            unimodular,
            "rank-1 derived subalgebra with non-nilpotent action",
        )
    if d != 2:
        raise AssertionError("solvable in dimension 3 with derived dimension 3")
    for a in dba:
        for b in dba:
            if not _is_zero_vec(L.bracket(a, b)):
                raise AssertionError("derived subalgebra of a solvable algebra not abelian")
    derived_rows = [list(v) for v in dba]
    e = None
    for i in range(3):
        if in_span(derived_rows, list(L.basis_vector(i))) is None:
            e = L.basis_vector(i)
            break
    if e is None:
        raise AssertionError("no basis vector outside a 2-dimensional derived subalgebra")
    cols = []
    for b in dba:
        img = L.bracket(e, b)
        coords = in_span(derived_rows, list(img))
        if coords is None:
            raise AssertionError("adjoint action does not preserve the derived subalgebra")
        cols.append(coords)
    m00, m01 = cols[0][0], cols[1][0]
    m10, m11 = cols[0][1], cols[1][1]
    t = m00 + m11
    dd = m00 * m11 - m01 * m10
    if not dd:
        raise AssertionError("adjoint action on the derived subalgebra is singular")
    k = t * t / dd
    sign_d = fe_sign(dd)
    if sign_d > 0:
        if not t:
            return BianchiResult(
                "VII",
                None,
                unimodular,
                "unimodular rotation type: trace zero, no finite canonical parameter",
            )
        k4 = fe_sign(k - 4)
        if k4 == 0:
            half = t / 2
            shifted = [
                [m00 - half, m01],
                [m10, m11 - half],
            ]
            r = rank(shifted)
            if r == 0:
                return BianchiResult("V", None, unimodular, None)
            return BianchiResult("IV", None, unimodular, None)
        if k4 < 0:
            radicand = (4 - k) / k
            s = sqrt_in_field(radicand)
            if s is None:
                return BianchiResult(
                    "VII",
                    None,
                    unimodular,
                    "canonical parameter exists but its square root is not "
                    "expressible in the coefficient field",
                )
            if fe_sign(s) < 0:
                s = -s
            return BianchiResult("VII", s, unimodular, None)
    return _classify_vi(L.field, k, unimodular)


def _classify_vi(field, k, unimodular) -> BianchiResult:
    """Pick the canonical parameter h with (1+h)^2 / h = k, |h| <= 1, h != 0."""
    radicand = k * k - 4 * k
    s = sqrt_in_field(radicand)
    if s is None:
        return BianchiResult(
            "VI",
            None,
            unimodular,
            "canonical parameter exists but its square root is not "
            "expressible in the coefficient field",
        )
    roots = [((k - 2) + s) / 2, ((k - 2) - s) / 2]
    for h in roots:
        if fe_sign(h + 1) >= 0 and fe_sign(1 - h) > 0:
            return BianchiResult("VI", h, unimodular, None)
    for h in roots:
        if fe_sign(h + 1) == 0:
            return BianchiResult("VI", h, unimodular, None)
    raise AssertionError("no canonical representative among the parameter pair")


def build_bianchi_algebra(tag: str, h=None, field: NumberField | None = None) -> LieAlgebra:
    """Structure constants of the named 3-dimensional type.

    h is required for VI (h not 0 or 1) and VII (h not 0) and must be absent
    elsewhere. The coefficient field defaults to h's field, else the
    rationals.
    """
    if field is None:
        field = h.field if isinstance(h, FieldElement) else rational_field()
    needs_h = tag in ("VI", "VII")
    if needs_h:
        if h is None:
            raise ValueError(f"type {tag} needs the parameter h")
        h = _fe(field, h)
        if not h:
            raise ValueError(
                "h = 0 degenerates: type VI becomes TypeIII and type VII "
                "becomes type V; build those tags directly"
            )
        if tag == "VI" and h == 1:
            raise ValueError(
                "type VI with h = 1 has the type V brackets; build V instead"
            )
    elif h is not None:
        raise ValueError(f"type {tag} takes no parameter")
    one = field.one()
    if tag == "I":
        return LieAlgebra.from_brackets(field, 3, {})
    if tag == "II":
        return LieAlgebra.from_brackets(field, 3, {(0, 1): [0, 0, 1]})
    if tag == "TypeIII":
        return LieAlgebra.from_brackets(field, 3, {(0, 2): [1, 0, 0]})
    if tag == "IV":
        return LieAlgebra.from_brackets(
            field, 3, {(0, 2): [1, 0, 0], (1, 2): [1, 1, 0]}
        )
    if tag == "V":
        return LieAlgebra.from_brackets(
            field, 3, {(0, 2): [1, 0, 0], (1, 2): [0, 1, 0]}
        )
    if tag == "VI":
        return LieAlgebra.from_brackets(
            field, 3, {(0, 2): [one, field.zero(), field.zero()], (1, 2): [field.zero(), h, field.zero()]}
        )
    if tag == "VII":
        return LieAlgebra.from_brackets(
            field,
            3,
            {
                (0, 2): [one, -h, field.zero()],
                (1, 2): [h, one, field.zero()],
            },
        )
    raise ValueError(f"unknown or non-buildable tag {tag!r}")


def change_basis(L: LieAlgebra, matrix) -> LieAlgebra:
    """Transport structure constants to the basis given by matrix columns."""
    n = L.dim
    p = [[_fe(L.field, matrix[i][j]) for j in range(n)] for i in range(n)]
    cols = [tuple(p[i][j] for i in range(n)) for j in range(n)]
    new_constants = []
    for i in range(n):
        row = []
        for j in range(n):
            v = L.bracket(cols[i], cols[j])
            coords = solve([r[:] for r in p], list(v))
            if coords is None:
                raise ValueError("basis change matrix is singular")
            row.append(tuple(coords))
        new_constants.append(tuple(row))
    return LieAlgebra(L.field, new_constants)


class SemidirectElement:
    """Element (v, M) of R^{n-1} x| R: translation v, invertible multiplier M."""

    __slots__ = ("v", "m")

    def __init__(self, v, m):
        size = len(m)
        if any(len(row) != size for row in m):
            raise ValueError("multiplier matrix must be square")
        if len(v) != size:
            raise ValueError("translation length does not match matrix size")
        vv = tuple(v)
        mm = tuple(tuple(row) for row in m)
        field = None
        for entry in list(vv) + [x for row in mm for x in row]:
            if isinstance(entry, FieldElement):
                field = entry.field
                break
        if field is None:
            raise ValueError("at least one entry must be a field element")
        vv = tuple(_fe(field, x) for x in vv)
        mm = tuple(tuple(_fe(field, x) for x in row) for row in mm)
        if not det([list(row) for row in mm], field.one()):
            raise ValueError("multiplier matrix must be invertible")
        object.__setattr__(self, "v", vv)
        object.__setattr__(self, "m", mm)

    def __setattr__(self, name, value):
        raise AttributeError("SemidirectElement is immutable")

    @property
    def field(self):
        return self.v[0].field

    def compose(self, other: "SemidirectElement") -> "SemidirectElement":
        size = len(self.v)
        mv = tuple(
            sum((self.m[i][j] * other.v[j] for j in range(size)), self.field.zero())
            for i in range(size)
        )
        mm = [
            [
                sum(
                    (self.m[i][k] * other.m[k][j] for k in range(size)),
                    self.field.zero(),
                )
                for j in range(size)
            ]
            for i in range(size)
        ]
        return SemidirectElement(_vec_add(self.v, mv), mm)

    __mul__ = compose

    def inverse(self) -> "SemidirectElement":
        size = len(self.v)
        rows = [list(row) for row in self.m]
        inv_cols = []
        for j in range(size):
            unit = [
                self.field.one() if i == j else self.field.zero() for i in range(size)
            ]
            col = solve([r[:] for r in rows], unit)
            if col is None:
                raise AssertionError("invertible matrix failed to invert")
            inv_cols.append(col)
        minv = [[inv_cols[j][i] for j in range(size)] for i in range(size)]
        w = tuple(
            -sum((minv[i][j] * self.v[j] for j in range(size)), self.field.zero())
            for i in range(size)
        )
        return SemidirectElement(w, minv)

    def __eq__(self, other):
        if not isinstance(other, SemidirectElement):
            return NotImplemented
        return self.v == other.v and self.m == other.m

    def __repr__(self):
        return f"SemidirectElement(v={self.v}, m={self.m})"


class AdUnitCheckResult(NamedTuple):
    all_units: bool
    factors: tuple
    characteristic: Poly

    def __bool__(self):
        return self.all_units


def split_metabelian_ad_unit_check(matrix) -> AdUnitCheckResult:
    """Are all eigenvalues of the multiplier matrix algebraic units?

    The characteristic polynomial must have rational coefficients; it is
    factored over the rationals and every irreducible factor must be monic
    with integer coefficients and constant term of absolute value 1. The
    per-factor verdicts are returned alongside the overall answer.
    """
    size = len(matrix)
    if size > 4:
        raise ValueError("unit check is limited to matrices of size <= 4")
    if any(len(row) != size for row in matrix):
        raise ValueError("matrix must be square")
    flat = [x for row in matrix for x in row]
    field_entry = next((x for x in flat if isinstance(x, FieldElement)), None)
    if field_entry is None:
        rows = [[Fraction(x) for x in row] for row in matrix]
        coeffs = charpoly(rows, Fraction(1))
        rational_coeffs = list(coeffs)
    else:
        field = field_entry.field
        rows = [[_fe(field, x) for x in row] for row in matrix]
        coeffs = charpoly(rows, field.one())
        rational_coeffs = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if not c.is_rational():
                    raise ValueError(
                        "characteristic polynomial has irrational coefficients; "
                        "the unit check only covers rational characteristic data"
                    )
                rational_coeffs.append(c.as_rational())
            else:
                rational_coeffs.append(Fraction(c))
    p = Poly(rational_coeffs)
    if not p.coeffs[0]:
        raise ValueError("multiplier matrix is singular")
    _, parts = factor(p)
    reports = []
    all_units = True
    for f, mult in parts:
        ok = f.is_integral() and abs(f.coeffs[0]) == 1
        if not ok:
            all_units = False
        reports.append((f, mult, ok))
    return AdUnitCheckResult(all_units, tuple(reports), p)


class SolVerdict(NamedTuple):
    non_homogeneous: bool
    obstruction: FieldElement
    obstruction_minimal_polynomial: Poly
    notes: tuple


def build_sol_holonomy(mu: FieldElement, eps: FieldElement):
    """Generators of the four-element holonomy family inside Sol.

    mu is the diagonal multiplier (an algebraic unit, positive under the
    embedding); eps is the extra translation length. The verdict inspects
    mu * eps: when it fails to be an algebraic unit the family cannot be
    homogeneous.
    """
    if not isinstance(mu, FieldElement) or not isinstance(eps, FieldElement):
        raise TypeError("mu and eps must be field elements")
    if mu.field != eps.field:
        raise FieldMismatchError("mu and eps must share a field")
    field = mu.field
    if not eps:
        raise ValueError("eps must be nonzero")
    if fe_sign(mu) <= 0:
        raise ValueError("mu must be positive under the embedding")
    if not is_algebraic_unit(mu):
        raise ValueError("mu must be an algebraic unit")
    one, zero = field.one(), field.zero()
    tau = SemidirectElement(
        (zero, zero), [[mu, zero], [zero, mu.inverse()]]
    )
    sigma1 = SemidirectElement((one, zero), [[one, zero], [zero, one]])
    sigma2 = SemidirectElement((zero, one), [[one, zero], [zero, one]])
    rho = SemidirectElement((eps, zero), [[one, zero], [zero, one]])
    obstruction = mu * eps
    obs_min = minimal_polynomial(obstruction)
    unit = is_algebraic_unit(obstruction)
    notes = (
        "the translation rho acts unipotently under the literal adjoint "
        "action; the reported obstruction multiplies the dilation factor "
        "by the translation length, which is the quantity the homogeneity "
        "argument constrains",
    )
    verdict = SolVerdict(not unit, obstruction, obs_min, notes)
    return [tau, sigma1, sigma2, rho], verdict
