"""Command-line front end.

Reads line-oriented documents declaring a number field plus one entity
(generator set, Lie algebra, element, query), runs one of the six commands
on it, and prints a report in human or machine form. Exit codes: 0 when the
question was decided, 1 for invalid input, 2 when the group falls outside
the classified types.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from .affine import AffineMap, GeneratorSet, NonCanonicalPresentation
from .classify import OutOfClassification, classify
from .classify import family_conjugate as _family_conjugate
from .liealg import (
    LieAlgebra,
    bianchi_classify,
    build_sol_holonomy,
    split_metabelian_ad_unit_check,
)
from .numfield import (
    FieldElement,
    NoRealEmbeddingError,
    NumberField,
    is_algebraic_integer,
    is_algebraic_unit,
    minimal_polynomial,
)
from .polys import Poly, UnsupportedDegreeError, format_terms

COMMANDS = ("classify", "unit", "bianchi", "conjugacy", "sol", "ad-check")

_COMMAND_ENTITY = {
    "classify": "ga",
    "unit": "unit",
    "bianchi": "algebra",
    "conjugacy": "conjugacy",
    "sol": "sol",
    "ad-check": "matrix",
}


class ParseError(ValueError):
    """Input rejection with a line/column location when known."""

    def __init__(self, message, line=None, column=None):
        location = ""
        if line is not None:
            location = f"line {line}"
            if column is not None:
                location += f", column {column}"
            location += ": "
        super().__init__(location + message)
        self.line = line
        self.column = column


# --- expression parsing -------------------------------------------------------


def _tokenize(text, line_no, col_offset):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(
            f"unexpected character {ch!r}", line_no, col_offset + i + 1
        )
    return tokens


class _ExprParser:
    """Recursive-descent evaluator over +, -, *, /, ^ and parentheses.

    The value domain is abstract: mk_const builds a value from a Fraction and
    mk_symbol from an identifier, and the values must support arithmetic.
    """

    def __init__(self, text, line_no, col_offset, mk_const, mk_symbol):
        self.tokens = _tokenize(text, line_no, col_offset)
        self.pos = 0
        self.line_no = line_no
        self.col_offset = col_offset
        self.mk_const = mk_const
        self.mk_symbol = mk_symbol

    def _peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def _take(self):
        tok = self._peek()
        if tok is not None:
            self.pos += 1
        return tok

    def _fail(self, message, tok=None):
        col = None
        if tok is not None:
            col = self.col_offset + tok[2] + 1
        raise ParseError(message, self.line_no, col)

    def parse(self):
        tok = self._peek()
        if tok is None:
            raise ParseError("empty expression", self.line_no)
        value = self._expr()
        tok = self._peek()
        if tok is not None:
            self._fail(f"unexpected trailing {tok[1]!r}", tok)
        return value

    def _expr(self):
        value = self._term()
        while True:
            tok = self._peek()
            if tok is None or tok[0] not in ("+", "-"):
                return value
            self._take()
            rhs = self._term()
            value = value + rhs if tok[0] == "+" else value - rhs

    def _term(self):
        value = self._factor()
        while True:
            tok = self._peek()
            if tok is None or tok[0] not in ("*", "/"):
                return value
            self._take()
            rhs = self._factor()
            try:
                value = value * rhs if tok[0] == "*" else value / rhs
            except ZeroDivisionError:
                self._fail("division by zero", tok)
            except TypeError:
                self._fail("operation not allowed here", tok)

    def _factor(self):
        tok = self._peek()
        if tok is not None and tok[0] in ("+", "-"):
            self._take()
            inner = self._factor()
            return inner if tok[0] == "+" else -inner
        value = self._atom()
        tok = self._peek()
        if tok is not None and tok[0] == "^":
            self._take()
            sign = 1
            tok2 = self._peek()
            if tok2 is not None and tok2[0] == "-":
                self._take()
                sign = -1
            tok2 = self._take()
            if tok2 is None or tok2[0] != "int":
                self._fail("exponent must be an integer", tok2 or tok)
            try:
                value = value ** (sign * int(tok2[1]))
            except (ValueError, ZeroDivisionError) as exc:
                self._fail(str(exc), tok2)
        return value

    def _atom(self):
        tok = self._take()
        if tok is None:
            raise ParseError("unexpected end of expression", self.line_no)
        if tok[0] == "int":
            return self.mk_const(Fraction(int(tok[1])))
        if tok[0] == "name":
            value = self.mk_symbol(tok[1])
            if value is None:
                self._fail(f"undeclared symbol {tok[1]!r}", tok)
            return value
        if tok[0] == "(":
            value = self._expr()
            closing = self._take()
            if closing is None or closing[0] != ")":
                self._fail("missing closing parenthesis", tok)
            return value
        self._fail(f"unexpected {tok[1]!r}", tok)


def _parse_field_poly(text, line_no, col_offset):
    """Parse the defining polynomial, returning (Poly, symbol)."""
    seen = []

    def mk_symbol(name):
        if name not in seen:
            seen.append(name)
        if len(seen) > 1:
            raise ParseError(
                f"defining polynomial uses two symbols "
                f"{seen[0]!r} and {seen[1]!r}",
                line_no,
            )
        return Poly.x()

    parser = _ExprParser(
        text, line_no, col_offset, lambda q: Poly.constant(q), mk_symbol
    )
    return parser.parse(), (seen[0] if seen else "t")


def _parse_element(text, field, line_no, col_offset):
    def mk_symbol(name):
        if name == field.symbol:
            return field.generator()
        return None

    parser = _ExprParser(
        text, line_no, col_offset, lambda q: field.rational(q), mk_symbol
    )
    return parser.parse()


class _SymVec:
    """Formal combination of basis symbols e1..en with field scalars."""

    __slots__ = ("scalar", "vec")

    def __init__(self, scalar, vec):
        self.scalar = scalar
        self.vec = tuple(vec)

    def _zip(self, other, op):
        return _SymVec(
            op(self.scalar, other.scalar),
            tuple(op(a, b) for a, b in zip(self.vec, other.vec)),
        )

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return _SymVec(-self.scalar, tuple(-a for a in self.vec))

    def _is_scalar(self):
        return not any(self.vec)

    def __mul__(self, other):
        if other._is_scalar():
            s = other.scalar
            return _SymVec(self.scalar * s, tuple(a * s for a in self.vec))
        if self._is_scalar():
            s = self.scalar
            return _SymVec(s * other.scalar, tuple(s * a for a in other.vec))
        raise TypeError("product of two basis combinations")

    def __truediv__(self, other):
        if not other._is_scalar():
            raise TypeError("division by a basis combination")
        if not other.scalar:
            raise ZeroDivisionError("division by zero")
        inv = other.scalar.inverse()
        return _SymVec(self.scalar * inv, tuple(a * inv for a in self.vec))

    def __pow__(self, n):
        if not self._is_scalar():
            raise TypeError("power of a basis combination")
        return _SymVec(self.scalar ** n, tuple(a * 0 for a in self.vec))


def _parse_bracket_value(text, field, dim, line_no, col_offset):
    zero = field.zero()

    def mk_const(q):
        return _SymVec(field.rational(q), (zero,) * dim)

    def mk_symbol(name):
        if name == field.symbol:
            return _SymVec(field.generator(), (zero,) * dim)
        m = re.fullmatch(r"e(\d+)", name)
        if m:
            k = int(m.group(1))
            if not 1 <= k <= dim:
                raise ParseError(
                    f"basis symbol e{k} outside dimension {dim}", line_no
                )
            vec = tuple(
                field.one() if i == k - 1 else zero for i in range(dim)
            )
            return _SymVec(zero, vec)
        return None

    value = _ExprParser(text, line_no, col_offset, mk_const, mk_symbol).parse()
    if value.scalar:
        raise ParseError(
            "bracket value must be a combination of basis vectors", line_no
        )
    return value.vec


# --- document model -----------------------------------------------------------


class InputDocument:
    """One parsed field declaration plus one entity."""

    __slots__ = ("field", "entity", "payload")

    def __init__(self, field, entity, payload):
        self.field = field
        self.entity = entity
        self.payload = payload

    def __eq__(self, other):
        if not isinstance(other, InputDocument):
            return NotImplemented
        return (
            self.field == other.field
            and self.field.symbol == other.field.symbol
            and self.entity == other.entity
            and self.payload == other.payload
        )

    def __repr__(self):
        return f"InputDocument(entity={self.entity})"


def _strip_comment(line):
    cut = line.find("#")
    if cut >= 0:
        return line[:cut]
    return line


_KEYED_LINES = {
    "conjugacy": ("lambda", "eps1", "eps2"),
    "sol": ("mu", "eps"),
}


def _split_keyed(rest, keys, line_no, base_offset):
    pattern = re.compile(r"(?:^|(?<=\s))(" + "|".join(keys) + r")=")
    matches = list(pattern.finditer(rest))
    if matches and rest[: matches[0].start()].strip():
        raise ParseError("unexpected text before the first key", line_no)
    found = {}
    for idx, m in enumerate(matches):
        key = m.group(1)
        if key in found:
            raise ParseError(f"duplicate {key}=", line_no)
        start = m.end()
        end = matches[idx + 1].start() if idx + 1 < len(matches) else len(rest)
        found[key] = (rest[start:end], base_offset + start)
    for key in keys:
        if key not in found:
            raise ParseError(f"missing {key}=", line_no)
    return found


def parse_input(text: str) -> InputDocument:
    """Parse exactly one document (no batch separators allowed)."""
    lines = text.splitlines()
    for i, line in enumerate(lines):
        if line.strip() == "---":
            raise ParseError("batch separator in a single-document parse", i + 1)
    return _parse_document(lines, 1)


def _parse_document(lines, first_line_no) -> InputDocument:
    field = None
    entity = None
    payload = None
    algebra_dim = None
    brackets = {}
    ga_maps = []
    matrix_rows = []

    def set_entity(kind, line_no):
        nonlocal entity
        if entity is not None and entity != kind:
            raise ParseError(
                f"document mixes {entity!r} and {kind!r} entities", line_no
            )
        entity = kind

    for offset, raw in enumerate(lines):
        line_no = first_line_no + offset
        line = _strip_comment(raw)
        if not line.strip():
            continue
        stripped = line.strip()
        indent = len(line) - len(line.lstrip())

        if stripped.startswith("field"):
            rest = stripped[len("field"):]
            if field is not None:
                raise ParseError("second field declaration", line_no)
            m = re.search(r"\broot\s+(\d+)\s*$", rest)
            if m is None:
                raise ParseError(
                    "field line needs a trailing 'root <index>'", line_no
                )
            root_1based = int(m.group(1))
            if root_1based < 1:
                raise ParseError("root index is 1-based", line_no)
            poly_text = rest[: m.start()]
            poly, symbol = _parse_field_poly(
                poly_text, line_no, indent + len("field")
            )
            try:
                field = NumberField(poly, root_1based - 1, symbol=symbol)
            except UnsupportedDegreeError as exc:
                raise ParseError(str(exc), line_no) from exc
            except ValueError as exc:
                message = str(exc)
                # Restate the constructor's 0-based root complaint in the
                # 1-based terms the input grammar uses.
                prefix = f"root index {root_1based - 1} out of range"
                if message.startswith(prefix):
                    message = f"root {root_1based} out of range" + message[len(prefix):]
                raise ParseError(message, line_no) from exc
            continue

        if field is None:
            raise ParseError(
                "the field declaration must come first", line_no
            )

        words = stripped.split(None, 1)
        head = words[0]
        rest = words[1] if len(words) > 1 else ""
        rest_offset = indent + line.lstrip().find(rest) if rest else indent

        if head == "ga":
            set_entity("ga", line_no)
            sub = rest.split(None, 1)
            if not sub or sub[0] != "gen":
                raise ParseError("expected 'ga gen a=... b=...'", line_no)
            body = sub[1] if len(sub) > 1 else ""
            parts = _split_keyed(body, ("a", "b"), line_no, 0)
            a = _parse_element(parts["a"][0], field, line_no, 0)
            b = _parse_element(parts["b"][0], field, line_no, 0)
            try:
                ga_maps.append(AffineMap(a, b))
            except ValueError as exc:
                raise ParseError(str(exc), line_no) from exc
            continue

        if head == "algebra":
            set_entity("algebra", line_no)
            m = re.fullmatch(r"dim\s+(\d+)", rest.strip())
            if m is None:
                raise ParseError("expected 'algebra dim <n>'", line_no)
            if algebra_dim is not None:
                raise ParseError("second dimension declaration", line_no)
            algebra_dim = int(m.group(1))
            if not 1 <= algebra_dim <= 6:
                raise ParseError("dimension must be between 1 and 6", line_no)
            continue

        if head == "bracket":
            set_entity("algebra", line_no)
            if algebra_dim is None:
                raise ParseError(
                    "'algebra dim <n>' must precede bracket lines", line_no
                )
            m = re.match(r"\s*(\d+)\s+(\d+)\s*=\s*", rest)
            if m is None:
                raise ParseError("expected 'bracket <i> <j> = <terms>'", line_no)
            i, j = int(m.group(1)), int(m.group(2))
            if not (1 <= i <= algebra_dim and 1 <= j <= algebra_dim):
                raise ParseError(
                    f"bracket indices must lie in 1..{algebra_dim}", line_no
                )
            if i == j:
                raise ParseError("bracket of a vector with itself is zero", line_no)
            if (i - 1, j - 1) in brackets or (j - 1, i - 1) in brackets:
                raise ParseError(f"duplicate bracket {i} {j}", line_no)
            vec = _parse_bracket_value(
                rest[m.end():], field, algebra_dim, line_no, 0
            )
            brackets[(i - 1, j - 1)] = vec
            continue

        if head == "unit":
            set_entity("unit", line_no)
            if payload is not None:
                raise ParseError("second unit query", line_no)
            payload = _parse_element(rest, field, line_no, rest_offset)
            continue

        if head == "conjugacy":
            set_entity("conjugacy", line_no)
            if payload is not None:
                raise ParseError("second conjugacy query", line_no)
            parts = _split_keyed(rest, _KEYED_LINES["conjugacy"], line_no, 0)
            payload = tuple(
                _parse_element(parts[k][0], field, line_no, 0)
                for k in _KEYED_LINES["conjugacy"]
            )
            continue

        if head == "sol":
            set_entity("sol", line_no)
            if payload is not None:
                raise ParseError("second sol query", line_no)
            parts = _split_keyed(rest, _KEYED_LINES["sol"], line_no, 0)
            payload = tuple(
                _parse_element(parts[k][0], field, line_no, 0)
                for k in _KEYED_LINES["sol"]
            )
            continue

        if head == "matrix":
            set_entity("matrix", line_no)
            sub = rest.split(None, 1)
            if not sub or sub[0] != "row":
                raise ParseError("expected 'matrix row <expr>, ...'", line_no)
            body = sub[1] if len(sub) > 1 else ""
            cells = body.split(",")
            if not any(cell.strip() for cell in cells):
                raise ParseError("empty matrix row", line_no)
            matrix_rows.append(
                tuple(
                    _parse_element(cell, field, line_no, 0) for cell in cells
                )
            )
            continue

        raise ParseError(f"unknown directive {head!r}", line_no)

    if field is None:
        raise ParseError("no field declaration found", first_line_no)
    if entity is None:
        raise ParseError("no entity declared after the field", first_line_no)

    if entity == "ga":
        if not ga_maps:
            raise ParseError("no generators declared", first_line_no)
        payload = tuple(ga_maps)
    elif entity == "algebra":
        if algebra_dim is None:
            raise ParseError("no dimension declared", first_line_no)
        payload = (algebra_dim, {k: tuple(v) for k, v in brackets.items()})
    elif entity == "matrix":
        if not matrix_rows:
            raise ParseError("no matrix rows declared", first_line_no)
        width = len(matrix_rows[0])
        if any(len(r) != width for r in matrix_rows) or width != len(matrix_rows):
            raise ParseError("matrix must be square", first_line_no)
        payload = tuple(matrix_rows)

    return InputDocument(field, entity, payload)


# --- document printing ---------------------------------------------------------


def _compact(value) -> str:
    return str(value).replace(" ", "")


def _format_bracket_vector(vec, dim) -> str:
    terms = []
    for k, coeff in enumerate(vec):
        if not coeff:
            continue
        if coeff == 1:
            terms.append(f"e{k + 1}")
        else:
            terms.append(f"({_compact(coeff)})*e{k + 1}")
    if not terms:
        return "0"
    return "+".join(terms)


def format_document(doc: InputDocument) -> str:
    """Canonical text for a document; parsing it back gives an equal document."""
    field = doc.field
    lines = [
        "field "
        + _compact(format_terms(field.defining.coeffs, field.symbol))
        + f" root {field.root_index + 1}"
    ]
    if doc.entity == "ga":
        for g in doc.payload:
            lines.append(f"ga gen a={_compact(g.a)} b={_compact(g.b)}")
    elif doc.entity == "unit":
        lines.append(f"unit {_compact(doc.payload)}")
    elif doc.entity == "conjugacy":
        lam, e1, e2 = doc.payload
        lines.append(
            f"conjugacy lambda={_compact(lam)} eps1={_compact(e1)} eps2={_compact(e2)}"
        )
    elif doc.entity == "sol":
        mu, eps = doc.payload
        lines.append(f"sol mu={_compact(mu)} eps={_compact(eps)}")
    elif doc.entity == "algebra":
        dim, brackets = doc.payload
        lines.append(f"algebra dim {dim}")
        for (i, j) in sorted(brackets):
            vec = brackets[(i, j)]
            lines.append(
                f"bracket {i + 1} {j + 1} = {_format_bracket_vector(vec, dim)}"
            )
    elif doc.entity == "matrix":
        for row in doc.payload:
            lines.append("matrix row " + ", ".join(_compact(x) for x in row))
    return "\n".join(lines) + "\n"


# --- reports -------------------------------------------------------------------


class Report:
    """Ordered key/value lines plus the process exit code."""

    __slots__ = ("pairs", "exit_code")

    def __init__(self, pairs, exit_code=0):
        self.pairs = list(pairs)
        self.exit_code = exit_code

    def render(self, fmt: str) -> str:
        out = []
        for key, value in self.pairs:
            if fmt == "machine":
                out.append(f"{key} = {value}")
            else:
                label = key.replace("_", " ").replace(".", " ")
                out.append(f"{label}: {value}")
        return "\n".join(out) + "\n"


def _fmt_value(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _error_report(reason: str, message: str, exit_code: int, diagnostics=()):
    pairs = [("status", "error"), ("reason", reason), ("detail", message)]
    for n, d in enumerate(diagnostics, start=1):
        pairs.append((f"diagnostic.{n}", d))
    return Report(pairs, exit_code)


def run_command(command: str, doc: InputDocument) -> Report:
    """Dispatch a command against a parsed document."""
    expected = _COMMAND_ENTITY.get(command)
    if expected is None:
        return _error_report("invalid-input", f"unknown command {command!r}", 1)
    if doc.entity != expected:
        return _error_report(
            "invalid-input",
            f"command {command!r} expects {expected!r} input, "
            f"got {doc.entity!r}",
            1,
        )
    handler = _HANDLERS[command]
    try:
        return handler(doc)
    except OutOfClassification as exc:
        return _error_report(
            "out-of-classification", str(exc), 2, exc.diagnostics
        )
    except NonCanonicalPresentation as exc:
        return _error_report("out-of-classification", str(exc), 2)
    except UnsupportedDegreeError as exc:
        return _error_report("invalid-input", str(exc), 1)
    except (ValueError, TypeError, ZeroDivisionError, NoRealEmbeddingError) as exc:
        return _error_report("invalid-input", str(exc), 1)


def _run_classify(doc: InputDocument) -> Report:
    report = classify(GeneratorSet(list(doc.payload)))
    np = report.presentation
    pairs = [
        ("status", "ok"),
        ("command", "classify"),
        ("primary_type", report.primary_type.tag),
        ("matching_types", ",".join(report.all_matching_types)),
        ("polycyclic", _fmt_value(report.polycyclic)),
        ("extension_class_trivial", _fmt_value(report.extension_class_trivial)),
        ("homogeneous", _fmt_value(report.homogeneous)),
        ("dilation", _fmt_value(None if np.dilation is None else np.dilation.a)),
        ("translations", ",".join(_compact(c) for c in np.translations) or "none"),
        ("scaling_witness", _fmt_value(np.scaling_witness)),
    ]
    for n, (condition, value) in enumerate(report.witnesses, start=1):
        pairs.append((f"witness.{n}", f"{condition}: {_fmt_value(value)}"))
    for n, text in enumerate(report.warnings, start=1):
        pairs.append((f"warning.{n}", text))
    return Report(pairs)


def _run_unit(doc: InputDocument) -> Report:
    u = doc.payload
    mp = minimal_polynomial(u)
    integer = is_algebraic_integer(u)
    unit = bool(u) and is_algebraic_unit(u)
    pairs = [
        ("status", "ok"),
        ("command", "unit"),
        ("element", str(u)),
        ("minimal_polynomial", str(mp)),
        ("algebraic_integer", _fmt_value(integer)),
        ("algebraic_unit", _fmt_value(unit)),
    ]
    return Report(pairs)


def _run_bianchi(doc: InputDocument) -> Report:
    dim, brackets = doc.payload
    algebra = LieAlgebra.from_brackets(doc.field, dim, dict(brackets))
    result = bianchi_classify(algebra)
    pairs = [
        ("status", "ok"),
        ("command", "bianchi"),
        ("bianchi", result.tag),
        ("h", _fmt_value(result.h)),
        ("unimodular", _fmt_value(result.unimodular)),
    ]
    if result.note:
        pairs.append(("note", result.note))
    return Report(pairs)


def _run_conjugacy(doc: InputDocument) -> Report:
    lam, eps1, eps2 = doc.payload
    verdict = _family_conjugate(lam, eps1, eps2)
    pairs = [
        ("status", "ok"),
        ("command", "conjugacy"),
        ("conjugate", _fmt_value(verdict)),
    ]
    return Report(pairs)


def _run_sol(doc: InputDocument) -> Report:
    mu, eps = doc.payload
    generators, verdict = build_sol_holonomy(mu, eps)
    pairs = [
        ("status", "ok"),
        ("command", "sol"),
        ("generators", str(len(generators))),
        ("non_homogeneous", _fmt_value(verdict.non_homogeneous)),
        ("obstruction", str(verdict.obstruction)),
        (
            "obstruction_minimal_polynomial",
            str(verdict.obstruction_minimal_polynomial),
        ),
    ]
    for n, note in enumerate(verdict.notes, start=1):
        pairs.append((f"note.{n}", note))
    return Report(pairs)


def _run_ad_check(doc: InputDocument) -> Report:
    matrix = [list(row) for row in doc.payload]
    result = split_metabelian_ad_unit_check(matrix)
    pairs = [
        ("status", "ok"),
        ("command", "ad-check"),
        ("all_units", _fmt_value(result.all_units)),
        ("characteristic_polynomial", str(result.characteristic)),
    ]
    for n, (f, mult, ok) in enumerate(result.factors, start=1):
        verdict = "unit" if ok else "not-unit"
        pairs.append((f"factor.{n}", f"({f}) ^ {mult} : {verdict}"))
    return Report(pairs)


_HANDLERS = {
    "classify": _run_classify,
    "unit": _run_unit,
    "bianchi": _run_bianchi,
    "conjugacy": _run_conjugacy,
    "sol": _run_sol,
    "ad-check": _run_ad_check,
}


# --- batch driver ---------------------------------------------------------------


def _split_batch(text: str):
    """Chunks of (lines, first_line_no) separated by bare '---' lines."""
    chunks = []
    current = []
    start = 1
    for i, line in enumerate(text.splitlines(), start=1):
        if line.strip() == "---":
            chunks.append((current, start))
            current = []
            start = i + 1
        else:
            current.append(line)
    chunks.append((current, start))
    nonempty = []
    for lines, start in chunks:
        if any(_strip_comment(l).strip() for l in lines):
            nonempty.append((lines, start))
    return nonempty


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def main(argv=None) -> int:
    parser = _ArgumentParser(
        prog="foliation",
        description="Exact classification of line-affine holonomy groups "
        "and three-dimensional solvable Lie algebras.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("file", help="input document path")
    parser.add_argument(
        "--format",
        choices=("human", "machine"),
        default="human",
        dest="fmt",
    )
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: cannot decode {args.file}: {exc}", file=sys.stderr)
        return 1

    chunks = _split_batch(text)
    if not chunks:
        print("error: empty input", file=sys.stderr)
        return 1

    exit_code = 0
    blocks = []
    for lines, start in chunks:
        try:
            doc = _parse_document(lines, start)
            report = run_command(args.command, doc)
        except ParseError as exc:
            report = _error_report("invalid-input", str(exc), 1)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            report = _error_report("invalid-input", str(exc), 1)
        except OutOfClassification as exc:
            report = _error_report(
                "out-of-classification", str(exc), 2, exc.diagnostics
            )
        except Exception as exc:  # totality: fuzzed input must never crash
            report = _error_report(
                "invalid-input", f"internal rejection: {exc}", 1
            )
        blocks.append(report.render(args.fmt))
        if exit_code == 0 and report.exit_code:
            exit_code = report.exit_code
    sys.stdout.write("---\n".join(blocks))
    return exit_code


def main_entry():
    sys.exit(main())
