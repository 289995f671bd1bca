"""Text formats: parsing and canonical printing.

One grammar covers polynomials, quaternion literals and points:

    expr   := sign? term (sign term)*          sign: '+' | '-'
    term   := factor ('*'? factor)*            juxtaposition multiplies
    factor := atom ('^' natural)?
    atom   := natural ('/' natural)? | 'i' | 'j' | 'k' | variable | '(' expr ')'

'i', 'j', 'k' are reserved and can never be variable names.  Factor order is
preserved during parsing (coefficients do not commute); the result is then
normalized to canonical left-coefficient form by the polynomial arithmetic
itself.  No decimals: rationals are written 'p/q'.

Printing is canonical: terms in descending monomial order, positive rational
coefficients bare with the sign absorbed into the separator, every other
coefficient as a parenthesized quaternion literal.  parse(print(f)) == f.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groebner import LeftIdeal, buchberger
from .nullstellensatz import Certificate
from .polyring import (
    DEGREVLEX,
    CommutingPoint,
    MonomialOrder,
    Polynomial,
)
from .quaternions import Quaternion

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_RESERVED = ("i", "j", "k")


class ParseError(Exception):
    """Syntax or semantic error with a source position.

    line and column are 1-based and always point inside (or one past the
    end of) the offending line.
    """

    def __init__(self, message: str, line: int, col: int, expected: str | None = None):
        self.message = message
        self.line = line
        self.col = col
        self.expected = expected
        tail = f" (expected {expected})" if expected else ""
        super().__init__(f"line {line}, column {col}: {message}{tail}")


class UnknownVariableError(ParseError):
    pass


class ZeroDenominatorError(ParseError):
    pass


@dataclass(frozen=True)
class ExpressionSource:
    """A piece of text together with the variable names it may mention."""

    text: str
    variables: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        validate_variables(self.variables)


def validate_variables(variables: Sequence[str]) -> None:
    seen = set()
    for name in variables:
        if not _IDENT.match(name):
            raise ValueError(f"invalid variable name: {name!r}")
        if name in _RESERVED:
            raise ValueError(f"variable name {name!r} is reserved")
        if name in seen:
            raise ValueError(f"duplicate variable name: {name!r}")
        seen.add(name)


def default_variables(n: int) -> tuple[str, ...]:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{m + 1}" for m in range(n))


# -- tokenizer ----------------------------------------------------------------

_OPS = "+-*/^(),"


@dataclass(frozen=True)
class _Token:
    kind: str  # 'number' | 'name' | one of _OPS | 'eof'
    text: str
    line: int
    col: int


def _tokenize(text: str, start_line: int = 1) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = start_line, 1
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch == "\n":
            line += 1
            col = 1
            pos += 1
            continue
        if ch in " \t\r":
            pos += 1
            col += 1
            continue
        if ch.isdigit():
            start = pos
            start_col = col
            while pos < len(text) and text[pos].isdigit():
                pos += 1
                col += 1
            tokens.append(_Token("number", text[start:pos], line, start_col))
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            start_col = col
            while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
                col += 1
            tokens.append(_Token("name", text[start:pos], line, start_col))
            continue
        if ch in _OPS:
            tokens.append(_Token(ch, ch, line, col))
            pos += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


# -- parser -------------------------------------------------------------------

_UNITS = {"i": Quaternion(0, 1), "j": Quaternion(0, 0, 1), "k": Quaternion(0, 0, 0, 1)}
_ATOM_STARTS = ("number", "name", "(")


class _Parser:
    def __init__(self, text: str, variables: Sequence[str], start_line: int = 1):
        self.variables = tuple(variables)
        self.nvars = len(self.variables)
        self.tokens = _tokenize(text, start_line)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"unexpected {_describe(tok)}", tok.line, tok.col, expected=what
            )
        return self.advance()

    def parse_expr(self) -> Polynomial:
        tok = self.peek()
        negate = False
        if tok.kind in ("+", "-"):
            self.advance()
            negate = tok.kind == "-"
        total = self.parse_term()
        if negate:
            total = -total
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            term = self.parse_term()
            total = total - term if op.kind == "-" else total + term
        return total

    def parse_term(self) -> Polynomial:
        product = self.parse_factor()
        while True:
            tok = self.peek()
            if tok.kind == "*":
                self.advance()
                product = product * self.parse_factor()
            elif tok.kind in _ATOM_STARTS:
                # juxtaposition, e.g. '3i' or '2x'
                product = product * self.parse_factor()
            else:
                return product

    def parse_factor(self) -> Polynomial:
        base = self.parse_atom()
        if self.peek().kind == "^":
            self.advance()
            tok = self.expect("number", "a natural number exponent")
            base = base ** int(tok.text)
        return base

    def parse_atom(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            value = Fraction(int(tok.text))
            if self.peek().kind == "/":
                self.advance()
                den = self.expect("number", "a denominator")
                if int(den.text) == 0:
                    raise ZeroDenominatorError(
                        "zero denominator in rational literal", den.line, den.col
                    )
                value = Fraction(int(tok.text), int(den.text))
            return Polynomial.constant(value, self.nvars)
        if tok.kind == "name":
            self.advance()
            if tok.text in _UNITS:
                return Polynomial.constant(_UNITS[tok.text], self.nvars)
            if tok.text in self.variables:
                return Polynomial.variable(self.variables.index(tok.text), self.nvars)
            raise UnknownVariableError(
                f"unknown variable {tok.text!r}", tok.line, tok.col,
                expected="one of " + ", ".join(self.variables) if self.variables else None,
            )
        if tok.kind == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect(")", "a closing parenthesis")
            return inner
        raise ParseError(
            f"unexpected {_describe(tok)}", tok.line, tok.col,
            expected="a number, i/j/k, a variable, or '('",
        )

    def finish(self) -> None:
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError(
                f"unexpected {_describe(tok)} after expression", tok.line, tok.col
            )


def _describe(tok: _Token) -> str:
    if tok.kind == "eof":
        return "end of input"
    return f"token {tok.text!r}"


def parse_poly(
    source: ExpressionSource | str,
    variables: Sequence[str] | None = None,
    start_line: int = 1,
) -> Polynomial:
    """Parse one polynomial expression; the whole text must be consumed."""
    if isinstance(source, ExpressionSource):
        text, variables = source.text, source.variables
    else:
        text = source
        variables = tuple(variables or ())
        validate_variables(variables)
    parser = _Parser(text, variables, start_line)
    poly = parser.parse_expr()
    parser.finish()
    return poly


def parse_quaternion(text: str) -> Quaternion:
    """Parse a quaternion literal such as '1/2 + 3i - 4/7k'."""
    poly = parse_poly(text, ())
    return poly.constant_coefficient()


def parse_point(text: str) -> CommutingPoint:
    """Parse a comma-separated list of quaternion literals into a point.

    Pairwise commutation is enforced by CommutingPoint itself; the
    NonCommutingPointError names the offending coordinate pair.
    """
    parser = _Parser(text, ())
    coords = [parser.parse_expr().constant_coefficient()]
    while parser.peek().kind == ",":
        parser.advance()
        coords.append(parser.parse_expr().constant_coefficient())
    parser.finish()
    return CommutingPoint(coords)


def parse_ideal_text(
    text: str, variables: Sequence[str], order: MonomialOrder = DEGREVLEX
) -> tuple[Polynomial, ...]:
    """Parse generator lines: one polynomial per line, '#' comments, blanks skipped."""
    validate_variables(variables)
    gens: list[Polynomial] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        gens.append(parse_poly(line, variables, start_line=lineno))
    return tuple(gens)


def parse_ideal_file(
    path: str, variables: Sequence[str], order: MonomialOrder = DEGREVLEX
) -> LeftIdeal:
    """Read a generator file and compute the ideal's basis right away."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    gens = parse_ideal_text(text, variables, order)
    return buchberger(gens, order, nvars=len(tuple(variables)))


# -- printing -----------------------------------------------------------------

def print_quaternion(q: Quaternion) -> str:
    return str(q)


def print_point(p: CommutingPoint) -> str:
    return ", ".join(str(c) for c in p)


def _monomial_text(mono: tuple[int, ...], variables: Sequence[str]) -> str:
    parts = []
    for name, e in zip(variables, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def print_poly(
    f: Polynomial,
    variables: Sequence[str] | None = None,
    order: MonomialOrder = DEGREVLEX,
) -> str:
    """Canonical text form; parse_poly inverts it exactly.

    Terms descend in the monomial order.  A positive rational coefficient
    prints bare (1 is dropped before variables) and a negative rational is
    folded into the separator sign; any coefficient that is not rational
    prints as a parenthesized quaternion literal after a '+'.
    """
    if variables is None:
        variables = default_variables(f.nvars)
    variables = tuple(variables)
    if len(variables) != f.nvars:
        raise ValueError(
            f"{f.nvars} variables required, {len(variables)} names given"
        )
    if not f:
        return "0"
    pieces: list[tuple[str, str]] = []  # (sign, body)
    for mono, coeff in f.sorted_terms(order):
        vars_text = _monomial_text(mono, variables)
        if coeff.is_real():
            r = coeff.w
            sign = "-" if r < 0 else "+"
            mag = abs(r)
            if vars_text:
                body = vars_text if mag == 1 else f"{mag}*{vars_text}"
            else:
                body = str(mag)
        else:
            sign = "+"
            body = f"({coeff})*{vars_text}" if vars_text else f"({coeff})"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = first_body if first_sign == "+" else f"-{first_body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# -- certificate documents ------------------------------------------------------

@dataclass(frozen=True)
class CertificateDocument:
    """A certificate plus the variable names needed to read its text form."""

    certificate: Certificate
    variables: tuple[str, ...]
    adjoined: str


def pick_adjoined_name(variables: Sequence[str]) -> str:
    if "y" not in variables:
        return "y"
    t = 0
    while f"y{t}" in variables:
        t += 1
    return f"y{t}"


def render_certificate(
    cert: Certificate,
    variables: Sequence[str],
    adjoined: str | None = None,
) -> str:
    """Stable line-oriented document; field order is fixed for diffing."""
    variables = tuple(variables)
    if adjoined is None:
        adjoined = pick_adjoined_name(variables)
    extended = variables + (adjoined,)
    lines = [
        "variables: " + ", ".join(variables),
        f"adjoined: {adjoined}",
        f"scalar: {cert.scalar}",
        f"N: {cert.N}",
    ]
    for m, (g_m, row) in enumerate(zip(cert.G, cert.cofactors)):
        lines.append(f"G[{m}]: {print_poly(g_m, variables)}")
        for j, c in enumerate(row):
            lines.append(f"G[{m}].cofactor[{j}]: {print_poly(c, variables)}")
    lines.append(f"H: {print_poly(cert.H, extended)}")
    lines.append(f"verified: {'true' if cert.verified else 'false'}")
    return "\n".join(lines) + "\n"


_COFACTOR_KEY = re.compile(r"G\[(\d+)\]\.cofactor\[(\d+)\]\Z")
_G_KEY = re.compile(r"G\[(\d+)\]\Z")


def parse_certificate(text: str) -> CertificateDocument:
    """Read a certificate document back into structured form."""
    fields: dict[str, str] = {}
    g_texts: dict[int, str] = {}
    cof_texts: dict[tuple[int, int], str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError("expected 'key: value'", lineno, 1)
        key, _, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        match = _COFACTOR_KEY.match(key)
        if match:
            cof_texts[int(match.group(1)), int(match.group(2))] = value
            continue
        match = _G_KEY.match(key)
        if match:
            g_texts[int(match.group(1))] = value
            continue
        fields[key] = value

    for required in ("variables", "adjoined", "scalar", "N", "H", "verified"):
        if required not in fields:
            raise ParseError(f"missing field {required!r}", 1, 1)

    variables = tuple(
        name.strip() for name in fields["variables"].split(",") if name.strip()
    )
    validate_variables(variables)
    adjoined = fields["adjoined"]
    validate_variables(variables + (adjoined,))
    scalar = parse_quaternion(fields["scalar"])
    big_n = int(fields["N"])
    g_list = tuple(
        parse_poly(g_texts.get(m, "0"), variables) for m in range(big_n + 1)
    )
    ngens = max((j + 1 for (_, j) in cof_texts), default=0)
    rows = tuple(
        tuple(
            parse_poly(cof_texts.get((m, j), "0"), variables)
            for j in range(ngens)
        )
        for m in range(big_n + 1)
    )
    h = parse_poly(fields["H"], variables + (adjoined,))
    verified = fields["verified"] == "true"
    cert = Certificate(
        scalar=scalar, N=big_n, G=g_list, cofactors=rows, H=h, verified=verified
    )
    return CertificateDocument(cert, variables, adjoined)
