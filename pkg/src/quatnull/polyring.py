"""Polynomials over the quaternions with central indeterminates.

Variables commute with everything; coefficients do not commute with each
other.  Every polynomial is kept in canonical form with its coefficient
collected on the LEFT of the monomial, which is always possible because the
variables are central.  Left evaluation at commuting points and the product
rule for such evaluations live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .quaternions import ONE, ZERO, Quaternion, as_quaternion, commutes, conjugate_by

Monomial = tuple[int, ...]


class VariableCountMismatchError(Exception):
    """Operands live in polynomial rings with different variable counts."""

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"variable counts differ: {left} vs {right}")


class NonCommutingPointError(Exception):
    """A tuple of coordinates is not a commuting point.

    Carries the indices of the first offending pair.
    """

    def __init__(self, first_index: int, second_index: int):
        self.first_index = first_index
        self.second_index = second_index
        super().__init__(
            f"coordinates {first_index} and {second_index} do not commute"
        )


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    # central variables: exponent vectors just add
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


@dataclass(frozen=True, slots=True)
class MonomialOrder:
    """A total well-order on monomials, compatible with multiplication.

    kind is one of 'degrevlex', 'deglex', 'lex'.  `priority`, when given, is
    a permutation of the variable indices listed from most significant to
    least; None means declaration order.
    """

    kind: str = "degrevlex"
    priority: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("degrevlex", "deglex", "lex"):
            raise ValueError(f"unknown monomial order kind: {self.kind!r}")
        if self.priority is not None:
            perm = tuple(self.priority)
            if sorted(perm) != list(range(len(perm))):
                raise ValueError("priority must be a permutation of 0..n-1")
            object.__setattr__(self, "priority", perm)

    def key(self, mono: Monomial):
        """Sort key; larger key means larger monomial."""
        seq = mono
        if self.priority is not None:
            if len(self.priority) != len(mono):
                raise ValueError("priority permutation length != variable count")
            seq = tuple(mono[p] for p in self.priority)
        if self.kind == "lex":
            return seq
        deg = sum(seq)
        if self.kind == "deglex":
            return (deg, seq)
        # degrevlex: higher degree first, ties broken by the smallest
        # exponent on the least significant variable (reversed, negated).
        return (deg, tuple(-e for e in reversed(seq)))

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)

    def extended(self) -> "MonomialOrder":
        """The same order family with one fresh variable appended last."""
        if self.priority is None:
            return self
        return MonomialOrder(self.kind, self.priority + (len(self.priority),))


DEGREVLEX = MonomialOrder("degrevlex")
DEGLEX = MonomialOrder("deglex")
LEX = MonomialOrder("lex")


class Polynomial:
    """Sparse polynomial in ``nvars`` central variables over the quaternions.

    Terms map exponent tuples to nonzero quaternion coefficients.  Instances
    are immutable by convention: no method mutates ``terms`` after
    construction, so values can be shared freely.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        if nvars < 0:
            raise ValueError("variable count must be non-negative")
        collected: dict[Monomial, Quaternion] = {}
        if terms:
            for mono, raw in terms.items():
                mono = tuple(mono)
                if len(mono) != nvars or any(e < 0 for e in mono):
                    raise ValueError(f"bad exponent vector {mono} for {nvars} variables")
                coeff = as_quaternion(raw)
                if mono in collected:
                    coeff = collected[mono] + coeff
                if coeff:
                    collected[mono] = coeff
                elif mono in collected:
                    del collected[mono]
        self.nvars: int = nvars
        self.terms: dict[Monomial, Quaternion] = collected

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, value: object, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: as_quaternion(value)})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(ONE, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        mono = tuple(1 if m == index else 0 for m in range(nvars))
        return cls(nvars, {mono: ONE})

    # -- ring operations ------------------------------------------------------

    def _check_nvars(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise VariableCountMismatchError(self.nvars, other.nvars)

    def __add__(self, other: object) -> "Polynomial":
        other = _coerce_poly(other, self.nvars)
        if other is None:
            return NotImplemented
        self._check_nvars(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            total = out.get(mono, ZERO) + coeff
            if total:
                out[mono] = total
            elif mono in out:
                del out[mono]
        return _raw(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Polynomial":
        other = _coerce_poly(other, self.nvars)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "Polynomial":
        other = _coerce_poly(other, self.nvars)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "Polynomial":
        return _raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_nvars(other)
            out: dict[Monomial, Quaternion] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    mono = mono_mul(m1, m2)
                    coeff = c1 * c2  # coefficient order preserved
                    total = out.get(mono, ZERO) + coeff
                    if total:
                        out[mono] = total
                    elif mono in out:
                        del out[mono]
            return _raw(self.nvars, out)
        if isinstance(other, (Quaternion, int, Fraction)):
            return right_scalar_mul(self, as_quaternion(other))
        return NotImplemented

    def __rmul__(self, other: object) -> "Polynomial":
        # scalar * polynomial; Quaternion.__mul__ defers to us here
        if isinstance(other, (Quaternion, int, Fraction)):
            return left_scalar_mul(as_quaternion(other), self)
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers require a non-negative integer")
        out = Polynomial.one(self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Quaternion, int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # mutable dict inside; equality is structural

    # -- inspection -----------------------------------------------------------

    def degree(self) -> int | None:
        """Total degree, or None for the zero polynomial (never -1)."""
        if not self.terms:
            return None
        return max(mono_degree(m) for m in self.terms)

    def degree_in(self, index: int) -> int | None:
        if not self.terms:
            return None
        return max(m[index] for m in self.terms)

    def coefficient(self, mono: Monomial) -> Quaternion:
        return self.terms.get(tuple(mono), ZERO)

    def constant_coefficient(self) -> Quaternion:
        return self.terms.get((0,) * self.nvars, ZERO)

    def is_constant(self) -> bool:
        return all(mono_degree(m) == 0 for m in self.terms)

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = DEGREVLEX) -> Quaternion:
        return self.terms[self.leading_monomial(order)]

    def leading_term(self, order: MonomialOrder = DEGREVLEX) -> tuple[Monomial, Quaternion]:
        mono = self.leading_monomial(order)
        return mono, self.terms[mono]

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Monomial, Quaternion]]:
        """Terms in descending monomial order; the canonical reading order."""
        return sorted(self.terms.items(), key=lambda it: order.key(it[0]), reverse=True)

    def __str__(self) -> str:
        from .textio import print_poly  # deferred: textio imports this module

        return print_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self})"


def _raw(nvars: int, terms: dict[Monomial, Quaternion]) -> Polynomial:
    """Internal constructor skipping re-validation; terms must be clean."""
    p = Polynomial.__new__(Polynomial)
    p.nvars = nvars
    p.terms = terms
    return p


def _coerce_poly(value: object, nvars: int) -> Polynomial | None:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (Quaternion, int, Fraction)):
        return Polynomial.constant(value, nvars)
    return None


def left_scalar_mul(a: object, f: Polynomial) -> Polynomial:
    """a*f with the scalar multiplied onto each coefficient from the left."""
    a = as_quaternion(a)
    if not a:
        return Polynomial.zero(f.nvars)
    # H has no zero divisors, so no term can vanish
    return _raw(f.nvars, {m: a * c for m, c in f.terms.items()})


def right_scalar_mul(f: Polynomial, a: object) -> Polynomial:
    """f*a, rewritten term by term: c*x^alpha*a = (c*a)*x^alpha."""
    a = as_quaternion(a)
    if not a:
        return Polynomial.zero(f.nvars)
    return _raw(f.nvars, {m: c * a for m, c in f.terms.items()})


class CommutingPoint:
    """A point of H^n whose coordinates pairwise commute.

    Validation is eager: construction fails with NonCommutingPointError on
    the first offending pair, so downstream evaluation never has to check.
    """

    __slots__ = ("coordinates",)

    def __init__(self, coordinates: Iterable[object]):
        coords = tuple(as_quaternion(c) for c in coordinates)
        for r in range(len(coords)):
            for s in range(r + 1, len(coords)):
                if not commutes(coords[r], coords[s]):
                    raise NonCommutingPointError(r, s)
        self.coordinates: tuple[Quaternion, ...] = coords

    def __len__(self) -> int:
        return len(self.coordinates)

    def __iter__(self) -> Iterator[Quaternion]:
        return iter(self.coordinates)

    def __getitem__(self, index: int) -> Quaternion:
        return self.coordinates[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CommutingPoint):
            return NotImplemented
        return self.coordinates == other.coordinates

    __hash__ = None

    def __str__(self) -> str:
        return ", ".join(str(c) for c in self.coordinates)

    def __repr__(self) -> str:
        return f"CommutingPoint(({self}))"


def evaluate(f: Polynomial, p: CommutingPoint) -> Quaternion:
    """Left evaluation F(p) = sum of c_alpha * p^alpha.

    The power products are well defined because the coordinates commute;
    this is the unique constant with F - F(p) in the left ideal generated
    by the x_m - p_m.
    """
    if f.nvars != len(p):
        raise VariableCountMismatchError(f.nvars, len(p))
    # cache coordinate powers up to the largest exponent used
    powers: list[list[Quaternion]] = []
    for m in range(f.nvars):
        top = max((mono[m] for mono in f.terms), default=0)
        row = [ONE]
        for _ in range(top):
            row.append(row[-1] * p[m])
        powers.append(row)
    total = ZERO
    for mono, coeff in f.terms.items():
        prod = ONE
        for m, e in enumerate(mono):
            if e:
                prod = prod * powers[m][e]
        total = total + coeff * prod
    return total


def conjugate_point(b: Quaternion, p: CommutingPoint) -> CommutingPoint:
    """The point b*p*b^-1, conjugating every coordinate; again commuting."""
    b = as_quaternion(b)
    if not b:
        raise ZeroDivisionError("cannot conjugate by zero")
    return CommutingPoint(conjugate_by(b, c) for c in p)


def eval_product_formula(f: Polynomial, g: Polynomial, p: CommutingPoint) -> Quaternion:
    """(F*G)(p) computed without expanding the product.

    Equals 0 when G(p) = 0, and otherwise F(G(p)*p*G(p)^-1) * G(p).  The
    trailing factor G(p) is required: with constant F = c the left-hand side
    is c*G(p), and only the trailing-factor form reproduces that.
    """
    if f.nvars != g.nvars:
        raise VariableCountMismatchError(f.nvars, g.nvars)
    gp = evaluate(g, p)
    if not gp:
        return ZERO
    return evaluate(f, conjugate_point(gp, p)) * gp


def adjoin_variable(f: Polynomial) -> Polynomial:
    """Reinterpret f in one more variable; the new last variable is unused."""
    return _raw(f.nvars + 1, {m + (0,): c for m, c in f.terms.items()})


def y_coefficients(f: Polynomial) -> list[Polynomial]:
    """Decompose by powers of the LAST variable.

    Returns [f_0, ..., f_D] with f = sum of f_m * y^m, every f_m free of y
    and living in one fewer variable.  The zero polynomial yields [0].
    """
    if f.nvars == 0:
        raise ValueError("no variable to decompose by")
    n = f.nvars - 1
    top = max((m[-1] for m in f.terms), default=0)
    buckets: list[dict[Monomial, Quaternion]] = [{} for _ in range(top + 1)]
    for mono, coeff in f.terms.items():
        buckets[mono[-1]][mono[:-1]] = coeff
    return [_raw(n, b) for b in buckets]
