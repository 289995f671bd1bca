"""Exact quaternion arithmetic over arbitrary-precision rationals.

The division ring H is modelled with `fractions.Fraction` components, so
every operation is exact and equality is decidable.  This is the coefficient
ring for the whole package; no floating point appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence, Union

Scalar = Union[int, Fraction]


class NoRationalUnitPureError(Exception):
    """A unit pure quaternion exists in the required direction, but not with
    rational components.

    `direction` is a pure quaternion spanning the line that was searched and
    `scale` is the rational r > 0 such that direction/sqrt(r) would have
    square-norm 1.
    """

    def __init__(self, direction: "Quaternion", scale: Fraction):
        self.direction = direction
        self.scale = scale
        super().__init__(
            f"no rational point of square-norm 1 on span({direction}); "
            f"scaling by 1/sqrt({scale}) would succeed"
        )


def _fmt_component(value: Fraction, unit: str, first: bool) -> str:
    sign = "-" if value < 0 else "+"
    mag = abs(value)
    body = unit if (mag == 1 and unit) else f"{mag}{unit}"
    if first:
        return body if sign == "+" else f"-{body}"
    return f" {sign} {body}"


@dataclass(frozen=True, slots=True)
class Quaternion:
    """A quaternion w + x*i + y*j + z*k with rational components.

    Multiplication follows i^2 = j^2 = k^2 = ijk = -1 and is not
    commutative; all other ring axioms hold exactly.
    """

    w: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    def __init__(self, w: Scalar = 0, x: Scalar = 0, y: Scalar = 0, z: Scalar = 0):
        object.__setattr__(self, "w", Fraction(w))
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))
        object.__setattr__(self, "z", Fraction(z))

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: object) -> "Quaternion":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Quaternion":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __rsub__(self, other: object) -> "Quaternion":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other: object) -> "Quaternion":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self, other
        return Quaternion(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z,
            a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x,
        )

    def __rmul__(self, other: object) -> "Quaternion":
        # Only central scalars reach this path, so the order is immaterial.
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __truediv__(self, other: object) -> "Quaternion":
        # Division is only defined by central (rational) scalars; dividing by
        # a general quaternion is ambiguous in a noncommutative ring.
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division by zero scalar")
        inv = Fraction(1, 1) / Fraction(other)
        return Quaternion(self.w * inv, self.x * inv, self.y * inv, self.z * inv)

    def __pow__(self, n: int) -> "Quaternion":
        if not isinstance(n, int) or n < 0:
            raise ValueError("quaternion powers require a non-negative integer")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.w or self.x or self.y or self.z)

    # -- involutions and norms ----------------------------------------------

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_squared(self) -> Fraction:
        return self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2

    def inverse(self) -> "Quaternion":
        """Two-sided inverse conj(q)/normsq(q); raises on zero."""
        n = self.norm_squared()
        if n == 0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        c = self.conjugate()
        return Quaternion(c.w / n, c.x / n, c.y / n, c.z / n)

    def is_real(self) -> bool:
        return not (self.x or self.y or self.z)

    def is_rational(self) -> bool:
        return self.is_real()

    def imaginary_part(self) -> "Quaternion":
        return Quaternion(0, self.x, self.y, self.z)

    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.w, self.x, self.y, self.z)

    def __str__(self) -> str:
        parts = []
        for value, unit in zip(self.components(), ("", "i", "j", "k")):
            if value:
                parts.append(_fmt_component(value, unit, first=not parts))
        return "".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Quaternion({self})"


def _coerce(value: object) -> Quaternion | None:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, Fraction)):
        return Quaternion(value)
    return None


def as_quaternion(value: object) -> Quaternion:
    q = _coerce(value)
    if q is None:
        raise TypeError(f"cannot interpret {value!r} as a quaternion")
    return q


ZERO = Quaternion()
ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)


def commutes(a: Quaternion, b: Quaternion) -> bool:
    """True iff a*b == b*a."""
    return a * b == b * a


def conjugate_by(b: Quaternion, q: Quaternion) -> Quaternion:
    """b*q*b^-1; multiplicative in q and fixes the rationals."""
    return b * q * b.inverse()


def is_unit_pure(b: Quaternion) -> bool:
    """True iff b^2 == -1, i.e. b is pure imaginary of square-norm 1."""
    return b.w == 0 and b.norm_squared() == 1


def rational_sqrt(r: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None."""
    if r < 0:
        return None
    num, den = r.numerator, r.denominator
    sn, sd = isqrt(num), isqrt(den)
    if sn * sn == num and sd * sd == den:
        return Fraction(sn, sd)
    return None


def _primitive(q: Quaternion) -> Quaternion:
    """Scale q to integer components with gcd 1 and first nonzero > 0."""
    comps = q.components()
    mult = 1
    for c in comps:
        mult = mult * c.denominator // gcd(mult, c.denominator)
    ints = [int(c * mult) for c in comps]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-u for u in ints]
            break
    return Quaternion(*ints)


def _unit_pure_on_line(v: Quaternion) -> Quaternion | None:
    s = rational_sqrt(v.norm_squared())
    if s is None or s == 0:
        return None
    return v / s


def find_commuting_unit_pure(
    q: Quaternion, centralizer_basis: Sequence[Quaternion]
) -> Quaternion:
    """Find b with b^2 = -1 such that b*q commutes with every basis element.

    The basis elements must pairwise commute (they are the coordinates of a
    commuting point).  Writing C for their common centralizer, the solutions
    b are exactly the unit pure elements of C*q^-1, so the search computes
    that subspace, intersects it with the pure-imaginary hyperplane and looks
    for a rational point of square-norm 1.

    Raises ZeroDivisionError when q = 0 and NoRationalUnitPureError when the
    intersection is nonempty but carries no rational unit vector.
    """
    if not q:
        raise ZeroDivisionError("q must be nonzero")
    basis = list(centralizer_basis)
    for r in range(len(basis)):
        for s in range(r + 1, len(basis)):
            if not commutes(basis[r], basis[s]):
                raise ValueError(
                    f"centralizer basis elements {r} and {s} do not commute"
                )

    non_real = [a for a in basis if not a.is_real()]
    if not non_real:
        # The centralizer is all of H, so any unit pure quaternion works.
        return I

    u = _primitive(non_real[0].imaginary_part())
    q_inv = q.inverse()
    span = [q_inv, u * q_inv]

    # Intersect span{q^-1, u*q^-1} with the pure-imaginary subspace.
    pivot = next((t for t, v in enumerate(span) if v.w != 0), None)
    if pivot is None:
        candidates = span
    else:
        pw = span[pivot].w
        candidates = [
            v - (v.w / pw) * span[pivot]
            for t, v in enumerate(span) if t != pivot
        ]

    directions = [_primitive(v) for v in candidates if v]
    for v in directions:
        b = _unit_pure_on_line(v)
        if b is not None:
            return b

    if len(directions) == 2:
        # The whole plane is pure; its norm form is diagonal in this basis,
        # so scan small primitive combinations for a rational square norm.
        v1, v2 = directions
        for alpha in range(0, 21):
            for beta in range(-20, 21):
                if (alpha, beta) in ((0, 0), (1, 0), (0, 1), (0, -1)):
                    continue
                if gcd(alpha, abs(beta)) != 1:
                    continue
                b = _unit_pure_on_line(alpha * v1 + beta * v2)
                if b is not None:
                    return b

    v = directions[0]
    raise NoRationalUnitPureError(v, v.norm_squared())
