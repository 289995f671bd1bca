"""Seeded random builders for package objects, shared across test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from quatnull import CommutingPoint, Polynomial, Quaternion


def rand_fraction(rng: random.Random, max_num: int = 10, max_den: int = 10) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def rand_quaternion(rng: random.Random, max_num: int = 10, max_den: int = 10) -> Quaternion:
    return Quaternion(*(rand_fraction(rng, max_num, max_den) for _ in range(4)))


def rand_nonzero_quaternion(rng: random.Random, max_num: int = 10, max_den: int = 10) -> Quaternion:
    while True:
        q = rand_quaternion(rng, max_num, max_den)
        if q:
            return q


def rand_complex_quaternion(rng: random.Random, max_num: int = 10, max_den: int = 10) -> Quaternion:
    """A quaternion in the span of 1 and i."""
    return Quaternion(rand_fraction(rng, max_num, max_den), rand_fraction(rng, max_num, max_den))


def rand_monomial(rng: random.Random, nvars: int, max_degree: int = 3) -> tuple[int, ...]:
    mono = [0] * nvars
    for _ in range(rng.randint(0, max_degree)):
        if nvars:
            mono[rng.randrange(nvars)] += 1
    return tuple(mono)


def rand_poly(
    rng: random.Random,
    nvars: int,
    max_degree: int = 3,
    max_terms: int = 4,
    coeff=rand_quaternion,
    max_num: int = 10,
    max_den: int = 10,
) -> Polynomial:
    terms: dict[tuple[int, ...], Quaternion] = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = rand_monomial(rng, nvars, max_degree)
        c = coeff(rng, max_num=max_num, max_den=max_den)
        terms[mono] = terms.get(mono, Quaternion()) + c
    return Polynomial(nvars, terms)


def rand_nonzero_poly(rng: random.Random, nvars: int, **kw) -> Polynomial:
    while True:
        f = rand_poly(rng, nvars, **kw)
        if f:
            return f


def rand_complex_poly(rng: random.Random, nvars: int, **kw) -> Polynomial:
    kw.setdefault("coeff", rand_complex_quaternion)
    return rand_poly(rng, nvars, **kw)


def rand_commuting_point(rng: random.Random, nvars: int, max_num: int = 5) -> CommutingPoint:
    """Coordinates drawn from one commuting family r + s*u, u a pure direction."""
    u = Quaternion(0, rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(-2, 2))
    coords = []
    for _ in range(nvars):
        r = rand_fraction(rng, max_num, max_num)
        s = rand_fraction(rng, max_num, max_num)
        coords.append(Quaternion(r) + s * u)
    return CommutingPoint(coords)


def rand_complex_point(rng: random.Random, nvars: int, max_num: int = 5) -> CommutingPoint:
    return CommutingPoint(
        [rand_complex_quaternion(rng, max_num, max_num) for _ in range(nvars)]
    )
