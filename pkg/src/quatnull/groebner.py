"""Left Groebner bases over the quaternions.

Buchberger's algorithm carries over to H[x1,...,xn] because the variables
are central and the coefficients form a division ring: every nonzero
polynomial can be made monic by LEFT-multiplying with the inverse of its
leading coefficient, after which S-polynomials and reduction look exactly
like the commutative case on the monomial level.  What does NOT carry over
is any argument that relies on coefficients commuting, so the classical
coprime-leading-monomial shortcut is off by default.

Every basis element drags along an exact cofactor row expressing it as a
left combination of the ORIGINAL generators; membership tests compose their
reduction quotients with that matrix, so every positive answer ships with a
machine-checkable witness.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .polyring import (
    DEGREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    left_scalar_mul,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


@dataclass(frozen=True)
class ReductionTrace:
    """Outcome of one division: f = sum(quotients[t] * divisors[t]) + remainder.

    No monomial of the remainder is divisible by any divisor's leading
    monomial.  Quotients are aligned with the divisor sequence.
    """

    quotients: tuple[Polynomial, ...]
    remainder: Polynomial


def _monomial_poly(mono: Monomial, nvars: int) -> Polynomial:
    return Polynomial(nvars, {mono: 1})


def normal_form(
    f: Polynomial,
    divisors: Sequence[Polynomial],
    order: MonomialOrder = DEGREVLEX,
) -> ReductionTrace:
    """Left-reduce f by the divisors, with full tail reduction.

    Whenever the leading monomial of some divisor g divides the current
    leading monomial x^alpha with coefficient c, subtract
    (c * lc(g)^-1) * x^(alpha-beta) * g.  The first divisor in sequence
    order wins, which keeps the procedure deterministic.  Irreducible
    leading terms migrate to the remainder and reduction continues below
    them, so the remainder is fully reduced.
    """
    divisors = list(divisors)
    for g in divisors:
        if not g:
            raise ValueError("zero divisor in reduction basis")
    heads = [(g.leading_monomial(order), g.leading_coefficient(order)) for g in divisors]
    quotients = [Polynomial.zero(f.nvars) for _ in divisors]
    remainder = Polynomial.zero(f.nvars)
    work = f
    while work:
        mono, coeff = work.leading_term(order)
        for t, (head, head_coeff) in enumerate(heads):
            if mono_divides(head, mono):
                shift = mono_div(mono, head)
                q_term = Polynomial(f.nvars, {shift: coeff * head_coeff.inverse()})
                quotients[t] = quotients[t] + q_term
                work = work - q_term * divisors[t]
                break
        else:
            term = Polynomial(f.nvars, {mono: coeff})
            remainder = remainder + term
            work = work - term
    return ReductionTrace(tuple(quotients), remainder)


class LeftIdeal:
    """A left ideal given by generators, with its Groebner basis attached.

    `basis` is monic and inter-reduced; `cofactors[t][j]` left-multiplies
    generator j in the exact representation of basis element t, so

        basis[t] = sum over j of cofactors[t][j] * generators[j].
    """

    __slots__ = ("generators", "order", "nvars", "basis", "cofactors")

    def __init__(
        self,
        generators: tuple[Polynomial, ...],
        order: MonomialOrder,
        nvars: int,
        basis: tuple[Polynomial, ...],
        cofactors: tuple[tuple[Polynomial, ...], ...],
    ):
        self.generators = generators
        self.order = order
        self.nvars = nvars
        self.basis = basis
        self.cofactors = cofactors

    def __repr__(self) -> str:
        gens = "; ".join(str(g) for g in self.generators)
        return f"LeftIdeal<{gens}>"


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    cofactors: tuple[Polynomial, ...] | None
    remainder: Polynomial


def _rep_scale(scalar: Polynomial, row: list[Polynomial]) -> list[Polynomial]:
    return [scalar * entry for entry in row]


def _rep_sub(a: list[Polynomial], b: list[Polynomial]) -> list[Polynomial]:
    return [x - y for x, y in zip(a, b)]


def buchberger(
    generators: Sequence[Polynomial],
    order: MonomialOrder = DEGREVLEX,
    nvars: int | None = None,
    use_coprime_criterion: bool = False,
) -> LeftIdeal:
    """Compute a monic, inter-reduced left Groebner basis with cofactors.

    Pair selection follows the normal strategy: the pair whose lcm is
    smallest in the monomial order is processed first, FIFO on ties.  The
    run is fully deterministic for a fixed input order.

    `use_coprime_criterion` skips pairs with coprime leading monomials.
    This is sound in the commutative case; over H its proof does not apply
    verbatim, so it stays off unless explicitly requested (tests compare
    both settings on random inputs).
    """
    gens = tuple(generators)
    if nvars is None:
        if not gens:
            raise ValueError("cannot infer variable count from an empty generator list")
        nvars = gens[0].nvars
    for g in gens:
        if g.nvars != nvars:
            raise ValueError("generators live in different polynomial rings")

    zero = Polynomial.zero(nvars)
    # working basis: (monic polynomial, leading monomial, cofactor row)
    work: list[tuple[Polynomial, Monomial, list[Polynomial]]] = []
    pairs: list[tuple[object, int, int, int]] = []
    counter = 0

    def push_pairs(new_index: int) -> None:
        nonlocal counter
        new_head = work[new_index][1]
        for t in range(new_index):
            lcm = mono_lcm(work[t][1], new_head)
            if use_coprime_criterion and lcm == mono_mul(work[t][1], new_head):
                continue
            heapq.heappush(pairs, (order.key(lcm), counter, t, new_index))
            counter += 1

    def append(poly: Polynomial, row: list[Polynomial]) -> None:
        inv = poly.leading_coefficient(order).inverse()
        monic = left_scalar_mul(inv, poly)
        inv_poly = Polynomial.constant(inv, nvars)
        work.append((monic, monic.leading_monomial(order), _rep_scale(inv_poly, row)))
        push_pairs(len(work) - 1)

    for j, g in enumerate(gens):
        if not g:
            continue
        row = [zero] * len(gens)
        row[j] = Polynomial.one(nvars)
        append(g, row)

    while pairs:
        _, _, t1, t2 = heapq.heappop(pairs)
        g1, head1, row1 = work[t1]
        g2, head2, row2 = work[t2]
        lcm = mono_lcm(head1, head2)
        shift1 = _monomial_poly(mono_div(lcm, head1), nvars)
        shift2 = _monomial_poly(mono_div(lcm, head2), nvars)
        s_poly = shift1 * g1 - shift2 * g2
        s_row = _rep_sub(_rep_scale(shift1, row1), _rep_scale(shift2, row2))
        trace = normal_form(s_poly, [w[0] for w in work], order)
        if trace.remainder:
            for t, q in enumerate(trace.quotients):
                if q:
                    s_row = _rep_sub(s_row, _rep_scale(q, work[t][2]))
            append(trace.remainder, s_row)

    _inter_reduce(work, order, nvars)
    work.sort(key=lambda item: order.key(item[1]), reverse=True)

    return LeftIdeal(
        generators=gens,
        order=order,
        nvars=nvars,
        basis=tuple(w[0] for w in work),
        cofactors=tuple(tuple(w[2]) for w in work),
    )


def _inter_reduce(
    work: list[tuple[Polynomial, Monomial, list[Polynomial]]],
    order: MonomialOrder,
    nvars: int,
) -> None:
    """Reduce every element against the others until nothing moves.

    Keeps the Groebner property (leading monomials that survive still
    generate the same leading ideal) and keeps cofactor rows exact.
    """
    changed = True
    while changed:
        changed = False
        for t in range(len(work)):
            others = work[:t] + work[t + 1:]
            if not others:
                continue
            poly, _, row = work[t]
            trace = normal_form(poly, [o[0] for o in others], order)
            if trace.remainder == poly:
                continue
            changed = True
            new_row = row
            for s, q in enumerate(trace.quotients):
                if q:
                    new_row = _rep_sub(new_row, _rep_scale(q, others[s][2]))
            if trace.remainder:
                inv = trace.remainder.leading_coefficient(order).inverse()
                monic = left_scalar_mul(inv, trace.remainder)
                inv_poly = Polynomial.constant(inv, nvars)
                work[t] = (monic, monic.leading_monomial(order), _rep_scale(inv_poly, new_row))
            else:
                del work[t]
            break


def is_member(f: Polynomial, ideal: LeftIdeal) -> MembershipResult:
    """Decide membership in the left ideal; ship cofactors on success.

    The returned cofactors are over the ORIGINAL generators: reduction
    quotients against the basis are composed with the basis cofactor
    matrix.
    """
    trace = normal_form(f, ideal.basis, ideal.order)
    if trace.remainder:
        return MembershipResult(False, None, trace.remainder)
    out = [Polynomial.zero(ideal.nvars) for _ in ideal.generators]
    for t, q in enumerate(trace.quotients):
        if q:
            for j, c in enumerate(ideal.cofactors[t]):
                if c:
                    out[j] = out[j] + q * c
    return MembershipResult(True, tuple(out), trace.remainder)


def is_unit_ideal(ideal: LeftIdeal) -> bool:
    """True iff the reduced basis is {1}; its cofactor row then writes 1 as
    a left combination of the original generators."""
    return len(ideal.basis) == 1 and ideal.basis[0] == Polynomial.one(ideal.nvars)
