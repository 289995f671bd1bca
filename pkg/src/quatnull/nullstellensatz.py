"""Vanishing conditions and membership certificates for left ideals.

The central question: given a left ideal I of H[x1,...,xn] and a polynomial
F, does (aF)^N lie in I + I(aF) + I(aF)^2 + ... + I(aF)^N for a scalar a and
some exponent N >= 1?  `condition_holds` decides it for fixed (a, N) by a
Groebner membership computation, `search_N` scans exponents, and
`rabinowitsch_certificate` derives the witness identity

    (aF)^N  =  G_0*(aF)^N + G_1*(aF)^(N-1) + ... + G_N,   each G_m in I,

by adjoining a central variable y and the polynomial (aF)y - 1, then reading
the G_m off the cofactors of 1 in the enlarged ideal.  Certificates are
re-verified by direct polynomial expansion before being returned: an
unverifiable certificate is a hard error, never a return value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .groebner import LeftIdeal, buchberger, is_member, is_unit_ideal
from .polyring import (
    CommutingPoint,
    Polynomial,
    adjoin_variable,
    evaluate,
    left_scalar_mul,
    right_scalar_mul,
    y_coefficients,
)
from .quaternions import Quaternion, as_quaternion, is_unit_pure


class NotUnitIdealError(Exception):
    """The Rabinowitsch ideal J_a is proper, so no certificate was extracted.

    This is reported neutrally: it is evidence against the vanishing
    condition for this particular scalar, not a disproof of anything.
    """


class VerificationFailedError(Exception):
    """An extracted identity failed symbolic re-verification.

    This signals an implementation bug and must abort the computation; a
    certificate is never returned unverified.
    """


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of one membership check of (aF)^N in I + I(aF) + ... + I(aF)^N.

    When the condition holds, `witnesses[m]` is a member of I and

        (aF)^N = sum over m of witnesses[m] * (aF)^m,

    with `witness_cofactors[m][j]` expressing witnesses[m] over generator j
    of I.
    """

    holds: bool
    N: int
    scalar: Quaternion
    witnesses: tuple[Polynomial, ...] | None
    witness_cofactors: tuple[tuple[Polynomial, ...], ...] | None


@dataclass(frozen=True)
class Certificate:
    """Verified witness data for the vanishing condition at scalar a.

    Invariant (enforced at construction time by the generator): the exact
    identity (aF)^N = sum over m of G[m] * (aF)^(N-m) holds, G has length
    N+1, and cofactors[m][j] expresses G[m] as a left combination of the
    ideal generators.  H is the cofactor of (aF)y - 1 in the identity
    H*((aF)y - 1) + sum G_m y^m = 1, kept for auditability; it lives in
    n+1 variables.
    """

    scalar: Quaternion
    N: int
    G: tuple[Polynomial, ...]
    cofactors: tuple[tuple[Polynomial, ...], ...]
    H: Polynomial
    verified: bool


@dataclass(frozen=True)
class ScalarOutcome:
    scalar: Quaternion
    N: int | None
    holds: bool


@dataclass(frozen=True)
class ScalarFamilyReport:
    """Per-scalar condition results over a finite family.

    `note` spells out the quantifier gap: the underlying condition ranges
    over ALL scalars (or all unit pure ones), so a finite family passing
    establishes nothing universal.
    """

    outcomes: tuple[ScalarOutcome, ...]
    note: str


FAMILY_NOTE = (
    "finite scalar family only: passing every listed scalar does not "
    "establish the condition for all of H"
)


def zero_locus_contains(ideal: LeftIdeal, p: CommutingPoint) -> bool:
    """True iff p lies in the zero locus V(I).

    Checking generators suffices: left combinations of polynomials that
    vanish at p vanish at p as well, by additivity and the product rule
    (the trailing factor kills the product when the right factor dies)."""
    return all(not evaluate(g, p) for g in ideal.generators)


def vanishes_on(f: Polynomial, points: Iterable[CommutingPoint]) -> bool:
    """True iff f evaluates to zero at every listed point."""
    return all(not evaluate(f, p) for p in points)


def _scaled_power_chain(ideal: LeftIdeal, t: Polynomial, N: int) -> list[Polynomial]:
    """Generators g_j * t^m for 0 <= m <= N, flat index m*len(gens) + j."""
    gens_out: list[Polynomial] = []
    power = Polynomial.one(ideal.nvars)
    for _ in range(N + 1):
        for g in ideal.generators:
            gens_out.append(g * power)
        power = power * t
    return gens_out


def condition_holds(
    ideal: LeftIdeal, f: Polynomial, a: object, N: int
) -> ConditionReport:
    """Decide (aF)^N in I + I(aF) + ... + I(aF)^N for the given a and N.

    The sum of left ideals is itself the left ideal generated by all
    g_j*(aF)^m, so one Groebner membership test decides the question and
    its cofactors regroup into the witnesses.  a = 0 holds vacuously
    (0 is in I) with zero witnesses.
    """
    a = as_quaternion(a)
    if N < 1:
        raise ValueError("N must be at least 1")
    zero = Polynomial.zero(ideal.nvars)
    ngens = len(ideal.generators)
    if not a:
        return ConditionReport(
            holds=True,
            N=N,
            scalar=a,
            witnesses=(zero,) * (N + 1),
            witness_cofactors=((zero,) * ngens,) * (N + 1),
        )
    t = left_scalar_mul(a, f)
    target = t ** N
    enlarged = buchberger(
        _scaled_power_chain(ideal, t, N), ideal.order, nvars=ideal.nvars
    )
    result = is_member(target, enlarged)
    if not result.member:
        return ConditionReport(False, N, a, None, None)
    witnesses = []
    witness_cofactors = []
    for m in range(N + 1):
        block = result.cofactors[m * ngens:(m + 1) * ngens]
        w = zero
        for q, g in zip(block, ideal.generators):
            w = w + q * g
        witnesses.append(w)
        witness_cofactors.append(tuple(block))
    return ConditionReport(True, N, a, tuple(witnesses), tuple(witness_cofactors))


def search_N(
    ideal: LeftIdeal, f: Polynomial, a: object, N_max: int
) -> ConditionReport | None:
    """Smallest N <= N_max for which the condition holds, or None.

    None is NOT a disproof; no bound on N is known, so the search is only
    as good as its cap."""
    if N_max < 1:
        raise ValueError("N_max must be at least 1")
    for N in range(1, N_max + 1):
        report = condition_holds(ideal, f, a, N)
        if report.holds:
            return report
    return None


def check_scalar_family(
    ideal: LeftIdeal,
    f: Polynomial,
    scalars: Sequence[object],
    N_max: int = 8,
) -> ScalarFamilyReport:
    """Run search_N for each scalar in a finite family.

    The report carries an explicit note that a finite family cannot settle
    the universally quantified condition."""
    outcomes = []
    for raw in scalars:
        a = as_quaternion(raw)
        if not a:
            report = condition_holds(ideal, f, a, 1)
            outcomes.append(ScalarOutcome(a, report.N, True))
            continue
        found = search_N(ideal, f, a, N_max)
        if found is None:
            outcomes.append(ScalarOutcome(a, None, False))
        else:
            outcomes.append(ScalarOutcome(a, found.N, True))
    return ScalarFamilyReport(tuple(outcomes), FAMILY_NOTE)


def rabinowitsch_certificate(
    ideal: LeftIdeal, f: Polynomial, a: object
) -> Certificate:
    """Extract and verify a vanishing certificate via the adjoined variable.

    Builds J = <g_1, ..., g_r, (aF)y - 1> in n+1 variables with y appended
    last and the same order family.  If J is proper, raises
    NotUnitIdealError.  Otherwise the cofactor row of 1 gives

        1 = H*((aF)y - 1) + sum over j of R_j * g_j,

    and splitting each R_j by powers of y yields G_m = sum_j R_{j,m} * g_j
    with 1 = H*((aF)y - 1) + sum_m G_m y^m.  Comparing y-coefficients and
    telescoping shows (aF)^N = sum_m G_m (aF)^(N-m) for any N exceeding the
    y-degree of H; we take the smallest admissible N (at least 1) and then
    re-verify the identity by direct expansion before returning.
    """
    a = as_quaternion(a)
    if not a:
        raise ValueError("certificate scalar must be nonzero")
    n = ideal.nvars
    t = left_scalar_mul(a, f)
    y = Polynomial.variable(n, n + 1)
    rab = adjoin_variable(t) * y - Polynomial.one(n + 1)
    j_gens = [adjoin_variable(g) for g in ideal.generators] + [rab]
    enlarged = buchberger(j_gens, ideal.order.extended(), nvars=n + 1)
    if not is_unit_ideal(enlarged):
        raise NotUnitIdealError(f"enlarged ideal is proper for scalar {a}")

    row = enlarged.cofactors[0]
    h = row[-1]
    per_gen = [y_coefficients(r) for r in row[:-1]]

    depth = max((len(cs) for cs in per_gen), default=1)
    h_ydeg = h.degree_in(n)
    N = max(1, depth - 1, (h_ydeg + 1) if h_ydeg is not None else 0)

    zero = Polynomial.zero(n)
    g_list: list[Polynomial] = []
    cof_rows: list[tuple[Polynomial, ...]] = []
    for m in range(N + 1):
        g_m = zero
        cof_row = []
        for cs in per_gen:
            c = cs[m] if m < len(cs) else zero
            cof_row.append(c)
        for c, g in zip(cof_row, ideal.generators):
            g_m = g_m + c * g
        g_list.append(g_m)
        cof_rows.append(tuple(cof_row))

    lhs = t ** N
    rhs = Polynomial.zero(n)
    power = Polynomial.one(n)  # (aF)^(N-m) built from m = N downwards
    for m in range(N, -1, -1):
        rhs = rhs + g_list[m] * power
        power = power * t
    if lhs != rhs:
        raise VerificationFailedError(
            f"certificate identity failed at scalar {a}, N={N}"
        )
    for m, (g_m, cof_row) in enumerate(zip(g_list, cof_rows)):
        rebuilt = zero
        for c, g in zip(cof_row, ideal.generators):
            rebuilt = rebuilt + c * g
        if rebuilt != g_m:
            raise VerificationFailedError(f"cofactor row for G_{m} does not re-expand")

    return Certificate(
        scalar=a,
        N=N,
        G=tuple(g_list),
        cofactors=tuple(cof_rows),
        H=h,
        verified=True,
    )


@dataclass(frozen=True)
class CheckLine:
    description: str
    passed: bool


@dataclass(frozen=True)
class ExampleReport:
    checks: tuple[CheckLine, ...]
    ok: bool


def example_suite() -> ExampleReport:
    """The worked one-variable example: I = <x - i>, F = 1.

    V(I) = {i}, and F = 1 does not vanish there, so no scalar-free
    certificate can exist.  Yet for every unit pure b outside {i, -i} the
    degree-one identity

        b*F = -(b*c*b)*(x - i) + (b*c)*(x - i)*(b*F),   c = (bi - ib)^-1,

    holds, so the condition with scalar b succeeds at N = 1.  At b = i or
    b = -i the coefficient c is undefined (bi - ib = 0) and the condition
    fails for every N up to 8.  Each assertion is checked symbolically and
    reported as a pass/fail line.
    """
    from .quaternions import I as QI, J as QJ, K as QK
    from fractions import Fraction

    checks: list[CheckLine] = []
    x = Polynomial.variable(0, 1)
    gen = x - QI
    ideal = buchberger([gen])
    f_one = Polynomial.one(1)
    point_i = CommutingPoint([QI])

    b_good = [QJ, QK, Quaternion(0, Fraction(3, 5), Fraction(4, 5), 0)]
    for b in b_good:
        ok = is_unit_pure(b)
        checks.append(CheckLine(f"b = {b}: b^2 = -1", ok))

        c = (b * QI - QI * b).inverse()
        lhs = Polynomial.constant(b, 1)
        rhs = left_scalar_mul(-(b * c * b), gen) + left_scalar_mul(
            b * c, right_scalar_mul(gen, b)
        )
        checks.append(CheckLine(f"b = {b}: displayed identity holds", lhs == rhs))

        report = condition_holds(ideal, f_one, b, 1)
        checks.append(CheckLine(f"b = {b}: condition holds at N = 1", report.holds))

    for b in (QI, -QI):
        try:
            (b * QI - QI * b).inverse()
            undefined = False
        except ZeroDivisionError:
            undefined = True
        checks.append(CheckLine(f"b = {b}: coefficient undefined (bi = ib)", undefined))
        found = search_N(ideal, f_one, b, 8)
        checks.append(CheckLine(f"b = {b}: condition fails for all N <= 8", found is None))

    checks.append(
        CheckLine("zero locus of <x - i> contains (i)", zero_locus_contains(ideal, point_i))
    )
    checks.append(
        CheckLine("x - i vanishes on {(i)}", vanishes_on(gen, [point_i]))
    )
    checks.append(
        CheckLine("F = 1 does not vanish on {(i)}", not vanishes_on(f_one, [point_i]))
    )

    return ExampleReport(tuple(checks), all(c.passed for c in checks))
