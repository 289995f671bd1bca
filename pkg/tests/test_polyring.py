"""Polynomial arithmetic, monomial orders, evaluation, and the product rule."""

import random

import pytest

from quatnull import (
    DEGLEX,
    DEGREVLEX,
    I,
    J,
    K,
    LEX,
    CommutingPoint,
    MonomialOrder,
    NonCommutingPointError,
    Polynomial,
    Quaternion,
    VariableCountMismatchError,
    adjoin_variable,
    buchberger,
    conjugate_point,
    eval_product_formula,
    evaluate,
    is_member,
    left_scalar_mul,
    right_scalar_mul,
    y_coefficients,
)

from gen import (
    rand_commuting_point,
    rand_complex_point,
    rand_complex_poly,
    rand_poly,
    rand_quaternion,
)
from oracles import (
    c2_mul,
    cp_eval,
    cp_from_package,
    c2_from_quat,
    from_package_quat,
    op_eval,
    from_package_poly,
)

X = Polynomial.variable(0, 1)


def test_construction_collects_and_drops_zeros():
    f = Polynomial(1, {(0,): I, (1,): Quaternion(0)})
    assert f.terms == {(0,): I}
    g = Polynomial(2, {(1, 0): 1}) + Polynomial(2, {(1, 0): -1})
    assert not g
    assert g.degree() is None  # zero polynomial: no degree, never -1


def test_bad_exponent_vectors_rejected():
    with pytest.raises(ValueError):
        Polynomial(2, {(1,): I})
    with pytest.raises(ValueError):
        Polynomial(1, {(-1,): I})


def test_mul_left_coefficient_example():
    # j * (x - i) = jx + k
    f = Polynomial.constant(J, 1) * (X - I)
    assert f == Polynomial(1, {(1,): J, (0,): K})


def test_mul_cross_terms_cancel():
    # (x + i)(x - i) = x^2 + 1 because x is central
    assert (X + I) * (X - I) == X * X + 1


def test_scalar_sides_differ():
    f = X + J
    assert left_scalar_mul(I, f) == Polynomial(1, {(1,): I, (0,): I * J})
    assert right_scalar_mul(f, I) == Polynomial(1, {(1,): I, (0,): J * I})
    assert left_scalar_mul(I, f) != right_scalar_mul(f, I)
    # operator sugar matches the named functions
    assert I * f == left_scalar_mul(I, f)
    assert f * I == right_scalar_mul(f, I)


def test_left_scalar_mul_by_zero():
    assert left_scalar_mul(0, X + J) == Polynomial.zero(1)
    assert right_scalar_mul(X + J, 0) == Polynomial.zero(1)


def test_variable_count_mismatch():
    with pytest.raises(VariableCountMismatchError):
        X + Polynomial.variable(0, 2)
    with pytest.raises(VariableCountMismatchError):
        X * Polynomial.one(2)
    with pytest.raises(VariableCountMismatchError):
        evaluate(X, CommutingPoint([I, -I]))


def test_centrality_of_variables():
    rng = random.Random(21)
    for _ in range(100):
        n = rng.randint(1, 3)
        f = rand_poly(rng, n)
        for m in range(n):
            xm = Polynomial.variable(m, n)
            assert xm * f == f * xm


def test_power():
    assert (X + I) ** 0 == Polynomial.one(1)
    assert (X + I) ** 2 == X * X + left_scalar_mul(2 * I, X) - 1
    with pytest.raises(ValueError):
        X ** -1


def test_monomial_orders_disagree_where_expected():
    # x^3 vs x*y*z in three variables
    a, b = (3, 0, 0), (1, 1, 1)
    assert LEX.greater(a, b)
    assert DEGLEX.greater(a, b)
    assert DEGREVLEX.greater(a, b)
    # degrevlex: among equal degrees the one with less of the last variable wins
    assert DEGREVLEX.greater((1, 0, 1), (0, 2, 0)) is False
    assert DEGREVLEX.greater((1, 1, 0), (1, 0, 1))
    # deg dominates in graded orders
    assert DEGREVLEX.greater((0, 0, 2), (1, 0, 0))
    assert not LEX.greater((0, 0, 2), (1, 0, 0))


def test_order_priority_permutation():
    swapped = MonomialOrder("lex", (1, 0))
    assert swapped.greater((0, 1), (1, 0))  # y outranks x after the swap
    with pytest.raises(ValueError):
        MonomialOrder("lex", (0, 2))
    with pytest.raises(ValueError):
        MonomialOrder("weird")


def test_leading_data_under_order():
    f = Polynomial(2, {(2, 0): I, (0, 2): J, (1, 1): K})
    assert f.leading_monomial(LEX) == (2, 0)
    assert f.leading_coefficient(LEX) == I
    assert f.leading_monomial(DEGREVLEX) == (2, 0)
    assert Polynomial.zero(1).degree() is None
    with pytest.raises(ValueError):
        Polynomial.zero(1).leading_monomial()


def test_commuting_point_validation():
    CommutingPoint([I, Quaternion(2, 3)])  # same complex line: fine
    with pytest.raises(NonCommutingPointError) as info:
        CommutingPoint([I, J])
    assert (info.value.first_index, info.value.second_index) == (0, 1)
    with pytest.raises(NonCommutingPointError) as info:
        CommutingPoint([Quaternion(1), I, Quaternion(0, 0, 1, 1)])
    assert (info.value.first_index, info.value.second_index) == (1, 2)


def test_eval_examples():
    assert evaluate(X - I, CommutingPoint([I])) == Quaternion(0)
    assert evaluate(left_scalar_mul(J, X), CommutingPoint([I])) == -K
    c = Polynomial.constant(Quaternion(5, 1), 2)
    assert evaluate(c, CommutingPoint([I, Quaternion(2)])) == Quaternion(5, 1)


def test_eval_is_additive_and_respects_left_scaling():
    rng = random.Random(22)
    for _ in range(200):
        n = rng.randint(1, 3)
        f, g = rand_poly(rng, n), rand_poly(rng, n)
        p = rand_commuting_point(rng, n)
        assert evaluate(f + g, p) == evaluate(f, p) + evaluate(g, p)
        a = rand_quaternion(rng)
        assert evaluate(left_scalar_mul(a, f), p) == a * evaluate(f, p)


def test_eval_against_oracle():
    rng = random.Random(23)
    for _ in range(300):
        n = rng.randint(1, 3)
        f = rand_poly(rng, n)
        p = rand_commuting_point(rng, n)
        got = from_package_quat(evaluate(f, p))
        want = op_eval(from_package_poly(f), [from_package_quat(c) for c in p])
        assert got == want


def test_conjugate_point_examples():
    p = conjugate_point(J, CommutingPoint([I]))
    assert p[0] == -I
    real = CommutingPoint([Quaternion(2), Quaternion(-3)])
    assert conjugate_point(Quaternion(1, 1, 1), real) == real
    p2 = CommutingPoint([I, Quaternion(1, 2)])
    assert conjugate_point(Quaternion(1), p2) == p2
    with pytest.raises(ZeroDivisionError):
        conjugate_point(Quaternion(0), p2)


def test_conjugate_point_stays_commuting():
    rng = random.Random(24)
    for _ in range(200):
        n = rng.randint(1, 3)
        p = rand_commuting_point(rng, n)
        b = rand_quaternion(rng)
        if not b:
            continue
        q = conjugate_point(b, p)  # would raise NonCommutingPointError if broken
        assert len(q) == n


def test_product_formula_worked_example():
    # f = j, g = x - i, p = (j): g(p) = j - i, conjugated point (-i),
    # result j*(j - i) = -1 + k; the formula without the trailing factor
    # would return j instead.
    f = Polynomial.constant(J, 1)
    g = X - I
    p = CommutingPoint([J])
    got = eval_product_formula(f, g, p)
    assert got == Quaternion(-1, 0, 0, 1)
    assert got == evaluate(f * g, p)
    gp = evaluate(g, p)
    as_printed = evaluate(f, conjugate_point(gp, p))
    assert as_printed == J
    assert as_printed != got


def test_product_formula_zero_and_identity_factor():
    g = X - I
    p = CommutingPoint([I])
    assert evaluate(g, p) == Quaternion(0)
    f = Polynomial(1, {(2,): K, (0,): Quaternion(1, 2, 3, 4)})
    assert eval_product_formula(f, g, p) == Quaternion(0)
    rng = random.Random(25)
    for _ in range(50):
        g2 = rand_poly(rng, 2)
        p2 = rand_commuting_point(rng, 2)
        assert eval_product_formula(Polynomial.one(2), g2, p2) == evaluate(g2, p2)


def test_product_formula_matches_direct_eval():
    rng = random.Random(26)
    for _ in range(300):
        n = rng.randint(1, 3)
        f, g = rand_poly(rng, n), rand_poly(rng, n)
        p = rand_commuting_point(rng, n)
        assert eval_product_formula(f, g, p) == evaluate(f * g, p)


def test_commutative_subfield_cross_check():
    # with all data in span{1, i} evaluation is plain substitution and the
    # conjugation in the product formula is trivial
    rng = random.Random(27)
    for _ in range(100):
        n = rng.randint(1, 3)
        f = rand_complex_poly(rng, n)
        g = rand_complex_poly(rng, n)
        p = rand_complex_point(rng, n)
        coords = [c2_from_quat(c) for c in p]
        assert c2_from_quat(evaluate(f, p)) == cp_eval(cp_from_package(f), coords)
        lhs = c2_from_quat(eval_product_formula(f, g, p))
        rhs = c2_mul(
            cp_eval(cp_from_package(f), coords), cp_eval(cp_from_package(g), coords)
        )
        assert lhs == rhs


def test_remainder_characterization_small():
    # F - F(p) lies in the left ideal of the x_m - p_m
    rng = random.Random(28)
    for _ in range(30):
        n = rng.randint(1, 3)
        f = rand_poly(rng, n)
        p = rand_commuting_point(rng, n)
        gens = [Polynomial.variable(m, n) - p[m] for m in range(n)]
        ideal = buchberger(gens, nvars=n)
        shifted = f - Polynomial.constant(evaluate(f, p), n)
        assert is_member(shifted, ideal).member


def test_adjoin_variable_roundtrip():
    f = X - I
    g = adjoin_variable(f)
    assert g.nvars == 2
    assert g.terms == {(1, 0): Quaternion(1), (0, 0): -I}
    assert adjoin_variable(Polynomial.zero(1)) == Polynomial.zero(2)
    y = Polynomial.variable(1, 2)
    lifted = adjoin_variable(left_scalar_mul(J, X)) * y ** 3
    assert y_coefficients(lifted)[3] == left_scalar_mul(J, X)


def test_y_coefficients_examples():
    x2 = Polynomial.variable(0, 2)
    y2 = Polynomial.variable(1, 2)
    f = (x2 - I) + left_scalar_mul(J, x2) * y2 ** 2
    parts = y_coefficients(f)
    assert parts == [X - I, Polynomial.zero(1), left_scalar_mul(J, X)]
    assert y_coefficients(Polynomial.one(1)) == [Polynomial.constant(1, 0)]
    assert y_coefficients(Polynomial.zero(3)) == [Polynomial.zero(2)]


def test_y_coefficients_rebuild_identity():
    rng = random.Random(29)
    for _ in range(100):
        f = rand_poly(rng, 3, max_degree=4, max_terms=6)
        parts = y_coefficients(f)
        y = Polynomial.variable(2, 3)
        rebuilt = Polynomial.zero(3)
        for m, part in enumerate(parts):
            rebuilt = rebuilt + adjoin_variable(part) * y ** m
        assert rebuilt == f
