"""Grammar, canonical printing, and the line-oriented file formats."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quatnull import (
    I,
    J,
    K,
    NonCommutingPointError,
    ParseError,
    Polynomial,
    Quaternion,
    UnknownVariableError,
    ZeroDenominatorError,
    buchberger,
    default_variables,
    is_unit_ideal,
    parse_certificate,
    parse_ideal_file,
    parse_ideal_text,
    parse_point,
    parse_poly,
    parse_quaternion,
    pick_adjoined_name,
    print_point,
    print_poly,
    print_quaternion,
    rabinowitsch_certificate,
    render_certificate,
    validate_variables,
)

from gen import rand_commuting_point, rand_poly

X = Polynomial.variable(0, 1)


# ------------------------------------------------------------------ parsing

def test_parse_examples():
    assert parse_poly("j*x + k", ["x"]) == J * X + K
    assert parse_poly("(x+i)*(x-i)", ["x"]) == X * X + 1
    assert parse_poly("x^2 + 1", ["x"]) == X * X + 1
    assert parse_poly("-x - 2", ["x"]) == -X - 2
    assert parse_poly("0", ["x"]) == Polynomial.zero(1)


def test_parse_collects_coefficients_left():
    # x*j and j*x agree: the variable is central, the coefficient is not
    assert parse_poly("x*j", ["x"]) == J * X
    assert parse_poly("x*j - j*x", ["x"]) == Polynomial.zero(1)
    assert parse_poly("i*x*j", ["x"]) == K * X


def test_parse_juxtaposition():
    assert parse_poly("2x", ["x"]) == 2 * X
    assert parse_poly("3i x", ["x"]) == 3 * I * X
    assert parse_poly("2(x + 1)", ["x"]) == 2 * X + 2
    assert parse_poly("(1+i)(1-i)", []) == Polynomial.constant(2, 0)


def test_parse_rationals():
    half_x = Polynomial.constant(Quaternion("1/2"), 1) * X
    assert parse_poly("1/2 x + 3/4", ["x"]) == half_x + Quaternion("3/4")
    assert parse_quaternion("1/2 + 3i - 4/7k") == Quaternion(
        "1/2", 3, 0, "-4/7"
    )
    assert parse_quaternion("i*j") == K
    assert parse_quaternion("j*i") == -K


def test_parse_powers():
    assert parse_poly("(x+1)^2", ["x"]) == X * X + 2 * X + 1
    assert parse_poly("x^0", ["x"]) == Polynomial.one(1)
    with pytest.raises(ParseError, match="exponent"):
        parse_poly("x^i", ["x"])


def test_zero_denominator_position():
    with pytest.raises(ZeroDenominatorError) as info:
        parse_poly("x + 1/0", ["x"])
    assert info.value.line == 1 and info.value.col == 7


def test_unknown_variable_position():
    with pytest.raises(UnknownVariableError) as info:
        parse_poly("x + w", ["x"])
    assert info.value.line == 1 and info.value.col == 5
    assert "x" in (info.value.expected or "")


def test_parse_rejects_trailing_input():
    with pytest.raises(ParseError, match="after expression"):
        parse_poly("x + 1)", ["x"])
    with pytest.raises(ParseError):
        parse_poly("", ["x"])
    with pytest.raises(ParseError):
        parse_poly("x - -2", ["x"])
    with pytest.raises(ParseError, match="unexpected character"):
        parse_poly("x $ 1", ["x"])


def test_variable_name_validation():
    with pytest.raises(ValueError, match="reserved"):
        parse_poly("x", ["i"])
    with pytest.raises(ValueError, match="duplicate"):
        validate_variables(["x", "x"])
    with pytest.raises(ValueError, match="invalid"):
        validate_variables(["2x"])
    validate_variables(["x", "y_2", "_t"])


def test_default_variables():
    assert default_variables(2) == ("x", "y")
    assert default_variables(3) == ("x", "y", "z")
    assert default_variables(4) == ("x1", "x2", "x3", "x4")


# ------------------------------------------------------------------- points

def test_parse_point():
    p = parse_point("1+2i, 3-4i")
    assert tuple(p) == (Quaternion(1, 2), Quaternion(3, -4))
    assert tuple(parse_point("j")) == (J,)


def test_parse_point_rejects_noncommuting():
    with pytest.raises(NonCommutingPointError) as info:
        parse_point("i, j")
    assert (info.value.first_index, info.value.second_index) == (0, 1)


def test_parse_point_rejects_trailing_comma():
    with pytest.raises(ParseError):
        parse_point("i,")


# -------------------------------------------------------------- ideal files

IDEAL_TEXT = """\
# one point on each axis of the commuting plane
x - i

y - 2i  # tail comment
"""


def test_parse_ideal_text():
    gens = parse_ideal_text(IDEAL_TEXT, ["x", "y"])
    x = Polynomial.variable(0, 2)
    y = Polynomial.variable(1, 2)
    assert gens == (x - I, y - 2 * I)


def test_parse_ideal_text_error_carries_line_number():
    with pytest.raises(UnknownVariableError) as info:
        parse_ideal_text("x - i\n\nx + w\n", ["x"])
    assert info.value.line == 3


def test_parse_ideal_file(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("x - i\ny - j\n", encoding="utf-8")
    ideal = parse_ideal_file(str(path), ["x", "y"])
    assert is_unit_ideal(ideal)
    assert len(ideal.generators) == 2


# ----------------------------------------------------------------- printing

def test_print_examples():
    assert print_poly(J * X + K) == "(j)*x + (k)"
    assert print_poly(Polynomial.zero(1)) == "0"
    assert print_poly(X * X + 1) == "x^2 + 1"
    assert print_poly(X - I) == "x + (-i)"
    assert print_poly(2 * X - 3) == "2*x - 3"
    assert print_poly(-X) == "-x"
    assert print_poly(Polynomial.constant(Quaternion("5/7"), 1)) == "5/7"
    assert print_poly(Polynomial.constant(Quaternion("1/2"), 1) * X) == "1/2*x"


def test_print_descends_in_degrevlex():
    x = Polynomial.variable(0, 2)
    y = Polynomial.variable(1, 2)
    f = x * x + x * y + y * y + x + y + 1
    assert print_poly(f) == "x^2 + x*y + y^2 + x + y + 1"


def test_print_var_count_mismatch():
    with pytest.raises(ValueError):
        print_poly(X, ["x", "y"])


def test_print_parse_round_trip_random():
    rng = random.Random(7)
    for _ in range(200):
        nvars = rng.randint(0, 3)
        f = rand_poly(rng, nvars, max_degree=4, max_terms=6)
        names = default_variables(nvars)
        assert parse_poly(print_poly(f, names), names) == f


def test_point_round_trip_random():
    rng = random.Random(8)
    for _ in range(100):
        p = rand_commuting_point(rng, rng.randint(1, 3))
        assert tuple(parse_point(print_point(p))) == tuple(p)


@given(
    st.builds(
        Quaternion,
        *(
            st.fractions(min_value=-50, max_value=50, max_denominator=20)
            for _ in range(4)
        ),
    )
)
def test_quaternion_literal_round_trip(q):
    assert parse_quaternion(print_quaternion(q)) == q


def test_poly_str_uses_print_form():
    rng = random.Random(9)
    f = rand_poly(rng, 2, max_degree=3, max_terms=4)
    assert str(f) == print_poly(f)


# ----------------------------------------------------- certificate documents

def test_pick_adjoined_name():
    assert pick_adjoined_name(["x"]) == "y"
    assert pick_adjoined_name(["x", "y"]) == "y0"
    assert pick_adjoined_name(["y", "y0"]) == "y1"


def certificate_fixture():
    g = X * X + 1
    ideal = buchberger([g])
    return rabinowitsch_certificate(ideal, g, 1)


def test_render_certificate_layout():
    cert = certificate_fixture()
    text = render_certificate(cert, ["x"])
    lines = text.splitlines()
    assert lines[0] == "variables: x"
    assert lines[1] == "adjoined: y"
    assert lines[2] == "scalar: 1"
    assert lines[3] == "N: 1"
    assert "G[1]: x^2 + 1" in lines
    assert lines[-1] == "verified: true"


def test_certificate_document_round_trip():
    cert = certificate_fixture()
    text = render_certificate(cert, ["x"])
    doc = parse_certificate(text)
    assert doc.certificate == cert
    assert doc.variables == ("x",) and doc.adjoined == "y"


def test_certificate_round_trip_with_name_collision():
    # 'y' is taken by a ring variable, so the adjoined one becomes y0
    x = Polynomial.variable(0, 2)
    y = Polynomial.variable(1, 2)
    ideal = buchberger([x - I, y - 2 * I])
    f = (x + y) * (x - I)
    cert = rabinowitsch_certificate(ideal, f, 1)
    text = render_certificate(cert, ["x", "y"])
    assert "adjoined: y0" in text
    doc = parse_certificate(text)
    assert doc.certificate == cert and doc.adjoined == "y0"


def test_parse_certificate_rejects_bad_documents():
    with pytest.raises(ParseError, match="key"):
        parse_certificate("not a document\n")
    with pytest.raises(ParseError, match="missing field"):
        parse_certificate("variables: x\nadjoined: y\nscalar: 1\nN: 1\n")
