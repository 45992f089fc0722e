import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import QQ
from sympy.polys.monomials import monomial_mul

from fitting_forge.models.poly import (
    VarSet,
    divide_by_monomial,
    infer_varset,
    monomial_content,
    normalize,
    parse_poly,
    render_poly,
    substitute,
)
from fitting_forge.utils.errors import PolySyntaxError, UnknownVariableError, ZeroPolynomialError

from .strategies import WXYZ, monomials, polys


def test_parse_cancels_to_zero():
    vars = VarSet(("x", "y"))
    assert parse_poly("x*y - y*x", vars) == vars.zero
    assert render_poly(parse_poly("x*y - y*x", vars)) == "0"


def test_parse_single_power():
    vars = VarSet(("x", "y", "z"))
    p = parse_poly("z^2", vars)
    assert dict(p) == {(0, 0, 2): QQ(1)}


def test_parse_rational_coefficients_and_render():
    vars = VarSet(("x", "y"))
    p = parse_poly("-1/2*x^2*y + 3", vars)
    assert dict(p) == {(2, 1): QQ(-1, 2), (0, 0): QQ(3)}
    assert render_poly(p) == "-1/2*x^2*y + 3"


def test_parse_accepts_unicode_minus_and_primes():
    vars = VarSet(("x", "y'"))
    assert parse_poly("x − y'", vars) == parse_poly("x - y'", vars)


@pytest.mark.parametrize("text", ["", "x +* y", "x^", "x^0", "1/0", "x y", "x % y"])
def test_parse_rejects_malformed_input(text):
    with pytest.raises(PolySyntaxError):
        parse_poly(text, VarSet(("x", "y")))


def test_parse_error_reports_position():
    with pytest.raises(PolySyntaxError) as info:
        parse_poly("x +* y", VarSet(("x", "y")))
    assert info.value.position == 3


def test_parse_rejects_unknown_variable():
    with pytest.raises(UnknownVariableError) as info:
        parse_poly("x + q", VarSet(("x", "y")))
    assert info.value.variable == "q"


def test_infer_varset_sorts_names_and_falls_back_to_placeholder():
    assert infer_varset(["[[y, z, 0], [-x, 0, z]]"]).names == ("x", "y", "z")
    assert infer_varset(["[[2, 4], [6, 8]]"]).names == ("t",)


def test_substitution_as_in_a_blowup_chart():
    vars = VarSet(("X", "Y", "e", "x", "y"))
    p = parse_poly("x*Y - y*X", vars)
    e, y = vars.gen("e"), vars.gen("y")
    assert substitute(p, {"x": e, "y": e * y}) == parse_poly("e*Y - e*y*X", vars)


def test_substitution_of_tree_coordinates():
    vars = VarSet(("z_a", "z_b", "w_a", "w_b"))
    p = parse_poly("z_a*w_a + z_b*w_b", vars)
    mapped = substitute(p, {"z_b": vars.gen("z_a") * vars.gen("z_b")})
    assert mapped == parse_poly("z_a*w_a + z_a*z_b*w_b", vars)


def test_monomial_content():
    vars = VarSet(("x", "y", "z"))
    assert monomial_content(parse_poly("x^2*z + x*y*z^3", vars)) == (1, 0, 1)
    assert monomial_content(parse_poly("x + 1", vars)) == (0, 0, 0)
    with pytest.raises(ZeroPolynomialError):
        monomial_content(vars.zero)


def test_normalize_makes_leading_coefficient_one():
    vars = VarSet(("x", "y"))
    assert normalize(parse_poly("-3*x^2 + 6*y", vars)) == parse_poly("x^2 - 2*y", vars)


@settings(max_examples=500)
@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys(max_terms=3), polys(max_terms=3), st.dictionaries(st.sampled_from(WXYZ.names), polys(max_terms=2), max_size=2))
def test_substitution_is_a_ring_homomorphism(a, b, images):
    assert substitute(a * b, images, WXYZ) == substitute(a, images, WXYZ) * substitute(b, images, WXYZ)
    assert substitute(a + b, images, WXYZ) == substitute(a, images, WXYZ) + substitute(b, images, WXYZ)


@given(polys())
def test_render_parse_round_trip(p):
    assert parse_poly(render_poly(p), WXYZ) == p


@given(polys(), monomials(WXYZ))
def test_content_of_shifted_polynomial(p, m):
    if not p:
        return
    shifted = p * WXYZ.monomial(m)
    assert monomial_content(shifted) == monomial_mul(m, monomial_content(p))
    assert divide_by_monomial(shifted, m) == p
