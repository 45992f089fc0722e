import pytest
from hypothesis import given, settings

from fitting_forge.models.ideal import IdealGens, parse_ideal
from fitting_forge.models.poly import VarSet
from fitting_forge.services.ideal_service import (
    colon,
    fractional_equiv,
    ideal_equal,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersection,
    is_principal,
    is_unit_ideal,
    minimal_generators,
    moody_dominates,
    normalize_ideal,
    principal_generator,
    unit_ideal,
)
from fitting_forge.utils.errors import (
    IdealSyntaxError,
    NonMonomialEntriesError,
    PrincipalityUnsupported,
    UnitDetectionUnsupported,
    ZeroIdealError,
)

from .helpers import mono_ideal, poly
from .strategies import XYZ, monomial_ideals

TREE_VARS = VarSet(("z_a", "z_b", "z_c", "z_d", "w_a", "w_c", "w_d"))


def test_minimal_generators_drop_divisible_monomials(xyz):
    I = minimal_generators(xyz, [(2, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert set(I.min_gens) == {(1, 0, 0), (0, 1, 0)}


def test_product_with_maximal_ideal(xyz):
    m = mono_ideal("(x, y, z)", xyz)
    I = ideal_product(ideal_product(mono_ideal("(z)", xyz), m), m)
    assert ideal_equal(I, mono_ideal("(x^2*z, x*y*z, x*z^2, y^2*z, y*z^2, z^3)", xyz))


def test_power_and_sum(plane):
    I = mono_ideal("(x, y)", plane)
    assert ideal_equal(ideal_power(I, 2), mono_ideal("(x^2, x*y, y^2)", plane))
    assert ideal_power(I, 0) == unit_ideal(plane)
    assert ideal_equal(ideal_sum(mono_ideal("(x^2)", plane), mono_ideal("(y)", plane)), mono_ideal("(x^2, y)", plane))


def test_intersection(plane):
    I = intersection(mono_ideal("(x^2, y)", plane), mono_ideal("(x, y^3)", plane))
    assert ideal_equal(I, mono_ideal("(x^2, x*y, y^3)", plane))


def test_principal_after_dropping_multiples():
    vars = VarSet(("x", "y'", "z'"))
    assert is_principal(mono_ideal("(x^2, x^2*y', x^2*z'^2)", vars)) == (True, (2, 0, 0))
    assert is_principal(mono_ideal("(x^2*z', x^2*y'*z', x^2*z'^2)", vars)) == (True, (2, 0, 1))
    assert not is_principal(mono_ideal("(x, y')", vars)).principal


def test_colon(plane):
    assert ideal_equal(colon(mono_ideal("(x^2, x*y)", plane), mono_ideal("(x)", plane)), mono_ideal("(x, y)", plane))
    J = mono_ideal("(x^3, y)", plane)
    assert ideal_equal(colon(J, unit_ideal(plane)), J)


def test_fractional_equivalence(xyz):
    assert fractional_equiv(mono_ideal("(x*z)", xyz), mono_ideal("(y*z)", xyz))
    assert fractional_equiv(mono_ideal("(x*z, y*z)", xyz), mono_ideal("(x, y)", xyz))
    assert not fractional_equiv(mono_ideal("(x, y)", xyz), mono_ideal("(x, z)", xyz))
    with pytest.raises(ZeroIdealError):
        fractional_equiv(minimal_generators(xyz, []), mono_ideal("(x)", xyz))


def test_moody_finds_witness(plane):
    outcome = moody_dominates(mono_ideal("(x)", plane), mono_ideal("(x^2, x*y)", plane), 6)
    assert outcome.dominates
    assert outcome.alpha == 1
    assert ideal_equal(outcome.witness, mono_ideal("(x, y)", plane))


def test_moody_honours_an_explicit_zero_alpha(plane):
    outcome = moody_dominates(mono_ideal("(x)", plane), mono_ideal("(x^2, x*y)", plane), 0)
    assert outcome == (False, None, None)


def test_moody_without_monomial_witness_for_tree_ideals():
    I = mono_ideal("(z_a, z_b)", TREE_VARS)
    J = mono_ideal("(z_a, z_b*z_c, z_b*z_d)", TREE_VARS)
    assert moody_dominates(I, J, 6) == (False, None, None)


def test_parse_ideal_errors(plane):
    for text in ["x, y", "()", "(x,,y)", "(x, )"]:
        with pytest.raises(IdealSyntaxError):
            parse_ideal(text, plane)
    assert parse_ideal("(0)", plane).is_zero


def test_normalize_ideal_minimalizes_monomials(plane):
    ideal = normalize_ideal(parse_ideal("(-2*x^2, x, 3*x*y)", plane))
    assert ideal.generators == (poly("x", plane),)
    with pytest.raises(NonMonomialEntriesError):
        mono_ideal("(x + y)", plane)


def test_unit_detection(plane):
    assert is_unit_ideal(parse_ideal("(x, 3)", plane))
    assert not is_unit_ideal(parse_ideal("(x, y)", plane))
    assert is_unit_ideal(parse_ideal("(x, x + 1)", plane))
    assert not is_unit_ideal(parse_ideal("(0)", plane))
    with pytest.raises(UnitDetectionUnsupported):
        is_unit_ideal(parse_ideal("(x + y, x*y + 1)", plane))


def test_principal_generator(plane):
    assert principal_generator(parse_ideal("(x^2 - 1, x - 1)", plane)) == poly("x - 1", plane)
    assert principal_generator(parse_ideal("(x*y + x, y + 1)", plane)) == poly("y + 1", plane)
    assert principal_generator(parse_ideal("(x, y)", plane)) is None
    with pytest.raises(PrincipalityUnsupported):
        principal_generator(parse_ideal("(x + y, x*y + 1)", plane))


def test_zero_ideal_generator_is_zero(plane):
    assert principal_generator(IdealGens(plane, ())) == plane.zero
    assert is_principal(minimal_generators(plane, [])) == (True, None)


@given(monomial_ideals())
def test_minimal_generators_idempotent(I):
    assert minimal_generators(XYZ, I.min_gens) == I
    assert minimal_generators(XYZ, reversed(I.min_gens)) == I


@settings(max_examples=200)
@given(monomial_ideals(), monomial_ideals(), monomial_ideals())
def test_product_commutative_and_associative(I, J, K):
    assert ideal_product(I, J) == ideal_product(J, I)
    assert ideal_product(ideal_product(I, J), K) == ideal_product(I, ideal_product(J, K))


@given(monomial_ideals(), monomial_ideals())
def test_colon_times_ideal_lies_in_ideal(I, J):
    assert J.contains(ideal_product(I, colon(J, I)))


@given(monomial_ideals(), monomial_ideals(), monomial_ideals())
def test_fractional_equivalence_is_an_equivalence(I, J, K):
    assert fractional_equiv(I, I)
    assert fractional_equiv(I, J) == fractional_equiv(J, I)
    if fractional_equiv(I, J) and fractional_equiv(J, K):
        assert fractional_equiv(I, K)


@given(monomial_ideals(), monomial_ideals())
def test_moody_witness_is_exact(I, J):
    outcome = moody_dominates(I, J, 3)
    if outcome.dominates:
        assert ideal_product(I, outcome.witness) == ideal_power(J, outcome.alpha)
