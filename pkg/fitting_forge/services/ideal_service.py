"""
Ideal algebra service - minimal generators, products, colons, Moody domination
"""

from functools import reduce
from itertools import product
from typing import Iterable, NamedTuple, Optional

from sympy.polys.monomials import (
    monomial_div,
    monomial_divides,
    monomial_gcd,
    monomial_lcm,
    monomial_mul,
)

from fitting_forge.config import settings
from fitting_forge.models.ideal import IdealGens, MonomialIdeal, canonical_order
from fitting_forge.models.poly import (
    Monomial,
    Poly,
    VarSet,
    divides,
    normalize,
    used_variables,
)
from fitting_forge.utils.errors import (
    NonMonomialEntriesError,
    PrincipalityUnsupported,
    UnitDetectionUnsupported,
    ZeroIdealError,
)
from fitting_forge.utils.logger import get_logger

logger = get_logger(__name__)


class Principality(NamedTuple):
    principal: bool
    generator: Optional[Monomial]


class MoodyResult(NamedTuple):
    dominates: bool
    alpha: Optional[int]
    witness: Optional[MonomialIdeal]


# ============================================================================
# MONOMIAL IDEALS
# ============================================================================

def minimal_generators(vars: VarSet, monomials: Iterable[Monomial]) -> MonomialIdeal:
    """Drop every monomial divisible by another one."""
    kept: list[Monomial] = []
    for m in sorted(set(map(tuple, monomials)), key=lambda m: (sum(m), m)):
        if not any(monomial_divides(g, m) for g in kept):
            kept.append(m)
    return MonomialIdeal(vars, canonical_order(kept))


def unit_ideal(vars: VarSet) -> MonomialIdeal:
    return MonomialIdeal(vars, (vars.unit_monomial(),))


def variables_ideal(vars: VarSet, names: Iterable[str]) -> MonomialIdeal:
    return minimal_generators(vars, [vars.variable_monomial(n) for n in names])


def as_monomial_ideal(ideal: IdealGens) -> MonomialIdeal:
    """Forget the (unit) coefficients of a generator list made of single terms."""
    if not ideal.monomial_flag:
        raise NonMonomialEntriesError(f"{ideal.render()} is not generated by monomials")
    return minimal_generators(ideal.vars, [next(iter(g.keys())) for g in ideal.generators])


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return minimal_generators(I.vars, [monomial_mul(m, n) for m, n in product(I.min_gens, J.min_gens)])


def ideal_power(I: MonomialIdeal, exponent: int) -> MonomialIdeal:
    result = unit_ideal(I.vars)
    for _ in range(exponent):
        result = ideal_product(result, I)
    return result


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return minimal_generators(I.vars, I.min_gens + J.min_gens)


def intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return minimal_generators(I.vars, [monomial_lcm(m, n) for m, n in product(I.min_gens, J.min_gens)])


def generators_gcd(I: MonomialIdeal) -> Monomial:
    if I.is_zero:
        raise ZeroIdealError("the zero ideal has no generator gcd")
    return reduce(monomial_gcd, I.min_gens)


def is_principal(I: MonomialIdeal) -> Principality:
    # minimal generators are unique, so principal means exactly one of them
    if I.is_zero:
        # (0) is principal but 0 has no exponent tuple
        return Principality(True, None)
    if len(I.min_gens) == 1:
        return Principality(True, I.min_gens[0])
    return Principality(False, None)


def ideal_equal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return set(I.min_gens) == set(J.min_gens)


def colon_by_monomial(J: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    return minimal_generators(J.vars, [monomial_div(n, monomial_gcd(n, m)) for n in J.min_gens])


def colon(J: MonomialIdeal, I: MonomialIdeal) -> MonomialIdeal:
    """(J : I), the intersection of (J : m) over the generators m of I."""
    if I.is_zero:
        raise ZeroIdealError("colon by the zero ideal")
    return reduce(intersection, (colon_by_monomial(J, m) for m in I.min_gens))


def divide_out_gcd(I: MonomialIdeal) -> MonomialIdeal:
    g = generators_gcd(I)
    return minimal_generators(I.vars, [monomial_div(m, g) for m in I.min_gens])


def fractional_equiv(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Isomorphic as fractional ideals: equal after removing each gcd monomial."""
    if I.is_zero or J.is_zero:
        raise ZeroIdealError("fractional equivalence is only defined for non-zero ideals")
    return ideal_equal(divide_out_gcd(I), divide_out_gcd(J))


def moody_dominates(I: MonomialIdeal, J: MonomialIdeal, alpha_max: Optional[int] = None) -> MoodyResult:
    """
    Search I*K = J^alpha for alpha = 1..alpha_max with K = (J^alpha : I),
    the largest monomial candidate. A negative answer only rules out
    monomial witnesses up to alpha_max.
    """
    if I.is_zero or J.is_zero:
        raise ZeroIdealError("Moody domination needs non-zero ideals")
    if alpha_max is None:
        alpha_max = settings.DEFAULT_ALPHA_MAX
    power = unit_ideal(J.vars)
    for alpha in range(1, alpha_max + 1):
        power = ideal_product(power, J)
        K = colon(power, I)
        if ideal_equal(ideal_product(I, K), power):
            logger.debug(f"Moody witness found at alpha={alpha}: K={K.render()}")
            return MoodyResult(True, alpha, K)
    logger.debug(f"No monomial Moody witness for I={I.render()}, J={J.render()} up to alpha={alpha_max}")
    return MoodyResult(False, None, None)


# ============================================================================
# GENERAL GENERATOR LISTS
# ============================================================================

def normalize_ideal(ideal: IdealGens) -> IdealGens:
    """Drop zeros and duplicates, make generators monic, minimalize monomial lists."""
    gens = []
    for g in ideal.generators:
        if g:
            g = normalize(g)
            if g not in gens:
                gens.append(g)
    result = IdealGens(ideal.vars, tuple(gens))
    if result.monomial_flag and gens:
        return as_monomial_ideal(result).as_ideal_gens()
    return result


def is_univariate(ideal: IdealGens) -> bool:
    return len(used_variables(ideal.generators)) <= 1


def univariate_gcd(ideal: IdealGens) -> Poly:
    """The monic generator of a univariate ideal (the ring is a PID there)."""
    if ideal.is_zero:
        return ideal.vars.zero
    return normalize(reduce(lambda a, b: a.gcd(b), ideal.generators))


def is_unit_ideal(ideal: IdealGens) -> bool:
    """
    Decide F = (1) without Groebner bases: constant generator, monomial ideal,
    or univariate gcd; anything else is refused.
    """
    if ideal.is_zero:
        return False
    if ideal.has_constant_generator():
        return True
    if ideal.monomial_flag:
        return False
    if is_univariate(ideal):
        return univariate_gcd(ideal).is_ground
    raise UnitDetectionUnsupported(f"cannot decide whether {ideal.render()} is the unit ideal")


def principal_generator(ideal: IdealGens) -> Optional[Poly]:
    """
    The generator when ``ideal`` is principal, ``None`` when it is provably not.
    Monomial and univariate ideals are decided exactly; otherwise only a
    generator dividing every other one certifies principality.
    """
    ideal = normalize_ideal(ideal)
    if ideal.is_zero:
        return ideal.vars.zero
    if len(ideal.generators) == 1:
        return ideal.generators[0]
    if ideal.monomial_flag:
        return None
    if is_univariate(ideal):
        return univariate_gcd(ideal)
    for g in ideal.generators:
        if all(divides(g, h) for h in ideal.generators):
            return g
    raise PrincipalityUnsupported(f"cannot decide whether {ideal.render()} is principal")

