"""
Hypothesis strategies for polynomials, monomial ideals and matrices
"""

from functools import reduce

from hypothesis import strategies as st
from sympy.polys.domains import QQ
from sympy.polys.monomials import monomial_mul

from fitting_forge.models.poly import VarSet
from fitting_forge.models.presentation import Presentation
from fitting_forge.services.ideal_service import minimal_generators

WXYZ = VarSet(("w", "x", "y", "z"))
XYZ = VarSet(("x", "y", "z"))
T = VarSet(("t",))


def monomials(vars: VarSet, max_exponent: int = 2, max_degree: int = 6):
    return st.tuples(*[st.integers(0, max_exponent) for _ in vars.names]).filter(
        lambda m: sum(m) <= max_degree
    )


def coefficients():
    return st.builds(lambda n, d: QQ(n, d), st.integers(-9, 9), st.integers(1, 5))


@st.composite
def polys(draw, vars: VarSet = WXYZ, max_terms: int = 4, max_exponent: int = 2):
    terms = draw(st.lists(st.tuples(monomials(vars, max_exponent), coefficients()), max_size=max_terms))
    p = vars.zero
    for m, c in terms:
        p += vars.monomial(m, c)
    return p


@st.composite
def monomial_ideals(draw, vars: VarSet = XYZ, max_gens: int = 4):
    gens = draw(st.lists(monomials(vars), min_size=1, max_size=max_gens))
    return minimal_generators(vars, gens)


@st.composite
def monomial_matrices(draw, vars: VarSet = XYZ, max_rows: int = 4, max_cols: int = 4):
    q = draw(st.integers(1, max_rows))
    p = draw(st.integers(1, max_cols))
    rows = []
    for _ in range(q):
        row = []
        for _ in range(p):
            if draw(st.integers(0, 3)) == 0:
                row.append(vars.zero)
            else:
                row.append(vars.monomial(draw(monomials(vars, 2, 3))))
        rows.append(row)
    return Presentation.from_rows(vars, rows)


@st.composite
def univariate_polys(draw, vars: VarSet = T, max_degree: int = 3):
    coeffs = draw(st.lists(st.integers(-4, 4), min_size=1, max_size=max_degree + 1))
    t = vars.gen(vars.names[0])
    return sum((c * t ** k for k, c in enumerate(coeffs)), vars.zero)


@st.composite
def univariate_matrices(draw, vars: VarSet = T, max_size: int = 4):
    q = draw(st.integers(1, max_size))
    p = draw(st.integers(1, max_size))
    return Presentation.from_rows(vars, [[draw(univariate_polys(vars)) for _ in range(p)] for _ in range(q)])


@st.composite
def monomial_chains(draw, vars: VarSet = XYZ, max_length: int = 6):
    """f_1 | f_2 | ... built from cumulative products of random monomials."""
    steps = draw(st.lists(monomials(vars, 1, 3), min_size=1, max_size=max_length))
    chain = []
    current = vars.unit_monomial()
    for step in steps:
        current = monomial_mul(current, step)
        chain.append(vars.monomial(current))
    return chain


@st.composite
def monomial_diagonals(draw, vars: VarSet = XYZ, max_size: int = 3):
    entries = draw(st.lists(monomials(vars, 2, 3), min_size=1, max_size=max_size))
    return Presentation.diagonal(vars, [vars.monomial(m) for m in entries])


@st.composite
def chart_substitutions(draw, vars: VarSet = XYZ):
    """u -> v*u for the other members of a random center (an injective monomial map)."""
    center = draw(st.lists(st.sampled_from(vars.names), min_size=1, max_size=len(vars), unique=True))
    chosen = draw(st.sampled_from(center))
    v = vars.gen(chosen)
    return {u: v * vars.gen(u) for u in center if u != chosen}


def product(values, start):
    return reduce(lambda a, b: a * b, values, start)
