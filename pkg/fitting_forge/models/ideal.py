"""
Ideal Models
============
``IdealGens`` stores any finitely generated ideal as a generator list.
``MonomialIdeal`` stores the unique minimal monomial generating set; build it
through ``services.ideal_service.minimal_generators``.
"""

from dataclasses import dataclass

from sympy.polys.monomials import monomial_divides
from sympy.polys.orderings import grlex

from fitting_forge.models.poly import (
    Monomial,
    Poly,
    VarSet,
    is_term,
    parse_poly,
    render_monomial,
    render_poly,
    sorted_terms,
)
from fitting_forge.utils.errors import IdealSyntaxError


def canonical_order(monomials) -> tuple[Monomial, ...]:
    return tuple(sorted(set(monomials), key=grlex, reverse=True))


@dataclass(frozen=True)
class IdealGens:
    vars: VarSet
    generators: tuple[Poly, ...]

    @property
    def monomial_flag(self) -> bool:
        return all(is_term(g) for g in self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def has_constant_generator(self) -> bool:
        return any(g.is_ground and g for g in self.generators)

    def render(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(render_poly(g) for g in self.generators) + ")"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class MonomialIdeal:
    vars: VarSet
    min_gens: tuple[Monomial, ...]

    @property
    def is_zero(self) -> bool:
        return not self.min_gens

    @property
    def is_unit(self) -> bool:
        return self.min_gens == (self.vars.unit_monomial(),)

    def contains_monomial(self, m: Monomial) -> bool:
        return any(monomial_divides(g, m) for g in self.min_gens)

    def contains_poly(self, p: Poly) -> bool:
        """Exact membership: a polynomial lies in a monomial ideal iff each of its terms does."""
        return all(self.contains_monomial(m) for m, _ in sorted_terms(p))

    def contains(self, other: "MonomialIdeal") -> bool:
        return all(self.contains_monomial(m) for m in other.min_gens)

    def as_polys(self) -> tuple[Poly, ...]:
        return tuple(self.vars.monomial(m) for m in self.min_gens)

    def as_ideal_gens(self) -> IdealGens:
        return IdealGens(self.vars, self.as_polys())

    def render(self) -> str:
        if not self.min_gens:
            return "(0)"
        return "(" + ", ".join(render_monomial(m, self.vars) for m in self.min_gens) + ")"

    def __str__(self) -> str:
        return self.render()


def parse_ideal(text: str, vars: VarSet) -> IdealGens:
    """Read ``(g1, g2, ...)``; ``(0)`` is the zero ideal."""
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise IdealSyntaxError(f"an ideal is written as '(g1, g2, ...)', got {text!r}")
    body = body[1:-1].strip()
    if not body:
        raise IdealSyntaxError(f"empty generator list in {text!r}")
    generators = []
    for piece in body.split(","):
        if not piece.strip():
            raise IdealSyntaxError(f"empty generator in {text!r}")
        g = parse_poly(piece, vars)
        if g:
            generators.append(g)
    return IdealGens(vars, tuple(generators))
