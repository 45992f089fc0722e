"""
Polynomial Models
=================
Exact multivariate polynomials over QQ.

``Poly`` is sympy's sparse ``PolyElement`` (exponent tuple -> rational
coefficient) over a ``PolyRing`` built from a ``VarSet``; ``Monomial`` is a
bare exponent tuple aligned with the VarSet order. Polys are never mutated
after construction.
"""

import re
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Mapping, Optional

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.monomials import monomial_div, monomial_gcd
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from fitting_forge.utils.errors import (
    DivisibilityViolationError,
    PolySyntaxError,
    UnknownVariableError,
    ZeroPolynomialError,
)

Monomial = tuple[int, ...]
Poly = PolyElement

IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_']*")
PLACEHOLDER_VARIABLE = "t"


# ============================================================================
# VARIABLE SETS
# ============================================================================

@dataclass(frozen=True)
class VarSet:
    """Ordered, duplicate-free variable names; the order is the canonical one."""
    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise ValueError("a VarSet needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        for name in self.names:
            if not IDENTIFIER.fullmatch(name):
                raise ValueError(f"invalid variable identifier {name!r}")

    @classmethod
    def of(cls, p: Poly) -> "VarSet":
        return cls(tuple(s.name for s in p.ring.symbols))

    @cached_property
    def ring(self) -> PolyRing:
        return PolyRing([Symbol(n) for n in self.names], QQ, grlex)

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._positions

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise UnknownVariableError(name, self.names) from None

    def gen(self, name: str) -> Poly:
        return self.ring.gens[self.index(name)]

    @property
    def zero(self) -> Poly:
        return self.ring.zero

    @property
    def one(self) -> Poly:
        return self.ring.one

    def constant(self, numerator: int, denominator: int = 1) -> Poly:
        return self.ring.ground_new(QQ(numerator, denominator))

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.names)

    def variable_monomial(self, name: str) -> Monomial:
        exps = [0] * len(self.names)
        exps[self.index(name)] = 1
        return tuple(exps)

    def monomial(self, m: Monomial, coeff=1) -> Poly:
        return self.ring.from_dict({tuple(m): coeff})


def infer_varset(texts: Iterable[str]) -> VarSet:
    """Collect identifiers from raw input texts, sorted by name."""
    found = set()
    for text in texts:
        found.update(IDENTIFIER.findall(text))
    if not found:
        return VarSet((PLACEHOLDER_VARIABLE,))
    return VarSet(tuple(sorted(found)))


# ============================================================================
# PARSING
# ============================================================================

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_']*)|(?P<op>[-+*/^−]))")


class _PolyParser:
    """Recursive-descent reader for the signed-term grammar."""

    def __init__(self, text: str, vars: VarSet):
        self.text = text
        self.vars = vars
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text: str) -> list[tuple[str, str, int]]:
        tokens = []
        i = 0
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            match = _TOKEN.match(text, i)
            if not match:
                raise PolySyntaxError(f"unexpected character {text[i]!r}", text, i)
            kind = match.lastgroup
            value = match.group(kind)
            if value == "−":
                value = "-"
            tokens.append((kind, value, match.start(kind)))
            i = match.end()
        return tokens

    def _peek(self) -> Optional[tuple[str, str, int]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self, what: str) -> tuple[str, str, int]:
        token = self._peek()
        if token is None:
            raise PolySyntaxError(f"expected {what}, got end of input", self.text, len(self.text))
        self.pos += 1
        return token

    def _expect_int(self) -> int:
        kind, value, at = self._next("an integer")
        if kind != "int":
            raise PolySyntaxError(f"expected an integer, got {value!r}", self.text, at)
        return int(value)

    def parse(self) -> Poly:
        if not self.tokens:
            raise PolySyntaxError("empty polynomial", self.text, 0)
        ring = self.vars.ring
        result = ring.zero
        sign = 1
        token = self._peek()
        if token[0] == "op" and token[1] in "+-":
            sign = -1 if token[1] == "-" else 1
            self.pos += 1
        while True:
            result += self._term(sign)
            token = self._peek()
            if token is None:
                return result
            kind, value, at = token
            if kind != "op" or value not in "+-":
                raise PolySyntaxError(f"expected '+' or '-', got {value!r}", self.text, at)
            sign = -1 if value == "-" else 1
            self.pos += 1

    def _term(self, sign: int) -> Poly:
        kind, value, at = self._next("a term")
        coeff = QQ(sign)
        exps = [0] * len(self.vars)
        if kind == "int":
            self.pos -= 1
            numerator = self._expect_int()
            denominator = 1
            token = self._peek()
            if token is not None and token[1] == "/":
                self.pos += 1
                denominator_at = self._peek()[2] if self._peek() else len(self.text)
                denominator = self._expect_int()
                if denominator == 0:
                    raise PolySyntaxError("zero denominator", self.text, denominator_at)
            coeff = QQ(sign * numerator, denominator)
            token = self._peek()
            if token is None or token[1] != "*":
                return self.vars.ring.ground_new(coeff)
            self.pos += 1
            self._monomial(exps)
        elif kind == "ident":
            self.pos -= 1
            self._monomial(exps)
        else:
            raise PolySyntaxError(f"expected a coefficient or variable, got {value!r}", self.text, at)
        return self.vars.ring.from_dict({tuple(exps): coeff})

    def _monomial(self, exps: list[int]) -> None:
        while True:
            kind, value, at = self._next("a variable")
            if kind != "ident":
                raise PolySyntaxError(f"expected a variable, got {value!r}", self.text, at)
            if value not in self.vars:
                raise UnknownVariableError(value, self.vars.names)
            exponent = 1
            token = self._peek()
            if token is not None and token[1] == "^":
                self.pos += 1
                exponent_at = self._peek()[2] if self._peek() else len(self.text)
                exponent = self._expect_int()
                if exponent < 1:
                    raise PolySyntaxError("exponents must be positive", self.text, exponent_at)
            exps[self.vars.index(value)] += exponent
            token = self._peek()
            if token is None or token[1] != "*":
                return
            self.pos += 1


def parse_poly(text: str, vars: VarSet) -> Poly:
    """Parse ``text`` into the canonical Poly over ``vars``."""
    return _PolyParser(text, vars).parse()


# ============================================================================
# RENDERING
# ============================================================================

def _format_coeff(c) -> str:
    numerator, denominator = int(c.numerator), int(c.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def render_monomial(m: Monomial, vars: VarSet) -> str:
    factors = []
    for name, e in zip(vars.names, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def sorted_terms(p: Poly) -> list[tuple[Monomial, object]]:
    """Terms in graded-lex order, largest first."""
    return sorted(p.items(), key=lambda term: grlex(term[0]), reverse=True)


def render_poly(p: Poly) -> str:
    if not p:
        return "0"
    vars = VarSet.of(p)
    pieces = []
    for m, c in sorted_terms(p):
        negative = c < 0
        magnitude = -c if negative else c
        mono = render_monomial(m, vars)
        if mono == "1":
            body = _format_coeff(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{_format_coeff(magnitude)}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


# ============================================================================
# OPERATIONS
# ============================================================================

def substitute(p: Poly, mapping: Mapping[str, Poly], target: Optional[VarSet] = None) -> Poly:
    """Simultaneous substitution; variables missing from ``mapping`` stay fixed."""
    source = VarSet.of(p)
    if target is None:
        target = VarSet.of(next(iter(mapping.values()))) if mapping else source
    images = []
    for name in source.names:
        if name in mapping:
            images.append(mapping[name])
        else:
            images.append(target.gen(name))
    result = target.zero
    for m, c in p.items():
        term = target.ring.ground_new(c)
        for image, e in zip(images, m):
            if e:
                term = term * image ** e
        result = result + term
    return result


def monomial_content(p: Poly) -> Monomial:
    """Exponent-wise minimum over the terms of ``p``."""
    if not p:
        raise ZeroPolynomialError("the zero polynomial has no monomial content")
    return reduce(monomial_gcd, p.keys())


def divide_by_monomial(p: Poly, m: Monomial) -> Poly:
    quotient = {}
    for key, c in p.items():
        q = monomial_div(key, m)
        if q is None:
            raise DivisibilityViolationError(f"{render_poly(p)} is not divisible by the monomial {m}")
        quotient[q] = c
    return p.ring.from_dict(quotient)


def is_term(p: Poly) -> bool:
    """A single non-zero term (coefficient arbitrary)."""
    return len(p) == 1


def leading_monomial(p: Poly) -> Monomial:
    return sorted_terms(p)[0][0]


def total_degree(p: Poly) -> int:
    return max((sum(m) for m in p.keys()), default=-1)


def used_variables(polys: Iterable[Poly]) -> set[int]:
    """Indices of variables occurring in any of ``polys``."""
    used = set()
    for p in polys:
        for m in p.keys():
            used.update(i for i, e in enumerate(m) if e)
    return used


def normalize(p: Poly) -> Poly:
    """Unit-normalize: leading coefficient (graded-lex) becomes 1."""
    if not p:
        return p
    lead = sorted_terms(p)[0][1]
    return p.quo_ground(lead)


def divides(a: Poly, b: Poly) -> bool:
    """Exact divisibility a | b; a single divisor is always a Groebner basis."""
    if not b:
        return True
    if not a:
        return False
    _, remainder = b.div(a)
    return not remainder


def exact_quotient(b: Poly, a: Poly) -> Poly:
    if not b:
        return b
    if not a:
        raise DivisibilityViolationError("division by the zero polynomial")
    quotient, remainder = b.div(a)
    if remainder:
        raise DivisibilityViolationError(f"{render_poly(a)} does not divide {render_poly(b)}")
    return quotient
