"""
Diagonal module service - local diagonalization, the diagonal predicate,
the Cartier-divisor filtration and abelian cone components
"""

from dataclasses import dataclass, field
from functools import reduce
from typing import Optional, Union

from sympy.polys.monomials import monomial_div, monomial_mul, monomial_pow

from fitting_forge.models.poly import (
    Monomial,
    Poly,
    VarSet,
    divide_by_monomial,
    divides,
    exact_quotient,
    is_term,
    monomial_content,
    normalize,
    render_monomial,
    render_poly,
    used_variables,
)
from fitting_forge.models.presentation import Presentation
from fitting_forge.services.fitting_service import FittingChain, rank_profile
from fitting_forge.services.ideal_service import principal_generator
from fitting_forge.services.smith_service import UNIVARIATE, smith_normal_form
from fitting_forge.utils.errors import (
    DivisibilityViolationError,
    InvariantViolationError,
    NonMonomialEntriesError,
)
from fitting_forge.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class DiagonalForm:
    """
    Diag(f_1, ..., f_n) with f_i | f_{i+1}, plus ``free_rank`` rows whose
    diagonal entry is zero (the free part of the cokernel).
    """
    vars: VarSet
    entries: tuple[Poly, ...]
    free_rank: int = 0
    provenance: tuple[str, ...] = ()

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def blocks(self) -> tuple[tuple[Poly, int], ...]:
        """Equal entries grouped with their multiplicities."""
        grouped: list[list] = []
        for entry in self.entries:
            if grouped and grouped[-1][0] == entry:
                grouped[-1][1] += 1
            else:
                grouped.append([entry, 1])
        return tuple((entry, count) for entry, count in grouped)

    def presentation(self) -> Presentation:
        return Presentation.diagonal(self.vars, list(self.entries), rows=self.size + self.free_rank)

    def render(self) -> str:
        entries = [render_poly(e) for e in self.entries] + ["0"] * self.free_rank
        return "Diag(" + ", ".join(entries) + ")"


@dataclass(frozen=True)
class Obstruction:
    """No entry of ``block`` divides all the others; a blow-up is needed."""
    block: Presentation
    offset: int
    partial: tuple[Poly, ...]


@dataclass(frozen=True)
class DiagonalTest:
    diagonal: bool
    failing_index: Optional[int]
    chain: FittingChain


@dataclass(frozen=True)
class Filtration:
    """D_1..D_n (``divisors[i - 1]`` is D_i), Fitting checks and sub-modules M_0..M_n."""
    vars: VarSet
    divisors: tuple[Monomial, ...]
    fitting: tuple[Monomial, ...]
    submodules: tuple[tuple[Monomial, ...], ...]
    free_rank: int = 0

    @property
    def size(self) -> int:
        return len(self.divisors)

    def divisor(self, i: int) -> Monomial:
        return self.divisors[i - 1]

    def is_empty(self, i: int) -> bool:
        return self.divisor(i) == self.vars.unit_monomial()

    def pieces(self) -> list[tuple[int, Monomial, int, bool]]:
        """Graded pieces (i, D_i, rank over V(D_i), empty flag), from D_n down."""
        return [(i, self.divisor(i), i, self.is_empty(i)) for i in range(self.size, 0, -1)]


@dataclass(frozen=True)
class ConeComponent:
    variable: str
    rank: int


@dataclass(frozen=True)
class ConeComponentList:
    main_rank: int
    components: tuple[ConeComponent, ...]
    torsion_support: Poly
    notes: tuple[str, ...] = field(default=())


# ============================================================================
# DIAGONALIZATION
# ============================================================================

def diagonal_form(vars: VarSet, entries: list[Poly]) -> DiagonalForm:
    """Check a user-given chain f_1 | f_2 | ... (trailing zeros count as free rank)."""
    nonzero = [normalize(e) for e in entries if e]
    if any(entries[i] for i in range(len(nonzero), len(entries))):
        raise DivisibilityViolationError("zero entries must come last in a divisibility chain")
    for a, b in zip(nonzero, nonzero[1:]):
        if not divides(a, b):
            raise DivisibilityViolationError(f"{render_poly(a)} does not divide {render_poly(b)}")
    return DiagonalForm(vars, tuple(nonzero), len(entries) - len(nonzero))


def _find_universal_divisor(M: list[list[Poly]], t: int) -> Optional[tuple[int, int]]:
    block = [M[i][j] for i in range(t, len(M)) for j in range(t, len(M[0]))]
    for i in range(t, len(M)):
        for j in range(t, len(M[0])):
            if M[i][j] and all(divides(M[i][j], e) for e in block):
                return i, j
    return None


def diagonalize_local(A: Presentation) -> Union[DiagonalForm, Obstruction]:
    """
    Pivot on an entry dividing the whole remaining block, clear its row and
    column, recurse. Univariate blocks without such an entry are finished by
    Euclidean reduction.
    """
    M = [list(row) for row in A.entries]
    q, p = A.shape
    entries: list[Poly] = []
    provenance: list[str] = []
    t = 0
    while t < min(q, p):
        if not any(M[i][j] for i in range(t, q) for j in range(t, p)):
            break
        pivot = _find_universal_divisor(M, t)
        if pivot is None:
            block = Presentation.from_rows(A.vars, [row[t:] for row in M[t:]])
            if len(used_variables(block.all_entries())) > 1:
                logger.debug(f"Diagonalization of {A.render()} blocked at {block.render()}")
                return Obstruction(block, t, tuple(entries))
            form = smith_normal_form(block, over=UNIVARIATE)
            entries += [normalize(d) for d in form.diagonal if d]
            provenance.append(f"euclidean reduction of the block at {t}")
            break
        i, j = pivot
        if i != t:
            M[t], M[i] = M[i], M[t]
            provenance.append(f"swap rows {t} {i}")
        if j != t:
            for row in M:
                row[t], row[j] = row[j], row[t]
            provenance.append(f"swap columns {t} {j}")
        for i in range(t + 1, q):
            if M[i][t]:
                c = exact_quotient(M[i][t], M[t][t])
                M[i] = [x - c * y for x, y in zip(M[i], M[t])]
                provenance.append(f"row {i} -= ({render_poly(c)}) * row {t}")
        for j in range(t + 1, p):
            if M[t][j]:
                c = exact_quotient(M[t][j], M[t][t])
                for row in M:
                    row[j] = row[j] - c * row[t]
                provenance.append(f"column {j} -= ({render_poly(c)}) * column {t}")
        entries.append(normalize(M[t][t]))
        t += 1
    return DiagonalForm(A.vars, tuple(entries), q - len(entries), tuple(provenance))


def is_diagonal_module(A: Presentation) -> DiagonalTest:
    """Every Fitting ideal principal; reports the first index that is not."""
    chain = rank_profile(A)
    for i, ideal in enumerate(chain.ideals):
        if principal_generator(ideal) is None:
            logger.debug(f"{A.render()} is not diagonal: F_{i} = {ideal.render()}")
            return DiagonalTest(False, i, chain)
    return DiagonalTest(True, None, chain)


# ============================================================================
# FILTRATION
# ============================================================================

def cartier_divisors(D: DiagonalForm) -> tuple[Poly, ...]:
    """Generators of D_1..D_n: D_n = f_1, D_i = f_{n-i+1} / f_{n-i}."""
    f = D.entries
    n = len(f)
    divisors = []
    for i in range(1, n + 1):
        if i == n:
            divisors.append(f[0])
        else:
            divisors.append(normalize(exact_quotient(f[n - i], f[n - i - 1])))
    return tuple(divisors)


def filtration(D: DiagonalForm) -> Filtration:
    vars = D.vars
    n = D.size
    f: list[Monomial] = []
    for entry in D.entries:
        if not entry or not is_term(entry):
            raise NonMonomialEntriesError(f"filtration needs non-zero monomial entries, got {render_poly(entry)}")
        f.append(next(iter(entry.keys())))
    unit = vars.unit_monomial()

    divisors = []
    for i in range(1, n + 1):
        upper = f[n - i]
        lower = f[n - i - 1] if i < n else unit
        ratio = monomial_div(upper, lower)
        if ratio is None:
            raise DivisibilityViolationError(
                f"{render_monomial(lower, vars)} does not divide {render_monomial(upper, vars)}"
            )
        divisors.append(ratio)

    # F_k = f_1 ... f_{n-k} must equal prod_{i>k} D_i^(i-k)
    fitting = []
    for k in range(n):
        direct = reduce(monomial_mul, f[: n - k], unit)
        from_divisors = reduce(
            monomial_mul, (monomial_pow(divisors[i - 1], i - k) for i in range(k + 1, n + 1)), unit
        )
        if direct != from_divisors:
            raise InvariantViolationError(
                f"F_{k} = {render_monomial(direct, vars)} but the divisors give {render_monomial(from_divisors, vars)}"
            )
        fitting.append(direct)

    submodules = []
    for k in range(n + 1):
        base = f[n - k - 1] if k < n else unit
        entries = [monomial_div(m, base) for m in f[n - k:]] if k else []
        submodules.append(tuple(m for m in entries if m != unit))

    logger.debug(
        "Filtration of " + D.render() + ": "
        + ", ".join(f"D_{i}={render_monomial(d, vars)}" for i, d in enumerate(divisors, 1))
    )
    return Filtration(vars, tuple(divisors), tuple(fitting), tuple(submodules), D.free_rank)


# ============================================================================
# CONE COMPONENTS
# ============================================================================

def cone_components(D: DiagonalForm) -> ConeComponentList:
    """
    Main component of rank r (the free rank) plus, for every coordinate
    hyperplane V(v) inside some D_i, a component of rank r + max{i : v | D_i}.
    """
    vars = D.vars
    r = D.free_rank
    notes = []
    if all(e and is_term(e) for e in D.entries):
        generators = [vars.monomial(m) for m in filtration(D).divisors]
    else:
        generators = list(cartier_divisors(D))

    top: dict[str, int] = {}
    for i, generator in enumerate(generators, 1):
        if generator.is_ground:
            continue
        content = monomial_content(generator)
        for name, e in zip(vars.names, content):
            if e:
                top[name] = max(top.get(name, 0), i)
        residual = divide_by_monomial(generator, content)
        if not residual.is_ground:
            notes.append(f"support factorization unsupported for D_{i} = {render_poly(generator)}")

    support = reduce(lambda a, b: a * b, D.entries, vars.one)
    components = tuple(ConeComponent(name, r + top[name]) for name in vars.names if name in top)
    for note in notes:
        logger.warning(f"⚠️ {note}")
    return ConeComponentList(r, components, support, tuple(notes))
