"""
Fitting ideal service - minors, rank profiles, base change and the norm ideal
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Optional

from fitting_forge.config import settings
from fitting_forge.models.ideal import IdealGens
from fitting_forge.models.poly import Poly, VarSet, substitute
from fitting_forge.models.presentation import Presentation
from fitting_forge.services.ideal_service import (
    is_unit_ideal,
    normalize_ideal,
    principal_generator,
)
from fitting_forge.utils.errors import NoValidColumnSubsetError
from fitting_forge.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class FittingChain:
    """F_0, ..., F_q of a q-generated module with its rank profile."""
    ideals: tuple[IdealGens, ...]
    generic_rank: int
    maximal_rank: int

    def __getitem__(self, i: int) -> IdealGens:
        if i < 0:
            return IdealGens(self.ideals[0].vars, ())
        if i >= len(self.ideals):
            return self.ideals[-1]
        return self.ideals[i]

    def nontrivial(self) -> range:
        """Indices strictly between the zero ideals and the unit ideals."""
        return range(self.generic_rank, self.maximal_rank)


@dataclass(frozen=True)
class NormIdeal:
    ideal: IdealGens
    columns: tuple[int, ...]
    generic_rank: int


# ============================================================================
# MINORS
# ============================================================================

class MinorTable:
    """Determinants of square submatrices, memoized by (rows, columns)."""

    def __init__(self, A: Presentation):
        self.A = A
        self._memo: dict[tuple[tuple[int, ...], tuple[int, ...]], Poly] = {}

    def det(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> Poly:
        key = (rows, cols)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if not rows:
            value = self.A.vars.one
        else:
            # cofactor expansion along the first row
            value = self.A.vars.zero
            first, rest = rows[0], rows[1:]
            for position, col in enumerate(cols):
                entry = self.A.entry(first, col)
                if not entry:
                    continue
                cofactor = self.det(rest, cols[:position] + cols[position + 1:])
                if position % 2:
                    value = value - entry * cofactor
                else:
                    value = value + entry * cofactor
        self._memo[key] = value
        return value

    def minors(self, size: int, columns: Optional[tuple[int, ...]] = None) -> list[Poly]:
        q, p = self.A.shape
        column_sets = [columns] if columns is not None else list(combinations(range(p), size))
        result = []
        for rows in combinations(range(q), size):
            for cols in column_sets:
                value = self.det(rows, cols)
                if value:
                    result.append(value)
        return result


def fitting_ideal(A: Presentation, i: int, table: Optional[MinorTable] = None) -> IdealGens:
    """F_i(M): the ideal of (q - i) x (q - i) minors."""
    if i < -1:
        raise ValueError(f"Fitting ideals are indexed from -1, got {i}")
    q, p = A.shape
    size = q - i
    if size <= 0:
        return IdealGens(A.vars, (A.vars.one,))
    if size > min(q, p):
        return IdealGens(A.vars, ())
    if size > settings.MAX_MINOR_SIZE:
        logger.warning(f"⚠️ Computing {size}x{size} minors of a {q}x{p} matrix, beyond the supported size")
    table = table or MinorTable(A)
    return normalize_ideal(IdealGens(A.vars, tuple(table.minors(size))))


def fitting_ideals(A: Presentation) -> tuple[IdealGens, ...]:
    table = MinorTable(A)
    return tuple(fitting_ideal(A, i, table) for i in range(A.rows + 1))


def generic_rank(A: Presentation) -> int:
    for i, ideal in enumerate(fitting_ideals(A)):
        if not ideal.is_zero:
            return i
    return A.rows


def rank_profile(A: Presentation) -> FittingChain:
    """Generic rank = first non-zero F_i, maximal rank = first unit F_i."""
    ideals = fitting_ideals(A)
    generic = next(i for i, ideal in enumerate(ideals) if not ideal.is_zero)
    maximal = next(i for i in range(generic, len(ideals)) if is_unit_ideal(ideals[i]))
    logger.debug(f"Rank profile of {A.render()}: generic={generic}, maximal={maximal}")
    return FittingChain(ideals, generic, maximal)


# ============================================================================
# BASE CHANGE / NORM
# ============================================================================

def base_change(A: Presentation, mapping: Mapping[str, Poly], target: Optional[VarSet] = None) -> Presentation:
    if target is None:
        target = _varset_of_mapping(mapping, A.vars)
    rows = tuple(tuple(substitute(e, mapping, target) for e in row) for row in A.entries)
    return Presentation(target, rows, A.cols)


def _varset_of_mapping(mapping: Mapping[str, Poly], default: VarSet) -> VarSet:
    if not mapping:
        return default
    return VarSet.of(next(iter(mapping.values())))


def norm_ideal(A: Presentation) -> NormIdeal:
    """
    Minors of the first column subset of size q - r whose minor ideal is
    non-zero; this is F_r(M_1) for the rank-preserving sub-presentation M_1.
    """
    r = generic_rank(A)
    q, p = A.shape
    size = q - r
    if size == 0:
        return NormIdeal(IdealGens(A.vars, (A.vars.one,)), (), r)
    table = MinorTable(A)
    for cols in combinations(range(p), size):
        minors = table.minors(size, cols)
        if minors:
            logger.debug(f"Norm of {A.render()} from columns {cols}")
            return NormIdeal(normalize_ideal(IdealGens(A.vars, tuple(minors))), cols, r)
    raise NoValidColumnSubsetError(f"no {size} columns of {A.render()} have a non-zero maximal minor")


def lipman_criterion(A: Presentation) -> bool:
    """The torsion-free part of M is locally free iff F_r(M) is principal (r = generic rank)."""
    r = generic_rank(A)
    generator = principal_generator(fitting_ideal(A, r))
    return generator is not None and bool(generator)
