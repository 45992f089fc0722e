"""
Smith normal form over a principal ideal domain (ZZ or QQ[t])
"""

from dataclasses import dataclass
from typing import Any, Optional

from fitting_forge.models.poly import Poly, VarSet, divides, sorted_terms, total_degree, used_variables
from fitting_forge.models.presentation import Presentation
from fitting_forge.utils.errors import InvariantViolationError, MixedVariableEntriesError
from fitting_forge.utils.logger import get_logger

logger = get_logger(__name__)

INTEGERS = "ZZ"
UNIVARIATE = "univariate"


class IntegerDomain:
    name = INTEGERS
    zero = 0
    one = 1

    def size(self, a: int) -> int:
        return abs(a)

    def divmod(self, a: int, b: int) -> tuple[int, int]:
        return divmod(a, b)

    def divides(self, a: int, b: int) -> bool:
        return b == 0 if a == 0 else b % a == 0

    def unit_normal(self, a: int) -> int:
        return -1 if a < 0 else 1

    def inverse(self, u: int) -> int:
        return u


class UnivariateDomain:
    """QQ[t] embedded in a VarSet ring; entries use at most one variable."""
    name = UNIVARIATE

    def __init__(self, vars: VarSet):
        self.vars = vars
        self.zero = vars.zero
        self.one = vars.one

    def size(self, a: Poly) -> int:
        return total_degree(a)

    def divmod(self, a: Poly, b: Poly) -> tuple[Poly, Poly]:
        return a.div(b)

    def divides(self, a: Poly, b: Poly) -> bool:
        return divides(a, b)

    def unit_normal(self, a: Poly) -> Poly:
        lead = sorted_terms(a)[0][1]
        return self.vars.ring.ground_new(1 / lead)

    def inverse(self, u: Poly) -> Poly:
        return self.vars.ring.ground_new(1 / u.LC)


@dataclass(frozen=True)
class SmithForm:
    """A = left * Diag(diagonal) * right with d_1 | d_2 | ..."""
    domain: str
    variable: Optional[str]
    diagonal: tuple[Any, ...]
    left: tuple[tuple[Any, ...], ...]
    right: tuple[tuple[Any, ...], ...]
    shape: tuple[int, int]


def _is_integer_matrix(A: Presentation) -> bool:
    for entry in A.all_entries():
        if not entry:
            continue
        if not entry.is_ground or int(entry.LC.denominator) != 1:
            return False
    return True


def _to_int(entry: Poly) -> int:
    return int(entry.LC.numerator) if entry else 0


def _matmul(X, Y, zero):
    inner = len(Y)
    cols = len(Y[0]) if Y else 0
    return [[sum((X[i][k] * Y[k][j] for k in range(inner)), zero) for j in range(cols)] for i in range(len(X))]


class _SmithReduction:
    """Row/column reduction tracking the inverse transforms."""

    def __init__(self, M, domain):
        self.M = M
        self.dom = domain
        self.q = len(M)
        self.p = len(M[0]) if M else 0
        self.L = [[domain.one if i == j else domain.zero for j in range(self.q)] for i in range(self.q)]
        self.R = [[domain.one if i == j else domain.zero for j in range(self.p)] for i in range(self.p)]

    # ===== elementary operations (M <- E M F, L <- L E^-1, R <- F^-1 R) =====

    def row_swap(self, a: int, b: int) -> None:
        if a == b:
            return
        self.M[a], self.M[b] = self.M[b], self.M[a]
        for row in self.L:
            row[a], row[b] = row[b], row[a]

    def row_add(self, i: int, j: int, c) -> None:
        """row_i += c * row_j"""
        self.M[i] = [x + c * y for x, y in zip(self.M[i], self.M[j])]
        for row in self.L:
            row[j] = row[j] - c * row[i]

    def row_scale(self, i: int, u) -> None:
        self.M[i] = [x * u for x in self.M[i]]
        inverse = self.dom.inverse(u)
        for row in self.L:
            row[i] = row[i] * inverse

    def col_swap(self, a: int, b: int) -> None:
        if a == b:
            return
        for row in self.M:
            row[a], row[b] = row[b], row[a]
        self.R[a], self.R[b] = self.R[b], self.R[a]

    def col_add(self, i: int, j: int, c) -> None:
        """col_i += c * col_j"""
        for row in self.M:
            row[i] = row[i] + c * row[j]
        self.R[j] = [y - c * x for x, y in zip(self.R[i], self.R[j])]

    # ===== reduction =====

    def _move_to_pivot(self, t: int, i: int, j: int) -> None:
        self.row_swap(t, i)
        self.col_swap(t, j)

    def run(self) -> list:
        dom = self.dom
        M = self.M
        diagonal = []
        for t in range(min(self.q, self.p)):
            nonzero = [(i, j) for i in range(t, self.q) for j in range(t, self.p) if M[i][j]]
            if not nonzero:
                break
            self._move_to_pivot(t, *min(nonzero, key=lambda ij: dom.size(M[ij[0]][ij[1]])))
            while True:
                candidates = [(i, t) for i in range(t, self.q) if M[i][t]]
                candidates += [(t, j) for j in range(t + 1, self.p) if M[t][j]]
                self._move_to_pivot(t, *min(candidates, key=lambda ij: dom.size(M[ij[0]][ij[1]])))
                clean = True
                for i in range(t + 1, self.q):
                    if M[i][t]:
                        quotient, _ = dom.divmod(M[i][t], M[t][t])
                        self.row_add(i, t, -quotient)
                        clean = clean and not M[i][t]
                for j in range(t + 1, self.p):
                    if M[t][j]:
                        quotient, _ = dom.divmod(M[t][j], M[t][t])
                        self.col_add(j, t, -quotient)
                        clean = clean and not M[t][j]
                if not clean:
                    continue
                stray = next(
                    (i for i in range(t + 1, self.q) for j in range(t + 1, self.p)
                     if not dom.divides(M[t][t], M[i][j])),
                    None,
                )
                if stray is None:
                    break
                self.row_add(t, stray, dom.one)
            self.row_scale(t, dom.unit_normal(M[t][t]))
            diagonal.append(M[t][t])
        diagonal += [dom.zero] * (min(self.q, self.p) - len(diagonal))
        return diagonal


def smith_normal_form(A: Presentation, over: Optional[str] = None) -> SmithForm:
    """
    Smith normal form of a matrix whose entries are integers (``over='ZZ'``)
    or polynomials in one common variable (``over='univariate'``). Without
    ``over``, integer-valued constant matrices are reduced over ZZ.
    """
    used = used_variables(A.all_entries())
    if len(used) > 1:
        names = ", ".join(A.vars.names[i] for i in sorted(used))
        raise MixedVariableEntriesError(f"Smith normal form needs entries in one variable, found {names}")
    if over is None:
        over = INTEGERS if _is_integer_matrix(A) else UNIVARIATE
    if over == INTEGERS:
        if not _is_integer_matrix(A):
            raise MixedVariableEntriesError(f"{A.render()} is not an integer matrix")
        domain = IntegerDomain()
        original = [[_to_int(e) for e in row] for row in A.entries]
        variable = None
    else:
        domain = UnivariateDomain(A.vars)
        original = [list(row) for row in A.entries]
        variable = A.vars.names[min(used)] if used else None

    reduction = _SmithReduction([list(row) for row in original], domain)
    diagonal = reduction.run()
    form = SmithForm(
        domain=domain.name,
        variable=variable,
        diagonal=tuple(diagonal),
        left=tuple(tuple(row) for row in reduction.L),
        right=tuple(tuple(row) for row in reduction.R),
        shape=A.shape,
    )
    if A.cols:
        product = _matmul(_matmul(reduction.L, form_matrix(form, domain.zero), domain.zero), reduction.R, domain.zero)
        if product != original:
            raise InvariantViolationError(f"Smith transforms do not reproduce {A.render()}")
    logger.debug(f"Smith normal form of {A.render()} over {domain.name}: {diagonal}")
    return form


def form_matrix(form: SmithForm, zero) -> list[list[Any]]:
    q, p = form.shape
    return [[form.diagonal[i] if i == j else zero for j in range(p)] for i in range(q)]
