"""
Presentation Models
===================
A q x p polynomial matrix presenting M = coker(R^p -> R^q).
"""

import re
from dataclasses import dataclass
from typing import Sequence

from fitting_forge.models.poly import Poly, VarSet, parse_poly, render_poly
from fitting_forge.utils.errors import MatrixSyntaxError


@dataclass(frozen=True)
class Presentation:
    vars: VarSet
    entries: tuple[tuple[Poly, ...], ...]
    cols: int

    def __post_init__(self):
        if not self.entries:
            raise MatrixSyntaxError("a presentation needs at least one row (generator)")
        for row in self.entries:
            if len(row) != self.cols:
                raise MatrixSyntaxError(f"row of length {len(row)} in a matrix with {self.cols} columns")

    @classmethod
    def from_rows(cls, vars: VarSet, rows: Sequence[Sequence[Poly]]) -> "Presentation":
        rows = tuple(tuple(row) for row in rows)
        cols = len(rows[0]) if rows else 0
        return cls(vars, rows, cols)

    @classmethod
    def diagonal(cls, vars: VarSet, entries: Sequence[Poly], rows: int = None) -> "Presentation":
        """Diag(f_1, ..., f_n), padded with zero rows up to ``rows``."""
        rows = len(entries) if rows is None else rows
        zero = vars.zero
        matrix = [
            [entries[j] if i == j else zero for j in range(len(entries))]
            for i in range(rows)
        ]
        return cls(vars, tuple(tuple(r) for r in matrix), len(entries))

    @classmethod
    def free(cls, vars: VarSet, rank: int) -> "Presentation":
        return cls(vars, tuple(() for _ in range(rank)), 0)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def entry(self, i: int, j: int) -> Poly:
        return self.entries[i][j]

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(row[j] for row in self.entries)

    def all_entries(self) -> list[Poly]:
        return [e for row in self.entries for e in row]

    def render(self) -> str:
        return "[" + ", ".join(
            "[" + ", ".join(render_poly(e) for e in row) + "]" for row in self.entries
        ) + "]"

    def __str__(self) -> str:
        return self.render()


def direct_sum(A: Presentation, B: Presentation) -> Presentation:
    """Block-diagonal presentation of coker(A) + coker(B)."""
    zero = A.vars.zero
    rows = [list(row) + [zero] * B.cols for row in A.entries]
    rows += [[zero] * A.cols + list(row) for row in B.entries]
    return Presentation(A.vars, tuple(tuple(r) for r in rows), A.cols + B.cols)


_ROW = re.compile(r"\[([^\[\]]*)\]")


def parse_matrix(text: str, vars: VarSet) -> Presentation:
    """Read ``[[y, z, 0], [-x, 0, z]]``; ``[[], []]`` presents a free module."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise MatrixSyntaxError(f"a matrix is written as '[[a, b], [c, d]]', got {text!r}")
    inner = body[1:-1].strip()
    rows = []
    position = 0
    for match in _ROW.finditer(inner):
        gap = inner[position:match.start()].strip()
        if gap != ("," if rows else ""):
            raise MatrixSyntaxError(f"unexpected {gap!r} between rows in {text!r}")
        position = match.end()
        cells = match.group(1).strip()
        if not cells:
            rows.append([])
            continue
        row = []
        for cell in cells.split(","):
            if not cell.strip():
                raise MatrixSyntaxError(f"empty entry in row {len(rows) + 1} of {text!r}")
            row.append(parse_poly(cell, vars))
        rows.append(row)
    if inner[position:].strip():
        raise MatrixSyntaxError(f"trailing text {inner[position:].strip()!r} in {text!r}")
    if not rows:
        raise MatrixSyntaxError(f"no rows in {text!r}")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise MatrixSyntaxError(f"rows of different lengths {sorted(widths)} in {text!r}")
    return Presentation.from_rows(vars, rows)


def parse_diagonal(text: str, vars: VarSet) -> list[Poly]:
    """Read comma-separated diagonal entries ``x, x, x*y``."""
    pieces = [piece for piece in text.split(",")]
    if not text.strip() or any(not piece.strip() for piece in pieces):
        raise MatrixSyntaxError(f"diagonal entries are written as 'f1, f2, ...', got {text!r}")
    return [parse_poly(piece, vars) for piece in pieces]
