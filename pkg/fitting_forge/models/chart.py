"""
Blow-up Chart Models
====================
Affine charts of iterated blow-ups along variable centers, and the chart
tree grown by the Hu-Li driver. Chart coordinates reuse the root variable
names (z_b in a chart stands for the primed coordinate z_b').
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Iterator, Optional, Union

from fitting_forge.models.poly import Monomial, Poly, VarSet, render_monomial, substitute
from fitting_forge.models.presentation import Presentation

if TYPE_CHECKING:
    from fitting_forge.services.diagonal_service import DiagonalForm, Obstruction
    from fitting_forge.services.fitting_service import FittingChain


# ============================================================================
# ENUMS
# ============================================================================

class ChartStatus(str, Enum):
    """Status of a chart node"""
    OPEN = "open"                              # budget ran out before certification
    DIAGONAL_CERTIFIED = "diagonal-certified"  # every Fitting ideal principal
    UNSUPPORTED_CENTER = "unsupported-center"  # next center is not content * variables


# ============================================================================
# MODELS
# ============================================================================

def chart_step(vars: VarSet, center: tuple[str, ...], chosen: str) -> dict[str, Poly]:
    """The substitution of one chart: u -> chosen * u for the other center variables."""
    v = vars.gen(chosen)
    return {u: v * vars.gen(u) for u in center if u != chosen}


@dataclass(frozen=True)
class Chart:
    vars: VarSet
    subst: tuple[tuple[str, Poly], ...]
    exceptional: tuple[Monomial, ...] = ()
    path: tuple[tuple[tuple[str, ...], str], ...] = ()

    @classmethod
    def identity(cls, vars: VarSet) -> "Chart":
        return cls(vars, tuple((name, vars.gen(name)) for name in vars.names))

    @property
    def mapping(self) -> dict[str, Poly]:
        return dict(self.subst)

    def pull(self, p: Poly) -> Poly:
        return substitute(p, self.mapping, self.vars)

    def child(self, center: tuple[str, ...], chosen: str) -> "Chart":
        step = chart_step(self.vars, center, chosen)
        subst = tuple((name, substitute(image, step, self.vars)) for name, image in self.subst)
        return Chart(
            self.vars,
            subst,
            self.exceptional + (self.vars.variable_monomial(chosen),),
            self.path + ((center, chosen),),
        )

    def label(self) -> str:
        return "/".join(chosen for _, chosen in self.path) or "root"

    def exceptional_text(self) -> list[str]:
        return [render_monomial(m, self.vars) for m in self.exceptional]


@dataclass
class ChartNode:
    chart: Chart
    presentation: Presentation
    depth: int
    status: ChartStatus = ChartStatus.OPEN
    chain: Optional["FittingChain"] = None
    diagonal: Union["DiagonalForm", "Obstruction", None] = None
    generic_rank: Optional[int] = None
    center: Optional[tuple[str, ...]] = None
    center_index: Optional[int] = None
    center_content: Optional[Monomial] = None
    note: Optional[str] = None
    children: list["ChartNode"] = field(default_factory=list)

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass
class ChartTree:
    root: ChartNode
    root_rank: int
    max_rounds: int
    rounds: list[str] = field(default_factory=list)

    def nodes(self) -> Iterator[ChartNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def leaves(self) -> list[ChartNode]:
        return [node for node in self.nodes() if node.is_leaf]

    def find(self, label: str) -> Union[ChartNode, None]:
        return next((node for node in self.nodes() if node.chart.label() == label), None)
