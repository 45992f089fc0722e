from fitting_forge.models.poly import Monomial, Poly, VarSet, parse_poly, render_poly
from fitting_forge.models.ideal import IdealGens, MonomialIdeal, parse_ideal
from fitting_forge.models.presentation import Presentation, parse_diagonal, parse_matrix
from fitting_forge.models.chart import Chart, ChartNode, ChartStatus, ChartTree
from fitting_forge.models.tree import WTree, parse_tree

__all__ = [
    "Monomial",
    "Poly",
    "VarSet",
    "parse_poly",
    "render_poly",
    "IdealGens",
    "MonomialIdeal",
    "parse_ideal",
    "Presentation",
    "parse_diagonal",
    "parse_matrix",
    "Chart",
    "ChartNode",
    "ChartStatus",
    "ChartTree",
    "WTree",
    "parse_tree",
]
