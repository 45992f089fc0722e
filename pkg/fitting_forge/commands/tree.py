"""
Tree Commands
=============
``tree`` (equations, ideals and the blow-up process of a weighted tree) and
``moody`` (domination test for two monomial ideals).
"""

from fitting_forge.commands.common import CHART_NAMING_NOTE, budget, resolve_vars
from fitting_forge.config import settings
from fitting_forge.models.ideal import parse_ideal
from fitting_forge.models.poly import render_monomial, render_poly
from fitting_forge.models.tree import WTree, parse_tree
from fitting_forge.schemas.reports import MoodyResultOut, Report, TreeChartOut, TreeNodeOut, TreeResult
from fitting_forge.services.ideal_service import as_monomial_ideal, moody_dominates
from fitting_forge.services.tree_service import (
    TreeChart,
    equations_phi,
    monoidal_transforms,
    tree_ideals,
    tree_varset,
    vz_process,
)

NO_WITNESS_NOTE = "no monomial witness up to alpha_max; a non-monomial witness is not ruled out"


def register(subparsers, parent) -> None:
    tree = subparsers.add_parser("tree", parents=[parent], help="weighted tree equations and blow-up process")
    tree.add_argument("tree")
    tree.add_argument("--max-depth", type=int, default=None)
    tree.add_argument("--alpha-max", type=int, default=None)
    tree.set_defaults(handler=run_tree)

    moody = subparsers.add_parser("moody", parents=[parent], help="does Bl_J dominate Bl_I")
    moody.add_argument("ideal_i")
    moody.add_argument("ideal_j")
    moody.add_argument("--alpha-max", type=int, default=None)
    moody.set_defaults(handler=run_moody)


def tree_node_out(g: WTree) -> TreeNodeOut:
    return TreeNodeOut.model_validate(g.as_dict())


def tree_chart_out(node: TreeChart) -> TreeChartOut:
    vars = node.chart.vars
    return TreeChartOut(
        label=node.chart.label(),
        tree=tree_node_out(node.tree),
        tree_text=node.tree.render(),
        path_tree=node.path_tree,
        phi_content=render_monomial(node.phi.content, vars),
        phi_residual=render_poly(node.phi.residual),
        j_content=render_monomial(node.j.content, vars),
        j_residual=node.j.residual.render(),
        principal=node.principal,
        snc=node.snc,
        advancing_identity=node.advancing_identity,
        j_identity=node.j_identity,
        center=list(node.center) if node.center else None,
        children=[tree_chart_out(child) for child in node.children],
    )


def run_tree(args) -> Report:
    g = parse_tree(args.tree)
    vars = tree_varset(g)
    ideals = tree_ideals(g, vars)
    max_depth = budget(args.max_depth, "--max-depth", settings.DEFAULT_MAX_DEPTH)
    alpha_max = budget(args.alpha_max, "--alpha-max", settings.DEFAULT_ALPHA_MAX)
    process = vz_process(g, max_depth)
    warnings = [CHART_NAMING_NOTE]
    moody = None
    if ideals.I is not None:
        outcome = moody_dominates(ideals.I, ideals.J, alpha_max)
        moody = MoodyResultOut(
            dominates=outcome.dominates,
            alpha=outcome.alpha,
            witness=outcome.witness.render() if outcome.witness else None,
            alpha_max=alpha_max,
        )
        if not outcome.dominates:
            warnings.append(NO_WITNESS_NOTE)
    for chart in process.terminal_charts():
        if not chart.principal or not chart.snc:
            warnings.append(f"chart {chart.chart.label()}: principal={chart.principal}, snc={chart.snc}")
    result = TreeResult(
        tree=tree_node_out(g),
        phi=render_poly(equations_phi(g, vars)),
        I=ideals.I.render() if ideals.I is not None else None,
        J=ideals.J.render(),
        monoidal_transforms={a: t.render() for a, t in monoidal_transforms(g)},
        process=tree_chart_out(process),
        moody=moody,
    )
    return Report(
        command="tree",
        vars=list(vars.names),
        inputs={"tree": g.render()},
        results=result.model_dump(),
        warnings=warnings,
    )


def run_moody(args) -> Report:
    vars = resolve_vars(args.vars, [args.ideal_i, args.ideal_j])
    I = as_monomial_ideal(parse_ideal(args.ideal_i, vars))
    J = as_monomial_ideal(parse_ideal(args.ideal_j, vars))
    alpha_max = budget(args.alpha_max, "--alpha-max", settings.DEFAULT_ALPHA_MAX)
    outcome = moody_dominates(I, J, alpha_max)
    result = MoodyResultOut(
        dominates=outcome.dominates,
        alpha=outcome.alpha,
        witness=outcome.witness.render() if outcome.witness else None,
        alpha_max=alpha_max,
    )
    return Report(
        command="moody",
        vars=list(vars.names),
        inputs={"I": I.render(), "J": J.render()},
        results=result.model_dump(),
        warnings=[] if outcome.dominates else [NO_WITNESS_NOTE],
    )
