"""
Blow-up Commands
================
``blowup`` runs the Hu-Li driver and the Rossi (norm) blow-up on a matrix.
"""

from fitting_forge.commands.common import CHART_NAMING_NOTE, budget, resolve_vars
from fitting_forge.config import settings
from fitting_forge.models.chart import ChartNode, ChartStatus
from fitting_forge.models.poly import render_monomial, render_poly
from fitting_forge.models.presentation import parse_matrix
from fitting_forge.schemas.reports import BlowupResult, ChartNodeOut, Report, RossiChartOut, RossiOut
from fitting_forge.services.blowup_service import (
    RossiReport,
    diagonal_certificate,
    huli_driver,
    rossi_charts,
)
from fitting_forge.services.diagonal_service import DiagonalForm
from fitting_forge.utils.errors import ComputationError


def register(subparsers, parent) -> None:
    blowup = subparsers.add_parser("blowup", parents=[parent], help="Hu-Li iterated blow-up chart tree")
    blowup.add_argument("matrix")
    blowup.add_argument("--max-rounds", type=int, default=None, help="blow-ups per branch")
    blowup.set_defaults(handler=run_blowup)


def chart_node_out(node: ChartNode) -> ChartNodeOut:
    chart = node.chart
    diagonal = None
    if isinstance(node.diagonal, DiagonalForm):
        diagonal = node.diagonal.render()
    return ChartNodeOut(
        label=chart.label(),
        path=[list(center) + [chosen] for center, chosen in chart.path],
        substitution={name: render_poly(image) for name, image in chart.subst},
        exceptional=chart.exceptional_text(),
        fitting=[ideal.render() for ideal in node.chain.ideals] if node.chain else [],
        generic_rank=node.generic_rank,
        status=node.status.value,
        center=list(node.center) if node.center else None,
        diagonal=diagonal,
        note=node.note,
        children=[chart_node_out(child) for child in node.children],
    )


def rossi_out(rossi: RossiReport) -> RossiOut:
    return RossiOut(
        norm=rossi.norm.ideal.render(),
        center=list(rossi.center) if rossi.center is not None else None,
        charts=[
            RossiChartOut(
                label=entry.chart.label(),
                content=render_monomial(entry.pulled.content, entry.chart.vars),
                residual=entry.pulled.residual.render(),
                principal=entry.principal,
                locally_free=entry.locally_free,
            )
            for entry in rossi.charts
        ],
        note=rossi.note,
    )


def run_blowup(args) -> Report:
    vars = resolve_vars(args.vars, [args.matrix])
    A = parse_matrix(args.matrix, vars)
    max_rounds = budget(args.max_rounds, "--max-rounds", settings.DEFAULT_MAX_ROUNDS)
    tree = huli_driver(A, max_rounds)
    certificate = diagonal_certificate(tree)
    warnings = [CHART_NAMING_NOTE]
    for leaf in tree.leaves():
        if leaf.status != ChartStatus.DIAGONAL_CERTIFIED:
            warnings.append(f"chart {leaf.chart.label()} is {leaf.status.value}: {leaf.note}")
    try:
        rossi = rossi_out(rossi_charts(A))
    except ComputationError as e:
        rossi = None
        warnings.append(f"{e.name}: {e.message}")
    result = BlowupResult(
        root_generic_rank=tree.root_rank,
        certified=certificate.certified,
        failures=[list(failure) for failure in certificate.failures],
        rounds=tree.rounds,
        tree=chart_node_out(tree.root),
        rossi=rossi,
    )
    return Report(
        command="blowup",
        vars=list(vars.names),
        inputs={"matrix": A.render(), "max_rounds": max_rounds},
        results=result.model_dump(),
        warnings=warnings,
    )
