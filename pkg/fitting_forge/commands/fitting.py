"""
Fitting Commands
================
``fitting``, ``norm`` and ``snf`` on a presentation matrix.
"""

from fitting_forge.commands.common import resolve_vars
from fitting_forge.models.poly import render_poly
from fitting_forge.models.presentation import parse_matrix
from fitting_forge.schemas.reports import FittingResult, NormResult, Report, SmithResult
from fitting_forge.services.fitting_service import lipman_criterion, norm_ideal, rank_profile
from fitting_forge.services.smith_service import smith_normal_form
from fitting_forge.utils.errors import PrincipalityUnsupported


def _render_entry(value) -> str:
    return str(value) if isinstance(value, int) else render_poly(value)


def register(subparsers, parent) -> None:
    fitting = subparsers.add_parser("fitting", parents=[parent], help="Fitting ideals and rank profile")
    fitting.add_argument("matrix")
    fitting.set_defaults(handler=run_fitting)

    norm = subparsers.add_parser("norm", parents=[parent], help="norm ideal of the module")
    norm.add_argument("matrix")
    norm.set_defaults(handler=run_norm)

    snf = subparsers.add_parser("snf", parents=[parent], help="Smith normal form (ZZ or one variable)")
    snf.add_argument("matrix")
    snf.set_defaults(handler=run_snf)


def run_fitting(args) -> Report:
    vars = resolve_vars(args.vars, [args.matrix])
    A = parse_matrix(args.matrix, vars)
    chain = rank_profile(A)
    warnings = []
    try:
        lipman = lipman_criterion(A)
    except PrincipalityUnsupported as e:
        lipman = None
        warnings.append(f"{e.name}: {e.message}")
    result = FittingResult(
        ideals=[ideal.render() for ideal in chain.ideals],
        generic_rank=chain.generic_rank,
        maximal_rank=chain.maximal_rank,
        lipman_locally_free=lipman,
    )
    return Report(
        command="fitting",
        vars=list(vars.names),
        inputs={"matrix": A.render()},
        results=result.model_dump(),
        warnings=warnings,
    )


def run_norm(args) -> Report:
    vars = resolve_vars(args.vars, [args.matrix])
    A = parse_matrix(args.matrix, vars)
    norm = norm_ideal(A)
    result = NormResult(ideal=norm.ideal.render(), columns=list(norm.columns), generic_rank=norm.generic_rank)
    return Report(
        command="norm",
        vars=list(vars.names),
        inputs={"matrix": A.render()},
        results=result.model_dump(),
        warnings=["the norm is defined up to fractional-ideal equivalence; columns pick the representative"],
    )


def run_snf(args) -> Report:
    vars = resolve_vars(args.vars, [args.matrix])
    A = parse_matrix(args.matrix, vars)
    form = smith_normal_form(A)
    result = SmithResult(
        domain=form.domain,
        variable=form.variable,
        diagonal=[_render_entry(d) for d in form.diagonal],
        left=[[_render_entry(e) for e in row] for row in form.left],
        right=[[_render_entry(e) for e in row] for row in form.right],
    )
    return Report(command="snf", vars=list(vars.names), inputs={"matrix": A.render()}, results=result.model_dump())
