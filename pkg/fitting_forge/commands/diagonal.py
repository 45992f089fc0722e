"""
Diagonal Commands
=================
``diagonalize`` on a matrix; ``filtration`` and ``cone`` on diagonal entries.
"""

from fitting_forge.commands.common import resolve_vars
from fitting_forge.models.poly import render_monomial, render_poly
from fitting_forge.models.presentation import parse_diagonal, parse_matrix
from fitting_forge.schemas.reports import (
    ComponentOut,
    ConeResult,
    DiagonalizeResult,
    DivisorOut,
    FiltrationResult,
    Report,
)
from fitting_forge.services.diagonal_service import (
    DiagonalForm,
    cone_components,
    diagonal_form,
    diagonalize_local,
    filtration,
    is_diagonal_module,
)
from fitting_forge.utils.errors import PrincipalityUnsupported, UnitDetectionUnsupported


def register(subparsers, parent) -> None:
    diagonalize = subparsers.add_parser("diagonalize", parents=[parent], help="local diagonalization")
    diagonalize.add_argument("matrix")
    diagonalize.set_defaults(handler=run_diagonalize)

    filtration_parser = subparsers.add_parser("filtration", parents=[parent], help="divisors D_i of Diag(f_1, ...)")
    filtration_parser.add_argument("entries")
    filtration_parser.set_defaults(handler=run_filtration)

    cone = subparsers.add_parser("cone", parents=[parent], help="abelian cone components of Diag(f_1, ...)")
    cone.add_argument("entries")
    cone.set_defaults(handler=run_cone)


def run_diagonalize(args) -> Report:
    vars = resolve_vars(args.vars, [args.matrix])
    A = parse_matrix(args.matrix, vars)
    outcome = diagonalize_local(A)
    warnings = []
    if isinstance(outcome, DiagonalForm):
        result = DiagonalizeResult(
            diagonalized=True,
            entries=[render_poly(e) for e in outcome.entries],
            free_rank=outcome.free_rank,
            provenance=list(outcome.provenance),
        )
    else:
        result = DiagonalizeResult(
            diagonalized=False,
            entries=[render_poly(e) for e in outcome.partial],
            obstruction=outcome.block.render(),
        )
        warnings.append("no entry divides the remaining block; a blow-up is needed")
    try:
        test = is_diagonal_module(A)
        result.diagonal_module = test.diagonal
        result.failing_index = test.failing_index
    except (UnitDetectionUnsupported, PrincipalityUnsupported) as e:
        warnings.append(f"{e.name}: {e.message}")
    return Report(
        command="diagonalize",
        vars=list(vars.names),
        inputs={"matrix": A.render()},
        results=result.model_dump(),
        warnings=warnings,
    )


def _diagonal_input(args) -> DiagonalForm:
    vars = resolve_vars(args.vars, [args.entries])
    return diagonal_form(vars, parse_diagonal(args.entries, vars))


def run_filtration(args) -> Report:
    D = _diagonal_input(args)
    F = filtration(D)
    result = FiltrationResult(
        divisors=[
            DivisorOut(index=i, generator=render_monomial(d, D.vars), rank=rank, empty=empty)
            for i, d, rank, empty in F.pieces()
        ],
        fitting=[render_monomial(m, D.vars) for m in F.fitting],
        submodules=[[render_monomial(m, D.vars) for m in sub] for sub in F.submodules],
        free_rank=F.free_rank,
    )
    return Report(
        command="filtration",
        vars=list(D.vars.names),
        inputs={"entries": D.render()},
        results=result.model_dump(),
    )


def run_cone(args) -> Report:
    D = _diagonal_input(args)
    cone = cone_components(D)
    result = ConeResult(
        main_rank=cone.main_rank,
        components=[ComponentOut(support=f"V({c.variable})", rank=c.rank) for c in cone.components],
        torsion_support=render_poly(cone.torsion_support),
        notes=list(cone.notes),
    )
    return Report(
        command="cone",
        vars=list(D.vars.names),
        inputs={"entries": D.render()},
        results=result.model_dump(),
        warnings=list(cone.notes),
    )
