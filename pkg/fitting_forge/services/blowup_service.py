"""
Blow-up service - variable-center charts, exceptional factoring, the Hu-Li
iterated blow-up driver and the Rossi (norm) blow-up
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce
from typing import NamedTuple, Optional, Sequence

from sympy.polys.monomials import monomial_gcd

from fitting_forge.config import settings
from fitting_forge.models.chart import Chart, ChartNode, ChartStatus, ChartTree
from fitting_forge.models.ideal import IdealGens
from fitting_forge.models.poly import (
    Monomial,
    divide_by_monomial,
    monomial_content,
    render_monomial,
)
from fitting_forge.models.presentation import Presentation
from fitting_forge.services.diagonal_service import diagonalize_local
from fitting_forge.services.fitting_service import (
    NormIdeal,
    base_change,
    generic_rank,
    lipman_criterion,
    norm_ideal,
    rank_profile,
)
from fitting_forge.services.ideal_service import (
    as_monomial_ideal,
    divide_out_gcd,
    generators_gcd,
    normalize_ideal,
    principal_generator,
)
from fitting_forge.utils.errors import (
    EmptyCenterError,
    FittingForgeError,
    InvariantViolationError,
    PrincipalityUnsupported,
    UnitDetectionUnsupported,
)
from fitting_forge.utils.logger import get_logger

logger = get_logger(__name__)


class PulledIdeal(NamedTuple):
    """Total transform = content * residual."""
    content: Monomial
    residual: IdealGens
    total: IdealGens


@dataclass(frozen=True)
class Certificate:
    certified: bool
    failures: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class RossiChart:
    chart: Chart
    pulled: PulledIdeal
    principal: bool
    locally_free: bool


@dataclass(frozen=True)
class RossiReport:
    norm: NormIdeal
    content: Optional[Monomial]
    center: Optional[tuple[str, ...]]
    charts: tuple[RossiChart, ...]
    note: Optional[str] = None


# ============================================================================
# CHARTS
# ============================================================================

def blowup_variable_center(c: Chart, center_vars: Sequence[str]) -> list[Chart]:
    """One chart per center variable v; the other center variables u become v*u."""
    center = tuple(center_vars)
    if not center:
        raise EmptyCenterError("cannot blow up along an empty center")
    for name in center:
        c.vars.index(name)
    if len(set(center)) != len(center):
        raise InvariantViolationError(f"center variables must be distinct, got {center}")
    return [c.child(center, v) for v in center]


def pull_and_factor(c: Chart, I: IdealGens) -> PulledIdeal:
    total = normalize_ideal(IdealGens(c.vars, tuple(c.pull(g) for g in I.generators)))
    if total.is_zero:
        return PulledIdeal(c.vars.unit_monomial(), total, total)
    content = reduce(monomial_gcd, (monomial_content(g) for g in total.generators))
    residual = normalize_ideal(
        IdealGens(c.vars, tuple(divide_by_monomial(g, content) for g in total.generators))
    )
    return PulledIdeal(content, residual, total)


def _variable_center(ideal: IdealGens) -> Optional[tuple[Monomial, tuple[str, ...]]]:
    """Split a monomial ideal as content * (distinct variables), if it is one."""
    if not ideal.monomial_flag:
        return None
    monomial_ideal = as_monomial_ideal(ideal)
    content = generators_gcd(monomial_ideal)
    residual = divide_out_gcd(monomial_ideal)
    if residual.is_unit:
        return content, ()
    names = []
    for m in residual.min_gens:
        if sum(m) != 1:
            return None
        names.append(ideal.vars.names[m.index(1)])
    return content, tuple(names)


# ============================================================================
# HU-LI DRIVER
# ============================================================================

class _HuLiRun:
    def __init__(self, A: Presentation, max_rounds: int):
        self.A = A
        self.max_rounds = max_rounds
        self.root_rank = generic_rank(A)

    def examine(self, node: ChartNode) -> list[ChartNode]:
        """Certify ``node`` or expand it by one blow-up; returns its children."""
        label = node.chart.label()
        try:
            chain = rank_profile(node.presentation)
            node.chain = chain
            node.generic_rank = chain.generic_rank
            if chain.generic_rank != self.root_rank:
                raise InvariantViolationError(
                    f"chart {label} has generic rank {chain.generic_rank}, the root has {self.root_rank}"
                )
            failing = next((i for i in chain.nontrivial() if principal_generator(chain[i]) is None), None)
        except (UnitDetectionUnsupported, PrincipalityUnsupported) as e:
            node.status = ChartStatus.UNSUPPORTED_CENTER
            node.note = f"{e.name}: {e.message}"
            logger.warning(f"⚠️ Chart {label}: {node.note}")
            return []

        if failing is None:
            node.status = ChartStatus.DIAGONAL_CERTIFIED
            node.diagonal = diagonalize_local(node.presentation)
            logger.debug(f"Chart {label} certified")
            return []

        if node.depth >= self.max_rounds:
            node.note = f"round budget {self.max_rounds} exhausted with F_{failing} not principal"
            logger.warning(f"⚠️ Chart {label}: {node.note}")
            return []

        split = _variable_center(chain[failing])
        if split is None:
            node.status = ChartStatus.UNSUPPORTED_CENTER
            node.note = f"F_{failing} = {chain[failing].render()} is not a monomial times distinct variables"
            logger.warning(f"⚠️ Chart {label}: {node.note}")
            return []

        content, center = split
        node.center, node.center_index, node.center_content = center, failing, content
        children = []
        for chart in blowup_variable_center(node.chart, center):
            pulled = base_change(self.A, chart.mapping, chart.vars)
            children.append(ChartNode(chart, pulled, node.depth + 1))
        node.children = children
        return children

    def run(self, workers: int) -> ChartTree:
        root = ChartNode(Chart.identity(self.A.vars), self.A, 0)
        tree = ChartTree(root, self.root_rank, self.max_rounds)
        frontier = [root]
        with ThreadPoolExecutor(max_workers=workers) as executor:
            while frontier:
                expansions = list(executor.map(self.examine, frontier))
                for node in frontier:
                    if node.center is not None:
                        tree.rounds.append(
                            f"round {node.depth + 1}: chart {node.chart.label()} blows up "
                            f"F_{node.center_index} center "
                            f"{render_monomial(node.center_content, node.chart.vars)}*({', '.join(node.center)})"
                        )
                frontier = [child for children in expansions for child in children]
                if frontier:
                    logger.info(f"🚀 Expanding {len(frontier)} charts")
        return tree


def huli_driver(A: Presentation, max_rounds: Optional[int] = None, workers: Optional[int] = None) -> ChartTree:
    """
    Blow up non-principal Fitting ideals (content * variable centers) until
    every chart has a principal Fitting chain or the per-branch round budget
    runs out.
    """
    if max_rounds is None:
        max_rounds = settings.DEFAULT_MAX_ROUNDS
    if workers is None:
        workers = settings.FITTING_FORGE_THREADS
    if workers < 1:
        raise InvariantViolationError(f"need at least one worker, got {workers}")
    tree = _HuLiRun(A, max_rounds).run(workers)
    leaves = tree.leaves()
    certified = sum(1 for leaf in leaves if leaf.status == ChartStatus.DIAGONAL_CERTIFIED)
    logger.info(f"✅ Hu-Li driver finished: {certified}/{len(leaves)} charts certified")
    return tree


def diagonal_certificate(t: ChartTree) -> Certificate:
    failures = []
    for leaf in t.leaves():
        label = leaf.chart.label()
        if leaf.status != ChartStatus.DIAGONAL_CERTIFIED:
            failures.append((label, leaf.status.value))
        elif leaf.generic_rank != t.root_rank:
            failures.append((label, f"generic rank {leaf.generic_rank} != {t.root_rank}"))
    return Certificate(not failures, tuple(failures))


# ============================================================================
# ROSSI BLOW-UP
# ============================================================================

def rossi_charts(A: Presentation) -> RossiReport:
    """Blow up the norm ideal when it is content * distinct variables."""
    norm = norm_ideal(A)
    split = _variable_center(norm.ideal)
    if split is None:
        return RossiReport(norm, None, None, (), note="norm is not a monomial times distinct variables")
    content, center = split
    root = Chart.identity(A.vars)
    charts = [root] if len(center) < 2 else blowup_variable_center(root, center)
    results = []
    for chart in charts:
        pulled = pull_and_factor(chart, norm.ideal)
        try:
            locally_free = lipman_criterion(base_change(A, chart.mapping, chart.vars))
        except FittingForgeError as e:
            logger.warning(f"⚠️ Lipman criterion undecided on chart {chart.label()}: {e.message}")
            locally_free = False
        results.append(RossiChart(chart, pulled, pulled.residual.has_constant_generator(), locally_free))
    return RossiReport(norm, content, center, tuple(results))
