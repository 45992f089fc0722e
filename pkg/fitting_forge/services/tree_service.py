"""
Tree calculus service - ideals and equations of weighted trees, tree
surgeries and the iterated blow-up process along I_gamma
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional

from fitting_forge.config import settings
from fitting_forge.models.chart import Chart
from fitting_forge.models.ideal import MonomialIdeal
from fitting_forge.models.poly import (
    Monomial,
    Poly,
    VarSet,
    divide_by_monomial,
    monomial_content,
)
from fitting_forge.models.tree import WTree, build_tree
from fitting_forge.services.blowup_service import PulledIdeal, pull_and_factor
from fitting_forge.services.ideal_service import as_monomial_ideal, ideal_equal, minimal_generators
from fitting_forge.utils.errors import (
    DepthExhaustedError,
    InvariantViolationError,
    NoBranchVertexError,
    PathTreeError,
    RootAdvanceError,
)
from fitting_forge.utils.logger import get_logger

logger = get_logger(__name__)


class TreeIdeals(NamedTuple):
    I: Optional[MonomialIdeal]
    J: MonomialIdeal


class PulledEquation(NamedTuple):
    content: Monomial
    residual: Poly


@dataclass
class TreeChart:
    """One chart of the process: the advanced tree and the root data pulled back to it."""
    tree: WTree
    chart: Chart
    phi: PulledEquation
    j: PulledIdeal
    principal: bool
    path_tree: bool
    j_identity: bool
    advancing_identity: Optional[bool] = None
    snc: Optional[bool] = None
    center: Optional[tuple[str, ...]] = None
    children: list["TreeChart"] = field(default_factory=list)

    def walk(self) -> Iterator["TreeChart"]:
        yield self
        for child in self.children:
            yield from child.walk()

    def terminal_charts(self) -> list["TreeChart"]:
        return [node for node in self.walk() if not node.children]


def z(label: str) -> str:
    return f"z_{label}"


def w(label: str) -> str:
    return f"w_{label}"


def tree_varset(g: WTree) -> VarSet:
    """z_a for every non-root vertex, then w_v for every terminal, pre-order."""
    return VarSet(tuple(z(v) for v in g.nonroot()) + tuple(w(v) for v in g.terminals()))


# ============================================================================
# TRUNK / IDEALS / EQUATIONS
# ============================================================================

def trunk(g: WTree) -> list[str]:
    chain = [g.root]
    while len(g.kids(chain[-1])) == 1:
        chain.append(g.kids(chain[-1])[0])
    return chain


def branch_vertex(g: WTree) -> Optional[str]:
    last = trunk(g)[-1]
    return None if g.is_leaf(last) else last


def is_path_tree(g: WTree) -> bool:
    return branch_vertex(g) is None


def _path_monomial(g: WTree, v: str, vars: VarSet) -> Monomial:
    exps = [0] * len(vars)
    for a in g.ancestry(v):
        exps[vars.index(z(a))] += 1
    return tuple(exps)


def tree_ideals(g: WTree, vars: Optional[VarSet] = None) -> TreeIdeals:
    vars = vars or tree_varset(g)
    J = minimal_generators(vars, [_path_monomial(g, v, vars) for v in g.terminals()])
    branch = branch_vertex(g)
    if branch is None:
        return TreeIdeals(None, J)
    I = minimal_generators(vars, [vars.variable_monomial(z(a)) for a in g.kids(branch)])
    return TreeIdeals(I, J)


def equations_phi(g: WTree, vars: Optional[VarSet] = None) -> Poly:
    """Sum over terminals v of z_[v,o] * w_v."""
    vars = vars or tree_varset(g)
    phi = vars.zero
    for v in g.terminals():
        phi += vars.monomial(_path_monomial(g, v, vars)) * vars.gen(w(v))
    return phi


# ============================================================================
# SURGERIES
# ============================================================================

def _prune(children: dict[str, list[str]], weights: dict[str, int], v: str) -> None:
    stack = list(children.get(v, []))
    while stack:
        u = stack.pop()
        weights[v] += weights.pop(u)
        stack.extend(children.pop(u, []))
    children[v] = []


def prune(g: WTree, v: str) -> WTree:
    """Remove the descendants of v, adding their weights to v."""
    children = {u: list(g.kids(u)) for u in g.vertices()}
    weights = dict(g.weights)
    _prune(children, weights, v)
    return build_tree(g.root, children, weights)


def advance(g: WTree, v: str, prune: bool = True) -> WTree:
    """
    Re-attach the siblings of v as children of v (ordered by their pre-order
    position in g), then prune along positively weighted non-terminal
    vertices as long as possible.
    """
    if v == g.root:
        raise RootAdvanceError(f"cannot advance the root {v!r}")
    parent = g.parent(v)
    position = g.preorder_index()
    children = {u: list(g.kids(u)) for u in g.vertices()}
    weights = dict(g.weights)
    siblings = [u for u in children[parent] if u != v]
    children[parent] = [v]
    children[v] = sorted(children[v] + siblings, key=position.__getitem__)
    if prune:
        while True:
            order = [u for u in sorted(children, key=position.__getitem__) if u in weights]
            target = next((u for u in order if weights[u] > 0 and children[u]), None)
            if target is None:
                break
            _prune(children, weights, target)
    return build_tree(g.root, children, weights)


def monoidal_transforms(g: WTree) -> list[tuple[str, WTree]]:
    branch = branch_vertex(g)
    if branch is None:
        return []
    return [(a, advance(g, a)) for a in g.kids(branch)]


# ============================================================================
# BLOW-UP PROCESS
# ============================================================================

def snc_check(residual: Poly, w_names: Iterable[str]) -> bool:
    """Some term is a bare w-variable with coefficient 1 occurring in no other term."""
    vars = VarSet.of(residual)
    positions = [vars.index(name) for name in w_names if name in vars]
    terms = list(residual.items())
    for m, c in terms:
        if c != 1 or sum(m) != 1:
            continue
        k = m.index(1)
        if k in positions and all(other[k] == 0 for other, _ in terms if other != m):
            return True
    return False


def _factor_equation(phi: Poly, vars: VarSet, w_names: Iterable[str]) -> PulledEquation:
    """Split off the z-part of the monomial content; w-variables stay in the residual."""
    keep = {vars.index(name) for name in w_names}
    content = tuple(0 if k in keep else e for k, e in enumerate(monomial_content(phi)))
    return PulledEquation(content, divide_by_monomial(phi, content))


class _VZProcess:
    def __init__(self, g: WTree, max_depth: int):
        self.root_tree = g
        self.max_depth = max_depth
        self.vars = tree_varset(g)
        self.phi = equations_phi(g, self.vars)
        self.J = tree_ideals(g, self.vars).J
        self.w_names = [w(v) for v in g.terminals()]

    def visit(self, tree: WTree, chart: Chart, depth: int, advanced: bool) -> TreeChart:
        pulled_phi = chart.pull(self.phi)
        pulled_j = pull_and_factor(chart, self.J.as_ideal_gens())
        path = is_path_tree(tree)
        own = tree_ideals(tree, self.vars)
        node = TreeChart(
            tree=tree,
            chart=chart,
            phi=_factor_equation(pulled_phi, self.vars, self.w_names),
            j=pulled_j,
            principal=pulled_j.residual.has_constant_generator(),
            path_tree=path,
            j_identity=ideal_equal(as_monomial_ideal(pulled_j.total), own.J),
        )
        if advanced and not path:
            node.advancing_identity = pulled_phi == equations_phi(tree, self.vars)
        if path:
            node.snc = snc_check(node.phi.residual, self.w_names)
            logger.debug(f"Chart {chart.label()}: path tree {tree.render()}, snc={node.snc}")
            return node
        if depth >= self.max_depth:
            raise DepthExhaustedError(
                f"chart {chart.label()} still has tree {tree.render()} after {self.max_depth} blow-ups"
            )
        branch = branch_vertex(tree)
        node.center = tuple(z(a) for a in tree.kids(branch))
        for a in tree.kids(branch):
            child_chart = chart.child(node.center, z(a))
            node.children.append(self.visit(advance(tree, a), child_chart, depth + 1, True))
        return node

    def run(self) -> TreeChart:
        return self.visit(self.root_tree, Chart.identity(self.vars), 0, False)


def vz_process(g: WTree, max_depth: Optional[int] = None) -> TreeChart:
    """Blow up along I_gamma chart by chart until every chart carries a path tree."""
    if max_depth is None:
        max_depth = settings.DEFAULT_MAX_DEPTH
    report = _VZProcess(g, max_depth).run()
    leaves = report.terminal_charts()
    logger.info(f"✅ Blow-up process of {g.render()} finished with {len(leaves)} terminal charts")
    return report


def check_advancing_identity(g: WTree, a: str) -> bool:
    """pi_a^* Phi_gamma == Phi_{gamma_a} in the chart of a (chart coordinates keep their names)."""
    branch = branch_vertex(g)
    if branch is None:
        raise NoBranchVertexError(f"{g.render()} is a path tree")
    if a not in g.kids(branch):
        raise InvariantViolationError(f"{a!r} is not an immediate descendant of the branch vertex {branch!r}")
    advanced = advance(g, a)
    if is_path_tree(advanced):
        raise PathTreeError(f"advancing {a!r} in {g.render()} gives the path tree {advanced.render()}")
    vars = tree_varset(g)
    center = tuple(z(b) for b in g.kids(branch))
    chart = Chart.identity(vars).child(center, z(a))
    return chart.pull(equations_phi(g, vars)) == equations_phi(advanced, vars)


# ============================================================================
# ENUMERATION
# ============================================================================

@lru_cache(maxsize=None)
def _shapes(size: int) -> tuple[tuple, ...]:
    """Unlabelled rooted trees with ``size`` vertices, as sorted tuples of child shapes."""
    if size == 1:
        return ((),)
    return tuple(sorted(set(_forests(size - 1, None))))


def _forests(size: int, bound: Optional[tuple]) -> list[tuple]:
    if size == 0:
        return [()]
    forests = []
    for first in range(1, size + 1):
        for shape in _shapes(first):
            key = (first, shape)
            if bound is not None and key > bound:
                continue
            forests.extend((shape,) + rest for rest in _forests(size - first, key))
    return forests


def _labels() -> Iterator[str]:
    n = 0
    while True:
        label, k = "", n
        while True:
            label = chr(ord("a") + k % 26) + label
            k = k // 26 - 1
            if k < 0:
                break
        yield label
        n += 1


def _label_shape(shape: tuple, root: str = "o") -> WTree:
    names = (label for label in _labels() if label != root)
    children: dict[str, list[str]] = {}
    weights = {root: 0}

    def attach(v: str, sub: tuple) -> None:
        children[v] = []
        for child in sub:
            label = next(names)
            children[v].append(label)
            weights[label] = 0 if child else 1
            attach(label, child)

    attach(root, shape)
    return build_tree(root, children, weights)


def enumerate_trees(max_nonroot: int) -> Iterator[WTree]:
    """Every rooted tree with 1..max_nonroot non-root vertices, once, leaves weighted 1."""
    for size in range(2, max_nonroot + 2):
        for shape in _shapes(size):
            yield _label_shape(shape)
