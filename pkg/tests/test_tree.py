from collections import Counter

import pytest

from fitting_forge.models.poly import VarSet, render_monomial
from fitting_forge.models.tree import parse_tree
from fitting_forge.services.ideal_service import ideal_equal
from fitting_forge.services.tree_service import (
    advance,
    branch_vertex,
    check_advancing_identity,
    enumerate_trees,
    equations_phi,
    is_path_tree,
    monoidal_transforms,
    prune,
    snc_check,
    tree_ideals,
    tree_varset,
    trunk,
    vz_process,
)
from fitting_forge.utils.errors import (
    DepthExhaustedError,
    DuplicateLabelError,
    InvariantViolationError,
    NoBranchVertexError,
    PathTreeError,
    RootAdvanceError,
    TreeSyntaxError,
    WeightOnInnerVertexError,
)

from .helpers import mono_ideal, poly

EXAMPLE_ONE = "[o a [b c d]]"
EXAMPLE_TWO = "[o [a c d] [b e f]]"
PATH = "[o [a [b]]]"


def shape(g, v=None):
    v = g.root if v is None else v
    return tuple(sorted(shape(g, u) for u in g.kids(v)))


@pytest.fixture
def one():
    return parse_tree(EXAMPLE_ONE)


@pytest.fixture
def two():
    return parse_tree(EXAMPLE_TWO)


# ============================================================================
# PARSING AND NAVIGATION
# ============================================================================

def test_parse_and_navigate(one):
    assert one.root == "o"
    assert one.nonroot() == ["a", "b", "c", "d"]
    assert one.terminals() == ["a", "c", "d"]
    assert one.parent("c") == "b"
    assert one.ancestry("c") == ["b", "c"]
    assert one.descendants("b") == ["c", "d"]
    assert one.total_weight == 3
    assert one.is_terminally_weighted() and one.is_semistable()
    assert one.render() == EXAMPLE_ONE


def test_parse_weights_and_bracketed_leaves():
    g = parse_tree("[o a:3 [b [c]]]")
    assert g.weights == {"o": 0, "a": 3, "b": 0, "c": 1}
    assert g.render() == "[o a:3 [b c]]"
    assert g == parse_tree("[o a:3 [b c]]")


@pytest.mark.parametrize(
    "text, error",
    [
        ("[o a a]", DuplicateLabelError),
        ("[o [b:2 c]]", WeightOnInnerVertexError),
        ("[o:1 a]", WeightOnInnerVertexError),
        ("[o a", TreeSyntaxError),
        ("o a", TreeSyntaxError),
        ("[o]", TreeSyntaxError),
        ("[o a:0]", TreeSyntaxError),
        ("[o a] b", TreeSyntaxError),
        ("[o a $]", TreeSyntaxError),
        ("", TreeSyntaxError),
        ("[o a]]", TreeSyntaxError),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_tree(text)


def test_trunk_and_branch_vertex(one, two):
    assert trunk(one) == ["o"]
    assert branch_vertex(one) == "o"
    stacked = parse_tree("[o [a [b c d]]]")
    assert trunk(stacked) == ["o", "a", "b"]
    assert branch_vertex(stacked) == "b"
    path = parse_tree(PATH)
    assert branch_vertex(path) is None
    assert is_path_tree(path) and not is_path_tree(two)


# ============================================================================
# IDEALS AND EQUATIONS
# ============================================================================

def test_varset_order(one, two):
    assert tree_varset(one).names == ("z_a", "z_b", "z_c", "z_d", "w_a", "w_c", "w_d")
    assert tree_varset(two).names == ("z_a", "z_c", "z_d", "z_b", "z_e", "z_f", "w_c", "w_d", "w_e", "w_f")


def test_ideals_of_first_example(one):
    vars = tree_varset(one)
    ideals = tree_ideals(one)
    assert ideal_equal(ideals.I, mono_ideal("(z_a, z_b)", vars))
    assert ideal_equal(ideals.J, mono_ideal("(z_a, z_b*z_c, z_b*z_d)", vars))


def test_ideals_of_second_example(two):
    vars = tree_varset(two)
    ideals = tree_ideals(two)
    assert ideal_equal(ideals.I, mono_ideal("(z_a, z_b)", vars))
    assert ideal_equal(ideals.J, mono_ideal("(z_a*z_c, z_a*z_d, z_b*z_e, z_b*z_f)", vars))


def test_ideals_of_path_tree():
    g = parse_tree(PATH)
    ideals = tree_ideals(g)
    assert ideals.I is None
    assert ideals.J.render() == "(z_a*z_b)"


def test_equation_of_first_example(one):
    vars = tree_varset(one)
    assert equations_phi(one) == poly("z_a*w_a + z_b*z_c*w_c + z_b*z_d*w_d", vars)


# ============================================================================
# SURGERIES
# ============================================================================

def test_prune(one):
    assert prune(one, "b").render() == "[o a b:2]"


def test_advance_leaf_prunes_to_path(one):
    advanced = advance(one, "a")
    assert advanced.render() == "[o a:3]"
    assert is_path_tree(advanced)
    assert advanced.total_weight == one.total_weight


def test_advance_inner_vertex(one, two):
    assert advance(one, "b").render() == "[o [b a c d]]"
    assert advance(two, "a").render() == "[o [a c d [b e f]]]"
    assert advance(advance(two, "a"), "b").render() == "[o [a [b c d e f]]]"


def test_advance_without_pruning(one):
    unpruned = advance(one, "a", prune=False)
    assert unpruned.render() == "[o [a [b c d]]]"
    assert unpruned.weights["a"] == 1


def test_advance_root_is_rejected(one):
    with pytest.raises(RootAdvanceError):
        advance(one, "o")


def test_monoidal_transforms(one):
    transforms = dict((a, t.render()) for a, t in monoidal_transforms(one))
    assert transforms == {"a": "[o a:3]", "b": "[o [b a c d]]"}
    assert monoidal_transforms(parse_tree(PATH)) == []


def test_check_advancing_identity(one, two):
    assert check_advancing_identity(one, "b")
    assert check_advancing_identity(two, "a")
    assert check_advancing_identity(two, "b")
    with pytest.raises(PathTreeError):
        check_advancing_identity(one, "a")
    with pytest.raises(NoBranchVertexError):
        check_advancing_identity(parse_tree(PATH), "a")
    with pytest.raises(InvariantViolationError):
        check_advancing_identity(one, "c")


# ============================================================================
# BLOW-UP PROCESS
# ============================================================================

def test_snc_check():
    vars = VarSet(("z_b", "z_c", "w_a", "w_c"))
    w_names = ["w_a", "w_c"]
    assert snc_check(poly("w_a + z_b*z_c*w_c", vars), w_names)
    assert not snc_check(poly("z_b*w_a + z_c*w_c", vars), w_names)
    assert not snc_check(poly("w_a + z_b*w_a", vars), w_names)
    assert not snc_check(poly("2*w_a + z_b*w_c", vars), w_names)
    assert not snc_check(poly("z_b + z_c*w_c", vars), w_names)


def test_process_of_first_example(one):
    process = vz_process(one)
    vars = process.chart.vars
    assert process.center == ("z_a", "z_b")
    assert [child.chart.label() for child in process.children] == ["z_a", "z_b"]

    a_chart, b_chart = process.children
    assert a_chart.path_tree and a_chart.principal and a_chart.snc
    assert render_monomial(a_chart.phi.content, vars) == "z_a"
    assert a_chart.phi.residual == poly("w_a + z_b*z_c*w_c + z_b*z_d*w_d", vars)
    assert a_chart.j.total.render() == "(z_a)"

    assert b_chart.tree.render() == "[o [b a c d]]"
    assert b_chart.advancing_identity
    assert b_chart.center == ("z_a", "z_c", "z_d")
    labels = [child.chart.label() for child in b_chart.children]
    assert labels == ["z_b/z_a", "z_b/z_c", "z_b/z_d"]
    totals = [child.j.total.render() for child in b_chart.children]
    assert totals == ["(z_a*z_b)", "(z_b*z_c)", "(z_b*z_d)"]
    assert all(node.j_identity for node in process.walk())


def test_process_of_second_example(two):
    process = vz_process(two)
    vars = process.chart.vars
    a_chart = process.children[0]
    assert a_chart.tree.render() == "[o [a c d [b e f]]]"
    assert a_chart.center == ("z_c", "z_d", "z_b")
    ab_chart = a_chart.children[2]
    assert ab_chart.chart.label() == "z_a/z_b"
    assert ab_chart.tree.render() == "[o [a [b c d e f]]]"
    abc_chart = ab_chart.children[0]
    assert abc_chart.chart.label() == "z_a/z_b/z_c"
    assert render_monomial(abc_chart.phi.content, vars) == "z_a*z_c*z_b"
    assert abc_chart.phi.residual == poly("w_c + z_d*w_d + z_e*w_e + z_f*w_f", vars)
    assert abc_chart.j.total.render() == "(z_a*z_c*z_b)"
    assert abc_chart.principal and abc_chart.snc
    ac_chart = a_chart.children[0]
    assert ac_chart.j.total.render() == "(z_a*z_c)"


def test_process_of_path_tree():
    process = vz_process(parse_tree(PATH))
    assert process.children == []
    assert process.snc and process.principal
    assert process.terminal_charts() == [process]


@pytest.mark.parametrize(
    "text, content, residual",
    [
        ("[o a]", "z_a", "w_a"),
        ("[o a:2]", "z_a", "w_a"),
        ("[o [a b]]", "z_a*z_b", "w_b"),
    ],
)
def test_single_terminal_path_keeps_w_in_residual(text, content, residual):
    process = vz_process(parse_tree(text))
    vars = process.chart.vars
    assert render_monomial(process.phi.content, vars) == content
    assert process.phi.residual == poly(residual, vars)
    assert process.snc


def test_depth_budget(two):
    with pytest.raises(DepthExhaustedError):
        vz_process(two, max_depth=1)
    with pytest.raises(DepthExhaustedError):
        vz_process(two, max_depth=0)
    assert vz_process(parse_tree(PATH), max_depth=0).snc


# ============================================================================
# EXHAUSTIVE CHECKS OVER SMALL TREES
# ============================================================================

def test_enumeration_counts():
    trees = list(enumerate_trees(6))
    sizes = Counter(len(g.nonroot()) for g in trees)
    assert [sizes[n] for n in range(1, 7)] == [1, 2, 4, 9, 20, 48]
    assert len({shape(g) for g in trees}) == 84
    assert all(g.is_terminally_weighted() and g.is_semistable() for g in trees)


@pytest.mark.parametrize("g", list(enumerate_trees(6)), ids=lambda g: g.render())
def test_process_resolves_every_small_tree(g):
    process = vz_process(g)
    for node in process.walk():
        assert node.j_identity
        if node.advancing_identity is not None:
            assert node.advancing_identity
    for chart in process.terminal_charts():
        assert chart.path_tree
        assert chart.principal
        assert chart.snc


@pytest.mark.parametrize("g", list(enumerate_trees(6)), ids=lambda g: g.render())
def test_advancing_keeps_weights(g):
    for _, advanced in monoidal_transforms(g):
        assert advanced.total_weight == g.total_weight
        if not is_path_tree(advanced):
            assert advanced.terminal_weights() == g.terminal_weights()
        assert advanced.is_terminally_weighted()
