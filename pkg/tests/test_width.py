import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from alphawidth.graph import (
    Graph,
    SizeCapError,
    complete_bipartite,
    complete_graph,
    components,
    cycle_graph,
    empty_graph,
    independence_number,
    mask_of,
    path_graph,
)
from alphawidth.width import (
    Bounds,
    TreeDecomposition,
    alpha_tw_exact,
    alpha_width,
    balanced_separator,
    balanced_separators,
    check_tree_decomposition,
    find_k_alpha_linked,
    heavy_component,
    is_balanced,
    is_k_alpha_linked,
    refine_decomposition,
    treewidth_exact,
    width,
)

from conftest import graphs, to_nx


def elimination_oracle(G, cost):
    """min over all vertex orders of the max cost of v plus its later
    neighbours in the filled graph; the fill is simulated on a networkx copy."""
    best = None
    for order in itertools.permutations(range(G.n)):
        H = to_nx(G)
        worst = 0
        for v in order:
            nbrs = list(H.neighbors(v))
            worst = max(worst, cost(mask_of(nbrs + [v])))
            H.add_edges_from(itertools.combinations(nbrs, 2))
            H.remove_node(v)
            if best is not None and worst >= best:
                break
        best = worst if best is None else min(best, worst)
    return best or 0


@given(graphs(max_n=6))
def test_alpha_tw_matches_permutation_oracle(G):
    value, T = alpha_tw_exact(G)
    assert value == elimination_oracle(G, lambda bag: independence_number(G, bag))
    assert check_tree_decomposition(G, T)
    assert alpha_width(G, T) == value


@given(graphs(max_n=6))
def test_treewidth_matches_permutation_oracle(G):
    value, T = treewidth_exact(G)
    assert value == elimination_oracle(G, lambda bag: bin(bag).count("1") - 1)
    assert width(T) == value


def test_known_treewidths():
    assert treewidth_exact(to_graph(nx.petersen_graph()))[0] == 4
    assert treewidth_exact(to_graph(nx.grid_2d_graph(3, 3)))[0] == 3
    assert treewidth_exact(complete_graph(6))[0] == 5
    assert treewidth_exact(cycle_graph(7))[0] == 2
    assert treewidth_exact(path_graph(7))[0] == 1


def test_known_alpha_tw():
    assert alpha_tw_exact(complete_graph(7))[0] == 1
    assert alpha_tw_exact(empty_graph(0))[0] == 0
    for n in range(4, 10):
        assert alpha_tw_exact(cycle_graph(n))[0] == 2
    # K_{3,3}: oracle value frozen
    assert alpha_tw_exact(complete_bipartite(3, 3))[0] == elimination_oracle(
        complete_bipartite(3, 3), lambda bag: independence_number(complete_bipartite(3, 3), bag)
    )


def to_graph(H):
    nodes = sorted(H.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(pos[u], pos[v]) for u, v in H.edges()])


def test_size_cap():
    with pytest.raises(SizeCapError):
        alpha_tw_exact(path_graph(15))


def test_checker_names_each_failure():
    G = path_graph(3)
    good = TreeDecomposition([0, 1], [(0, 1)], {0: 0b011, 1: 0b110})
    assert check_tree_decomposition(G, good)
    cases = {
        "vertex coverage": TreeDecomposition([0], [], {0: 0b011}),
        "edge coverage": TreeDecomposition([0, 1], [(0, 1)], {0: 0b011, 1: 0b100}),
        "subtree": TreeDecomposition([0, 1, 2], [(0, 1), (1, 2)], {0: 0b011, 1: 0b110, 2: 0b001}),
        "edge count": TreeDecomposition([0, 1], [], {0: 0b011, 1: 0b110}),
        "not connected": TreeDecomposition([0, 1, 2], [(0, 1), (0, 1)], {0: 0b011, 1: 0b110, 2: 0}),
        "bad tree edge": TreeDecomposition([0, 1], [(0, 0)], {0: 0b011, 1: 0b110}),
        "bag ids": TreeDecomposition([0, 1], [(0, 1)], {0: 0b011}),
        "non-vertices": TreeDecomposition([0], [], {0: 0b1111}),
    }
    for reason, T in cases.items():
        verdict = check_tree_decomposition(G, T)
        assert not verdict and reason in verdict.reason
    with pytest.raises(ValueError, match="invalid"):
        alpha_width(G, cases["subtree"])


@given(graphs(max_n=7))
def test_decomposition_json_round_trip(G):
    _, T = alpha_tw_exact(G)
    back = TreeDecomposition.from_json(T.to_json())
    assert back == T
    assert "graph TD" in T.to_dot()


def brute_balanced(G, X, S):
    ax = independence_number(G, X)
    rest = G.vertices & ~S
    return all(2 * independence_number(G, C & X) <= ax for C in components(G, rest))


@given(graphs(max_n=7), st.data())
def test_balanced_separators_are_balanced_and_small(G, data):
    X = data.draw(st.integers(1, G.vertices))
    k = data.draw(st.integers(0, 2))
    seps = list(balanced_separators(G, X, k))
    for S in seps:
        assert independence_number(G, S) <= k
        assert is_balanced(G, X, S) and brute_balanced(G, X, S)
    # nothing small and balanced is missed
    for r in range(G.n + 1):
        for combo in itertools.combinations(range(G.n), r):
            S = mask_of(combo)
            if independence_number(G, S) <= k and brute_balanced(G, X, S):
                assert S in seps
    assert is_k_alpha_linked(G, X, k) == (balanced_separator(G, X, k) is None)


def test_linked_sets_on_cycles():
    # in C_6 the three alternate vertices have alpha 3; one vertex never splits them evenly
    C = cycle_graph(6)
    X = mask_of([0, 2, 4])
    assert balanced_separator(C, X, 1) is None
    assert find_k_alpha_linked(C, 1) is not None
    assert find_k_alpha_linked(path_graph(6), 1) is None
    assert find_k_alpha_linked(complete_graph(5), 0) is not None


def test_heavy_component_is_unique():
    C = cycle_graph(8)
    X = C.vertices
    S = mask_of([0, 4])
    assert heavy_component(C, X, S) is None
    assert heavy_component(C, X, mask_of([0, 1])) == mask_of(range(2, 8))


@given(graphs(max_n=7), st.sampled_from([1, 2]))
def test_refinement_outcome(G, k):
    res = refine_decomposition(G, k)
    if res.decomposition is not None:
        assert check_tree_decomposition(G, res.decomposition)
        assert alpha_width(G, res.decomposition) <= 2 * k + 1
        assert res.treated_counts == sorted(set(res.treated_counts))
    else:
        assert is_k_alpha_linked(G, res.linked_set, k)


def test_refinement_returns_linked_set_when_width_is_large():
    # alpha-tw of the 6-cycle is 2 > 2*0+1
    res = refine_decomposition(cycle_graph(6), 0)
    assert res.decomposition is None
    assert is_k_alpha_linked(cycle_graph(6), res.linked_set, 0)


def test_bounds_are_symbolic():
    b = Bounds(d=3, ell=4)
    assert b.delta == 5
    assert b.f_vicinity == 9
    assert b.f_wheel == 37
    b2 = Bounds(d=3, ell=4, f_korhonen=lambda delta, ell: delta * ell)
    assert b2.f_vicinity == 3 * 3 * 20
