import pytest
from hypothesis import given
from hypothesis import strategies as st

from alphawidth.brambles import StrongBramble, strong_bramble_of_order
from alphawidth.constructions import crossing_grid
from alphawidth.domination import dominates, dominating_cycle_or_vertex, dominating_path, long_dominating_cycle
from alphawidth.graph import (
    PreconditionError,
    bits,
    complete_bipartite,
    cycle_graph,
    is_induced_cycle,
    is_induced_path,
    mask_of,
    popcount,
    star_graph,
)

from conftest import graphs


@st.composite
def majority_brambles(draw):
    """Connected sets holding more than half the vertices pairwise intersect."""
    G = draw(graphs(min_n=3, max_n=10, connected=True))
    elements = []
    for _ in range(draw(st.integers(1, 6))):
        X = 1 << draw(st.integers(0, G.n - 1))
        while 2 * popcount(X) <= G.n:
            frontier = sorted(bits(_out(G, X)))
            X |= 1 << draw(st.sampled_from(frontier))
        elements.append(X)
    return G, StrongBramble(elements)


def _out(G, X):
    out = 0
    for v in bits(X):
        out |= G.adj[v]
    return out & ~X


def check_outputs(G, B):
    P = dominating_path(G, B)
    assert is_induced_path(G, P) or (not B.elements and P == [])
    assert dominates(G, B, P)
    out = dominating_cycle_or_vertex(G, B)
    if isinstance(out, int):
        assert dominates(G, B, [out])
    else:
        assert is_induced_cycle(G, out) and dominates(G, B, out)
    return P, out


@given(majority_brambles())
def test_random_majority_brambles(inst):
    check_outputs(*inst)


@given(graphs(max_n=7, connected=True), st.sampled_from([1, 2]))
def test_pipeline_brambles(G, k):
    B = strong_bramble_of_order(G, k)
    if B is None:
        return
    check_outputs(G, B)
    check_outputs(G, B.minimal())


@pytest.mark.parametrize("n", [7, 8, 9, 10, 11, 12])
def test_cycle_arcs_need_the_whole_cycle(n):
    # arcs on more than half of C_n; only the full cycle dominates them all
    C = cycle_graph(n)
    m = n // 2 + 1
    B = StrongBramble([mask_of((s + i) % n for i in range(m)) for s in range(n)])
    out = dominating_cycle_or_vertex(C, B)
    assert isinstance(out, list) and sorted(out) == list(range(n))


def test_single_element_and_empty():
    G = cycle_graph(5)
    assert dominating_path(G, StrongBramble([])) == []
    assert dominating_path(G, StrongBramble([0b00110])) == [1]


def test_rejects_non_bramble():
    with pytest.raises(PreconditionError, match="strong bramble"):
        dominating_path(cycle_graph(6), StrongBramble([0b000011, 0b011000]))


def test_long_cycle_preconditions():
    K = complete_bipartite(5, 5)
    B = strong_bramble_of_order(K, 2)
    with pytest.raises(PreconditionError, match="K_1,3"):
        long_dominating_cycle(K, B, 3, 2)
    G = crossing_grid(3)
    with pytest.raises(PreconditionError, match="below dk"):
        long_dominating_cycle(G.graph, G.bramble, 3, 2, max_n=None)
    with pytest.raises(PreconditionError, match="at least 2"):
        long_dominating_cycle(G.graph, G.bramble, 3, 1, max_n=None)
    with pytest.raises(PreconditionError, match="K_1,2"):
        long_dominating_cycle(star_graph(2), StrongBramble([1]), 2, 2)


def test_crossing_grid_long_cycle_small():
    # side 4 has order 4 < 6, so only the cycle-or-vertex route applies
    F = crossing_grid(4)
    out = dominating_cycle_or_vertex(F.graph, F.bramble)
    assert isinstance(out, list) and is_induced_cycle(F.graph, out)
    assert dominates(F.graph, F.bramble, out)
