import networkx as nx
import pytest
from hypothesis import given

from alphawidth.enumerate import all_graphs
from alphawidth.graph import (
    Graph,
    PreconditionError,
    SizeCapError,
    clique_number,
    complete_graph,
    cycle_graph,
    is_induced_cycle,
    mask_of,
    path_graph,
    star_graph,
)
from alphawidth.induced_minor import (
    InducedMinorModel,
    WheelAbsence,
    check_vicinity,
    connected_subsets,
    cycle_vicinity_decomposition,
    detect_wheel,
    find_induced_cycle,
    find_induced_minor,
    has_induced_minor_by_reduction,
    induced_cycles,
    is_model,
    minimize_model,
    pattern_from_name,
    shrink_wheel,
    wheel_from_cycle,
    wheel_graph,
)
from alphawidth.width import check_tree_decomposition

from conftest import graphs, to_nx

PATTERNS = [complete_graph(3), path_graph(4), complete_graph(4), cycle_graph(4)]


def wheel_minus_spoke(ell):
    W = wheel_graph(ell)
    return Graph.from_edges(W.n, [e for e in W.edges() if e != (0, ell)])


def alternating_wheel():
    # C_8 with a hub on every other rim vertex
    return Graph.from_edges(9, [(i, (i + 1) % 8) for i in range(8)] + [(i, 8) for i in (0, 2, 4, 6)])


def test_pattern_names():
    assert pattern_from_name("W4") == wheel_graph(4)
    assert pattern_from_name("k3") == complete_graph(3)
    assert pattern_from_name("C5") == cycle_graph(5)
    for bad in ("X3", "W", "Kx"):
        with pytest.raises(ValueError):
            pattern_from_name(bad)
    with pytest.raises(ValueError):
        wheel_graph(2)


def test_is_model_reasons():
    G = path_graph(3)
    H = path_graph(2)
    assert is_model(G, H, InducedMinorModel({0: 0b001, 1: 0b110}))
    cases = {
        "do not match": InducedMinorModel({0: 0b001}),
        "not connected": InducedMinorModel({0: 0b101, 1: 0b010}),
        "overlap": InducedMinorModel({0: 0b011, 1: 0b110}),
        "empty": InducedMinorModel({0: 0, 1: 0b010}),
    }
    for reason, M in cases.items():
        verdict = is_model(G, H, M)
        assert not verdict and reason in verdict.reason
    assert "non-adjacent" in is_model(G, empty_pair(), InducedMinorModel({0: 0b001, 1: 0b010})).reason


def empty_pair():
    return Graph.from_edges(2, [])


def test_model_json_round_trip():
    M = InducedMinorModel({0: 0b1, 1: 0b110}, "P2")
    assert InducedMinorModel.from_json(M.to_json()) == M


def test_wheel_minus_spoke_has_no_wheel():
    G = wheel_minus_spoke(5)
    W = wheel_graph(5)
    assert find_induced_minor(G, W) is None
    assert find_induced_minor(G, W, small_only=False) is None
    assert not has_induced_minor_by_reduction(G, W)
    assert has_induced_minor_by_reduction(G, wheel_graph(4))


@given(graphs(max_n=7))
def test_search_agrees_with_reduction_oracle(G):
    for H in PATTERNS:
        small = find_induced_minor(G, H)
        full = find_induced_minor(G, H, small_only=False)
        present = has_induced_minor_by_reduction(G, H)
        assert (small is not None) == (full is not None) == present
        for M in (small, full):
            if M is not None:
                assert is_model(G, H, M)
        if small is not None:
            assert clique_number(G, small.union) <= H.n * H.n


def test_minor_of_minor_is_found():
    # a subdivided K4 still contains K4 as an induced minor
    G = Graph.from_edges(7, [(0, 1), (0, 2), (0, 4), (1, 2), (1, 5), (2, 6), (4, 3), (5, 3), (6, 3)])
    assert has_induced_minor_by_reduction(G, complete_graph(4))
    M = find_induced_minor(G, complete_graph(4))
    assert M is not None and is_model(G, complete_graph(4), M)


def test_minimize_clique_model():
    K = complete_graph(10)
    H = complete_graph(2)
    M = InducedMinorModel({0: mask_of(range(5)), 1: mask_of(range(5, 10))})
    small = minimize_model(K, H, M)
    assert is_model(K, H, small)
    assert clique_number(K, small.union) <= 4
    with pytest.raises(PreconditionError):
        minimize_model(K, H, InducedMinorModel({0: 1, 1: 1}))


def test_connected_subsets_cap():
    assert len(connected_subsets(path_graph(4))) == 10
    with pytest.raises(SizeCapError):
        connected_subsets(path_graph(15))


@given(graphs(max_n=8))
def test_induced_cycles_match_networkx(G):
    ours = sorted(tuple(c) for c in induced_cycles(G, 4))
    theirs = []
    for c in nx.chordless_cycles(to_nx(G)):
        if len(c) >= 4:
            s = c.index(min(c))
            c = c[s:] + c[:s]
            if c[1] > c[-1]:
                c = [c[0]] + c[1:][::-1]
            theirs.append(tuple(c))
    assert ours == sorted(theirs)
    for c in ours:
        assert is_induced_cycle(G, list(c))


def test_wheel_from_alternating_hub():
    G = alternating_wheel()
    M = wheel_from_cycle(G, list(range(8)), 1 << 8)
    assert M.pattern == "W4" and is_model(G, wheel_graph(4), M)
    M3 = shrink_wheel(G, M, 3)
    assert is_model(G, wheel_graph(3), M3)
    with pytest.raises(ValueError):
        shrink_wheel(G, M, 5)


def test_wheel_from_cycle_preconditions():
    G = alternating_wheel()
    with pytest.raises(PreconditionError, match="not an induced cycle"):
        wheel_from_cycle(G, [0, 1, 2], 1 << 8)
    with pytest.raises(PreconditionError, match="not a component"):
        wheel_from_cycle(G, list(range(8)), 0)


def test_full_wheel_from_hub():
    W = wheel_graph(6)
    M = wheel_from_cycle(W, list(range(6)), 1 << 6)
    assert is_model(W, W, M)


def test_vicinity_on_cycle_with_pendant_path():
    # C_6 with the path 0-6-7-8 hanging off vertex 0
    G = Graph.from_edges(9, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6), (6, 7), (7, 8)])
    # vertex 0 with 1, 5 and 6 is a claw, so take d = 4
    V = cycle_vicinity_decomposition(G, list(range(6)), 4, 4)
    assert check_vicinity(G, list(range(6)), V)
    assert len(V.f2) == 1
    (t,) = V.f2
    assert V.decomposition.bags[t] == mask_of([6, 7, 8])
    assert V.phi == {mask_of([7, 8]): t}
    assert V.bound == 4 * 3 * (V.contracted_tw + 1)
    assert set(V.to_json()) == {"decomposition", "F1", "F2", "phi", "contracted_tw", "bound"}


def test_vicinity_returns_wheel_when_a_component_attaches_widely():
    G = alternating_wheel()
    # the hub sees four independent rim vertices
    out = cycle_vicinity_decomposition(G, list(range(8)), 5, 4)
    assert isinstance(out, InducedMinorModel) and is_model(G, wheel_graph(4), out)


def test_detect_wheel_outcomes():
    G = alternating_wheel()
    M = detect_wheel(G, 5, 4)
    assert isinstance(M, InducedMinorModel) and is_model(G, wheel_graph(4), M)
    out = detect_wheel(cycle_graph(7), 3, 4)
    assert isinstance(out, WheelAbsence)
    assert out.cycle is not None and check_vicinity(cycle_graph(7), out.cycle, out.vicinity)
    short = detect_wheel(complete_graph(3), 3, 4)
    assert short.cycle is None and check_tree_decomposition(complete_graph(3), short.decomposition)
    assert short.to_json()["absent"] is True
    with pytest.raises(PreconditionError):
        detect_wheel(star_graph(3), 3, 4)


def test_detection_over_claw_free_graphs():
    for G in all_graphs(6, connected=True, hereditary="claw-free"):
        for ell in (3, 4):
            out = detect_wheel(G, 3, ell)
            present = has_induced_minor_by_reduction(G, wheel_graph(ell))
            assert isinstance(out, InducedMinorModel) == present
            if present:
                assert is_model(G, wheel_graph(ell), out)
            else:
                assert check_tree_decomposition(G, out.decomposition)
                if out.vicinity is not None:
                    assert check_vicinity(G, out.cycle, out.vicinity)


def test_first_induced_cycle():
    assert find_induced_cycle(path_graph(5)) is None
    assert find_induced_cycle(cycle_graph(5), 4) == [0, 1, 2, 3, 4]
