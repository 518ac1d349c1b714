"""Induced paths and cycles whose closed neighbourhood meets every element
of a strong bramble."""

from __future__ import annotations

from .brambles import ORDER_CAP, StrongBramble, alpha_order_exact, is_strong_bramble
from .graph import (
    Graph,
    InvariantViolation,
    PreconditionError,
    VertexSet,
    independence_number,
    is_induced_cycle,
    is_induced_path,
    is_k1d_free,
    lowest,
    mask_of,
    neighborhood,
    shortest_path,
    to_list,
)


def _closed(G: Graph, seq) -> VertexSet:
    return neighborhood(G, mask_of(seq), closed=True)


def dominates(G: Graph, B: StrongBramble, seq) -> bool:
    """N[seq] meets every element of B."""
    return B.covered_by(_closed(G, seq))


def _prepare(G: Graph, B: StrongBramble) -> list[VertexSet]:
    verdict = is_strong_bramble(G, B)
    if not verdict:
        raise PreconditionError(f"not a strong bramble: {verdict.reason}")
    return B.minimal().elements


def dominating_path(G: Graph, B: StrongBramble) -> list[int]:
    """Induced path P with N[P] meeting every element of B.

    Grows P one bramble element at a time: the current end x_i sees the
    element B_i and nothing else on P does; an unmet element B_{i+1} is
    reached by a shortest path from x_i through B_i to N(B_{i+1}).
    """
    elements = _prepare(G, B)
    if not elements:
        return []
    if len(elements) == 1:
        return [lowest(elements[0])]
    current = elements[0]
    x = lowest(neighborhood(G, current))
    path = [x]
    while True:
        closed = _closed(G, path)
        unmet = next((E for E in elements if not E & closed), None)
        if unmet is None:
            break
        q = shortest_path(G, 1 << x, current & neighborhood(G, unmet), current | 1 << x)
        if q is None or len(q) < 2:
            raise InvariantViolation(f"no extension from {x} through {to_list(current)}")
        before = len(path)
        path.extend(q[1:])
        assert len(path) > before
        x, current = path[-1], unmet
    if not is_induced_path(G, path):
        raise InvariantViolation(f"extension produced a non-induced path {path}")
    return path


def _trim(G: Graph, B: StrongBramble, path: list[int]) -> list[int]:
    """Drop endpoints while the rest still dominates."""
    changed = True
    while changed and len(path) > 1:
        changed = False
        if dominates(G, B, path[1:]):
            path = path[1:]
            changed = True
        elif dominates(G, B, path[:-1]):
            path = path[:-1]
            changed = True
    return path


def dominating_cycle_or_vertex(G: Graph, B: StrongBramble) -> int | list[int]:
    """A vertex v with N[v] meeting every element, or an induced cycle C
    with N[C] meeting every element (returned as a list)."""
    path = _trim(G, B, dominating_path(G, B))
    if len(path) <= 1:
        if not path:
            return lowest(G.vertices) if G.n else 0
        return path[0]
    elements = B.minimal().elements
    s, t = path[0], path[-1]
    private_s = [E for E in elements if not E & _closed(G, path[1:])]
    private_t = [E for E in elements if not E & _closed(G, path[:-1])]
    if not private_s or not private_t:
        raise InvariantViolation("trimmed path has an endpoint without a private element")
    Bs, Bt = private_s[0], private_t[0]
    if Bs == Bt:
        raise InvariantViolation(f"endpoints share the private element {to_list(Bs)}")
    inner = Bs | Bt
    r = shortest_path(G, G.adj[s] & inner, G.adj[t] & inner, inner)
    if r is None:
        raise InvariantViolation("no closing path through the private elements")
    cycle = path + r[::-1]
    if not is_induced_cycle(G, cycle):
        raise InvariantViolation(f"closing produced a non-induced cycle {cycle}")
    return cycle


def long_dominating_cycle(G: Graph, B: StrongBramble, d: int, k: int, max_n: int | None = ORDER_CAP) -> list[int]:
    """Induced cycle of length >= k dominating B, for K_{1,d}-free G and B of
    alpha-order >= dk; the length follows from dk <= alpha(N[C]) <= d|C|."""
    if k < 2:
        raise PreconditionError(f"k must be at least 2, got {k}")
    free, witness = is_k1d_free(G, d)
    if not free:
        raise PreconditionError(f"graph contains an induced K_1,{d}", witness)
    order, _ = alpha_order_exact(G, B, max_n=max_n)
    if order < d * k:
        raise PreconditionError(f"bramble alpha-order {order} is below dk={d * k}", order)
    out = dominating_cycle_or_vertex(G, B)
    if isinstance(out, int):
        raise InvariantViolation(f"vertex {out} dominates a bramble of alpha-order {order}")
    a = independence_number(G, _closed(G, out))
    if not (d * k <= a <= d * len(out)) or len(out) < k:
        raise InvariantViolation(f"cycle of length {len(out)} with alpha(N[C])={a} against dk={d * k}")
    return out
