"""Canonical labelling and exhaustive enumeration of small graphs.

Canonical form: colour refinement to an equitable ordered partition, then
individualisation of each vertex of the first non-trivial cell, recursively;
the canonical labelling is the one whose upper-triangle bit string is
largest.  Refinement is label-invariant, so two graphs are isomorphic iff
their canonical forms coincide.  Adequate for n <= 10.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator

from .graph import Graph, bits, is_connected, path_graph
from .io import emit_graph6, parse_graph6


def _refine(G: Graph, cells: list[list[int]]) -> list[list[int]]:
    while True:
        index = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                index[v] = ci
        cell_masks = [sum(1 << v for v in cell) for cell in cells]
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {v: tuple(bin(G.adj[v] & m).count("1") for m in cell_masks) for v in cell}
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) > 1:
                changed = True
                for key in sorted(groups):
                    new_cells.append(groups[key])
            else:
                new_cells.append(cell)
        cells = new_cells
        if not changed:
            return cells


def _code(G: Graph, order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = G.adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_order(G: Graph) -> list[int]:
    """Vertex order producing the canonical labelling of ``G``."""
    if G.n == 0:
        return []
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(G, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(G, order)
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        for v in cell:
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    degree_cells: dict[int, list[int]] = {}
    for v in range(G.n):
        degree_cells.setdefault(G.degree(v), []).append(v)
    search([degree_cells[d] for d in sorted(degree_cells)])
    return best[1]


def relabel(G: Graph, order: list[int]) -> Graph:
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * G.n
    for i, v in enumerate(order):
        for u in bits(G.adj[v]):
            adj[i] |= 1 << pos[u]
    return Graph(G.n, adj)


def canonical_form(G: Graph) -> Graph:
    return relabel(G, canonical_order(G))


def canonical_graph6(G: Graph) -> str:
    return emit_graph6(canonical_form(G))


def _extend(G: Graph) -> Iterator[Graph]:
    n = G.n
    for nbrs in range(1 << n):
        adj = list(G.adj) + [nbrs]
        for u in bits(nbrs):
            adj[u] |= 1 << n
        yield Graph(n + 1, adj)


@lru_cache(maxsize=None)
def _level(n: int, filter_name: str | None) -> tuple[str, ...]:
    keep = _FILTERS[filter_name]
    if n == 0:
        return (emit_graph6(Graph(0, [])),)
    seen: dict[str, None] = {}
    for code in _level(n - 1, filter_name):
        for H in _extend(parse_graph6(code)):
            if keep is not None and not keep(H):
                continue
            seen.setdefault(canonical_graph6(H), None)
    return tuple(sorted(seen))


def _claw_free(G: Graph) -> bool:
    from .graph import is_k1d_free

    return is_k1d_free(G, 3)[0]


# hereditary filters only: every induced subgraph of a kept graph is kept
_FILTERS: dict[str | None, Callable[[Graph], bool] | None] = {None: None, "claw-free": _claw_free}


def graphs_of_order(n: int, hereditary: str | None = None) -> list[str]:
    """All non-isomorphic graphs on ``n`` vertices as canonical graph6 codes,
    optionally restricted to a named hereditary class."""
    return list(_level(n, hereditary))


def all_graphs(max_n: int, min_n: int = 1, connected: bool = False, hereditary: str | None = None) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        for code in graphs_of_order(n, hereditary):
            G = parse_graph6(code)
            if connected and not is_connected(G):
                continue
            yield G


def paths(max_k: int) -> Iterator[Graph]:
    for k in range(1, max_k + 1):
        yield path_graph(k)
