"""Structured claw-free graphs carrying strong brambles of prescribed alpha-order."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .brambles import StrongBramble
from .graph import OK, Graph, Verdict, VertexSet, mask_of, neighborhood, to_list


@dataclass
class CrossingGrid:
    """An a x a crossing grid with its row and column strands.

    Row i and column j meet in a single crossing vertex.  Consecutive
    crossings along a strand are joined through a connector vertex, and the
    two connectors of a strand at a crossing are adjacent, so every
    neighbourhood splits into two cliques and the graph is claw-free.
    """

    graph: Graph
    rows: list[VertexSet]
    cols: list[VertexSet]

    @property
    def bramble(self) -> StrongBramble:
        # every row-column cross; two crosses share the crossing of one's row and the other's column
        return StrongBramble([r | c for r in self.rows for c in self.cols])


def crossing_grid(a: int) -> CrossingGrid:
    if a < 1:
        raise ValueError("grid side must be positive")
    index: dict[tuple, int] = {}

    def v(key: tuple) -> int:
        return index.setdefault(key, len(index))

    for i in range(a):
        for j in range(a):
            v(("x", i, j))
    rows: list[set[int]] = [set() for _ in range(a)]
    cols: list[set[int]] = [set() for _ in range(a)]
    edges = set()
    for i in range(a):
        for j in range(a):
            rows[i].add(v(("x", i, j)))
            cols[j].add(v(("x", i, j)))
    for i in range(a):
        for j in range(a - 1):
            r = v(("r", i, j))
            rows[i].add(r)
            edges |= {(v(("x", i, j)), r), (r, v(("x", i, j + 1)))}
        for j in range(1, a - 1):
            edges.add((v(("r", i, j - 1)), v(("r", i, j))))
    for j in range(a):
        for i in range(a - 1):
            c = v(("c", i, j))
            cols[j].add(c)
            edges |= {(v(("x", i, j)), c), (c, v(("x", i + 1, j)))}
        for i in range(1, a - 1):
            edges.add((v(("c", i - 1, j)), v(("c", i, j))))
    G = Graph.from_edges(len(index), sorted(edges))
    return CrossingGrid(G, [mask_of(s) for s in rows], [mask_of(s) for s in cols])


def _anticomplete_family(G: Graph, family: list[VertexSet], what: str) -> Verdict:
    for (i, P), (j, Q) in combinations(enumerate(family), 2):
        if P & neighborhood(G, Q, closed=True):
            return Verdict(False, f"{what} {i} and {j} touch")
    return OK


def cross_order_lower_bound(G: Graph, rows: list[VertexSet], cols: list[VertexSet]) -> tuple[int, Verdict]:
    """Lower bound on the alpha-order of the cross bramble {R_i | C_j}.

    When rows are pairwise anticomplete, columns are pairwise anticomplete,
    and every row meets every column, a cover either meets all rows or
    misses a row and then meets every column.  Picking one hit vertex per
    strand gives an independent set, so the order is at least
    min(#rows, #cols).  Returns the bound with the verdict on the hypotheses;
    the bound is 0 when they fail.
    """
    for what, fam in (("rows", rows), ("columns", cols)):
        verdict = _anticomplete_family(G, fam, what)
        if not verdict:
            return 0, verdict
    for i, R in enumerate(rows):
        for j, C in enumerate(cols):
            if not R & C:
                return 0, Verdict(False, f"row {i} {to_list(R)} misses column {j}")
    return min(len(rows), len(cols)), OK
