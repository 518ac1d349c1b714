"""Elimination forests, alpha-depth, exact alpha-treedepth and the
constructive elimination trees for paths, {P_k, K_{1,d}}-free graphs and
complete bipartite graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import (
    OK,
    Graph,
    PreconditionError,
    SizeCapError,
    Verdict,
    VertexSet,
    bits,
    components,
    independence_number,
    is_connected,
    is_induced_path,
    is_k1d_free,
    lowest,
    neighborhood,
)
from .width import TreeDecomposition

ALPHA_TD_CAP = 26


@dataclass(frozen=True)
class EliminationForest:
    """``parent[v]`` is the parent of vertex ``v`` or ``None`` for roots."""

    parent: tuple[int | None, ...]

    @property
    def roots(self) -> list[int]:
        return [v for v, p in enumerate(self.parent) if p is None]

    def children(self) -> dict[int, list[int]]:
        ch: dict[int, list[int]] = {v: [] for v in range(len(self.parent))}
        for v, p in enumerate(self.parent):
            if p is not None:
                ch[p].append(v)
        return ch

    def ancestors(self, v: int) -> VertexSet:
        out = 0
        p = self.parent[v]
        while p is not None:
            out |= 1 << p
            p = self.parent[p]
        return out

    def root_to_leaf_paths(self) -> list[VertexSet]:
        ch = self.children()
        return [self.ancestors(v) | 1 << v for v in ch if not ch[v]]

    def to_json(self) -> dict:
        return {"parent": {str(v): p for v, p in enumerate(self.parent)}, "roots": self.roots}

    @classmethod
    def from_json(cls, data: dict | str) -> "EliminationForest":
        if isinstance(data, str):
            data = json.loads(data)
        par = {int(v): p for v, p in data["parent"].items()}
        forest = cls(tuple(None if par[v] is None else int(par[v]) for v in range(len(par))))
        if "roots" in data and sorted(data["roots"]) != forest.roots:
            raise ValueError("roots do not match the parentless vertices")
        return forest

    def to_dot(self) -> str:
        lines = ["digraph F {", "  rankdir=TB;"]
        lines += [f"  {v};" for v in range(len(self.parent))]
        lines += [f"  {p} -> {v};" for v, p in enumerate(self.parent) if p is not None]
        lines.append("}")
        return "\n".join(lines) + "\n"


def is_elimination_forest(G: Graph, F: EliminationForest) -> Verdict:
    if len(F.parent) != G.n:
        return Verdict(False, f"forest has {len(F.parent)} vertices, graph has {G.n}")
    for v, p in enumerate(F.parent):
        if p is not None and not (0 <= p < G.n) or p == v:
            return Verdict(False, f"bad parent {p} for vertex {v}")
    for v in range(G.n):
        seen = {v}
        p = F.parent[v]
        while p is not None:
            if p in seen:
                return Verdict(False, f"parent relation has a cycle through {v}")
            seen.add(p)
            p = F.parent[p]
    anc = [F.ancestors(v) for v in range(G.n)]
    for u, v in G.edges():
        if not (anc[u] >> v & 1 or anc[v] >> u & 1):
            return Verdict(False, f"edge {u}-{v} not on a root-to-leaf path")
    return OK


def alpha_depth(G: Graph, F: EliminationForest) -> int:
    verdict = is_elimination_forest(G, F)
    if not verdict:
        raise ValueError(f"invalid elimination forest: {verdict.reason}")
    return max((independence_number(G, P) for P in F.root_to_leaf_paths()), default=0)


# ---------------------------------------------------------------------------
# exact alpha-treedepth


def alpha_td_exact(G: Graph) -> tuple[int, EliminationForest]:
    """Exact alpha-treedepth with an optimal elimination forest.

    Decides "alpha-depth <= t" for t = 1, 2, ... by recursion over
    (remaining connected set S, ancestor set A): some root r in S keeps
    alpha(A + r) <= t and every component of S - r succeeds with A + r.
    The memo key is the full pair (S, A); pruning A is unsound in general.
    """
    if G.n > ALPHA_TD_CAP:
        raise SizeCapError(f"exact alpha-treedepth capped at n={ALPHA_TD_CAP}, got n={G.n}")
    if G.n == 0:
        return 0, EliminationForest(())
    t = 1
    while True:
        parent = _decide_alpha_td(G, t)
        if parent is not None:
            return t, EliminationForest(tuple(parent))
        t += 1


def _decide_alpha_td(G: Graph, t: int) -> list[int | None] | None:
    memo: dict[tuple[VertexSet, VertexSet], int | None] = {}

    def feasible(S: VertexSet, A: VertexSet) -> bool:
        key = (S, A)
        if key in memo:
            return memo[key] is not None
        choice = None
        for r in bits(S):
            A2 = A | 1 << r
            if independence_number(G, A2) > t:
                continue
            if all(feasible(C, A2) for C in components(G, S & ~(1 << r))):
                choice = r
                break
        memo[key] = choice
        return choice is not None

    parent: list[int | None] = [None] * G.n

    def build(S: VertexSet, A: VertexSet, above: int | None) -> None:
        r = memo[(S, A)]
        parent[r] = above
        for C in components(G, S & ~(1 << r)):
            build(C, A | 1 << r, r)

    comps = components(G)
    if not all(feasible(C, 0) for C in comps):
        return None
    for C in comps:
        build(C, 0, None)
    return parent


def forest_restriction(F: EliminationForest, S: VertexSet) -> EliminationForest:
    """The forest induced on S: each vertex's parent is its nearest ancestor in S.

    Vertices outside S keep no parent; callers relabel as needed.
    """
    parent: list[int | None] = [None] * len(F.parent)
    for v in bits(S):
        p = F.parent[v]
        while p is not None and not S >> p & 1:
            p = F.parent[p]
        parent[v] = p
    return EliminationForest(tuple(parent))


def decomposition_from_forest(G: Graph, F: EliminationForest) -> TreeDecomposition:
    """Path decomposition whose bags are root-to-leaf paths, leaves in DFS order.

    Its alpha-width equals the forest's alpha-depth.
    """
    ch = F.children()
    leaves = []

    def dfs(v: int) -> None:
        if not ch[v]:
            leaves.append(v)
        for c in ch[v]:
            dfs(c)

    for r in F.roots:
        dfs(r)
    if not leaves:
        return TreeDecomposition([0], [], {0: 0}, root=0)
    bags = {i: F.ancestors(v) | 1 << v for i, v in enumerate(leaves)}
    edges = [(i, i + 1) for i in range(len(leaves) - 1)]
    return TreeDecomposition(list(range(len(leaves))), edges, bags, root=0)


# ---------------------------------------------------------------------------
# constructions


def alpha_td_path_formula(k: int) -> int:
    """ceil(log2(k/3 + 1)) in exact integer arithmetic: least l with 3(2^l - 1) >= k."""
    level = 0
    while 3 * (2 ** level - 1) < k:
        level += 1
    return max(level, 1) if k >= 1 else 0


def _full_path_tree(level: int) -> dict[int, int | None]:
    """Parent map (1-based labels) of the median tree on P_{3(2^level - 1)}."""
    if level == 1:
        return {2: None, 1: 2, 3: 2}
    k = 3 * (2 ** level - 1)
    r = (k + 1) // 2
    sub = _full_path_tree(level - 1)
    shift = (k + 3) // 2
    parent: dict[int, int | None] = {r: None, r - 1: r, r + 1: r}
    for v, p in sub.items():
        parent[v] = r - 1 if p is None else p
        parent[v + shift] = r + 1 if p is None else p + shift
    return parent


def path_elimination_tree(k: int) -> EliminationForest:
    """Elimination tree of P_k (vertices 0..k-1) with alpha-depth
    ceil(log2(k/3 + 1)): the median construction on the next full size,
    restricted to the first k vertices."""
    if k < 1:
        raise ValueError("k must be positive")
    level = alpha_td_path_formula(k)
    full = _full_path_tree(level)
    size = len(full)
    F = EliminationForest(tuple(None if full[v + 1] is None else full[v + 1] - 1 for v in range(size)))
    R = forest_restriction(F, (1 << k) - 1)
    return EliminationForest(R.parent[:k])


def kdd_elimination(d: int) -> EliminationForest:
    """Forest for K_{d,d} (sides 0..d-1 and d..2d-1): a chain through one side
    with every vertex of the other side hanging below its last vertex."""
    if d < 1:
        raise ValueError("d must be positive")
    parent: list[int | None] = [None] + list(range(d - 1)) + [d - 1] * d
    return EliminationForest(tuple(parent))


def gyarfas_elimination(G: Graph, d: int, k: int, root: int = 0) -> EliminationForest | tuple[int, ...]:
    """Elimination tree rooted at ``root`` of alpha-depth at most
    max(1, (d-1)(k-2)), or an induced path on k vertices starting at ``root``.

    ``G`` must be connected and K_{1,d}-free.  Paths are returned as tuples.
    """
    if not is_connected(G):
        raise PreconditionError("graph is disconnected; split into components first")
    ok, witness = is_k1d_free(G, d) if d >= 1 else (G.num_edges() == 0, None)
    if not ok:
        raise PreconditionError(f"graph contains an induced K_1,{d}", witness)
    if G.n == 1:
        return EliminationForest((None,))
    if k <= 2 or d <= 1:
        # a connected graph on >= 2 vertices has an induced P_2 through root
        if k <= 1:
            return (root,)
        return (root, lowest(G.adj[root]))
    parent: list[int | None] = [None] * G.n
    found = _gyarfas(G, G.vertices, root, k, parent)
    if found is not None:
        return tuple(found)
    return EliminationForest(tuple(parent))


def _gyarfas(G: Graph, U: VertexSet, r: int, k: int, parent: list[int | None]) -> list[int] | None:
    """Fill ``parent`` for G[U] below r, or return an induced P_k starting at r."""
    closed = (G.adj[r] & U) | 1 << r
    if k == 3:
        outside = U & ~closed
        if outside:
            for y in bits(G.adj[r] & U):
                if G.adj[y] & outside:
                    return [r, y, lowest(G.adj[y] & outside)]
        chain = [r] + [v for v in bits(U) if v != r]
        for a, b in zip(chain, chain[1:]):
            parent[b] = a
        return None
    q = [r] + [v for v in bits(G.adj[r] & U)]
    pos = {v: i for i, v in enumerate(q)}
    for a, b in zip(q, q[1:]):
        parent[b] = a
    for J in components(G, U & ~closed):
        contacts = neighborhood(G, J) & closed
        rj = max(bits(contacts), key=pos.__getitem__)
        sub = _gyarfas(G, J | 1 << rj, rj, k - 1, parent)
        if sub is not None:
            return [r] + sub
    return None


def check_gyarfas_output(G: Graph, d: int, k: int, out) -> Verdict:
    if isinstance(out, EliminationForest):
        verdict = is_elimination_forest(G, out)
        if not verdict:
            return verdict
        bound = max(1, (d - 1) * (k - 2))
        depth = alpha_depth(G, out)
        return OK if depth <= bound else Verdict(False, f"alpha-depth {depth} exceeds {bound}")
    if len(out) == k and is_induced_path(G, list(out)):
        return OK
    return Verdict(False, f"returned sequence {list(out)} is not an induced P_{k}")


__all__ = [
    "EliminationForest",
    "is_elimination_forest",
    "alpha_depth",
    "alpha_td_exact",
    "alpha_td_path_formula",
    "path_elimination_tree",
    "kdd_elimination",
    "gyarfas_elimination",
    "check_gyarfas_output",
    "decomposition_from_forest",
    "forest_restriction",
]
