"""Tree-decompositions, alpha-width, exact tree-independence number,
alpha-balanced separators, linked sets and the treated-vertices refinement."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator

from .graph import (
    OK,
    Graph,
    InvariantViolation,
    SizeCapError,
    Verdict,
    VertexSet,
    bits,
    component_of,
    components,
    independence_number,
    mask_of,
    neighborhood,
    popcount,
    to_list,
)

ALPHA_TW_CAP = 14
SEPARATOR_CAP = 16


@dataclass
class TreeDecomposition:
    """A tree over integer node ids with one bag (vertex mask) per node."""

    nodes: list[int]
    edges: list[tuple[int, int]]
    bags: dict[int, VertexSet]
    root: int | None = None

    def neighbours(self) -> dict[int, list[int]]:
        nb: dict[int, list[int]] = {t: [] for t in self.nodes}
        for a, b in self.edges:
            nb[a].append(b)
            nb[b].append(a)
        return nb

    def leaves(self) -> list[int]:
        nb = self.neighbours()
        return [t for t in self.nodes if len(nb[t]) <= 1]

    def to_json(self) -> dict:
        return {
            "nodes": list(self.nodes),
            "edges": [list(e) for e in self.edges],
            "bags": {str(t): to_list(self.bags[t]) for t in self.nodes},
            **({"root": self.root} if self.root is not None else {}),
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "TreeDecomposition":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            nodes=[int(t) for t in data["nodes"]],
            edges=[(int(a), int(b)) for a, b in data["edges"]],
            bags={int(t): mask_of(vs) for t, vs in data["bags"].items()},
            root=data.get("root"),
        )

    def to_dot(self) -> str:
        lines = ["graph TD {"]
        for t in self.nodes:
            label = ",".join(map(str, to_list(self.bags[t])))
            lines.append(f'  n{t} [shape=box, label="{t}: {{{label}}}"];')
        lines += [f"  n{a} -- n{b};" for a, b in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass
class Bounds:
    """Symbolic bound functions for the wheel theorem.

    ``f_korhonen(max_degree, ell)`` is pluggable; it is never evaluated by the
    desk-scale pipeline, which substitutes exact treewidth.
    """

    d: int
    ell: int
    f_korhonen: Callable[[int, int], int] = field(repr=False, default=lambda delta, ell: 1)

    @property
    def delta(self) -> int:
        return max(self.ell - 1, self.d + 2)

    @property
    def f_vicinity(self) -> int:
        return self.d * (self.ell - 1) * self.f_korhonen(self.delta, self.ell)

    @property
    def f_wheel(self) -> int:
        return 4 * self.f_vicinity + 1


# ---------------------------------------------------------------------------
# validation


def check_tree_decomposition(G: Graph, T: TreeDecomposition) -> Verdict:
    node_set = set(T.nodes)
    if len(node_set) != len(T.nodes):
        return Verdict(False, "duplicate node ids")
    if set(T.bags) != node_set:
        return Verdict(False, "bag ids do not match tree nodes")
    if not T.nodes:
        return Verdict(G.n == 0, "no nodes")
    for a, b in T.edges:
        if a not in node_set or b not in node_set or a == b:
            return Verdict(False, f"bad tree edge {a}-{b}")
    if len(T.edges) != len(T.nodes) - 1:
        return Verdict(False, "node graph is not a tree (edge count)")
    nb = T.neighbours()
    seen = {T.nodes[0]}
    stack = [T.nodes[0]]
    while stack:
        t = stack.pop()
        for s in nb[t]:
            if s not in seen:
                seen.add(s)
                stack.append(s)
    if len(seen) != len(T.nodes):
        return Verdict(False, "node graph is not connected")
    covered = 0
    for t in T.nodes:
        if T.bags[t] & ~G.vertices:
            return Verdict(False, f"bag {t} contains non-vertices")
        covered |= T.bags[t]
    if covered != G.vertices:
        missing = to_list(G.vertices & ~covered)
        return Verdict(False, f"vertex coverage fails: vertices {missing} in no bag")
    for u, v in G.edges():
        pair = 1 << u | 1 << v
        if not any(T.bags[t] & pair == pair for t in T.nodes):
            return Verdict(False, f"edge coverage fails: edge {u}-{v} in no bag")
    for v in range(G.n):
        holding = [t for t in T.nodes if T.bags[t] >> v & 1]
        hold = set(holding)
        reach = {holding[0]}
        stack = [holding[0]]
        while stack:
            t = stack.pop()
            for s in nb[t]:
                if s in hold and s not in reach:
                    reach.add(s)
                    stack.append(s)
        if reach != hold:
            return Verdict(False, f"subtree property fails for vertex {v}")
    return OK


def alpha_width(G: Graph, T: TreeDecomposition) -> int:
    verdict = check_tree_decomposition(G, T)
    if not verdict:
        raise ValueError(f"invalid tree-decomposition: {verdict.reason}")
    return max((independence_number(G, T.bags[t]) for t in T.nodes), default=0)


def width(T: TreeDecomposition) -> int:
    return max(popcount(b) for b in T.bags.values()) - 1


# ---------------------------------------------------------------------------
# elimination orderings


def _elimination_bag(G: Graph, eliminated: VertexSet, v: int) -> VertexSet:
    """``v`` plus its neighbours in the fill-in graph after eliminating
    ``eliminated`` (vertices reachable from v through eliminated ones)."""
    reach = component_of(G, v, eliminated | 1 << v)
    return (neighborhood(G, reach) & ~eliminated) | 1 << v


def best_elimination_ordering(G: Graph, cost: Callable[[VertexSet], int], cap: int = ALPHA_TW_CAP) -> tuple[int, list[int]]:
    """Minimise, over all elimination orderings, the maximum ``cost`` of an
    elimination bag.  Dynamic programme over eliminated prefixes (as sets)."""
    n = G.n
    if n > cap:
        raise SizeCapError(f"exact elimination search capped at n={cap}, got n={n}")
    if n == 0:
        return 0, []
    best = {0: (0, -1)}
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            S = mask_of(combo)
            choice = None
            for v in combo:
                prev = S & ~(1 << v)
                val = max(best[prev][0], cost(_elimination_bag(G, prev, v)))
                if choice is None or val < choice[0]:
                    choice = (val, v)
            best[S] = choice
    order = []
    S = G.vertices
    while S:
        v = best[S][1]
        order.append(v)
        S &= ~(1 << v)
    return best[G.vertices][0], order[::-1]


def decomposition_from_ordering(G: Graph, order: list[int]) -> TreeDecomposition:
    """Tree-decomposition whose bags are the elimination bags of ``order``."""
    if not order:
        return TreeDecomposition([0], [], {0: 0}, root=0)
    pos = {v: i for i, v in enumerate(order)}
    bags = {}
    edges = []
    roots = []
    eliminated = 0
    for i, v in enumerate(order):
        bag = _elimination_bag(G, eliminated, v)
        bags[i] = bag
        later = [pos[u] for u in bits(bag & ~(1 << v))]
        if later:
            edges.append((i, min(later)))
        else:
            roots.append(i)
        eliminated |= 1 << v
    edges += [(roots[j], roots[j + 1]) for j in range(len(roots) - 1)]
    return TreeDecomposition(list(range(len(order))), edges, bags, root=roots[-1])


def alpha_tw_exact(G: Graph) -> tuple[int, TreeDecomposition]:
    """Exact tree-independence number with a witness decomposition."""
    value, order = best_elimination_ordering(G, lambda bag: independence_number(G, bag))
    return value, decomposition_from_ordering(G, order)


def treewidth_exact(G: Graph, cap: int = ALPHA_TW_CAP) -> tuple[int, TreeDecomposition]:
    value, order = best_elimination_ordering(G, lambda bag: popcount(bag) - 1, cap)
    return value, decomposition_from_ordering(G, order)


# ---------------------------------------------------------------------------
# balanced separators and linked sets


def is_balanced(G: Graph, X: VertexSet, S: VertexSet) -> bool:
    """Every component C of G - S has 2 * alpha(C & X) <= alpha(X)."""
    ax = independence_number(G, X)
    return all(2 * independence_number(G, C & X) <= ax for C in components(G, G.vertices & ~S))


@lru_cache(maxsize=256)
def _small_alpha_sets(G: Graph, k: int) -> tuple[tuple[VertexSet, tuple[VertexSet, ...]], ...]:
    """All S with alpha(S) <= k in (size, lex) order, with components of G - S."""
    if G.n > SEPARATOR_CAP:
        raise SizeCapError(f"separator search capped at n={SEPARATOR_CAP}, got n={G.n}")
    out = []
    for size in range(G.n + 1):
        any_small = False
        for combo in combinations(range(G.n), size):
            S = mask_of(combo)
            if independence_number(G, S) <= k:
                any_small = True
                out.append((S, tuple(components(G, G.vertices & ~S))))
        if not any_small and size > 0:
            break
    return tuple(out)


def balanced_separators(G: Graph, X: VertexSet, k: int) -> Iterator[VertexSet]:
    """All alpha-balanced separators S for X with alpha(S) <= k, in
    increasing size then lexicographic order."""
    ax = independence_number(G, X)
    for S, comps in _small_alpha_sets(G, k):
        if all(2 * independence_number(G, C & X) <= ax for C in comps):
            yield S


def balanced_separator(G: Graph, X: VertexSet, k: int) -> VertexSet | None:
    return next(balanced_separators(G, X, k), None)


def is_k_alpha_linked(G: Graph, X: VertexSet, k: int) -> bool:
    return balanced_separator(G, X, k) is None


def find_k_alpha_linked(G: Graph, k: int) -> VertexSet | None:
    """A k-alpha-linked set, scanning by decreasing alpha(X), then lex order.

    Sets with alpha(X) <= k are skipped: X itself separates them.
    """
    if G.n > SEPARATOR_CAP:
        raise SizeCapError(f"linked-set search capped at n={SEPARATOR_CAP}, got n={G.n}")
    candidates = []
    for size in range(1, G.n + 1):
        for combo in combinations(range(G.n), size):
            X = mask_of(combo)
            a = independence_number(G, X)
            if a > k:
                candidates.append((-a, combo, X))
    candidates.sort()
    for _, _, X in candidates:
        if balanced_separator(G, X, k) is None:
            return X
    return None


def heavy_components(G: Graph, X: VertexSet, S: VertexSet) -> list[VertexSet]:
    """All components C of G - S with 2 * alpha(C & X) > alpha(X).

    Components are pairwise non-adjacent, so alpha adds over them and at most
    one can qualify; a second one signals a broken alpha computation.
    """
    ax = independence_number(G, X)
    return [C for C in components(G, G.vertices & ~S) if 2 * independence_number(G, C & X) > ax]


def heavy_component(G: Graph, X: VertexSet, S: VertexSet) -> VertexSet | None:
    found = heavy_components(G, X, S)
    if len(found) > 1:
        raise InvariantViolation(f"{len(found)} heavy components: {[to_list(c) for c in found]}")
    return found[0] if found else None


# ---------------------------------------------------------------------------
# refinement towards alpha-width <= 2k + 1


@dataclass
class RefineResult:
    decomposition: TreeDecomposition | None
    linked_set: VertexSet | None
    treated_counts: list[int]
    separator_skips: int = 0
    fallback: bool = False


class _Work:
    def __init__(self, G: Graph, cap: int):
        self.G = G
        self.cap = cap
        self.bags: dict[int, VertexSet] = {}
        self.nb: dict[int, set[int]] = {}
        self.next_id = 0

    def add(self, bag: VertexSet, parent: int | None = None) -> int:
        t = self.next_id
        self.next_id += 1
        self.bags[t] = bag
        self.nb[t] = set()
        if parent is not None:
            self.nb[t].add(parent)
            self.nb[parent].add(t)
        return t

    def remove(self, t: int) -> None:
        for s in self.nb.pop(t):
            self.nb[s].discard(t)
        del self.bags[t]

    def alpha(self, t: int) -> int:
        return independence_number(self.G, self.bags[t])

    def treated(self) -> VertexSet:
        out = 0
        for t, bag in self.bags.items():
            if independence_number(self.G, bag) <= self.cap:
                out |= bag
        return out

    def freeze(self, root: int) -> TreeDecomposition:
        nodes = sorted(self.bags)
        edges = sorted({(min(a, b), max(a, b)) for a in nodes for b in self.nb[a]})
        return TreeDecomposition(nodes, edges, dict(self.bags), root=root)


def _split_groups(G: Graph, parent_bag: VertexSet, leaf_bag: VertexSet, X: VertexSet, S: VertexSet):
    """Per-component pieces ``(R_i, X_i)`` for splitting a heavy leaf along S.

    Vertices of S private to the leaf (in the leaf bag but not the parent's)
    are absorbed into the unique piece they touch.  Returns ``None`` when such
    a vertex bridges two pieces: no split along S keeps the subtree property.
    """
    private_s = S & leaf_bag & ~parent_bag
    pieces = [C & leaf_bag for C in components(G, G.vertices & ~S) if C & leaf_bag]
    for Z in components(G, private_s):
        touch = [i for i, R in enumerate(pieces) if neighborhood(G, Z) & R]
        if len(touch) > 1:
            return None
        if touch:
            pieces[touch[0]] |= Z
        else:
            pieces.append(Z)
    return [(R, R & X) for R in pieces]


def _graft_key(G: Graph, bag: VertexSet, u: int) -> tuple[int, bool, int]:
    # smallest resulting alpha, then neighbours of the bag, then smallest id
    return (independence_number(G, bag | 1 << u), not G.adj[u] & bag, u)


def _exact_fallback(G: Graph, k: int, counts: list[int], skips: int) -> RefineResult:
    """Used when every balanced separator of the current adhesion contains a
    leaf-private vertex joining two pieces, so no local split exists."""
    value, T = alpha_tw_exact(G)
    if value <= 2 * k + 1:
        return RefineResult(T, None, counts, skips, fallback=True)
    X = find_k_alpha_linked(G, k)
    if X is None:
        raise InvariantViolation(f"no {k}-alpha-linked set yet alpha-tw = {value} > {2 * k + 1}")
    return RefineResult(None, X, counts, skips, fallback=True)


def refine_decomposition(G: Graph, k: int) -> RefineResult:
    """Either a tree-decomposition of alpha-width <= 2k+1 or a k-alpha-linked set.

    Runs the treated-vertices loop: heavy leaves are either grafted (small
    adhesion) or split along an alpha-balanced separator of their adhesion.
    """
    cap = 2 * k + 1
    W = _Work(G, cap)
    if G.n == 0:
        return RefineResult(TreeDecomposition([0], [], {0: 0}, root=0), None, [0])
    seed = 1
    for u in bits(G.adj[0]):
        if independence_number(G, seed | 1 << u) <= cap:
            seed |= 1 << u
    root = W.add(seed)
    W.add(G.vertices, root)
    counts = [popcount(W.treated())]
    skips = 0
    while True:
        heavy = [t for t in sorted(W.bags) if t != root and len(W.nb[t]) == 1 and W.alpha(t) > cap]
        if not heavy:
            break
        leaf = heavy[0]
        (t,) = W.nb[leaf]
        adhesion = W.bags[t] & W.bags[leaf]
        a_adh = independence_number(G, adhesion)
        if a_adh < cap:
            untreated = W.bags[leaf] & ~W.bags[t]
            if not untreated:
                raise InvariantViolation("heavy leaf has no private vertex")
            v = min(bits(untreated), key=lambda u: _graft_key(G, adhesion, u))
            big = W.bags[leaf]
            W.bags[leaf] = adhesion | 1 << v
            W.add(big, leaf)
        else:
            if a_adh != cap:
                raise InvariantViolation("adhesion exceeds the partial width bound")
            X = adhesion
            groups = None
            for S in balanced_separators(G, X, k):
                groups = _split_groups(G, W.bags[t], W.bags[leaf], X, S)
                if groups is not None:
                    break
                skips += 1
            else:
                if balanced_separator(G, X, k) is None:
                    return RefineResult(None, X, counts, skips)
                return _exact_fallback(G, k, counts, skips)
            S_shared = S & X
            leaf_bag = W.bags[leaf]
            W.remove(leaf)
            for R, Xi in groups:
                private = R & ~Xi
                Y = Xi | S_shared
                if private:
                    v = min(bits(private), key=lambda u: _graft_key(G, Y, u))
                    Y |= 1 << v
                    ti = W.add(Y, t)
                    W.add(R | Y, ti)
                else:
                    W.add(Y, t)
            if leaf_bag & ~(S_shared | mask_of(b for R, _ in groups for b in bits(R))):
                raise InvariantViolation("split lost vertices of the heavy leaf")
        new_count = popcount(W.treated())
        if new_count <= counts[-1]:
            raise InvariantViolation("treated-vertex count did not increase")
        counts.append(new_count)
    return RefineResult(W.freeze(root), None, counts, skips)
