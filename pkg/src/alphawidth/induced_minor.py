"""Induced minor models, exhaustive containment search, small-model
minimisation, wheels next to long induced cycles, and wheel detection."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .graph import (
    OK,
    Graph,
    InvariantViolation,
    PreconditionError,
    SizeCapError,
    Verdict,
    VertexSet,
    bits,
    clique_number,
    components,
    cycle_graph,
    is_connected_set,
    is_induced_cycle,
    is_k1d_free,
    lowest,
    mask_of,
    max_clique,
    neighborhood,
    popcount,
    set_key,
    to_list,
)
from .width import Bounds, TreeDecomposition, alpha_tw_exact, check_tree_decomposition, treewidth_exact

MODEL_CAP = 14


def wheel_graph(ell: int) -> Graph:
    """W_ell: rim 0..ell-1 in cycle order, hub ell."""
    if ell < 3:
        raise ValueError(f"wheels need ell >= 3, got {ell}")
    edges = [(i, (i + 1) % ell) for i in range(ell)] + [(i, ell) for i in range(ell)]
    return Graph.from_edges(ell + 1, edges)


@dataclass
class InducedMinorModel:
    """``branch[h]`` is the host vertex set of pattern vertex ``h``."""

    branch: dict[int, VertexSet]
    pattern: str | None = None

    @property
    def union(self) -> VertexSet:
        out = 0
        for X in self.branch.values():
            out |= X
        return out

    def to_json(self) -> dict:
        out: dict = {"branch": {str(h): to_list(self.branch[h]) for h in sorted(self.branch)}}
        if self.pattern is not None:
            out = {"pattern": self.pattern, **out}
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> "InducedMinorModel":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({int(h): mask_of(vs) for h, vs in data["branch"].items()}, data.get("pattern"))


def pattern_from_name(name: str) -> Graph:
    """Named patterns: W<l>, K<n>, P<n>, C<n>."""
    from .graph import complete_graph, path_graph

    kind, num = name[:1].upper(), name[1:]
    if not num.isdigit():
        raise ValueError(f"unknown pattern {name!r}")
    n = int(num)
    table = {"W": wheel_graph, "K": complete_graph, "P": path_graph, "C": cycle_graph}
    if kind not in table:
        raise ValueError(f"unknown pattern {name!r}")
    return table[kind](n)


def is_model(G: Graph, H: Graph, M: InducedMinorModel) -> Verdict:
    if set(M.branch) != set(range(H.n)):
        return Verdict(False, f"branch keys {sorted(M.branch)} do not match pattern vertices 0..{H.n - 1}")
    for h, X in M.branch.items():
        if not X or X >> G.n:
            return Verdict(False, f"branch set of {h} is empty or out of range")
        if not is_connected_set(G, X):
            return Verdict(False, f"branch set of {h} {to_list(X)} is not connected")
    closed = {h: neighborhood(G, X) for h, X in M.branch.items()}
    for u in range(H.n):
        for v in range(u + 1, H.n):
            if M.branch[u] & M.branch[v]:
                return Verdict(False, f"branch sets of {u} and {v} overlap")
            touching = bool(closed[u] & M.branch[v])
            if touching != H.has_edge(u, v):
                want = "adjacent" if H.has_edge(u, v) else "non-adjacent"
                return Verdict(False, f"branch sets of {u} and {v} should be {want}")
    return OK


# ---------------------------------------------------------------------------
# exhaustive search


@lru_cache(maxsize=64)
def connected_subsets(G: Graph) -> tuple[VertexSet, ...]:
    """All non-empty connected vertex sets, ordered by lowest vertex then mask."""
    if G.n > MODEL_CAP:
        raise SizeCapError(f"connected-subset enumeration capped at n={MODEL_CAP}, got n={G.n}")
    found = [X for X in range(1, 1 << G.n) if is_connected_set(G, X)]
    return tuple(sorted(found, key=set_key))


def find_induced_minor(G: Graph, H: Graph, small_only: bool = True) -> InducedMinorModel | None:
    """First induced minor model of H in G in canonical search order, or None.

    Pattern vertices are placed by decreasing degree; each branch set must
    avoid the closed neighbourhoods of placed non-neighbours and touch every
    placed neighbour.  With ``small_only`` a partial model whose union has
    clique number above |V(H)|^2 is discarded; by the small-model lemma this
    never changes presence.
    """
    if H.n == 0:
        return InducedMinorModel({})
    if H.n > G.n:
        return None
    sets = connected_subsets(G)
    order = sorted(range(H.n), key=lambda h: (-H.degree(h), h))
    limit = H.n * H.n
    branch: dict[int, VertexSet] = {}
    closed: dict[int, VertexSet] = {}

    def region(u: int, used: VertexSet) -> VertexSet:
        R = G.vertices & ~used
        for w in branch:
            if not H.has_edge(u, w):
                R &= ~closed[w]
        return R

    def rest_feasible(used: VertexSet) -> bool:
        for u in range(H.n):
            if u in branch:
                continue
            need = [branch[w] for w in branch if H.has_edge(u, w)]
            R = region(u, used)
            if not any(all(neighborhood(G, C) & B for B in need) for C in components(G, R)):
                return False
        return True

    def place(i: int, used: VertexSet) -> bool:
        if i == H.n:
            return True
        u = order[i]
        R = region(u, used)
        need = [branch[w] for w in branch if H.has_edge(u, w)]
        for S in sets:
            if S & ~R:
                continue
            nS = neighborhood(G, S)
            if any(not nS & B for B in need):
                continue
            if small_only and clique_number(G, used | S) > limit:
                continue
            branch[u], closed[u] = S, nS | S
            if rest_feasible(used | S) and place(i + 1, used | S):
                return True
            del branch[u], closed[u]
        return False

    if not place(0, 0):
        return None
    return InducedMinorModel(dict(sorted(branch.items())))


def _contract(G: Graph, u: int, v: int) -> Graph:
    """Merge v into u and drop v."""
    keep = [w for w in range(G.n) if w != v]
    pos = {w: i for i, w in enumerate(keep)}
    merged = (G.adj[u] | G.adj[v]) & ~(1 << u | 1 << v)
    edges = set()
    for w in keep:
        row = merged if w == u else G.adj[w] & ~(1 << v)
        if w != u and G.adj[w] >> v & 1:
            row |= 1 << u
        for x in bits(row):
            if x != w:
                a, b = pos[w], pos[x]
                edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(len(keep), sorted(edges))


def has_induced_minor_by_reduction(G: Graph, H: Graph) -> bool:
    """Independent oracle: does some sequence of vertex deletions and edge
    contractions turn G into a copy of H?  Memoised on canonical forms."""
    from .enumerate import canonical_graph6

    target = canonical_graph6(H)
    return _reduces_to(canonical_graph6(G), target, H.n, H.num_edges())


@lru_cache(maxsize=None)
def _reduces_to(code: str, target: str, hn: int, hm: int) -> bool:
    from .enumerate import canonical_graph6
    from .io import parse_graph6

    G = parse_graph6(code)
    if G.n < hn or G.num_edges() < hm:
        return False
    if G.n == hn:
        return code == target
    children = set()
    for v in range(G.n):
        children.add(canonical_graph6(G.induced(G.vertices & ~(1 << v))[0]))
    for u, v in G.edges():
        children.add(canonical_graph6(_contract(G, u, v)))
    return any(_reduces_to(c, target, hn, hm) for c in sorted(children))


def minimize_model(G: Graph, H: Graph, M: InducedMinorModel) -> InducedMinorModel:
    """Shrink a model until its union has clique number <= |V(H)|^2.

    Each step picks a branch set X_v with clique number above |V(H)|, grows a
    BFS tree inside it from a vertex of a maximum clique, protects one leaf per
    pattern neighbour whose branch set sees the root-to-leaf path, and deletes
    the smallest unprotected leaf.
    """
    verdict = is_model(G, H, M)
    if not verdict:
        raise PreconditionError(f"invalid model: {verdict.reason}")
    branch = dict(M.branch)
    limit = H.n * H.n
    while True:
        union = 0
        for X in branch.values():
            union |= X
        if clique_number(G, union) <= limit:
            break
        v = next((h for h in sorted(branch) if clique_number(G, branch[h]) > H.n), None)
        if v is None:
            raise InvariantViolation("large union clique without a large branch clique")
        X = branch[v]
        root = lowest(max_clique(G, X))
        parent = {root: None}
        frontier = [root]
        while frontier:
            nxt = []
            for a in frontier:
                for b in bits(G.adj[a] & X):
                    if b not in parent:
                        parent[b] = a
                        nxt.append(b)
            frontier = nxt
        has_child = {p for p in parent.values() if p is not None}
        leaves = sorted(w for w in parent if w not in has_child and w != root)
        protected = set()
        for u in sorted(h for h in branch if H.has_edge(v, h)):
            seen_by_u = neighborhood(G, branch[u])
            for leaf in leaves:
                w, hit = leaf, False
                while w is not None:
                    if seen_by_u >> w & 1:
                        hit = True
                        break
                    w = parent[w]
                if hit:
                    protected.add(leaf)
                    break
        free = [w for w in leaves if w not in protected]
        if not free:
            raise InvariantViolation(f"no unprotected leaf in branch set of {v}")
        before = popcount(union)
        branch[v] = X & ~(1 << free[0])
        shrunk = InducedMinorModel(dict(branch), M.pattern)
        verdict = is_model(G, H, shrunk)
        if not verdict:
            raise InvariantViolation(f"leaf deletion broke the model: {verdict.reason}")
        assert popcount(shrunk.union) == before - 1
    return InducedMinorModel(dict(sorted(branch.items())), M.pattern)


# ---------------------------------------------------------------------------
# wheels next to long induced cycles


def induced_cycles(G: Graph, min_len: int = 3) -> Iterator[list[int]]:
    """Every induced cycle of length >= min_len once, as a vertex list that
    starts at its smallest vertex and whose second vertex is below its last."""
    for s in range(G.n):
        higher = G.vertices & ~((1 << (s + 1)) - 1)
        stack = [[s, w] for w in reversed(list(bits(G.adj[s] & higher)))]
        while stack:
            path = stack.pop()
            last = path[-1]
            inner = mask_of(path[1:-1])
            on_path = mask_of(path)
            ext = []
            for v in bits(G.adj[last] & higher & ~on_path):
                if G.adj[v] & inner:
                    continue
                if G.adj[s] >> v & 1:
                    if path[1] < v and len(path) + 1 >= min_len:
                        yield path + [v]
                else:
                    ext.append(path + [v])
            stack.extend(reversed(ext))


def find_induced_cycle(G: Graph, min_len: int = 3) -> list[int] | None:
    return next(induced_cycles(G, min_len), None)


def _check_cycle_component(G: Graph, C: list[int], K: VertexSet) -> VertexSet:
    if not is_induced_cycle(G, C):
        raise PreconditionError(f"{C} is not an induced cycle")
    cm = mask_of(C)
    if not K or K & cm or not is_connected_set(G, K) or neighborhood(G, K) & ~cm:
        raise PreconditionError(f"{to_list(K)} is not a component of G - C")
    return neighborhood(G, K)


def wheel_from_cycle(G: Graph, C: list[int], K: VertexSet) -> InducedMinorModel:
    """Model of W_m, m = |N(K)|: hub K, rim the arcs of C that each start at a
    vertex of N(K) and stop before the next one, starting from the smallest."""
    attach = _check_cycle_component(G, C, K)
    m = popcount(attach)
    if m < 3:
        raise PreconditionError(f"|N(K)| = {m} is below 3")
    start = C.index(lowest(attach))
    walk = C[start:] + C[:start]
    arcs: list[list[int]] = []
    for v in walk:
        if attach >> v & 1:
            arcs.append([v])
        else:
            arcs[-1].append(v)
    branch = {i: mask_of(arc) for i, arc in enumerate(arcs)}
    branch[m] = K
    M = InducedMinorModel(branch, f"W{m}")
    verdict = is_model(G, wheel_graph(m), M)
    if not verdict:
        raise InvariantViolation(f"arc model fails: {verdict.reason}")
    return M


def shrink_wheel(G: Graph, M: InducedMinorModel, ell: int) -> InducedMinorModel:
    """Merge the trailing rim branches of a W_m model into one, giving W_ell."""
    m = len(M.branch) - 1
    if not 3 <= ell <= m:
        raise ValueError(f"cannot shrink W{m} to W{ell}")
    branch = {i: M.branch[i] for i in range(ell - 1)}
    tail = 0
    for i in range(ell - 1, m):
        tail |= M.branch[i]
    branch[ell - 1] = tail
    branch[ell] = M.branch[m]
    out = InducedMinorModel(branch, f"W{ell}")
    verdict = is_model(G, wheel_graph(ell), out)
    if not verdict:
        raise InvariantViolation(f"merged rim fails: {verdict.reason}")
    return out


@dataclass
class VicinityDecomposition:
    """Decomposition around an induced cycle C: F1 nodes carry bags inside
    N[C]; each F2 node is a leaf with bag N[J] for one component J of
    G - N[C] (``phi[J]`` is that leaf)."""

    decomposition: TreeDecomposition
    f1: set[int]
    f2: set[int]
    phi: dict[VertexSet, int]
    contracted_tw: int
    bound: int = field(default=0)

    def to_json(self) -> dict:
        return {
            "decomposition": self.decomposition.to_json(),
            "F1": sorted(self.f1),
            "F2": sorted(self.f2),
            "phi": [[to_list(J), t] for J, t in sorted(self.phi.items(), key=lambda it: set_key(it[0]))],
            "contracted_tw": self.contracted_tw,
            "bound": self.bound,
        }


def cycle_vicinity_decomposition(G: Graph, C: list[int], d: int, ell: int) -> VicinityDecomposition | InducedMinorModel:
    """A W_ell model from a component of G - C with >= ell attachments, or the
    decomposition built from an exact tree-decomposition of the graph G1
    where each component of G - C is contracted to one vertex."""
    if not is_induced_cycle(G, C):
        raise PreconditionError(f"{C} is not an induced cycle")
    if len(C) < ell:
        raise PreconditionError(f"cycle length {len(C)} is below ell={ell}")
    free, witness = is_k1d_free(G, d)
    if not free:
        raise PreconditionError(f"graph contains an induced K_1,{d}", witness)
    cm = mask_of(C)
    comps = components(G, G.vertices & ~cm)
    for K in comps:
        if popcount(neighborhood(G, K)) >= ell:
            return shrink_wheel(G, wheel_from_cycle(G, C, K), ell)
    # G1: cycle vertices 0..|C|-1, then one vertex per component of G - C
    idx = {v: i for i, v in enumerate(C)}
    n1 = len(C) + len(comps)
    edges1 = [(i, (i + 1) % len(C)) for i in range(len(C))]
    for j, K in enumerate(comps):
        edges1 += [(idx[c], len(C) + j) for c in bits(neighborhood(G, K))]
    G1 = Graph.from_edges(n1, sorted({(min(a, b), max(a, b)) for a, b in edges1}))
    tw, T1 = treewidth_exact(G1, cap=max(MODEL_CAP, n1))
    closed_c = neighborhood(G, cm, closed=True)
    rim = neighborhood(G, cm)
    bags: dict[int, VertexSet] = {}
    for t in T1.nodes:
        bag = 0
        for x in bits(T1.bags[t]):
            if x < len(C):
                bag |= 1 << C[x]
            else:
                bag |= comps[x - len(C)] & rim
        bags[t] = bag
    nodes = list(T1.nodes)
    edges = list(T1.edges)
    f1 = set(nodes)
    f2: set[int] = set()
    phi: dict[VertexSet, int] = {}
    home = {}
    for j in range(len(comps)):
        home[j] = next(t for t in T1.nodes if T1.bags[t] >> (len(C) + j) & 1)
    nxt = max(nodes) + 1
    for J in components(G, G.vertices & ~closed_c):
        j = next(i for i, K in enumerate(comps) if K & J)
        t = home[j]
        NJ = neighborhood(G, J)
        if NJ & ~bags[t]:
            raise InvariantViolation(f"attachments of {to_list(J)} are not inside bag {t}")
        nodes.append(nxt)
        edges.append((t, nxt))
        bags[nxt] = J | NJ
        f2.add(nxt)
        phi[J] = nxt
        nxt += 1
    T = TreeDecomposition(nodes, edges, bags, root=T1.root)
    bound = Bounds(d, ell, f_korhonen=lambda delta, _ell: tw + 1).f_vicinity
    out = VicinityDecomposition(T, f1, f2, phi, tw, bound)
    verdict = check_vicinity(G, C, out)
    if not verdict:
        raise InvariantViolation(f"vicinity decomposition fails: {verdict.reason}")
    return out


def check_vicinity(G: Graph, C: list[int], V: VicinityDecomposition) -> Verdict:
    """The tree-decomposition axioms plus the five structural properties."""
    from .graph import independence_number

    T = V.decomposition
    verdict = check_tree_decomposition(G, T)
    if not verdict:
        return verdict
    if V.f1 & V.f2 or V.f1 | V.f2 != set(T.nodes):
        return Verdict(False, "F1 and F2 do not partition the nodes")
    for t in sorted(V.f1):
        a = independence_number(G, T.bags[t])
        if a > V.bound:
            return Verdict(False, f"F1 bag {t} has alpha {a} above {V.bound}")
    for a, b in T.edges:
        adh = independence_number(G, T.bags[a] & T.bags[b])
        if adh > V.bound:
            return Verdict(False, f"adhesion {a}-{b} has alpha {adh} above {V.bound}")
    nb = T.neighbours()
    for t in V.f2:
        if len(nb[t]) != 1:
            return Verdict(False, f"F2 node {t} is not a leaf")
    closed_c = neighborhood(G, mask_of(C), closed=True)
    comps = components(G, G.vertices & ~closed_c)
    if sorted(comps) != sorted(V.phi) or sorted(V.phi.values()) != sorted(V.f2):
        return Verdict(False, "phi is not a bijection between components of G - N[C] and F2")
    for J, t in V.phi.items():
        NJ = neighborhood(G, J)
        if T.bags[t] != J | NJ:
            return Verdict(False, f"bag of {t} is not N[J] for J={to_list(J)}")
        (s,) = nb[t]
        if s not in V.f1 or T.bags[t] & T.bags[s] != NJ:
            return Verdict(False, f"adhesion of leaf {t} differs from N(J)")
    return OK


# ---------------------------------------------------------------------------
# detection


@dataclass
class WheelAbsence:
    """Certificate that the exhaustive search found no W_ell model, with the
    exact alpha-tw decomposition and, if a long induced cycle exists, the
    decomposition around it."""

    ell: int
    alpha_tw: int
    decomposition: TreeDecomposition
    cycle: list[int] | None = None
    vicinity: VicinityDecomposition | None = None

    def to_json(self) -> dict:
        out = {
            "pattern": f"W{self.ell}",
            "absent": True,
            "alpha_tw": self.alpha_tw,
            "decomposition": self.decomposition.to_json(),
        }
        if self.cycle is not None:
            out["cycle"] = list(self.cycle)
            out["vicinity"] = self.vicinity.to_json()
        return out


def detect_wheel(G: Graph, d: int, ell: int) -> InducedMinorModel | WheelAbsence:
    free, witness = is_k1d_free(G, d)
    if not free:
        raise PreconditionError(f"graph contains an induced K_1,{d}", witness)
    W = wheel_graph(ell)
    M = find_induced_minor(G, W)
    if M is not None:
        M.pattern = f"W{ell}"
        return M
    a, T = alpha_tw_exact(G)
    C = find_induced_cycle(G, ell)
    if C is None:
        return WheelAbsence(ell, a, T)
    V = cycle_vicinity_decomposition(G, C, d, ell)
    if isinstance(V, InducedMinorModel):
        raise InvariantViolation("cycle route found a wheel the exhaustive search missed")
    return WheelAbsence(ell, a, T, C, V)
