"""Immutable simple graphs over vertices ``0..n-1`` with bitset adjacency.

Vertex sets are plain ``int`` bit masks (bit ``v`` set means ``v`` is in the
set).  Python integers are unbounded, so the same representation serves the
exact desk-scale oracles and the larger constructive algorithms.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

VertexSet = int


class GraphFormatError(ValueError):
    """Malformed graph6 / DIMACS input.  ``offset`` is a byte offset
    (graph6) or a 1-based line number (DIMACS), named by ``unit``."""

    def __init__(self, message: str, offset: int | None = None, unit: str = "byte offset"):
        if offset is not None:
            message = f"{message} (at {unit} {offset})"
        super().__init__(message)
        self.offset = offset


class SizeCapError(ValueError):
    """An exact oracle was asked to run beyond its desk-scale size cap."""


class PreconditionError(ValueError):
    """Input violates a documented precondition.  ``witness`` carries evidence."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InvariantViolation(AssertionError):
    """An internal invariant guaranteed by the underlying theory failed."""


# ---------------------------------------------------------------------------
# bit helpers


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


def to_list(mask: VertexSet) -> list[int]:
    return list(bits(mask))


def set_key(mask: VertexSet) -> tuple[int, int]:
    """Canonical sort key for vertex sets: lowest vertex first, then mask."""
    return (lowest(mask) if mask else -1, mask)


# ---------------------------------------------------------------------------


class Graph:
    """A finite simple undirected graph.

    ``adj[v]`` is the neighbourhood of ``v`` as a bit mask.  Instances are
    treated as immutable; derived data (complement, independence-number memo)
    is cached on the instance.
    """

    __slots__ = ("n", "adj", "labels", "_alpha_memo", "_complement")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence | None = None):
        self.n = n
        self.adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else None
        self._alpha_memo: dict[int, int] = {0: 0}
        self._complement: Graph | None = None
        if len(self.adj) != n:
            raise ValueError("adjacency length does not match n")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    # -- basic queries -------------------------------------------------------

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def complement(self) -> "Graph":
        if self._complement is None:
            full = self.vertices
            self._complement = Graph(self.n, [full & ~a & ~(1 << v) for v, a in enumerate(self.adj)])
        return self._complement

    def induced(self, X: VertexSet) -> tuple["Graph", list[int]]:
        """Return ``G[X]`` relabelled to ``0..|X|-1`` plus the old vertex ids."""
        old = to_list(X)
        pos = {v: i for i, v in enumerate(old)}
        adj = [0] * len(old)
        for i, v in enumerate(old):
            for u in bits(self.adj[v] & X):
                adj[i] |= 1 << pos[u]
        return Graph(len(old), adj), old

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


# ---------------------------------------------------------------------------
# named graphs


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shifted = [row << G.n for row in H.adj]
    return Graph(G.n + H.n, list(G.adj) + shifted)


# ---------------------------------------------------------------------------
# neighbourhoods and components


def neighborhood(G: Graph, X: VertexSet, closed: bool = False) -> VertexSet:
    out = 0
    for v in bits(X):
        out |= G.adj[v]
    return out | X if closed else out & ~X


def component_of(G: Graph, v: int, X: VertexSet) -> VertexSet:
    """Vertex set of the component of ``G[X]`` containing ``v``."""
    comp = frontier = 1 << v
    while frontier:
        grow = 0
        for u in bits(frontier):
            grow |= G.adj[u]
        frontier = grow & X & ~comp
        comp |= frontier
    return comp


def components(G: Graph, X: VertexSet | None = None) -> list[VertexSet]:
    """Components of ``G[X]``, ordered by smallest contained vertex."""
    if X is None:
        X = G.vertices
    out = []
    rest = X
    while rest:
        comp = component_of(G, lowest(rest), X)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected_set(G: Graph, X: VertexSet) -> bool:
    return X != 0 and component_of(G, lowest(X), X) == X


def is_connected(G: Graph) -> bool:
    return G.n == 0 or is_connected_set(G, G.vertices)


def shortest_path(G: Graph, sources: VertexSet, targets: VertexSet, allowed: VertexSet) -> list[int] | None:
    """BFS shortest path from any source to any target inside ``allowed``.

    Sources and targets must lie in ``allowed``.  Ties are broken towards
    smaller vertex ids, so the result is deterministic.
    """
    if sources & targets:
        return [lowest(sources & targets)]
    parent: dict[int, int | None] = {v: None for v in bits(sources)}
    queue = deque(bits(sources))
    while queue:
        u = queue.popleft()
        for w in bits(G.adj[u] & allowed):
            if w in parent:
                continue
            parent[w] = u
            if targets >> w & 1:
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


# ---------------------------------------------------------------------------
# independence and clique numbers


def _alpha(G: Graph, X: VertexSet) -> int:
    memo = G._alpha_memo
    hit = memo.get(X)
    if hit is not None:
        return hit
    adj = G.adj
    # a vertex of degree <= 1 in G[X] is always in some maximum independent set
    best_v, best_deg = -1, -1
    for v in bits(X):
        deg = popcount(adj[v] & X)
        if deg <= 1:
            result = 1 + _alpha(G, X & ~adj[v] & ~(1 << v))
            memo[X] = result
            return result
        if deg > best_deg:
            best_v, best_deg = v, deg
    v = best_v
    result = max(_alpha(G, X & ~(1 << v)), 1 + _alpha(G, X & ~adj[v] & ~(1 << v)))
    memo[X] = result
    return result


def independence_number(G: Graph, X: VertexSet | None = None) -> int:
    """Exact ``alpha(G[X])`` by memoised branching on bit masks."""
    return _alpha(G, G.vertices if X is None else X)


def max_independent_set(G: Graph, X: VertexSet | None = None) -> VertexSet:
    """A maximum independent set of ``G[X]``; lexicographically greedy."""
    X = G.vertices if X is None else X
    target = _alpha(G, X)
    chosen = 0
    rest = X
    while target:
        v = lowest(rest)
        without_v = rest & ~(1 << v)
        if _alpha(G, without_v) == target:
            rest = without_v
        else:
            chosen |= 1 << v
            rest = without_v & ~G.adj[v]
            target -= 1
    return chosen


def clique_number(G: Graph, X: VertexSet | None = None) -> int:
    return independence_number(G.complement(), G.vertices if X is None else X)


def max_clique(G: Graph, X: VertexSet | None = None) -> VertexSet:
    return max_independent_set(G.complement(), G.vertices if X is None else X)


def is_independent(G: Graph, X: VertexSet) -> bool:
    return all(not (G.adj[v] & X) for v in bits(X))


def is_clique(G: Graph, X: VertexSet) -> bool:
    return all((G.adj[v] | 1 << v) & X == X for v in bits(X))


# ---------------------------------------------------------------------------
# forbidden induced subgraphs


def is_k1d_free(G: Graph, d: int) -> tuple[bool, VertexSet | None]:
    """Check that every neighbourhood has independence number at most ``d-1``.

    On failure the witness is the centre together with ``d`` independent
    neighbours (an induced ``K_{1,d}``).
    """
    if d < 1:
        raise ValueError("d must be positive")
    for v in range(G.n):
        if independence_number(G, G.adj[v]) >= d:
            leaves = max_independent_set(G, G.adj[v])
            leaves = mask_of(list(bits(leaves))[:d])
            return False, leaves | 1 << v
    return True, None


def contains_induced(G: Graph, H: Graph) -> tuple[int, ...] | None:
    """Injection ``phi`` (as a tuple indexed by H's vertices) embedding H as an
    induced subgraph of G, or ``None``."""
    if H.n > G.n:
        return None
    phi = [-1] * H.n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == H.n:
            return True
        for x in bits(G.vertices & ~used):
            ok = True
            for j in range(i):
                if H.has_edge(i, j) != G.has_edge(x, phi[j]):
                    ok = False
                    break
            if ok:
                phi[i] = x
                used |= 1 << x
                if extend(i + 1):
                    return True
                used &= ~(1 << x)
        return False

    return tuple(phi) if extend(0) else None


def is_quasi_threshold(G: Graph) -> bool:
    return contains_induced(G, path_graph(4)) is None and contains_induced(G, cycle_graph(4)) is None


# ---------------------------------------------------------------------------
# chordality


def lex_bfs(G: Graph) -> list[int]:
    """Lexicographic BFS order via partition refinement (smallest id first)."""
    parts: list[list[int]] = [list(range(G.n))] if G.n else []
    order = []
    while parts:
        v = parts[0].pop(0)
        if not parts[0]:
            parts.pop(0)
        order.append(v)
        refined = []
        for part in parts:
            inside = [u for u in part if G.has_edge(u, v)]
            outside = [u for u in part if not G.has_edge(u, v)]
            refined.extend(p for p in (inside, outside) if p)
        parts = refined
    return order


def is_perfect_elimination_ordering(G: Graph, order: Sequence[int]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in bits(G.adj[v]) if pos[u] > pos[v]]
        if not later:
            continue
        first = min(later, key=pos.__getitem__)
        rest = mask_of(later) & ~(1 << first)
        if rest & ~G.adj[first]:
            return False
    return True


def is_chordal(G: Graph) -> bool:
    # reverse of a LexBFS order is a PEO iff G is chordal
    return is_perfect_elimination_ordering(G, lex_bfs(G)[::-1])


def is_induced_path(G: Graph, seq: Sequence[int]) -> bool:
    if len(set(seq)) != len(seq) or not seq:
        return False
    for i, u in enumerate(seq):
        for j in range(i + 1, len(seq)):
            if G.has_edge(u, seq[j]) != (j == i + 1):
                return False
    return True


def is_induced_cycle(G: Graph, seq: Sequence[int]) -> bool:
    k = len(seq)
    if k < 3 or len(set(seq)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if G.has_edge(seq[i], seq[j]) != consecutive:
                return False
    return True


class Verdict:
    """Truthy/falsy check outcome carrying a human-readable reason."""

    __slots__ = ("ok", "reason")

    def __init__(self, ok: bool, reason: str = ""):
        self.ok = ok
        self.reason = reason

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return f"Verdict({self.ok}{', ' + repr(self.reason) if self.reason else ''})"


OK = Verdict(True)
