"""Strong brambles: validation, exact alpha-order, and construction from
alpha-linked sets."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .graph import (
    OK,
    Graph,
    InvariantViolation,
    PreconditionError,
    SizeCapError,
    Verdict,
    VertexSet,
    bits,
    independence_number,
    is_connected_set,
    mask_of,
    set_key,
    to_list,
)
from .width import SEPARATOR_CAP, _small_alpha_sets, find_k_alpha_linked, heavy_components

ORDER_CAP = 24


@dataclass
class StrongBramble:
    """Pairwise-intersecting connected vertex sets, deduplicated and sorted."""

    elements: list[VertexSet] = field(default_factory=list)

    def __post_init__(self):
        self.elements = sorted(set(self.elements), key=set_key)

    def __len__(self):
        return len(self.elements)

    def minimal(self) -> "StrongBramble":
        """Inclusion-minimal elements only.  Same covers, same alpha-order."""
        keep = [B for B in self.elements if not any(C != B and C & B == C for C in self.elements)]
        return StrongBramble(keep)

    def covered_by(self, X: VertexSet) -> bool:
        return all(B & X for B in self.elements)

    def to_json(self, cover: VertexSet | None = None, order: int | None = None) -> dict:
        out: dict = {"elements": [to_list(B) for B in self.elements]}
        if cover is not None:
            out["cover"] = to_list(cover)
        if order is not None:
            out["alpha_order"] = order
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> "StrongBramble":
        if isinstance(data, str):
            data = json.loads(data)
        return cls([mask_of(e) for e in data["elements"]])


def is_strong_bramble(G: Graph, B: StrongBramble) -> Verdict:
    for i, E in enumerate(B.elements):
        if not E or E >> G.n:
            return Verdict(False, f"element {i} {to_list(E)} is empty or out of range")
        if not is_connected_set(G, E):
            return Verdict(False, f"element {i} {to_list(E)} is not connected")
    for (i, E), (j, F) in combinations(enumerate(B.elements), 2):
        if not E & F:
            return Verdict(False, f"elements {i} {to_list(E)} and {j} {to_list(F)} are disjoint")
    return OK


def alpha_order_exact(G: Graph, B: StrongBramble, max_n: int | None = ORDER_CAP) -> tuple[int, VertexSet]:
    """Minimum alpha over covers, with a witness cover.

    Branch and bound on hitting sets.  The unhit element with the fewest
    admissible vertices is branched on; the i-th branch takes its i-th vertex
    and forbids the earlier ones, so every cover is reached once.  alpha is
    monotone, so a partial cover at least as heavy as the incumbent is cut,
    as is one where some unhit element cannot be hit without reaching it.

    The cost depends on the bramble more than on n; pass ``max_n=None`` to
    lift the default cap for structured inputs.
    """
    if max_n is not None and G.n > max_n:
        raise SizeCapError(f"alpha-order search capped at n={max_n}, got n={G.n}")
    elements = B.minimal().elements
    if not elements:
        return 0, 0
    # incumbent: the lowest vertex of every element
    best_cover = mask_of(min(bits(E)) for E in elements)
    best = [independence_number(G, best_cover), best_cover]

    def search(X: VertexSet, a: int, banned: VertexSet) -> None:
        unhit = [E & ~banned for E in elements if not E & X]
        if not unhit:
            if a < best[0]:
                best[0], best[1] = a, X
            return
        union = 0
        for E in unhit:
            union |= E
        weight = {}
        for v in bits(union):
            b = independence_number(G, X | 1 << v)
            if b < best[0]:
                weight[v] = b
        options = []
        for E in unhit:
            row = [(weight[v], v) for v in bits(E) if v in weight]
            if not row:
                return
            options.append(row)
        row = min(options, key=len)
        row.sort()
        for b, v in row:
            if b >= best[0]:
                break
            search(X | 1 << v, b, banned)
            banned |= 1 << v

    search(0, 0, 0)
    return best[0], best[1]


def _heavy(G: Graph, X: VertexSet, S: VertexSet) -> VertexSet:
    heavy = heavy_components(G, X, S)
    if len(heavy) != 1:
        raise PreconditionError(
            f"separator {to_list(S)} has {len(heavy)} heavy components; the set is not linked", S
        )
    return heavy[0]


def bramble_from_linked_set(G: Graph, X: VertexSet, k: int, minimal_only: bool = False) -> StrongBramble:
    """The heavy components C_S of G - S over all S with alpha(S) <= k-1.

    ``X`` must be (2k-2)-alpha-linked.  With ``minimal_only`` only the
    inclusion-minimal components are kept; covers and alpha-order are the same.
    """
    if k < 1:
        raise ValueError("k must be positive")
    elements = [_heavy(G, X, S) for S, _ in _small_alpha_sets(G, k - 1)]
    B = StrongBramble(elements)
    return B.minimal() if minimal_only else B


def check_nesting(G: Graph, X: VertexSet, k: int) -> Verdict:
    """C_{A|B} is contained in C_A & C_B for all A, B with alpha <= k-1."""
    seps = [S for S, _ in _small_alpha_sets(G, k - 1)]
    heavy = {S: _heavy(G, X, S) for S in seps}
    for A, Bs in combinations(seps, 2):
        U = A | Bs
        if independence_number(G, U) > 2 * k - 2:
            raise InvariantViolation(f"union {to_list(U)} exceeds alpha 2k-2")
        C = _heavy(G, X, U)
        if C & ~(heavy[A] & heavy[Bs]):
            return Verdict(False, f"C of {to_list(U)} escapes C of {to_list(A)} & C of {to_list(Bs)}")
    return OK


def strong_bramble_of_order(G: Graph, k: int, minimal_only: bool = False) -> StrongBramble | None:
    """A strong bramble of alpha-order >= k, or None when no
    (2k-2)-alpha-linked set exists (then alpha-tw <= 4k-3)."""
    if G.n > SEPARATOR_CAP:
        raise SizeCapError(f"bramble construction capped at n={SEPARATOR_CAP}, got n={G.n}")
    X = find_k_alpha_linked(G, 2 * k - 2)
    if X is None:
        return None
    return bramble_from_linked_set(G, X, k, minimal_only=minimal_only)


def check_bramble_certificate(G: Graph, data: dict) -> Verdict:
    """Validate ``{elements, cover, alpha_order}``: strong, covering, and the
    claimed order equal to the exact one."""
    B = StrongBramble.from_json(data)
    verdict = is_strong_bramble(G, B)
    if not verdict:
        return verdict
    if "cover" in data:
        cover = mask_of(data["cover"])
        if not B.covered_by(cover):
            return Verdict(False, "cover misses an element")
    if "alpha_order" in data:
        order, _ = alpha_order_exact(G, B)
        if order != data["alpha_order"]:
            return Verdict(False, f"claimed alpha-order {data['alpha_order']}, exact {order}")
    return OK
