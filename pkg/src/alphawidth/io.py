"""graph6 and DIMACS readers/writers, plus DOT export."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphFormatError, bits

HEADER = ">>graph6<<"


def _decode_n(data: bytes, offset: int) -> tuple[int, int]:
    """Decode the size prefix.  Returns ``(n, position after prefix)``."""
    if not data:
        raise GraphFormatError("empty graph6 string", offset)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated 36-bit length prefix", offset + len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise GraphFormatError("truncated 18-bit length prefix", offset + len(data))
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header)."""
    if isinstance(text, str):
        text = text.encode("latin-1")
    data = text.rstrip(b"\r\n")
    base = 0
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
        base = len(HEADER)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b!r} outside the printable graph6 range", base + i)
    n, pos = _decode_n(data, base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise GraphFormatError(f"expected {need} data bytes for n={n}, found {len(body)}", base + len(data))
    if len(body) > need:
        raise GraphFormatError("trailing bytes after graph6 data", base + pos + need)
    adj = [0] * n
    k = 0
    i, j = 0, 1
    for b in body:
        val = b - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                break
            if val >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, adj)


def emit_graph6(G: Graph) -> str:
    out = [_encode_n(G.n)]
    acc = nacc = 0
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def read_graph6_stream(lines: Iterable[str], strict: bool = False) -> Iterator[tuple[int, str, Graph | GraphFormatError]]:
    """Yield ``(line index, stripped line, graph or error)``; blank lines skipped.

    With ``strict`` the first malformed line raises instead of being yielded.
    """
    for idx, line in enumerate(lines):
        line = line.strip()
        if not line:
            continue
        try:
            yield idx, line, parse_graph6(line)
        except GraphFormatError as exc:
            if strict:
                err = GraphFormatError(f"line {idx + 1}: {exc}")
                err.offset = exc.offset
                raise err from exc
            yield idx, line, exc


def parse_dimacs(text: str) -> Graph:
    """DIMACS edge format: ``p edge n m`` then ``e u v`` lines (1-indexed)."""
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno, unit="line")
            if len(parts) < 3:
                raise GraphFormatError("problem line needs 'p edge n m'", lineno, unit="line")
            try:
                n = int(parts[2])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {parts[2]!r}", lineno, unit="line") from None
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge before problem line", lineno, unit="line")
            try:
                u, v = int(parts[1]), int(parts[2])
            except (IndexError, ValueError):
                raise GraphFormatError(f"malformed edge line {raw!r}", lineno, unit="line") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"edge endpoint out of range 1..{n}: {u} {v}", lineno, unit="line")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno, unit="line")
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", lineno, unit="line")
    if n is None:
        raise GraphFormatError("missing problem line")
    return Graph.from_edges(n, sorted(edges))


def emit_dimacs(G: Graph) -> str:
    lines = [f"p edge {G.n} {G.num_edges()}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def emit_dot(G: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(G.n)]
    lines += [f"  {u} -- {v};" for u, v in G.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(source: TextIO | str, fmt: str = "auto") -> Graph:
    """Read a single graph from a file object or string; ``fmt`` in
    {'auto', 'graph6', 'dimacs'}."""
    text = source if isinstance(source, str) else source.read()
    if fmt == "auto":
        stripped = text.lstrip()
        fmt = "dimacs" if stripped[:1] in ("p", "c", "e") and " " in stripped.split("\n", 1)[0] else "graph6"
    if fmt == "dimacs":
        return parse_dimacs(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise GraphFormatError(f"expected exactly one graph6 line, found {len(lines)}")
    return parse_graph6(lines[0].strip())


def vertex_list(mask: int) -> list[int]:
    return list(bits(mask))
