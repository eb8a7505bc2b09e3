"""Edge-list and graph6 serialisation.

Edge-list text: first line ``n m``, then ``m`` lines ``u v``.  Duplicate and
reversed edges are accepted on read; loops are rejected.  Several graphs may
share a stream when separated by blank lines.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError


class FormatError(GraphError):
    """Malformed input file; the message names the offending line."""


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer token {token!r}") from None


def _parse_block(lines: list[tuple[int, str]]) -> Graph:
    first_no, first = lines[0]
    head = first.split()
    if len(head) != 2:
        raise FormatError(f"line {first_no}: header must be 'n m', got {first.strip()!r}")
    n, m = (_int(t, first_no) for t in head)
    if n < 0 or m < 0:
        raise FormatError(f"line {first_no}: n and m must be non-negative")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"line {first_no}: header announces {m} edges, found {len(body)}")
    edges = []
    for lineno, text in body:
        tok = text.split()
        if len(tok) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {text.strip()!r}")
        u, v = (_int(t, lineno) for t in tok)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise FormatError(f"line {lineno}: loop at vertex {u}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def iter_edgelists(stream: TextIO) -> Iterator[Graph]:
    """Yield every blank-line separated edge-list block of ``stream``."""
    block: list[tuple[int, str]] = []
    for lineno, line in enumerate(stream, 1):
        if line.strip():
            block.append((lineno, line))
        elif block:
            yield _parse_block(block)
            block = []
    if block:
        yield _parse_block(block)


def parse_edgelist(text: str) -> Graph:
    import io

    graphs = list(iter_edgelists(io.StringIO(text)))
    if len(graphs) != 1:
        raise FormatError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def read_edgelist(path: str | Path) -> Graph:
    return parse_edgelist(Path(path).read_text())


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_edgelist(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edgelist(g))


# graph6 ---------------------------------------------------------------------

_HEADER = ">>graph6<<"


def _decode_n(data: bytes) -> tuple[int, bytes]:
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if data[1] != 126:
        n = 0
        for c in data[1:4]:
            n = (n << 6) | (c - 63)
        return n, data[4:]
    n = 0
    for c in data[2:8]:
        n = (n << 6) | (c - 63)
    return n, data[8:]


def parse_graph6(line: str | bytes) -> Graph:
    data = line.encode() if isinstance(line, str) else line
    data = data.strip()
    if data.startswith(_HEADER.encode()):
        data = data[len(_HEADER):]
    if not data:
        raise FormatError("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise FormatError("graph6 characters must lie in 63..126")
    n, rest = _decode_n(data)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise FormatError(f"graph6 body has {len(rest)} bytes, expected {need} for n={n}")
    bits = []
    for c in rest:
        x = c - 63
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    edges = []
    i = 0
    # upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph.from_edges(n, edges)


def format_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        out = [n + 63]
    elif n < 258048:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, n) for u in range(v)]
    bits += [0] * (-len(bits) % 6)
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        out.append(x + 63)
    return bytes(out).decode()


def read_graph6(path: str | Path) -> list[Graph]:
    graphs = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    return graphs


def write_graph6(graphs: Iterable[Graph], path: str | Path) -> None:
    Path(path).write_text("".join(format_graph6(g) + "\n" for g in graphs))
