"""graph6 reader and writer.

Only the one-byte order header is handled (n <= 62), and parsed graphs are
limited to the 32-vertex cap of :class:`~domlab.graph.Graph`.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, TextIO

from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, lineno: int | None = None, line: str | None = None):
        self.message = message
        self.lineno = lineno
        self.line = line
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(where + message)


class Record(NamedTuple):
    lineno: int
    graph: Graph


def body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def emit(g: Graph) -> str:
    n = g.n
    if n > 62:
        raise Graph6Error(f"order {n} needs a multi-byte header")
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse(line: str) -> Graph:
    s = line.rstrip("\r\n")
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty line")
    if s[0] == ":":
        raise Graph6Error("sparse6 input is not supported")
    if s[0] == "&":
        raise Graph6Error("digraph6 input is not supported")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} at offset {pos} outside 63..126")
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("multi-byte order header is not supported")
    if not 1 <= n <= MAX_ORDER:
        raise Graph6Error(f"order {n} outside 1..{MAX_ORDER}")
    want = body_length(n)
    body = s[1:]
    if len(body) < want:
        raise Graph6Error(f"truncated: {len(body)} edge bytes, expected {want} for n={n}")
    if len(body) > want:
        raise Graph6Error(f"trailing garbage: {len(body)} edge bytes, expected {want} for n={n}")

    rows = [0] * n
    total = n * (n - 1) // 2
    k = 0
    for ch in body:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if k < total:
                if bit:
                    # k-th pair in column-major upper-triangle order
                    j = _column(k)
                    i = k - j * (j - 1) // 2
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise Graph6Error("nonzero padding bits")
            k += 1
    return Graph(n, tuple(rows))


def _column(k: int) -> int:
    j = 1
    while (j + 1) * j // 2 <= k:
        j += 1
    return j


def stream(lines: Iterable[str], on_error: str = "raise",
           errors: list[Graph6Error] | None = None) -> Iterator[Record]:
    """Yield ``(lineno, graph)`` for each graph6 line.

    Blank lines and bare ``>>graph6<<`` headers are skipped.
    With ``on_error="skip"`` a bad line is appended to ``errors`` (when given)
    and the stream continues; with ``"raise"`` the error propagates.
    """
    if on_error not in ("raise", "skip"):
        raise ValueError(f"on_error must be 'raise' or 'skip', not {on_error!r}")
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line == HEADER:
            continue
        try:
            g = parse(line)
        except Graph6Error as exc:
            err = Graph6Error(exc.message, lineno, line)
            if on_error == "raise":
                raise err from None
            if errors is not None:
                errors.append(err)
            continue
        yield Record(lineno, g)


def read_file(path: str, on_error: str = "raise",
              errors: list[Graph6Error] | None = None) -> Iterator[Record]:
    with open(path, encoding="ascii", errors="surrogateescape") as fh:
        yield from stream(fh, on_error=on_error, errors=errors)


def write(graphs: Iterable[Graph], fh: TextIO) -> int:
    count = 0
    for g in graphs:
        fh.write(emit(g) + "\n")
        count += 1
    return count
