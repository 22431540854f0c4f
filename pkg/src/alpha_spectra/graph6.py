"""graph6 encoding (header-less), bit-exact with nauty's format."""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import Graph, GraphError

HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    # 63 < n <= 64 in this package; the long form covers it
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def encode(g: Graph) -> str:
    bits = []
    for v in range(1, g.n):
        row = g.rows[v]
        for u in range(v):
            bits.append(row >> u & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i : i + 6]:
            x = (x << 1) | b
        body.append(chr(x + 63))
    return _encode_order(g.n) + "".join(body)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise GraphError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise GraphError(f"invalid graph6 character in {text!r}")
    if codes[0] == 63:
        if len(codes) < 4 or codes[1] == 63:
            raise GraphError(f"unsupported graph6 order prefix in {text!r}")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        body = codes[4:]
    else:
        n = codes[0]
        body = codes[1:]
    if n == 0:
        raise GraphError("graphs of order 0 are not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6 body has {len(body)} chars, expected {need} for n={n}")
    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return Graph(n, tuple(rows))


def write_file(path: str | Path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(encode(g) + "\n")
            count += 1
    return count


def read_file(path: str | Path) -> Iterator[Graph]:
    with open(path) as fh:
        for line in fh:
            if line.strip():
                yield decode(line)
