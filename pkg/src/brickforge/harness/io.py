"""Graph file formats: plain edge lists and sparse6.

The edge-list format is a header line ``n m`` followed by m lines ``u v``
(0-based; parallel lines allowed). Emission is bit-exact reproducible:
pairs are written with u <= v, sorted, with LF newlines.

sparse6 is the standard multigraph-capable encoding: ``:`` prefix, the
vertex count, then a bit stream of (b, x) groups where b advances the
current vertex and x names the other endpoint. The ``>>sparse6<<`` header
is accepted on input and never written. Parsing a document auto-detects
the format from its first character.
"""

from __future__ import annotations

from pathlib import Path

from ..errors import LoopEdge, ParseError
from ..graphcore import MultiGraph, validate_multigraph


def emit_edge_list(g: MultiGraph) -> str:
    pairs = sorted(g.live_pairs())
    lines = [f"{g.n} {len(pairs)}"]
    lines.extend(f"{u} {v}" for u, v in pairs)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> MultiGraph:
    lines = text.split("\n")
    # tolerate trailing blank lines and CR line endings on input
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise ParseError("empty document", line=1, col=1)

    def ints(lineno: int, expected: int) -> list[int]:
        raw = lines[lineno - 1].rstrip("\r")
        tokens = raw.split()
        if len(tokens) != expected:
            raise ParseError(
                f"expected {expected} fields, got {len(tokens)}", line=lineno, col=1
            )
        out = []
        for tok in tokens:
            try:
                out.append(int(tok))
            except ValueError:
                col = raw.index(tok) + 1
                raise ParseError(f"not an integer: {tok!r}", line=lineno, col=col) from None
        return out

    n, m = ints(1, 2)
    if n < 1 or m < 0:
        raise ParseError(f"bad header n={n} m={m}", line=1, col=1)
    if len(lines) != m + 1:
        raise ParseError(f"expected {m} edge lines, got {len(lines) - 1}", line=len(lines), col=1)
    pairs = []
    for k in range(m):
        u, v = ints(k + 2, 2)
        if not (0 <= u < n) or not (0 <= v < n):
            raise ParseError(f"vertex out of range: {u} {v}", line=k + 2, col=1)
        pairs.append((u, v))
    return validate_multigraph(n, pairs)


# -- sparse6 ----------------------------------------------------------------

_HEADER = ">>sparse6<<"


def _encode_number(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in range(30, -1, -6)])
    raise ParseError(f"vertex count {n} too large for sparse6")


def _decode_number(data: bytes, pos: int) -> tuple[int, int]:
    if pos >= len(data):
        raise ParseError("truncated sparse6 string", line=1, col=pos + 1)
    c = data[pos]
    if c != 126:
        return c - 63, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        chunk = data[pos + 2 : pos + 8]
        if len(chunk) < 6:
            raise ParseError("truncated sparse6 vertex count", line=1, col=pos + 1)
        n = 0
        for c in chunk:
            n = (n << 6) | (c - 63)
        return n, pos + 8
    chunk = data[pos + 1 : pos + 4]
    if len(chunk) < 3:
        raise ParseError("truncated sparse6 vertex count", line=1, col=pos + 1)
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, pos + 4


def emit_sparse6(g: MultiGraph) -> str:
    n = g.n
    k = max(1, (n - 1).bit_length())
    bits: list[int] = []

    def put(value: int, width: int) -> None:
        for shift in range(width - 1, -1, -1):
            bits.append((value >> shift) & 1)

    cur = 0
    for v, u in sorted((max(p), min(p)) for p in g.live_pairs()):
        if v == cur:
            put(0, 1)
            put(u, k)
        elif v == cur + 1:
            cur = v
            put(1, 1)
            put(u, k)
        else:
            cur = v
            put(1, 1)
            put(v, k)
            put(0, 1)
            put(u, k)
    # pad with 1s; when n is a power of two a long all-ones tail could decode
    # as an edge at vertex n-1, so lead with a single 0 in that case
    pad = (-len(bits)) % 6
    if k < 6 and n == (1 << k) and pad >= k and cur < n - 1:
        bits.append(0)
        pad = (-len(bits)) % 6
    bits.extend([1] * pad)
    out = bytearray(b":")
    out += _encode_number(n)
    for i in range(0, len(bits), 6):
        value = 0
        for bit in bits[i : i + 6]:
            value = (value << 1) | bit
        out.append(value + 63)
    return out.decode("ascii")


def parse_sparse6(text: str) -> MultiGraph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
    if not s.startswith(":"):
        raise ParseError("sparse6 string must start with ':'", line=1, col=1)
    data = s[1:].encode("ascii", errors="replace")
    for i, c in enumerate(data):
        if not (63 <= c <= 126):
            raise ParseError(f"invalid sparse6 character {chr(c)!r}", line=1, col=i + 2)
    n, pos = _decode_number(data, 0)
    if n < 1:
        raise ParseError("sparse6 vertex count must be >= 1", line=1, col=2)
    k = max(1, (n - 1).bit_length())
    bits: list[int] = []
    for c in data[pos:]:
        value = c - 63
        for shift in range(5, -1, -1):
            bits.append((value >> shift) & 1)
    pairs = []
    cur = 0
    i = 0
    while i + k < len(bits):
        b = bits[i]
        x = 0
        for bit in bits[i + 1 : i + 1 + k]:
            x = (x << 1) | bit
        i += 1 + k
        if b:
            cur += 1
        if cur >= n:
            break
        if x > cur:
            cur = x
        elif x == cur:
            raise LoopEdge(f"sparse6 encodes a loop at vertex {x}")
        else:
            pairs.append((x, cur))
    return validate_multigraph(n, pairs)


def parse_graph(source: str | Path) -> MultiGraph:
    """Parse a path or a document; format auto-detected by first character."""
    if isinstance(source, Path):
        text = source.read_text()
    else:
        text = source
        candidate = Path(text)
        try:
            if len(text) < 4096 and "\n" not in text and candidate.is_file():
                text = candidate.read_text()
        except OSError:
            pass
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty document", line=1, col=1)
    if stripped[0] in ":>":
        return parse_sparse6(stripped)
    if stripped[0].isdigit():
        return parse_edge_list(text)
    raise ParseError(f"cannot detect graph format from {stripped[0]!r}", line=1, col=1)
