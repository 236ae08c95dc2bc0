"""graph6 and edge-list text formats."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Malformed graph text. ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        body.append(chr(val + 63))
    return _encode_n(g.n) + "".join(body)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise GraphFormatError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", base + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated graph6 size field", base + len(vals))
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated graph6 size field", base + len(vals))
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(vals) - pos != need:
        raise GraphFormatError(
            f"graph6 body has {len(vals) - pos} bytes, expected {need} for n={n}",
            base + min(len(vals), pos + need),
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and vals[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise GraphFormatError("nonzero graph6 padding bits", base + len(vals) - 1)
    return Graph(n, rows)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line, then one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored.
    """
    n = None
    edges: set[tuple[int, int]] = set()
    order = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        line = raw.split("#", 1)[0].strip()
        here = offset
        offset += len(raw.encode())
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", here) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise GraphFormatError("header must be a single vertex count", here)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", here)
        u, v = nums
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range 0..{n - 1}", here)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", here)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise GraphFormatError(f"duplicate edge {u} {v}", here)
        edges.add(key)
        order.append(key)
    if n is None:
        raise GraphFormatError("missing vertex-count header", 0)
    return Graph.from_edges(n, order)


def parse_graph(text: str, format: str = "graph6") -> Graph:
    if format == "graph6":
        return from_graph6(text)
    if format in ("edge-list", "edgelist"):
        return from_edge_list(text)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "graph6") -> str:
    if format == "graph6":
        return to_graph6(g)
    if format in ("edge-list", "edgelist"):
        return to_edge_list(g)
    raise ValueError(f"unknown graph format {format!r}")


def guess_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "graph6"
    return "edge-list"


def read_graph(path: str | Path, format: str | None = None) -> Graph:
    fmt = format or guess_format(path)
    return parse_graph(Path(path).read_text(), fmt)
