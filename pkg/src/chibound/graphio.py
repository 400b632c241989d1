"""Graph text formats: a plain edge list and headerless graph6.

Edge list: first line is the vertex count, then one "u v" pair per line.
The writer emits u < v in lexicographic order so fixtures diff cleanly.

graph6 is the usual 6-bit packing of the upper adjacency triangle in
column order, with the minimal size prefix. Non-minimal prefixes, wrong
data length, and nonzero padding are all rejected so that every graph has
exactly one encoding.
"""

from .errors import GraphParseError
from .graphs import Graph


def parse_edge_list(text):
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphParseError(f"expected vertex count, got {line!r}", line=lineno)
            if n < 0:
                raise GraphParseError(f"vertex count must be non-negative, got {n}", line=lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer endpoint in {line!r}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"endpoint out of range in {line!r} (n={n})", line=lineno)
        if u == v:
            raise GraphParseError(f"self-loop {u} not allowed", line=lineno)
        edges.append((u, v))
    if n is None:
        raise GraphParseError("empty input, expected a vertex count line", line=1)
    return Graph(n, edges)


def write_edge_list(g):
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _g6_size_prefix(n):
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph too large for graph6: n={n}")


def _g6_parse_size(data):
    """Returns (n, bytes consumed). Enforces the minimal prefix."""
    if not data:
        raise GraphParseError("empty graph6 string", line=1, offset=0)
    b0 = data[0]
    if b0 != 126:
        if not (63 <= b0 <= 125):
            raise GraphParseError(f"invalid graph6 size byte {b0}", line=1, offset=0)
        return b0 - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphParseError("truncated graph6 size prefix", line=1, offset=0)
        vals = [data[i] - 63 for i in range(2, 8)]
        if any(not 0 <= v <= 63 for v in vals):
            raise GraphParseError("invalid graph6 size prefix byte", line=1, offset=2)
        n = 0
        for v in vals:
            n = (n << 6) | v
        if n <= 258047:
            raise GraphParseError("non-canonical graph6 size prefix", line=1, offset=0)
        return n, 8
    if len(data) < 4:
        raise GraphParseError("truncated graph6 size prefix", line=1, offset=0)
    vals = [data[i] - 63 for i in range(1, 4)]
    if any(not 0 <= v <= 63 for v in vals):
        raise GraphParseError("invalid graph6 size prefix byte", line=1, offset=1)
    n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
    if n <= 62:
        raise GraphParseError("non-canonical graph6 size prefix", line=1, offset=0)
    return n, 4


def parse_graph6(text):
    """Decode a single headerless graph6 line."""
    line = text.strip()
    if "\n" in line:
        raise GraphParseError("expected a single graph6 line", line=2)
    data = line.encode("ascii", errors="replace")
    n, pos = _g6_parse_size(data)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nchars:
        raise GraphParseError(
            f"non-canonical graph6 length: expected {nchars} data bytes for n={n}, got {len(body)}",
            line=1,
            offset=pos,
        )
    bitbuf = 0
    edges = []
    for idx, byte in enumerate(body):
        val = byte - 63
        if not 0 <= val <= 63:
            raise GraphParseError(f"invalid graph6 data byte {byte}", line=1, offset=pos + idx)
        bitbuf = (bitbuf << 6) | val
    pad = nchars * 6 - nbits
    if pad and bitbuf & ((1 << pad) - 1):
        raise GraphParseError("nonzero graph6 padding bits", line=1, offset=pos)
    bitbuf >>= pad
    # bits come out highest-first: walk pairs in reverse column order
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for k, (i, j) in enumerate(reversed(pairs)):
        if (bitbuf >> k) & 1:
            edges.append((i, j))
    return Graph(n, edges)


def write_graph6(g):
    n = g.n
    out = bytearray(_g6_size_prefix(n))
    bitbuf = 0
    nbits = 0
    for j in range(1, n):
        col = g.adjacency_mask(j)
        for i in range(j):
            bitbuf = (bitbuf << 1) | ((col >> i) & 1)
            nbits += 1
    pad = (-nbits) % 6
    bitbuf <<= pad
    nbits += pad
    while nbits:
        nbits -= 6
        out.append(((bitbuf >> nbits) & 63) + 63)
    return out.decode("ascii")


def parse_graph(text, fmt):
    """Parse one graph from text. fmt is "edge-list" or "graph6"."""
    if fmt == "edge-list":
        return parse_edge_list(text)
    if fmt == "graph6":
        for lineno, raw in enumerate(text.splitlines(), start=1):
            if raw.strip():
                try:
                    return parse_graph6(raw)
                except GraphParseError as e:
                    raise GraphParseError(str(e), line=lineno) from None
        raise GraphParseError("no graph6 line found", line=1)
    raise ValueError(f"unknown format {fmt!r}")


def write_graph(g, fmt):
    if fmt == "edge-list":
        return write_edge_list(g)
    if fmt == "graph6":
        return write_graph6(g) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def read_graph6_lines(text):
    """All graphs in a one-graph-per-line graph6 corpus."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]
