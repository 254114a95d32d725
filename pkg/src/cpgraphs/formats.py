"""Text formats: edge-list, graph6, and the weighted edge-list.

Edge list: first line "n m", then m lines "u v" with 0-based endpoints.
Weighted: the edge-list block followed by n lines "v w(v)".
graph6: the standard byte encoding of the upper triangle, column by column,
6 bits per printable character (offset 63); the ">>graph6<<" prefix is
accepted on input and never emitted.
"""

from __future__ import annotations

from .graph import Graph, GraphError
from .utter import WeightedGraph


def parse_edge_list(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise GraphError("edge list needs a header line 'n m'")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphError(f"edge list is not numeric: {exc}") from exc
    n, m = nums[0], nums[1]
    if len(nums) != 2 + 2 * m:
        raise GraphError(
            f"expected {m} edges ({2 * m} numbers), got {len(nums) - 2}"
        )
    edges = [(nums[2 + 2 * i], nums[3 + 2 * i]) for i in range(m)]
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{e.u} {e.v}" for e in g.edges())
    return "\n".join(lines) + "\n"


def parse_weighted(text: str) -> WeightedGraph:
    tokens = text.split()
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphError(f"weighted graph is not numeric: {exc}") from exc
    if len(nums) < 2:
        raise GraphError("weighted graph needs a header line 'n m'")
    n, m = nums[0], nums[1]
    need = 2 + 2 * m + 2 * n
    if len(nums) != need:
        raise GraphError(f"expected {need} numbers, got {len(nums)}")
    edges = [(nums[2 + 2 * i], nums[3 + 2 * i]) for i in range(m)]
    weights = [0] * n
    seen = set()
    for i in range(n):
        v, w = nums[2 + 2 * m + 2 * i], nums[3 + 2 * m + 2 * i]
        if not 0 <= v < n or v in seen:
            raise GraphError(f"bad or repeated weight line for vertex {v}")
        seen.add(v)
        weights[v] = w
    return WeightedGraph(Graph(n, edges), tuple(weights))


def format_weighted(wg: WeightedGraph) -> str:
    out = format_edge_list(wg.graph)
    lines = [f"{v} {w}" for v, w in enumerate(wg.weights)]
    return out + "\n".join(lines) + "\n"


def format_graph6(g: Graph) -> str:
    n = g.n
    if n > 258047:
        raise GraphError("graph6 size field supports at most 258047 vertices")
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    bits = []
    for j in range(1, n):
        col = g.masks[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        word = 0
        for b in bits[i : i + 6]:
            word = (word << 1) | b
        body.append(word + 63)
    return bytes(head + body).decode("ascii")


def parse_graph6(line) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii")
    line = line.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<") :]
    if not line:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in line]
    if any(d < 0 or d > 63 for d in data):
        raise GraphError("graph6 string has characters outside 63..126")
    if data[0] == 63:
        if len(data) < 4:
            raise GraphError("truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) != need:
        raise GraphError(
            f"graph6 body for n={n} needs {need} characters, got {len(data)}"
        )
    bits = []
    for d in data:
        for k in range(5, -1, -1):
            bits.append((d >> k) & 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)
