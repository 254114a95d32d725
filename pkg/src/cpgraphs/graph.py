"""Immutable simple graphs over vertices 0..n-1 with bitmask adjacency.

One integer bitmask per vertex keeps adjacency tests O(1) and neighbourhood
set algebra cheap, which is what the exponential structure searches live on.
Vertex identity survives derived graphs through a label map: every vertex
carries a frozenset of original ids, merged under contraction, so a witness
found in a contracted graph can be reported in the input graph's names.

Graphs are value objects: every operation returns a new Graph and never
mutates its input, so instances can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

DEFAULT_VERTEX_CAP = 64

_cap = DEFAULT_VERTEX_CAP


class GraphError(ValueError):
    """Malformed input: bad vertex, non-edge contraction, parse error."""


class VertexCapExceeded(GraphError):
    """The operation would build a graph above the configured vertex cap."""


def vertex_cap() -> int:
    return _cap


def set_vertex_cap(cap: int) -> None:
    """Change the vertex cap. The structure searches are exponential in the
    worst case; raising the cap is an explicit opt-in, not a tuning knob."""
    global _cap
    if cap < 1:
        raise GraphError(f"vertex cap must be positive, got {cap}")
    _cap = cap


class Edge(tuple):
    """An undirected edge as an ordered pair (u, v) with u < v."""

    __slots__ = ()

    def __new__(cls, u: int, v: int) -> "Edge":
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        return super().__new__(cls, (u, v))

    @property
    def u(self) -> int:
        return self[0]

    @property
    def v(self) -> int:
        return self[1]

    def __repr__(self) -> str:
        return f"Edge({self[0]}, {self[1]})"


@dataclass(frozen=True)
class EdgeSet:
    """A set of edges, typically a contraction set; knows whether it is a
    matching (pairwise nonincident edges)."""

    edges: frozenset

    @classmethod
    def of(cls, pairs: Iterable) -> "EdgeSet":
        return cls(frozenset(Edge(*p) for p in pairs))

    @property
    def is_matching(self) -> bool:
        seen = set()
        for e in self.edges:
            if e.u in seen or e.v in seen:
                return False
            seen.add(e.u)
            seen.add(e.v)
        return True

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.edges))

    def __len__(self) -> int:
        return len(self.edges)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> list[int]:
    """Set bit positions of `mask`, ascending."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


class Graph:
    """Simple undirected graph; no loops, no parallel edges, vertices 0..n-1."""

    __slots__ = ("n", "masks", "labels")

    def __init__(self, n: int, edges: Iterable = (), labels=None):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if n > _cap:
            raise VertexCapExceeded(f"{n} vertices exceeds the cap of {_cap}")
        masks = [0] * n
        for p in edges:
            u, v = p
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {p!r} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.masks = tuple(masks)
        self.labels = self._check_labels(n, labels)

    @staticmethod
    def _check_labels(n, labels):
        if labels is None:
            return tuple(frozenset((i,)) for i in range(n))
        labels = tuple(frozenset(l) for l in labels)
        if len(labels) != n:
            raise GraphError("label map length differs from vertex count")
        return labels

    @classmethod
    def from_masks(cls, masks: Iterable[int], labels=None) -> "Graph":
        masks = tuple(masks)
        g = cls.__new__(cls)
        n = len(masks)
        if n > _cap:
            raise VertexCapExceeded(f"{n} vertices exceeds the cap of {_cap}")
        for v, m in enumerate(masks):
            if m >> n:
                raise GraphError(f"adjacency mask of {v} out of range")
            if (m >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v in range(n):
            for u in bits_of(masks[v]):
                if not (masks[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        g.n = n
        g.masks = masks
        g.labels = cls._check_labels(n, labels)
        return g

    # -- queries ---------------------------------------------------------

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.masks[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits_of(self.masks[v])

    def has_edge(self, e) -> bool:
        u, v = e
        return 0 <= u < self.n and 0 <= v < self.n and u != v and self.adjacent(u, v)

    def edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            for v in bits_of(self.masks[u] >> (u + 1)):
                out.append(Edge(u, u + 1 + v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def label(self, v: int) -> frozenset:
        return self.labels[v]

    def vertex_with_label(self, original_id) -> int:
        """Vertex whose label set contains `original_id`."""
        for v, lbl in enumerate(self.labels):
            if original_id in lbl:
                return v
        raise GraphError(f"no vertex carries label {original_id!r}")

    # -- value semantics --------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.masks == other.masks
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        es = ", ".join(f"{e.u}-{e.v}" for e in self.edges()[:12])
        more = "..." if self.edge_count > 12 else ""
        return f"Graph(n={self.n}, edges=[{es}{more}])"


def complement(g: Graph) -> Graph:
    """Same vertices; distinct u, v adjacent iff nonadjacent in g."""
    full = (1 << g.n) - 1
    masks = tuple((full & ~m & ~(1 << v)) for v, m in enumerate(g.masks))
    out = Graph.__new__(Graph)
    out.n = g.n
    out.masks = masks
    out.labels = g.labels
    return out


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by `vertices`, relabelled to 0..k-1 in ascending
    order of the original indices; the label map tracks the originals."""
    keep = sorted(set(vertices))
    for v in keep:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(keep)}
    masks = []
    for v in keep:
        m = 0
        for u in bits_of(g.masks[v]):
            if u in pos:
                m |= 1 << pos[u]
        masks.append(m)
    out = Graph.__new__(Graph)
    out.n = len(keep)
    out.masks = tuple(masks)
    out.labels = tuple(g.labels[v] for v in keep)
    return out


def contract_set(g: Graph, edges) -> Graph:
    """Contract every edge of `edges` at once.

    Each connected component of the contraction set collapses to a single
    vertex whose label is the union of the member labels. The result equals
    iterated single-edge contraction in any order: quotient classes are
    placed in ascending order of their smallest original vertex, which is
    stable under merge order.
    """
    if isinstance(edges, EdgeSet):
        edges = list(edges)
    else:
        edges = [Edge(*p) for p in edges]
    for e in edges:
        if not g.has_edge(e):
            raise GraphError(f"{e!r} is not an edge of the graph")

    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            continue
        if ru > rv:
            ru, rv = rv, ru
        parent[rv] = ru

    roots = sorted({find(v) for v in range(g.n)})
    index = {r: i for i, r in enumerate(roots)}
    k = len(roots)
    masks = [0] * k
    labels = [set() for _ in range(k)]
    for v in range(g.n):
        i = index[find(v)]
        labels[i] |= g.labels[v]
        for u in bits_of(g.masks[v]):
            j = index[find(u)]
            if i != j:
                masks[i] |= 1 << j
    out = Graph.__new__(Graph)
    out.n = k
    out.masks = tuple(masks)
    out.labels = tuple(frozenset(l) for l in labels)
    return out


def contract_edge(g: Graph, e) -> Graph:
    """Contract a single edge; rejects non-edges."""
    u, v = e
    return contract_set(g, (Edge(u, v),))


def add_twin(g: Graph, v: int, true_twin: bool = True) -> Graph:
    """Append a twin of v: closed neighbourhoods equal for a true twin
    (the twin is adjacent to v), open neighbourhoods equal for a false one."""
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range")
    if g.n + 1 > _cap:
        raise VertexCapExceeded(f"{g.n + 1} vertices exceeds the cap of {_cap}")
    t = g.n
    masks = list(g.masks)
    tw = masks[v]
    if true_twin:
        tw |= 1 << v
    for u in bits_of(tw):
        masks[u] |= 1 << t
    masks.append(tw)
    fresh = max((max(l) for l in g.labels if l), default=-1) + 1
    out = Graph.__new__(Graph)
    out.n = t + 1
    out.masks = tuple(masks)
    out.labels = g.labels + (frozenset((fresh,)),)
    return out


def connected_component_masks(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by smallest member."""
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits_of(frontier):
                nxt |= g.masks[u]
            frontier = nxt & ~comp
            comp |= nxt
        comps.append(comp)
        seen |= comp
    return comps


def connected_components(g: Graph) -> list[list[int]]:
    return [bits_of(m) for m in connected_component_masks(g)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_component_masks(g)) == 1


def is_stable_set(g: Graph, vertices: Iterable[int]) -> bool:
    m = mask_of(vertices)
    return all(not (g.masks[v] & m) for v in bits_of(m))
