"""The utter graph, the co-2-plex <-> stable set correspondence, and exact
maximum-weight co-2-plex optimization through it.

The utter graph u(G) has one vertex per vertex of G and one per edge of G;
two utter-vertices are adjacent exactly when their origins are adjacent,
incident, or adjacent by contraction in G. Stable sets of u(G) correspond
one-to-one to co-2-plexes of G (vertex sets inducing maximum degree <= 1),
and lifting vertex weights by c(uv) = c(u) + c(v) turns maximum-weight
co-2-plex into maximum-weight stable set on u(G).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graph import (
    Edge,
    Graph,
    GraphError,
    VertexCapExceeded,
    bits_of,
    mask_of,
    vertex_cap,
)


class UtterGraph:
    """u(G) plus the provenance map back to the vertices and edges of G.

    Utter-vertices 0..n-1 are G's vertices in order; the rest are G's edges
    in ascending order, so the layout is deterministic and serialization is
    byte-stable.
    """

    __slots__ = ("graph", "origin", "source", "_edge_index")

    def __init__(self, graph: Graph, origin: tuple, source: Graph):
        self.graph = graph
        self.origin = origin
        self.source = source
        self._edge_index = {
            o: i for i, o in enumerate(origin) if isinstance(o, Edge)
        }

    def edge_vertex(self, e) -> int:
        """Index of the utter-vertex that stands for the edge e of G."""
        return self._edge_index[Edge(*e)]

    @property
    def n_original(self) -> int:
        return self.source.n


def utter(g: Graph) -> UtterGraph:
    """Build u(G); fails when |V| + |E| exceeds the vertex cap."""
    edges = g.edges()
    n = g.n
    total = n + len(edges)
    if total > vertex_cap():
        raise VertexCapExceeded(
            f"u(G) needs {total} vertices, above the cap of {vertex_cap()}"
        )
    masks = [0] * total

    def connect(i, j):
        masks[i] |= 1 << j
        masks[j] |= 1 << i

    for v in range(n):
        masks[v] = g.masks[v]
    for idx, e in enumerate(edges):
        i = n + idx
        reach = g.masks[e.u] | g.masks[e.v] | (1 << e.u) | (1 << e.v)
        for v in bits_of(reach):
            connect(i, v)  # incident endpoints and contraction neighbours
        for jdx in range(idx + 1, len(edges)):
            f = edges[jdx]
            fb = (1 << f.u) | (1 << f.v)
            if reach & fb:  # shared endpoint or an edge between the pairs
                connect(i, n + jdx)
    graph = Graph.from_masks(masks)
    origin = tuple(range(n)) + tuple(edges)
    return UtterGraph(graph, origin, g)


@dataclass(frozen=True)
class Co2Plex:
    """Vertex-edge representation (W, F): the isolated vertices and the
    isolated edges of the induced subgraph it spans."""

    W: frozenset
    F: frozenset

    @classmethod
    def of(cls, vertices=(), edges=()) -> "Co2Plex":
        return cls(frozenset(vertices), frozenset(Edge(*e) for e in edges))

    @property
    def vertices(self) -> frozenset:
        out = set(self.W)
        for e in self.F:
            out.add(e.u)
            out.add(e.v)
        return frozenset(out)

    def weight(self, weights) -> int:
        return sum(weights[v] for v in self.vertices)


def is_co2plex(g: Graph, s: Co2Plex) -> bool:
    """(W, F) is a co-2-plex of g: F a matching of g-edges disjoint from W,
    and the subgraph induced by W and the endpoints of F has exactly the
    edges of F."""
    ends = set()
    for e in s.F:
        if not g.has_edge(e):
            return False
        if e.u in ends or e.v in ends:
            return False
        ends.add(e.u)
        ends.add(e.v)
    if ends & s.W:
        return False
    if any(not (0 <= v < g.n) for v in s.W):
        return False
    wmask = mask_of(s.W)
    span = wmask | mask_of(ends)
    for v in bits_of(wmask):
        if g.masks[v] & span:
            return False
    for e in s.F:
        if g.masks[e.u] & span != 1 << e.v:
            return False
        if g.masks[e.v] & span != 1 << e.u:
            return False
    return True


def co2plex_to_stable(u: UtterGraph, s: Co2Plex) -> frozenset:
    """Map a co-2-plex of G to the matching stable set of u(G)."""
    if not is_co2plex(u.source, s):
        raise GraphError("not a co-2-plex of the origin graph")
    out = set(s.W)
    for e in s.F:
        out.add(u.edge_vertex(e))
    return frozenset(out)


def stable_to_co2plex(u: UtterGraph, s) -> Co2Plex:
    """Split a stable set of u(G) by origin into (W, F)."""
    s = frozenset(s)
    for v in s:
        if not (0 <= v < u.graph.n):
            raise GraphError(f"utter-vertex {v} out of range")
    smask = mask_of(s)
    for v in s:
        if u.graph.masks[v] & smask:
            raise GraphError("the given set is not stable in the utter graph")
    W = set()
    F = set()
    for v in s:
        o = u.origin[v]
        if isinstance(o, Edge):
            F.add(o)
        else:
            W.add(o)
    return Co2Plex(frozenset(W), frozenset(F))


@dataclass(frozen=True)
class WeightedGraph:
    """A graph with one exact integer weight per vertex."""

    graph: Graph
    weights: tuple

    def __post_init__(self):
        ws = tuple(self.weights)
        if len(ws) != self.graph.n:
            raise GraphError("weight vector length differs from vertex count")
        for w in ws:
            if not isinstance(w, int) or isinstance(w, bool):
                raise GraphError(f"weights must be integers, got {w!r}")
        object.__setattr__(self, "weights", ws)


def max_weight_stable_set(wg: WeightedGraph) -> tuple[frozenset, int]:
    """Exact maximum-weight stable set.

    Branch and bound for the optimal weight, then a second greedy pass that
    keeps a vertex exactly when doing so still reaches the optimum; that
    yields the lexicographically smallest optimal vertex set, so ties break
    deterministically. Negative weights are allowed and never selected (the
    empty set is always feasible).
    """
    g = wg.graph
    masks = g.masks
    weights = wg.weights
    best, _ = kernels.max_weight_stable(masks, weights)
    chosen: list[int] = []
    chosen_w = 0
    blocked = 0
    for v in range(g.n):
        if chosen_w == best:
            break
        if (blocked >> v) & 1:
            continue
        rest = -(2 << v) & ~masks[v] & ~blocked & ((1 << g.n) - 1)
        tail, _ = kernels.max_weight_stable(masks, weights, rest)
        if chosen_w + weights[v] + tail == best:
            chosen.append(v)
            chosen_w += weights[v]
            blocked |= masks[v] | (1 << v)
    return frozenset(chosen), best


def lift_weights(wg: WeightedGraph) -> WeightedGraph:
    """Weights on u(G): a vertex keeps its weight, an edge uv gets
    c(u) + c(v)."""
    ug = utter(wg.graph)
    return WeightedGraph(ug.graph, _lifted(ug, wg.weights))


def _lifted(ug: UtterGraph, weights) -> tuple:
    out = []
    for o in ug.origin:
        if isinstance(o, Edge):
            out.append(weights[o.u] + weights[o.v])
        else:
            out.append(weights[o])
    return tuple(out)


def max_weight_co2plex(wg: WeightedGraph) -> tuple[Co2Plex, int]:
    """Exact maximum-weight co-2-plex, solved as a maximum-weight stable set
    of the utter graph under the lifted weights."""
    ug = utter(wg.graph)
    lifted = WeightedGraph(ug.graph, _lifted(ug, wg.weights))
    stable, weight = max_weight_stable_set(lifted)
    return stable_to_co2plex(ug, stable), weight


def all_co2plexes(g: Graph) -> list[Co2Plex]:
    """Every co-2-plex of g, by subset enumeration; capped at 20 vertices."""
    if g.n > 20:
        raise GraphError("co-2-plex enumeration is capped at 20 vertices")
    out = []
    for sub in range(1 << g.n):
        W = set()
        F = set()
        ok = True
        rest = sub
        while rest:
            bit = rest & -rest
            rest ^= bit
            v = bit.bit_length() - 1
            inside = g.masks[v] & sub
            hits = inside.bit_count()
            if hits > 1:
                ok = False
                break
            if hits == 0:
                W.add(v)
            else:
                other = inside.bit_length() - 1
                if other > v:
                    F.add(Edge(v, other))
        if ok:
            out.append(Co2Plex(frozenset(W), frozenset(F)))
    return out


def all_stable_sets(g: Graph) -> list[frozenset]:
    """Every stable set of g, via include/exclude search; capped at 32
    vertices. The count equals the number of co-2-plexes of the origin
    graph when g is an utter graph."""
    if g.n > 32:
        raise GraphError("stable-set enumeration is capped at 32 vertices")
    out = []

    def rec(v, taken):
        if v == g.n:
            out.append(frozenset(bits_of(taken)))
            return
        rec(v + 1, taken)
        if not (g.masks[v] & taken):
            rec(v + 1, taken | (1 << v))

    rec(0, 0)
    return out


def brute_force_co2plex(wg: WeightedGraph) -> tuple[Co2Plex, int]:
    """Independent oracle: enumerate all vertex subsets, keep those whose
    induced subgraph has maximum degree <= 1, take the best weight."""
    g = wg.graph
    if g.n > 20:
        raise GraphError("brute force oracle is capped at 20 vertices")
    weights = wg.weights
    best_mask = 0
    best_w = 0
    for sub in range(1 << g.n):
        w = 0
        ok = True
        rest = sub
        while rest:
            bit = rest & -rest
            rest ^= bit
            v = bit.bit_length() - 1
            if (g.masks[v] & sub).bit_count() > 1:
                ok = False
                break
            w += weights[v]
        if ok and w > best_w:
            best_w = w
            best_mask = sub
    W = set()
    F = set()
    for v in bits_of(best_mask):
        inside = g.masks[v] & best_mask
        if inside:
            other = inside.bit_length() - 1
            if other > v:
                F.add(Edge(v, other))
        else:
            W.add(v)
    return Co2Plex(frozenset(W), frozenset(F)), best_w
