"""Generators for the named graph families and recognizers for the classes
whose utter graphs stay inside the class.

Every generator is a deterministic function of its parameters and seed.
The random families promise seed-reproducibility only, not uniform
sampling over the class.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .detectors import find_hole_at_least
from .graph import (
    Graph,
    GraphError,
    bits_of,
    complement,
    connected_component_masks,
    mask_of,
)
from .intervals import interval_graph, nested_interval_set, random_interval_set

FAMILIES = (
    "path",
    "antipath",
    "hole",
    "antihole",
    "expanded-antihole",
    "clique",
    "split",
    "trivially-perfect",
    "chordal",
    "interval",
    "random",
)


@dataclass(frozen=True)
class FamilySpec:
    """A family name with its size parameter and seed."""

    family: str
    size: int
    seed: int = 0
    edge_prob: float = 0.5

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}")
        least = {
            "path": 1,
            "antipath": 1,
            "hole": 4,
            "antihole": 4,
            "expanded-antihole": 6,
            "clique": 1,
        }.get(self.family, 1)
        if self.size < least:
            raise GraphError(f"{self.family} needs size >= {least}")
        if self.family == "expanded-antihole" and self.size % 2 == 1:
            raise GraphError("expanded-antihole needs an even antipath size")
        if not 0.0 <= self.edge_prob <= 1.0:
            raise GraphError("edge probability must lie in [0, 1]")


def generate(spec: FamilySpec) -> Graph:
    rng = Random(spec.seed)
    n = spec.size
    if spec.family == "path":
        return path(n)
    if spec.family == "antipath":
        return antipath(n)
    if spec.family == "hole":
        return hole(n)
    if spec.family == "antihole":
        return antihole(n)
    if spec.family == "expanded-antihole":
        return expanded_antihole(n)
    if spec.family == "clique":
        return clique(n)
    if spec.family == "split":
        return random_split(n, rng)
    if spec.family == "trivially-perfect":
        return random_trivially_perfect(n, rng)
    if spec.family == "chordal":
        return random_chordal(n, rng)
    if spec.family == "interval":
        return random_interval_graph(n, rng)
    return random_graph(n, rng, spec.edge_prob)


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def antipath(n: int) -> Graph:
    return complement(path(n))


def hole(n: int) -> Graph:
    if n < 4:
        raise GraphError("a hole needs at least 4 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def antihole(n: int) -> Graph:
    return complement(hole(n))


def clique(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def expanded_antihole(p: int) -> Graph:
    """The unique (p + 2)-vertex graph made of an edge uv and an antipath
    (w_1..w_p), p even >= 6: vertex 0 is u (adjacent to w_2..w_{p-2}),
    vertex 1 is v (adjacent to w_3..w_{p-1}), vertices 2..p+1 are the w's,
    adjacent to each other exactly when their positions differ by >= 2.
    Contracting uv turns it into an odd antihole of size p + 1."""
    if p < 6 or p % 2 == 1:
        raise GraphError("need an even antipath size of at least 6")
    edges = [(0, 1)]
    for i in range(1, p + 1):  # w_i sits at vertex index i + 1
        if 2 <= i <= p - 2:
            edges.append((0, i + 1))
        if 3 <= i <= p - 1:
            edges.append((1, i + 1))
    for i in range(1, p + 1):
        for j in range(i + 2, p + 1):
            edges.append((i + 1, j + 1))
    return Graph(p + 2, edges)


def random_graph(n: int, rng: Random, edge_prob: float = 0.5) -> Graph:
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_prob
    ]
    return Graph(n, edges)


def random_split(n: int, rng: Random) -> Graph:
    """A clique, a stable set, and random edges between the two."""
    verts = list(range(n))
    rng.shuffle(verts)
    k = rng.randint(0, n)
    cq = verts[:k]
    edges = [(u, v) for i, u in enumerate(cq) for v in cq[i + 1:]]
    for u in cq:
        for v in verts[k:]:
            if rng.random() < 0.5:
                edges.append((u, v))
    return Graph(n, edges)


def random_chordal(n: int, rng: Random) -> Graph:
    """Grow by attaching each new vertex to a nonempty random clique of the
    existing graph, which keeps the reverse order a perfect elimination
    ordering and the result connected."""
    masks = [0]
    for t in range(1, n):
        seed = rng.randrange(t)
        cq = [seed]
        common = masks[seed]
        while common and rng.random() < 0.6:
            picks = bits_of(common)
            w = picks[rng.randrange(len(picks))]
            cq.append(w)
            common &= masks[w]
        attach = mask_of(cq)
        for u in bits_of(attach):
            masks[u] |= 1 << t
        masks.append(attach)
    return Graph.from_masks(masks)


def random_trivially_perfect(n: int, rng: Random) -> Graph:
    """Interval graph of a random nested interval family."""
    return interval_graph(nested_interval_set(rng, n))


def random_interval_graph(n: int, rng: Random) -> Graph:
    return interval_graph(random_interval_set(rng, n, span=max(2 * n, 6)))


def is_split(g: Graph) -> bool:
    """Degree-sequence (splittance) criterion: with degrees d_1 >= ... >= d_n
    and k the largest i with d_i >= i - 1, the graph is split exactly when
    sum_{i<=k} d_i = k(k-1) + sum_{i>k} d_i."""
    if g.n == 0:
        return True
    d = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    k = max(i + 1 for i in range(g.n) if d[i] >= i)
    return sum(d[:k]) == k * (k - 1) + sum(d[k:])


def is_chordal(g: Graph) -> bool:
    """Lexicographic BFS, then verify the reverse order is a perfect
    elimination ordering."""
    n = g.n
    if n <= 2:
        return True
    label: list[list[int]] = [[] for _ in range(n)]
    order = []
    visited = [False] * n
    for step in range(n):
        v = max(
            (u for u in range(n) if not visited[u]),
            key=lambda u: (label[u], -u),
        )
        visited[v] = True
        order.append(v)
        for u in bits_of(g.masks[v]):
            if not visited[u]:
                label[u].append(n - step)
    # perfect elimination order is the reverse of the visit order
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = n - 1 - i
    later = [0] * n  # vertices after v in elimination order, as a mask
    for v in range(n):
        for u in bits_of(g.masks[v]):
            if pos[u] > pos[v]:
                later[v] |= 1 << u
    for v in range(n):
        if not later[v]:
            continue
        parent = min(bits_of(later[v]), key=lambda u: pos[u])
        rest = later[v] & ~(1 << parent)
        if rest & ~g.masks[parent]:
            return False
    return True


def is_trivially_perfect(g: Graph) -> bool:
    """Every connected induced subgraph has a universal vertex (equivalent
    to containing no induced 4-path and no induced 4-hole)."""

    def ok(comp_mask):
        size = comp_mask.bit_count()
        if size <= 1:
            return True
        for v in bits_of(comp_mask):
            if g.masks[v] & comp_mask == comp_mask ^ (1 << v):
                rest = comp_mask ^ (1 << v)
                return all(ok(c) for c in _components_within(g, rest))
        return False

    return all(ok(c) for c in connected_component_masks(g))


def _components_within(g: Graph, mask: int):
    comps = []
    seen = 0
    for v in bits_of(mask):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits_of(frontier):
                nxt |= g.masks[u] & mask
            frontier = nxt & ~comp
            comp |= nxt
        comps.append(comp)
        seen |= comp
    return comps


def is_k_hole_free(g: Graph, k: int) -> bool:
    """All holes have size at most k; chordal graphs are the 3-hole-free
    ones (they have no holes at all)."""
    if k < 3:
        raise GraphError("k-hole-free needs k >= 3")
    return find_hole_at_least(g, k + 1) is None
