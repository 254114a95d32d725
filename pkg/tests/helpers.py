"""Shared test utilities: independent brute-force oracles and hypothesis
strategies. The oracles enumerate subsets and check definitions directly;
they share no code with the search kernels they are used to check."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from cpgraphs import Graph


def subset_induces_cycle(g, vs):
    """The vertex set vs induces a cycle: every member has degree exactly 2
    inside vs, and vs is connected."""
    vs = list(vs)
    if len(vs) < 3:
        return False
    inside = set(vs)
    for v in vs:
        if sum(1 for u in g.neighbors(v) if u in inside) != 2:
            return False
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u in inside and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(vs)


def brute_hole_sizes(g, min_size=4):
    """Sizes of all induced cycles of size >= min_size, by subset scan."""
    sizes = set()
    for k in range(max(4, min_size), g.n + 1):
        for vs in combinations(range(g.n), k):
            if subset_induces_cycle(g, vs):
                sizes.add(k)
                break
    return sizes


def brute_has_hole(g, min_size=4, parity=None):
    for k in brute_hole_sizes(g, min_size):
        if parity is None or k % 2 == parity:
            return True
    return False


def brute_max_stable_weight(g, weights, allowed=None):
    """Maximum weight of a stable set, by subset enumeration."""
    verts = list(range(g.n)) if allowed is None else sorted(allowed)
    best = 0
    for r in range(len(verts) + 1):
        for sub in combinations(verts, r):
            inside = set(sub)
            if any(u in inside for v in sub for u in g.neighbors(v)):
                continue
            best = max(best, sum(weights[v] for v in sub))
    return best


def brute_max_co2plex_weight(g, weights):
    """Maximum weight of a vertex set inducing max degree <= 1."""
    best = 0
    for sub in range(1 << g.n):
        members = [v for v in range(g.n) if (sub >> v) & 1]
        inside = set(members)
        if any(
            sum(1 for u in g.neighbors(v) if u in inside) > 1 for v in members
        ):
            continue
        best = max(best, sum(weights[v] for v in members))
    return best


def brute_is_split(g):
    """Try every subset as the clique side."""
    for sub in range(1 << g.n):
        cq = [v for v in range(g.n) if (sub >> v) & 1]
        rest = [v for v in range(g.n) if not (sub >> v) & 1]
        if all(g.adjacent(u, v) for u, v in combinations(cq, 2)) and all(
            not g.adjacent(u, v) for u, v in combinations(rest, 2)
        ):
            return True
    return g.n == 0


def brute_is_trivially_perfect(g):
    """No induced 4-path and no induced 4-cycle, by 4-subset scan."""
    for vs in combinations(range(g.n), 4):
        edges = sum(1 for u, v in combinations(vs, 2) if g.adjacent(u, v))
        if edges == 3 and _max_degree_within(g, vs) == 2:
            # three edges, max degree 2, spanning: a path on 4 vertices
            if all(
                sum(1 for u in vs if u != v and g.adjacent(u, v)) >= 1
                for v in vs
            ):
                return False
        if edges == 4 and _max_degree_within(g, vs) == 2:
            return False  # a 4-cycle
    return True


def _max_degree_within(g, vs):
    inside = set(vs)
    return max(sum(1 for u in g.neighbors(v) if u in inside) for v in vs)


def relabel(g, perm):
    """Graph with vertex i renamed perm[i]; keeps default labels."""
    edges = [(perm[e.u], perm[e.v]) for e in g.edges()]
    return Graph(g.n, edges)


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pair_count = n * (n - 1) // 2
    bits = draw(st.integers(min_value=0, max_value=(1 << pair_count) - 1))
    edges = []
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (bits >> idx) & 1:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)
