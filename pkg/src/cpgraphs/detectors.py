"""Certificate-producing searches for holes, odd antiholes and expanded
antiholes, the perfection test built on them, and brute-force clique /
chromatic numbers used as cross-check oracles.

All searches are pure functions on immutable graphs and iterate vertices in
ascending order, so the first witness found is reproducible. They are
exponential in the worst case; the vertex cap keeps that acceptable.
"""

from __future__ import annotations

from . import kernels
from .certificates import EXPANDED_ANTIHOLE, HOLE, ODD_ANTIHOLE, Certificate
from .graph import Edge, Graph, GraphError, complement


def find_hole_at_least(g: Graph, k: int = 4) -> Certificate | None:
    """A hole (induced cycle, >= 4 vertices) of size >= k, or None."""
    seq = kernels.find_hole(g.masks, max(k, 4), kernels.PARITY_ANY)
    return None if seq is None else Certificate(HOLE, seq)


def find_odd_hole(g: Graph, min_size: int = 5) -> Certificate | None:
    """An odd hole of size >= min_size, or None."""
    seq = kernels.find_hole(g.masks, max(min_size, 5), kernels.PARITY_ODD)
    return None if seq is None else Certificate(HOLE, seq)


def find_odd_antihole(g: Graph, min_size: int = 5) -> Certificate | None:
    """An odd antihole, searched as an odd hole of the complement; the
    certificate keeps the complement's cycle order."""
    seq = kernels.find_hole(complement(g).masks, max(min_size, 5), kernels.PARITY_ODD)
    return None if seq is None else Certificate(ODD_ANTIHOLE, seq)


def perfection_certificate(g: Graph) -> Certificate | None:
    """An odd hole or odd antihole if one exists, else None (g is perfect).

    The hole search runs first, so a C5 (which is both) is always reported
    as a hole and antihole certificates effectively start at size 7.
    """
    return find_odd_hole(g) or find_odd_antihole(g)


def is_perfect(g: Graph) -> bool:
    return perfection_certificate(g) is None


def find_expanded_antihole(g: Graph) -> Certificate | None:
    """An induced expanded antihole, or None.

    Tries every edge in ascending order, in both orientations, as the
    distinguished edge; the antipath search prunes on the adjacency pattern
    at every extension step.
    """
    for e in g.edges():
        for u, v in ((e.u, e.v), (e.v, e.u)):
            ws = kernels.find_expanded_antihole_at(g.masks, u, v)
            if ws is not None:
                return Certificate(EXPANDED_ANTIHOLE, (u, v) + ws)
    return None


def find_expanded_antihole_involving(g: Graph, e) -> Certificate | None:
    """An expanded antihole whose distinguished edge is exactly `e`."""
    e = Edge(*e)
    if not g.has_edge(e):
        raise GraphError(f"{e!r} is not an edge of the graph")
    for u, v in ((e.u, e.v), (e.v, e.u)):
        ws = kernels.find_expanded_antihole_at(g.masks, u, v)
        if ws is not None:
            return Certificate(EXPANDED_ANTIHOLE, (u, v) + ws)
    return None


def clique_number(g: Graph) -> int:
    """Exact clique number by branch and bound. Oracle-grade: intended for
    cross-checks on graphs of a dozen vertices, no performance promises."""
    masks = g.masks
    best = 0

    def grow(size, cand):
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            bit = cand & -cand
            cand ^= bit
            v = bit.bit_length() - 1
            grow(size + 1, cand & masks[v])

    grow(0, (1 << g.n) - 1)
    return best


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by iterative deepening over k-colourings.
    Oracle-grade, like clique_number; independent of it on purpose."""
    n = g.n
    if n == 0:
        return 0
    masks = g.masks
    order = sorted(range(n), key=lambda v: (-masks[v].bit_count(), v))

    def colourable(k):
        colour = [-1] * n

        def assign(i, used):
            if i == n:
                return True
            v = order[i]
            taken = 0
            for u in range(n):
                if colour[u] >= 0 and (masks[v] >> u) & 1:
                    taken |= 1 << colour[u]
            limit = min(used + 1, k)  # a fresh colour only breaks one tie
            for c in range(limit):
                if not (taken >> c) & 1:
                    colour[v] = c
                    if assign(i + 1, max(used, c + 1)):
                        return True
            colour[v] = -1
            return False

        return assign(0, 0)

    for k in range(1, n + 1):
        if colourable(k):
            return k
    return n
