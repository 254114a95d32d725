"""Integer interval families, their intersection graphs, and the parity
property of odd intersection interval sets.

Intervals are closed integer ranges [a, b] with cardinality b - a + 1; no
half-open conventions anywhere. A family is an odd intersection interval
set when the common intersection of every subfamily is empty or has odd
cardinality. For such families, the union of the intervals of each
connected component of the intersection graph always has odd cardinality;
`check_parity_lemma` is that statement made executable.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .graph import Edge, Graph, GraphError, connected_components, contract_edge


@dataclass(frozen=True)
class IntervalSet:
    """A finite list of nonempty integer intervals; duplicates are allowed
    (a duplicated interval is a true twin in the intersection graph)."""

    intervals: tuple

    @classmethod
    def of(cls, pairs) -> "IntervalSet":
        ivs = []
        for a, b in pairs:
            if a > b:
                raise GraphError(f"empty interval [{a}, {b}]")
            ivs.append((int(a), int(b)))
        return cls(tuple(ivs))

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)


def interval_graph(s: IntervalSet) -> Graph:
    """One vertex per interval, an edge when the two intervals intersect."""
    ivs = s.intervals
    n = len(ivs)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if _intersect(ivs[i], ivs[j]) is not None:
                edges.append((i, j))
    return Graph(n, edges)


def _intersect(p, q):
    lo = max(p[0], q[0])
    hi = min(p[1], q[1])
    return (lo, hi) if lo <= hi else None


def is_odd_intersection(s: IntervalSet) -> bool:
    """Every nonempty intersection of a subfamily has odd cardinality.

    Checked exactly for any family size: the intersection of a subfamily is
    determined by its value alone, so walking the closure of distinct
    intersection values visits every subfamily intersection without
    enumerating 2^n subsets.
    """
    values = set()
    for iv in s.intervals:
        fresh = {iv}
        for k in values:
            got = _intersect(k, iv)
            if got is not None:
                fresh.add(got)
        values |= fresh
    return all((hi - lo + 1) % 2 == 1 for lo, hi in values)


def check_parity_lemma(s: IntervalSet) -> bool:
    """For an odd intersection interval set, the union of the intervals of
    every connected component of the intersection graph has odd size.
    Returns True for every valid input; a False would disprove the theory.
    """
    if not is_odd_intersection(s):
        raise GraphError("not an odd intersection interval set")
    g = interval_graph(s)
    for comp in connected_components(g):
        covered = set()
        for i in comp:
            a, b = s.intervals[i]
            covered.update(range(a, b + 1))
        if len(covered) % 2 == 0:
            return False
    return True


def merge_intersecting(s: IntervalSet, i: int, j: int) -> IntervalSet:
    """Replace intervals i and j (which must intersect) by their union; the
    union of two intersecting intervals is again an interval.

    On the intersection-graph side this is exactly the contraction of the
    edge ij; `merge_matches_contraction` verifies that correspondence.
    """
    if i == j:
        raise GraphError("need two distinct intervals")
    if i > j:
        i, j = j, i
    ivs = s.intervals
    if _intersect(ivs[i], ivs[j]) is None:
        raise GraphError("intervals do not intersect")
    union = (min(ivs[i][0], ivs[j][0]), max(ivs[i][1], ivs[j][1]))
    out = list(ivs)
    out[i] = union
    del out[j]
    return IntervalSet(tuple(out))


def merge_matches_contraction(s: IntervalSet, i: int, j: int) -> bool:
    """Adjacency of the merged family's graph equals contracting edge ij."""
    merged = interval_graph(merge_intersecting(s, i, j))
    contracted = contract_edge(interval_graph(s), Edge(i, j))
    return merged.masks == contracted.masks


def random_interval_set(rng: Random, count: int, span: int = 12,
                        odd_lengths: bool = False) -> IntervalSet:
    ivs = []
    for _ in range(count):
        a = rng.randint(1, span)
        if odd_lengths:
            b = a + 2 * rng.randint(0, (span - a) // 2)
        else:
            b = rng.randint(a, span)
        ivs.append((a, b))
    return IntervalSet(tuple(ivs))


def random_odd_intersection_set(rng: Random, max_intervals: int = 6,
                                span: int = 12) -> IntervalSet:
    """Rejection-sample an odd intersection interval set."""
    while True:
        count = rng.randint(1, max_intervals)
        s = random_interval_set(rng, count, span, odd_lengths=True)
        if is_odd_intersection(s):
            return s


def nested_interval_set(rng: Random, count: int, span: int = 0) -> IntervalSet:
    """Random nested family: any two intervals are disjoint or contained in
    one another. Free regions are split around every placed interval; when
    they run out, existing intervals are duplicated (true twins)."""
    if count <= 0:
        return IntervalSet(())
    if span <= 0:
        span = max(3 * count, 6)
    regions = [(1, span)]
    ivs = []
    while len(ivs) < count:
        if not regions:
            ivs.append(rng.choice(ivs))
            continue
        lo, hi = regions.pop(rng.randrange(len(regions)))
        a = rng.randint(lo, hi)
        b = rng.randint(a, hi)
        ivs.append((a, b))
        # regions stay pairwise disjoint: a gap each side, the interval itself
        # for nested children
        if lo <= a - 1:
            regions.append((lo, a - 1))
        regions.append((a, b))
        if b + 1 <= hi:
            regions.append((b + 1, hi))
    return IntervalSet(tuple(ivs))
