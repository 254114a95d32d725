"""Exhaustive catalogues of small graphs up to isomorphism.

Graphs on n vertices are generated by extending every (n-1)-vertex graph
with a new vertex attached in all possible ways, then discarding isomorphic
duplicates. The connected catalogue extends connected parents with nonempty
attachments only; that covers everything because every connected graph has
a vertex whose removal keeps it connected. Duplicates are detected with a
colour-refinement invariant for bucketing plus an exact backtracking
isomorphism test inside each bucket.

The known catalogue sizes double as oracles for the test suite: 1, 2, 4,
11, 34, 156, 1044 graphs on 1..7 vertices and 1, 1, 2, 6, 21, 112, 853,
11117 connected graphs on 1..8.
"""

from __future__ import annotations

from collections import Counter

from .graph import Graph

_all_cache: dict[int, list] = {}
_connected_cache: dict[int, list] = {}


def _refine(masks):
    """Stable colouring by iterated neighbourhood signatures, plus an
    isomorphism-invariant bucket key.

    Colour indices are assigned by sorted signature order each round, so
    isomorphic graphs end up with identical colour assignments up to the
    isomorphism. The key records every round's sorted signature list;
    signatures start from plain degrees, so the key is comparable across
    graphs, not just within one.
    """
    n = len(masks)
    colours = [m.bit_count() for m in masks]
    parts = [tuple(sorted(colours))]
    for _ in range(n):
        sigs = []
        for v in range(n):
            m = masks[v]
            acc = 0
            while m:
                b = m & -m
                m ^= b
                acc += 1 << (6 * colours[b.bit_length() - 1])
            sigs.append((colours[v], acc))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        fresh = [ranking[s] for s in sigs]
        parts.append(tuple(sorted(sigs)))
        if fresh == colours:
            break
        colours = fresh
    edge_count = sum(mk.bit_count() for mk in masks) // 2
    return colours, (n, edge_count, tuple(parts))


def refinement_colours(masks) -> tuple:
    return tuple(_refine(masks)[0])


def _isomorphic_masks(a, ca, b, cb) -> bool:
    """Exact isomorphism by backtracking over colour-respecting mappings."""
    n = len(a)
    freq = Counter(ca)
    if freq != Counter(cb):
        return False
    by_colour: dict[int, list[int]] = {}
    for v, c in enumerate(cb):
        by_colour.setdefault(c, []).append(v)
    # map the most constrained vertices first
    order = sorted(range(n), key=lambda v: (freq[ca[v]], ca[v], v))
    image = [0] * n
    used = [False] * n

    def place(i):
        if i == n:
            return True
        v = order[i]
        av = a[v]
        for w in by_colour[ca[v]]:
            if used[w]:
                continue
            bw = b[w]
            ok = True
            for j in range(i):
                u = order[j]
                if ((av >> u) & 1) != ((bw >> image[u]) & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if place(i + 1):
                    return True
                used[w] = False
        return False

    return place(0)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    ca, ka = _refine(g.masks)
    cb, kb = _refine(h.masks)
    if ka != kb:
        return False
    return _isomorphic_masks(g.masks, ca, h.masks, cb)


def _extend_all(parents, n, connected_only):
    buckets: dict[tuple, list] = {}
    out = []
    low = 1 if connected_only else 0
    for base in parents:
        pmasks = base.masks
        top = 1 << (n - 1)
        for attach in range(low, 1 << (n - 1)):
            masks = [
                pm | top if (attach >> i) & 1 else pm
                for i, pm in enumerate(pmasks)
            ]
            masks.append(attach)
            masks = tuple(masks)
            colours, key = _refine(masks)
            bucket = buckets.setdefault(key, [])
            if any(
                _isomorphic_masks(masks, colours, om, oc)
                for om, oc in bucket
            ):
                continue
            bucket.append((masks, colours))
            out.append(Graph.from_masks(masks))
    return out


def all_graphs(n: int) -> list:
    """All graphs on n vertices up to isomorphism, deterministically ordered.
    Exponential in n; intended for n <= 7."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n not in _all_cache:
        if n == 0:
            _all_cache[0] = [Graph(0)]
        elif n == 1:
            _all_cache[1] = [Graph(1)]
        else:
            _all_cache[n] = _extend_all(all_graphs(n - 1), n, False)
    return list(_all_cache[n])


def connected_graphs(n: int) -> list:
    """All connected graphs on n vertices up to isomorphism; n <= 8 is the
    intended range (11117 graphs at n = 8)."""
    if n < 1:
        raise ValueError("vertex count must be positive")
    if n not in _connected_cache:
        if n == 1:
            _connected_cache[1] = [Graph(1)]
        else:
            _connected_cache[n] = _extend_all(connected_graphs(n - 1), n, True)
    return list(_connected_cache[n])
