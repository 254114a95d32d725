"""Pure-Python search kernels over bitmask adjacency.

These are the hot inner loops of the package: the induced-cycle search, the
expanded-antihole pattern search, and the exact stable-set branch and bound.
`cpgraphs.kernels` selects this module or its compiled twin
`cpgraphs._ckernels` at import time. Both implement the same functions with
the same candidate order, so their results are bit-for-bit identical; keep
any change mirrored in the .pyx file.

A graph enters a kernel as `masks`: a sequence where masks[v] is the
bitmask of the neighbours of v. Cycles come back as vertex tuples in cycle
order.
"""

from __future__ import annotations

PARITY_ANY = 0
PARITY_ODD = 1
PARITY_EVEN = 2


def find_hole(masks, min_len=4, parity=PARITY_ANY, start_u=-1, start_v=-1):
    """First induced cycle with >= min_len vertices and the given parity.

    Cycles are explored by depth-first extension of induced paths: a partial
    path may grow only through vertices nonadjacent to all of its interior,
    and closes when the last vertex sees the first. Anchors and candidates
    run in ascending order, so the result is deterministic. When start_u and
    start_v are set, only cycles traversing that edge in that orientation
    are considered (every cycle through the edge has exactly one such
    traversal). Returns a vertex tuple or None.
    """
    n = len(masks)
    if min_len < 4:
        min_len = 4
    if n < min_len:
        return None
    anchored = start_u >= 0

    def dfs(path, path_mask, forbid):
        first = path[0]
        last = path[-1]
        first_bit = 1 << first
        cand = masks[last] & ~forbid & ~path_mask
        if not anchored:
            cand &= -(first_bit << 1)  # canonical anchor: smallest cycle vertex
        length = len(path) + 1
        closable = length >= min_len and (
            parity == PARITY_ANY or (parity == PARITY_ODD) == bool(length & 1)
        )
        while cand:
            bit = cand & -cand
            cand ^= bit
            w = bit.bit_length() - 1
            if masks[w] & first_bit:
                # w would close the cycle; it can never sit inside the path
                if closable and (anchored or w > path[1]):
                    return path + (w,)
            else:
                hit = dfs(path + (w,), path_mask | bit, forbid | masks[last])
                if hit is not None:
                    return hit
        return None

    if anchored:
        if not (masks[start_u] >> start_v) & 1:
            return None
        return dfs((start_u, start_v), (1 << start_u) | (1 << start_v), 0)
    for a in range(n):
        nbrs = masks[a] & -(1 << (a + 1))
        while nbrs:
            bit = nbrs & -nbrs
            nbrs ^= bit
            b = bit.bit_length() - 1
            hit = dfs((a, b), (1 << a) | bit, 0)
            if hit is not None:
                return hit
    return None


def find_expanded_antihole_at(masks, u, v):
    """Antipath (w_1..w_p), p even >= 6, completing the edge (u, v) to an
    expanded antihole: u sees exactly w_2..w_{p-2} of it, v sees exactly
    w_3..w_{p-1}, consecutive w's are nonadjacent, all other w pairs
    adjacent. Returns the w tuple or None; (u, v) must be an edge.
    """
    n = len(masks)
    if not (masks[u] >> v) & 1:
        return None
    full = (1 << n) - 1
    mu = masks[u]
    mv = masks[v]
    ends = full & ~mu & ~mv & ~(1 << u) & ~(1 << v)  # w_1 and w_p
    side_u = mu & ~mv & ~(1 << v)  # w_2
    side_v = mv & ~mu & ~(1 << u)  # w_{p-1}
    both = mu & mv  # w_3 .. w_{p-2}
    if not ends or not side_u or not side_v or both.bit_count() < 2:
        return None

    # A candidate for the next slot must avoid the previous vertex and see
    # every earlier one (the antipath adjacency law), tracked as (prev, need).
    def grow(seq, used, prev, need, interior):
        if interior >= 2 and interior & 1 == 0:
            cand = side_v & ~masks[prev] & ~used
            while cand:
                bit = cand & -cand
                cand ^= bit
                x = bit.bit_length() - 1
                if masks[x] & need != need:
                    continue
                need2 = need | (1 << prev)
                tail = ends & ~masks[x] & ~used & ~bit
                while tail:
                    tb = tail & -tail
                    tail ^= tb
                    y = tb.bit_length() - 1
                    if masks[y] & need2 == need2:
                        return seq + (x, y)
        cand = both & ~masks[prev] & ~used
        while cand:
            bit = cand & -cand
            cand ^= bit
            w = bit.bit_length() - 1
            if masks[w] & need != need:
                continue
            hit = grow(seq + (w,), used | bit, w, need | (1 << prev), interior + 1)
            if hit is not None:
                return hit
        return None

    w1s = ends
    while w1s:
        b1 = w1s & -w1s
        w1s ^= b1
        w1 = b1.bit_length() - 1
        w2s = side_u & ~masks[w1]
        while w2s:
            b2 = w2s & -w2s
            w2s ^= b2
            w2 = b2.bit_length() - 1
            hit = grow((w1, w2), b1 | b2, w2, b1, 0)
            if hit is not None:
                return hit
    return None


def max_weight_stable(masks, weights, allowed=-1):
    """(best_weight, best_mask) over stable subsets of `allowed`.

    Branch and bound: branch on the max-degree vertex of the live
    subproblem, include-branch first, greedy-clique-cover upper bound.
    Only positive-weight vertices are ever taken (the empty set is always
    feasible), so the result weight is >= 0. Among equal-weight optima the
    first one reached in branch order is kept, deterministically.
    """
    n = len(masks)
    full = (1 << n) - 1
    if allowed < 0:
        allowed = full
    pool = 0
    for i in range(n):
        if weights[i] > 0:
            pool |= 1 << i
    pool &= allowed & full

    best_w = 0
    best_mask = 0

    def bound(live):
        cliques = []  # (member_mask, max_weight) pairs, greedy cover
        ub = 0
        rest = live
        while rest:
            bit = rest & -rest
            rest ^= bit
            i = bit.bit_length() - 1
            w = weights[i]
            for t, (cm, cw) in enumerate(cliques):
                if cm & masks[i] == cm:  # i sees every member: same clique
                    cliques[t] = (cm | bit, cw if cw >= w else w)
                    break
            else:
                cliques.append((bit, w))
        for _, cw in cliques:
            ub += cw
        return ub

    def rec(live, cur_w, cur_mask):
        nonlocal best_w, best_mask
        if cur_w > best_w:
            best_w = cur_w
            best_mask = cur_mask
        if not live:
            return
        if cur_w + bound(live) <= best_w:
            return
        pick = -1
        pick_deg = -1
        rest = live
        while rest:
            bit = rest & -rest
            rest ^= bit
            i = bit.bit_length() - 1
            d = (masks[i] & live).bit_count()
            if d > pick_deg:
                pick_deg = d
                pick = i
        pb = 1 << pick
        rec(live & ~masks[pick] & ~pb, cur_w + weights[pick], cur_mask | pb)
        rec(live & ~pb, cur_w, cur_mask)

    rec(pool, 0, 0)
    return best_w, best_mask
