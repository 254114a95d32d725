# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled twins of cpgraphs._pykernels.

Same functions, same candidate order, same results; graphs are limited to
64 vertices (uint64 masks) and weights to int64. Keep any behavioural
change mirrored in _pykernels.py — the differential tests compare the two
backends bit for bit.
"""

from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

PARITY_ANY = 0
PARITY_ODD = 1
PARITY_EVEN = 2

cdef uint64_t ALL_ONES = 0xFFFFFFFFFFFFFFFFULL


cdef struct HoleState:
    uint64_t masks[64]
    int path[66]
    int depth
    int min_len
    int parity
    bint anchored


cdef bint _hole_dfs(HoleState* st, uint64_t path_mask, uint64_t forbid) noexcept:
    cdef int first = st.path[0]
    cdef int last = st.path[st.depth - 1]
    cdef uint64_t first_bit = (<uint64_t>1) << first
    cdef uint64_t cand = st.masks[last] & ~forbid & ~path_mask
    cdef uint64_t bit
    cdef int w
    cdef int length = st.depth + 1
    cdef bint closable
    if not st.anchored:
        if first >= 63:
            cand = 0
        else:
            cand = cand & (ALL_ONES << (first + 1))
    closable = length >= st.min_len and (
        st.parity == 0 or (st.parity == 1) == <bint>(length & 1)
    )
    while cand:
        bit = cand & (0 - cand)
        cand = cand ^ bit
        w = __builtin_ctzll(bit)
        if st.masks[w] & first_bit:
            if closable and (st.anchored or w > st.path[1]):
                st.path[st.depth] = w
                st.depth += 1
                return True
        else:
            st.path[st.depth] = w
            st.depth += 1
            if _hole_dfs(st, path_mask | bit, forbid | st.masks[last]):
                return True
            st.depth -= 1
    return False


def find_hole(masks, int min_len=4, int parity=0, int start_u=-1, int start_v=-1):
    """See _pykernels.find_hole."""
    cdef HoleState st
    cdef int n = len(masks)
    cdef int i, a, b
    cdef uint64_t nbrs, bit
    if n > 64:
        raise ValueError("compiled kernels support at most 64 vertices")
    if min_len < 4:
        min_len = 4
    if n < min_len:
        return None
    for i in range(n):
        st.masks[i] = masks[i]
    st.min_len = min_len
    st.parity = parity
    st.anchored = start_u >= 0
    if st.anchored:
        if not (st.masks[start_u] >> start_v) & 1:
            return None
        st.path[0] = start_u
        st.path[1] = start_v
        st.depth = 2
        if _hole_dfs(
            &st, ((<uint64_t>1) << start_u) | ((<uint64_t>1) << start_v), 0
        ):
            return tuple(st.path[i] for i in range(st.depth))
        return None
    for a in range(n - 1):
        nbrs = st.masks[a] & (ALL_ONES << (a + 1))
        while nbrs:
            bit = nbrs & (0 - nbrs)
            nbrs = nbrs ^ bit
            b = __builtin_ctzll(bit)
            st.path[0] = a
            st.path[1] = b
            st.depth = 2
            if _hole_dfs(&st, ((<uint64_t>1) << a) | bit, 0):
                return tuple(st.path[i] for i in range(st.depth))
    return None


cdef struct EahState:
    uint64_t masks[64]
    uint64_t ends
    uint64_t side_u
    uint64_t side_v
    uint64_t both
    int seq[66]
    int depth


cdef bint _eah_grow(EahState* st, uint64_t used, int prev, uint64_t need,
                    int interior) noexcept:
    cdef uint64_t cand, bit, tail, tb, need2
    cdef int x, y, w
    if interior >= 2 and (interior & 1) == 0:
        cand = st.side_v & ~st.masks[prev] & ~used
        while cand:
            bit = cand & (0 - cand)
            cand = cand ^ bit
            x = __builtin_ctzll(bit)
            if (st.masks[x] & need) != need:
                continue
            need2 = need | ((<uint64_t>1) << prev)
            tail = st.ends & ~st.masks[x] & ~used & ~bit
            while tail:
                tb = tail & (0 - tail)
                tail = tail ^ tb
                y = __builtin_ctzll(tb)
                if (st.masks[y] & need2) == need2:
                    st.seq[st.depth] = x
                    st.seq[st.depth + 1] = y
                    st.depth += 2
                    return True
    cand = st.both & ~st.masks[prev] & ~used
    while cand:
        bit = cand & (0 - cand)
        cand = cand ^ bit
        w = __builtin_ctzll(bit)
        if (st.masks[w] & need) != need:
            continue
        st.seq[st.depth] = w
        st.depth += 1
        if _eah_grow(st, used | bit, w, need | ((<uint64_t>1) << prev),
                     interior + 1):
            return True
        st.depth -= 1
    return False


def find_expanded_antihole_at(masks, int u, int v):
    """See _pykernels.find_expanded_antihole_at."""
    cdef EahState st
    cdef int n = len(masks)
    cdef int i, w1, w2
    cdef uint64_t full, mu, mv, w1s, w2s, b1, b2
    if n > 64:
        raise ValueError("compiled kernels support at most 64 vertices")
    for i in range(n):
        st.masks[i] = masks[i]
    if not (st.masks[u] >> v) & 1:
        return None
    full = ALL_ONES if n == 64 else ((<uint64_t>1) << n) - 1
    mu = st.masks[u]
    mv = st.masks[v]
    st.ends = full & ~mu & ~mv & ~((<uint64_t>1) << u) & ~((<uint64_t>1) << v)
    st.side_u = mu & ~mv & ~((<uint64_t>1) << v)
    st.side_v = mv & ~mu & ~((<uint64_t>1) << u)
    st.both = mu & mv
    if (
        st.ends == 0
        or st.side_u == 0
        or st.side_v == 0
        or __builtin_popcountll(st.both) < 2
    ):
        return None
    w1s = st.ends
    while w1s:
        b1 = w1s & (0 - w1s)
        w1s = w1s ^ b1
        w1 = __builtin_ctzll(b1)
        w2s = st.side_u & ~st.masks[w1]
        while w2s:
            b2 = w2s & (0 - w2s)
            w2s = w2s ^ b2
            w2 = __builtin_ctzll(b2)
            st.seq[0] = w1
            st.seq[1] = w2
            st.depth = 2
            if _eah_grow(&st, b1 | b2, w2, b1, 0):
                return tuple(st.seq[i] for i in range(st.depth))
    return None


cdef struct MwsState:
    uint64_t masks[64]
    int64_t weights[64]
    int64_t best_w
    uint64_t best_mask


cdef int64_t _mws_bound(MwsState* st, uint64_t live) noexcept:
    cdef uint64_t cl_mask[64]
    cdef int64_t cl_max[64]
    cdef int ncl = 0
    cdef uint64_t rest = live
    cdef uint64_t bit
    cdef int i, t
    cdef int64_t ub = 0
    cdef int64_t w
    cdef bint placed
    while rest:
        bit = rest & (0 - rest)
        rest = rest ^ bit
        i = __builtin_ctzll(bit)
        w = st.weights[i]
        placed = False
        for t in range(ncl):
            if (cl_mask[t] & st.masks[i]) == cl_mask[t]:
                cl_mask[t] = cl_mask[t] | bit
                if w > cl_max[t]:
                    cl_max[t] = w
                placed = True
                break
        if not placed:
            cl_mask[ncl] = bit
            cl_max[ncl] = w
            ncl += 1
    for t in range(ncl):
        ub += cl_max[t]
    return ub


cdef void _mws_rec(MwsState* st, uint64_t live, int64_t cur_w,
                   uint64_t cur_mask) noexcept:
    cdef uint64_t rest, bit, pb
    cdef int pick = -1
    cdef int pick_deg = -1
    cdef int i, d
    if cur_w > st.best_w:
        st.best_w = cur_w
        st.best_mask = cur_mask
    if live == 0:
        return
    if cur_w + _mws_bound(st, live) <= st.best_w:
        return
    rest = live
    while rest:
        bit = rest & (0 - rest)
        rest = rest ^ bit
        i = __builtin_ctzll(bit)
        d = __builtin_popcountll(st.masks[i] & live)
        if d > pick_deg:
            pick_deg = d
            pick = i
    pb = (<uint64_t>1) << pick
    _mws_rec(st, live & ~st.masks[pick] & ~pb, cur_w + st.weights[pick],
             cur_mask | pb)
    _mws_rec(st, live & ~pb, cur_w, cur_mask)


def max_weight_stable(masks, weights, allowed=-1):
    """See _pykernels.max_weight_stable."""
    cdef MwsState st
    cdef int n = len(masks)
    cdef int i
    cdef uint64_t pool = 0
    cdef uint64_t allowed_mask
    cdef uint64_t full
    if n > 64:
        raise ValueError("compiled kernels support at most 64 vertices")
    full = ALL_ONES if n == 64 else (((<uint64_t>1) << n) - 1)
    if allowed < 0:
        allowed_mask = full
    else:
        allowed_mask = <uint64_t>allowed & full
    for i in range(n):
        st.masks[i] = masks[i]
        st.weights[i] = weights[i]
        if st.weights[i] > 0:
            pool = pool | ((<uint64_t>1) << i)
    pool = pool & allowed_mask
    st.best_w = 0
    st.best_mask = 0
    _mws_rec(&st, pool, 0, 0)
    return int(st.best_w), int(st.best_mask)
