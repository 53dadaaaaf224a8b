# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled search kernels: automorphism enumeration and regular-subgroup
search.

Mirrors groupgraphs._kernels_py exactly (same entry points, same
lexicographic candidate order, bit-identical output); restricted to
graphs on at most 64 vertices so bit-rows fit one machine word.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

MAX_WORD_ORDER = 64


cdef void _aut_extend(int k, int n, unsigned long long used,
                      unsigned long long* adj, unsigned long long* cand,
                      int* img, list out):
    cdef int u, v, iu, ok
    cdef unsigned long long avail, rk, rv
    if k == n:
        out.append(tuple([img[u] for u in range(n)]))
        return
    rk = adj[k]
    avail = cand[k] & ~used
    for v in range(n):
        if not ((avail >> v) & 1):
            continue
        rv = adj[v]
        ok = 1
        for u in range(k):
            iu = img[u]
            if ((rk >> u) & 1) != ((rv >> iu) & 1):
                ok = 0
                break
            if ((adj[u] >> k) & 1) != ((adj[iu] >> v) & 1):
                ok = 0
                break
        if ok:
            img[k] = v
            _aut_extend(k + 1, n, used | (<unsigned long long> 1 << v),
                        adj, cand, img, out)


def search_automorphisms(int n, rows):
    """All permutations preserving the bit-row relation, in lex order."""
    if n < 1 or n > 64:
        raise ValueError("compiled kernel supports 1 <= n <= 64")
    cdef unsigned long long adj[64]
    cdef unsigned long long cols[64]
    cdef unsigned long long cand[64]
    cdef int out_deg[64]
    cdef int in_deg[64]
    cdef int img[64]
    cdef int u, v
    cdef unsigned long long r, mask

    for u in range(n):
        adj[u] = <unsigned long long> rows[u]
        cols[u] = 0
    for u in range(n):
        r = adj[u]
        for v in range(n):
            if (r >> v) & 1:
                cols[v] |= <unsigned long long> 1 << u
    for u in range(n):
        out_deg[u] = <int> _popcount(adj[u])
        in_deg[u] = <int> _popcount(cols[u])
    for u in range(n):
        mask = 0
        for v in range(n):
            if out_deg[v] == out_deg[u] and in_deg[v] == in_deg[u]:
                mask |= <unsigned long long> 1 << v
        cand[u] = mask

    out: list = []
    _aut_extend(0, n, 0, adj, cand, img, out)
    return out


cdef inline unsigned long long _popcount(unsigned long long x):
    cdef unsigned long long count = 0
    while x:
        x &= x - 1
        count += 1
    return count


# -- regular subgroup search -------------------------------------------------

cdef struct RegState:
    int n
    int m                  # number of input permutations
    int* flat              # m*n image arrays
    int* cand_flat         # permutation indices grouped by image of 0
    int* cand_start        # n+1 offsets into cand_flat
    short* sel             # (n+1) levels * n vertices * n images
    char* assigned         # (n+1) levels * n flags
    int* queue             # scratch: vertices pending pairing, per close call


cdef int _close(RegState* st, int level, int v, int pi):
    """Copy level-1 state to `level`, assign perm `pi` to vertex `v`, then
    saturate closure under composition.  Returns 1 on success."""
    cdef int n = st.n
    cdef int head = 0, qlen = 0
    cdef int u, w, z, i, side, bad
    cdef short* sel = st.sel + level * n * n
    cdef char* assigned = st.assigned + level * n
    cdef short* q
    cdef short* r
    cdef short t[64]
    cdef int* perm = st.flat + pi * n

    memcpy(sel, st.sel + (level - 1) * n * n, n * n * sizeof(short))
    memcpy(assigned, st.assigned + (level - 1) * n, n * sizeof(char))
    for i in range(n):
        sel[v * n + i] = <short> perm[i]
    assigned[v] = 1
    st.queue[qlen] = v
    qlen += 1

    while head < qlen:
        w = st.queue[head]
        head += 1
        q = sel + w * n
        for u in range(n):
            if not assigned[u]:
                continue
            r = sel + u * n
            for side in range(2):
                if side == 0:
                    for i in range(n):
                        t[i] = q[r[i]]
                else:
                    for i in range(n):
                        t[i] = r[q[i]]
                z = t[0]
                if not assigned[z]:
                    memcpy(sel + z * n, t, n * sizeof(short))
                    assigned[z] = 1
                    st.queue[qlen] = z
                    qlen += 1
                else:
                    bad = 0
                    for i in range(n):
                        if sel[z * n + i] != t[i]:
                            bad = 1
                            break
                    if bad:
                        return 0
    return 1


cdef int _reg_extend(RegState* st, int level):
    """Backtrack over candidates for the lowest unresolved vertex.

    Returns the level holding a complete assignment, or -1."""
    cdef int n = st.n
    cdef int v = -1
    cdef int u, c, result
    cdef char* assigned = st.assigned + level * n
    for u in range(n):
        if not assigned[u]:
            v = u
            break
    if v < 0:
        return level
    for c in range(st.cand_start[v], st.cand_start[v + 1]):
        if _close(st, level + 1, v, st.cand_flat[c]):
            result = _reg_extend(st, level + 1)
            if result >= 0:
                return result
    return -1


def search_regular_subgroup(int n, perms):
    """A subgroup of `perms` with exactly one member sending 0 to each
    vertex, or None.  `perms` must be closed under composition; candidates
    are tried in the given (lexicographic) order."""
    if n < 1 or n > 64:
        raise ValueError("compiled kernel supports 1 <= n <= 64")
    cdef int m = len(perms)
    cdef int i, j, v, level
    cdef short* sel
    cdef RegState st

    st.n = n
    st.m = m
    st.flat = NULL
    st.cand_flat = NULL
    st.cand_start = NULL
    st.sel = NULL
    st.assigned = NULL
    st.queue = NULL
    st.flat = <int*> malloc(m * n * sizeof(int))
    st.cand_flat = <int*> malloc(m * sizeof(int))
    st.cand_start = <int*> malloc((n + 1) * sizeof(int))
    st.sel = <short*> malloc((n + 1) * n * n * sizeof(short))
    st.assigned = <char*> malloc((n + 1) * n * sizeof(char))
    st.queue = <int*> malloc(n * sizeof(int))
    if (st.flat == NULL or st.cand_flat == NULL or st.cand_start == NULL
            or st.sel == NULL or st.assigned == NULL or st.queue == NULL):
        _reg_free(&st)
        raise MemoryError()

    try:
        for i in range(m):
            p = perms[i]
            for j in range(n):
                st.flat[i * n + j] = p[j]

        # bucket permutation indices by image of 0, preserving input order
        counts = [0] * n
        for i in range(m):
            counts[st.flat[i * n]] += 1
        if any(c == 0 for c in counts):
            return None
        st.cand_start[0] = 0
        for v in range(n):
            st.cand_start[v + 1] = st.cand_start[v] + counts[v]
        fill = [st.cand_start[v] for v in range(n)]
        for i in range(m):
            v = st.flat[i * n]
            st.cand_flat[fill[v]] = i
            fill[v] += 1

        identity = -1
        for i in range(m):
            for j in range(n):
                if st.flat[i * n + j] != j:
                    break
            else:
                identity = i
                break
        if identity < 0:
            return None

        # level 0: only the identity, pinned to vertex 0
        for v in range(n):
            st.assigned[v] = 0
            for j in range(n):
                st.sel[v * n + j] = 0
        st.assigned[0] = 1
        for j in range(n):
            st.sel[j] = <short> j

        level = _reg_extend(&st, 0)
        if level < 0:
            return None
        sel = st.sel + level * n * n
        return [tuple([int(sel[v * n + j]) for j in range(n)]) for v in range(n)]
    finally:
        _reg_free(&st)


cdef void _reg_free(RegState* st):
    if st.flat != NULL:
        free(st.flat)
    if st.cand_flat != NULL:
        free(st.cand_flat)
    if st.cand_start != NULL:
        free(st.cand_start)
    if st.sel != NULL:
        free(st.sel)
    if st.assigned != NULL:
        free(st.assigned)
    if st.queue != NULL:
        free(st.queue)
