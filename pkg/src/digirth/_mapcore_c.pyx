# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: initializedcheck=False
"""Compiled backtracking kernel for acyclic-homomorphism search.

Semantics and enumeration order are identical to ``_mapcore_py``, which is
the fallback when this extension is unavailable. See that module for the
argument conventions.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free


cdef struct SearchState:
    int nd
    int nc
    int *out_off      # CSR offsets, len nd+1
    int *out_tgt
    int *in_off
    int *in_tgt
    unsigned char *cadj
    int *f            # current partial map, -1 unassigned
    int *nextval
    int *order
    int *dfs          # fiber DFS stack, len total out-arcs + 1
    int *touched
    unsigned char *seen


cdef int _state_init(SearchState *st, int nd, out_adj, in_adj, int nc,
                     cadj, order) except -1:
    cdef int m_out = 0, m_in = 0, i, j, pos
    for i in range(nd):
        m_out += len(out_adj[i])
        m_in += len(in_adj[i])
    st.nd = nd
    st.nc = nc
    st.out_off = <int *> PyMem_Malloc((nd + 1) * sizeof(int))
    st.out_tgt = <int *> PyMem_Malloc((m_out + 1) * sizeof(int))
    st.in_off = <int *> PyMem_Malloc((nd + 1) * sizeof(int))
    st.in_tgt = <int *> PyMem_Malloc((m_in + 1) * sizeof(int))
    st.cadj = <unsigned char *> PyMem_Malloc(nc * nc + 1)
    st.f = <int *> PyMem_Malloc((nd + 1) * sizeof(int))
    st.nextval = <int *> PyMem_Malloc((nd + 1) * sizeof(int))
    st.order = <int *> PyMem_Malloc((nd + 1) * sizeof(int))
    st.dfs = <int *> PyMem_Malloc((m_out + 1) * sizeof(int))
    st.touched = <int *> PyMem_Malloc((nd + 1) * sizeof(int))
    st.seen = <unsigned char *> PyMem_Malloc(nd + 1)
    if (st.out_off == NULL or st.out_tgt == NULL or st.in_off == NULL or
            st.in_tgt == NULL or st.cadj == NULL or st.f == NULL or
            st.nextval == NULL or st.order == NULL or st.dfs == NULL or
            st.touched == NULL or st.seen == NULL):
        _state_free(st)
        raise MemoryError()
    pos = 0
    for i in range(nd):
        st.out_off[i] = pos
        for j in out_adj[i]:
            st.out_tgt[pos] = j
            pos += 1
    st.out_off[nd] = pos
    pos = 0
    for i in range(nd):
        st.in_off[i] = pos
        for j in in_adj[i]:
            st.in_tgt[pos] = j
            pos += 1
    st.in_off[nd] = pos
    for i in range(nc * nc):
        st.cadj[i] = cadj[i]
    for i in range(nd):
        st.f[i] = -1
        st.nextval[i] = 0
        st.order[i] = order[i]
        st.seen[i] = 0
    return 0


cdef void _state_free(SearchState *st) noexcept:
    PyMem_Free(st.out_off)
    PyMem_Free(st.out_tgt)
    PyMem_Free(st.in_off)
    PyMem_Free(st.in_tgt)
    PyMem_Free(st.cadj)
    PyMem_Free(st.f)
    PyMem_Free(st.nextval)
    PyMem_Free(st.order)
    PyMem_Free(st.dfs)
    PyMem_Free(st.touched)
    PyMem_Free(st.seen)


cdef bint _consistent(SearchState *st, int u, int c) noexcept nogil:
    cdef int i, j, w, fw, x, y
    cdef int nc = st.nc
    cdef int top = 0, nt = 0
    for i in range(st.out_off[u], st.out_off[u + 1]):
        w = st.out_tgt[i]
        fw = st.f[w]
        if fw >= 0 and fw != c and st.cadj[c * nc + fw] == 0:
            return 0
    for i in range(st.in_off[u], st.in_off[u + 1]):
        w = st.in_tgt[i]
        fw = st.f[w]
        if fw >= 0 and fw != c and st.cadj[fw * nc + c] == 0:
            return 0
    # adding u to the fiber of c must not close a cycle inside the fiber
    for i in range(st.out_off[u], st.out_off[u + 1]):
        w = st.out_tgt[i]
        if st.f[w] == c:
            st.dfs[top] = w
            top += 1
    while top > 0:
        top -= 1
        x = st.dfs[top]
        if st.seen[x]:
            continue
        st.seen[x] = 1
        st.touched[nt] = x
        nt += 1
        for j in range(st.out_off[x], st.out_off[x + 1]):
            y = st.out_tgt[j]
            if y == u:
                for i in range(nt):
                    st.seen[st.touched[i]] = 0
                return 0
            if st.f[y] == c and st.seen[y] == 0:
                st.dfs[top] = y
                top += 1
    for i in range(nt):
        st.seen[st.touched[i]] = 0
    return 1


def iter_homomorphisms(int nd, out_adj, in_adj, int nc, cadj, order):
    """Yield every valid map as a tuple of length nd."""
    if nd == 0:
        yield ()
        return
    if nc == 0:
        return
    cdef SearchState st
    cdef int depth, c, u, i
    _state_init(&st, nd, out_adj, in_adj, nc, cadj, order)
    try:
        depth = 0
        while depth >= 0:
            u = st.order[depth]
            c = st.nextval[depth]
            while c < nc and not _consistent(&st, u, c):
                c += 1
            if c == nc:
                st.nextval[depth] = 0
                depth -= 1
                if depth >= 0:
                    st.f[st.order[depth]] = -1
                continue
            st.f[u] = c
            st.nextval[depth] = c + 1
            if depth == nd - 1:
                yield tuple([st.f[i] for i in range(nd)])
                st.f[u] = -1
            else:
                depth += 1
    finally:
        _state_free(&st)


def count_homomorphisms(int nd, out_adj, in_adj, int nc, cadj, order):
    """Number of valid maps; same search as iter_homomorphisms."""
    if nd == 0:
        return 1
    if nc == 0:
        return 0
    cdef SearchState st
    cdef int depth, c, u
    cdef unsigned long long total = 0
    _state_init(&st, nd, out_adj, in_adj, nc, cadj, order)
    try:
        with nogil:
            depth = 0
            while depth >= 0:
                u = st.order[depth]
                c = st.nextval[depth]
                while c < nc and not _consistent(&st, u, c):
                    c += 1
                if c == nc:
                    st.nextval[depth] = 0
                    depth -= 1
                    if depth >= 0:
                        st.f[st.order[depth]] = -1
                    continue
                st.f[u] = c
                st.nextval[depth] = c + 1
                if depth == nd - 1:
                    total += 1
                    st.f[u] = -1
                else:
                    depth += 1
    finally:
        _state_free(&st)
    return total
