# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ``adfactor.kernels.pure``.

Masks are held in C uint64, so callers must keep sides within 64 vertices
(the dispatcher in the package __init__ enforces this).
"""
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free


cdef inline int _popcount(uint64_t x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int _ctz(uint64_t x) nogil:
    cdef int c = 0
    while not (x & 1):
        x >>= 1
        c += 1
    return c


# ---------------------------------------------------------------------------
# Maximum matching (augmenting paths)
# ---------------------------------------------------------------------------

cdef bint _augment(int i, uint64_t* seen, uint64_t* adj, int* match_left,
                   int* match_right) nogil:
    cdef uint64_t cand, low
    cdef int j
    while True:
        cand = adj[i] & ~seen[0]
        if cand == 0:
            return False
        low = cand & (~cand + 1)
        j = _ctz(low)
        seen[0] |= low
        if match_right[j] == -1 or _augment(match_right[j], seen, adj,
                                            match_left, match_right):
            match_right[j] = i
            match_left[i] = j
            return True


def bip_max_matching(int n_left, int n_right, adj):
    cdef uint64_t* a = <uint64_t*> malloc(n_left * sizeof(uint64_t))
    cdef int* ml = <int*> malloc(n_left * sizeof(int))
    cdef int* mr = <int*> malloc(n_right * sizeof(int))
    if a == NULL or ml == NULL or mr == NULL:
        free(a); free(ml); free(mr)
        raise MemoryError()
    cdef int i, size = 0
    cdef uint64_t seen
    try:
        for i in range(n_left):
            a[i] = <uint64_t> adj[i]
            ml[i] = -1
        for i in range(n_right):
            mr[i] = -1
        for i in range(n_left):
            seen = 0
            if _augment(i, &seen, a, ml, mr):
                size += 1
        return size, [ml[i] for i in range(n_left)]
    finally:
        free(a); free(ml); free(mr)


# ---------------------------------------------------------------------------
# Degree-2 factor via Dinic max-flow
# ---------------------------------------------------------------------------

cdef struct FlowNet:
    int n_nodes
    int n_edges
    int* to
    int* cap
    int* nxt
    int* head
    int* level
    int* it
    int* queue


cdef int _flow_dfs(FlowNet* net, int u, int sink, int pushed) nogil:
    cdef int e, v, got
    if u == sink:
        return pushed
    while net.it[u] != -1:
        e = net.it[u]
        v = net.to[e]
        if net.cap[e] > 0 and net.level[v] == net.level[u] + 1:
            got = _flow_dfs(net, v, sink, pushed if pushed < net.cap[e] else net.cap[e])
            if got > 0:
                net.cap[e] -= got
                net.cap[e ^ 1] += got
                return got
        net.it[u] = net.nxt[e]
    return 0


def bip_two_factor(int m, adj):
    if m < 2:
        return None
    cdef int i, j, e, u, v, q_head, q_tail, flow, pushed, sink
    cdef uint64_t a, low, colmask
    # degree prescreen
    for i in range(m):
        if _popcount(<uint64_t> adj[i]) < 2:
            return None
    for j in range(m):
        colmask = 0
        for i in range(m):
            colmask |= ((<uint64_t> adj[i]) >> j & 1) << i
        if _popcount(colmask) < 2:
            return None

    cdef int n_nodes = 2 * m + 2
    sink = 2 * m + 1
    cdef int max_edges = 2 * (2 * m + m * m)
    cdef FlowNet net
    net.n_nodes = n_nodes
    net.to = <int*> malloc(max_edges * sizeof(int))
    net.cap = <int*> malloc(max_edges * sizeof(int))
    net.nxt = <int*> malloc(max_edges * sizeof(int))
    net.head = <int*> malloc(n_nodes * sizeof(int))
    net.level = <int*> malloc(n_nodes * sizeof(int))
    net.it = <int*> malloc(n_nodes * sizeof(int))
    net.queue = <int*> malloc(n_nodes * sizeof(int))
    if (net.to == NULL or net.cap == NULL or net.nxt == NULL or net.head == NULL
            or net.level == NULL or net.it == NULL or net.queue == NULL):
        free(net.to); free(net.cap); free(net.nxt); free(net.head)
        free(net.level); free(net.it); free(net.queue)
        raise MemoryError()
    net.n_edges = 0
    for i in range(n_nodes):
        net.head[i] = -1

    cdef int ne
    try:
        for i in range(m):
            # source -> X_i, capacity 2
            ne = net.n_edges
            net.to[ne] = 1 + i; net.cap[ne] = 2; net.nxt[ne] = net.head[0]; net.head[0] = ne
            net.to[ne + 1] = 0; net.cap[ne + 1] = 0; net.nxt[ne + 1] = net.head[1 + i]; net.head[1 + i] = ne + 1
            net.n_edges += 2
            a = <uint64_t> adj[i]
            while a:
                low = a & (~a + 1)
                j = _ctz(low)
                a ^= low
                ne = net.n_edges
                net.to[ne] = m + 1 + j; net.cap[ne] = 1; net.nxt[ne] = net.head[1 + i]; net.head[1 + i] = ne
                net.to[ne + 1] = 1 + i; net.cap[ne + 1] = 0; net.nxt[ne + 1] = net.head[m + 1 + j]; net.head[m + 1 + j] = ne + 1
                net.n_edges += 2
        for j in range(m):
            ne = net.n_edges
            net.to[ne] = sink; net.cap[ne] = 2; net.nxt[ne] = net.head[m + 1 + j]; net.head[m + 1 + j] = ne
            net.to[ne + 1] = m + 1 + j; net.cap[ne + 1] = 0; net.nxt[ne + 1] = net.head[sink]; net.head[sink] = ne + 1
            net.n_edges += 2

        flow = 0
        while True:
            for i in range(n_nodes):
                net.level[i] = -1
            net.level[0] = 0
            net.queue[0] = 0
            q_head = 0
            q_tail = 1
            while q_head < q_tail:
                u = net.queue[q_head]
                q_head += 1
                e = net.head[u]
                while e != -1:
                    v = net.to[e]
                    if net.cap[e] > 0 and net.level[v] == -1:
                        net.level[v] = net.level[u] + 1
                        net.queue[q_tail] = v
                        q_tail += 1
                    e = net.nxt[e]
            if net.level[sink] == -1:
                break
            for i in range(n_nodes):
                net.it[i] = net.head[i]
            while True:
                pushed = _flow_dfs(&net, 0, sink, 1 << 30)
                if pushed == 0:
                    break
                flow += pushed
        if flow != 2 * m:
            return None

        chosen = [[] for _ in range(2 * m)]
        for i in range(m):
            e = net.head[1 + i]
            while e != -1:
                v = net.to[e]
                if m + 1 <= v <= 2 * m and net.cap[e] == 0:
                    j = v - (m + 1)
                    chosen[i].append(m + j)
                    chosen[m + j].append(i)
                e = net.nxt[e]
    finally:
        free(net.to); free(net.cap); free(net.nxt); free(net.head)
        free(net.level); free(net.it); free(net.queue)

    # walk the 2-regular subgraph into cycles
    cycles = []
    seen_py = [False] * (2 * m)
    cdef int start, prev, cur, step
    for start in range(2 * m):
        if seen_py[start]:
            continue
        cycle = [start]
        seen_py[start] = True
        prev = -1
        cur = start
        while True:
            step = chosen[cur][1] if chosen[cur][0] == prev else chosen[cur][0]
            if step == start:
                break
            cycle.append(step)
            seen_py[step] = True
            prev = cur
            cur = step
        cycles.append(cycle)
    return cycles


# ---------------------------------------------------------------------------
# Hamilton cycle backtracking
# ---------------------------------------------------------------------------

cdef struct HamState:
    int nv
    uint64_t full
    uint64_t* nbr
    int* path
    int depth
    int64_t budget


cdef int _ham_search(HamState* st, int cur, uint64_t visited) nogil:
    # 1 found, 0 subtree exhausted, -1 budget ran out
    cdef uint64_t free_mask, allowed, scan, low, avail, cand, head_bit
    cdef int u, v, forced_tail, res
    if st.budget <= 0:
        return -1
    st.budget -= 1
    if visited == st.full:
        return 1 if (st.nbr[cur] & 1) else 0
    free_mask = st.full & ~visited
    head_bit = (<uint64_t> 1) << cur
    allowed = free_mask | head_bit | 1
    forced_tail = 0
    scan = free_mask
    while scan:
        low = scan & (~scan + 1)
        scan ^= low
        u = _ctz(low)
        avail = st.nbr[u] & allowed & ~low
        if _popcount(avail) < 2:
            return 0
        if (avail & free_mask & ~low) == 0:
            forced_tail += 1
            if forced_tail > 1 or free_mask != low:
                return 0
    cand = st.nbr[cur] & free_mask
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        v = _ctz(low)
        st.path[st.depth] = v
        st.depth += 1
        res = _ham_search(st, v, visited | low)
        if res != 0:
            return res
        st.depth -= 1
    return 0


def bip_hamilton(int m, adj, node_budget):
    if m < 2:
        return 0, None
    cdef int nv = 2 * m
    cdef int i, j
    cdef uint64_t a, low
    cdef HamState st
    st.nv = nv
    st.full = ((<uint64_t> 1) << nv) - 1
    st.nbr = <uint64_t*> malloc(nv * sizeof(uint64_t))
    st.path = <int*> malloc(nv * sizeof(int))
    if st.nbr == NULL or st.path == NULL:
        free(st.nbr); free(st.path)
        raise MemoryError()
    cdef int res
    try:
        for i in range(nv):
            st.nbr[i] = 0
        for i in range(m):
            a = <uint64_t> adj[i]
            st.nbr[i] = a << m
            while a:
                low = a & (~a + 1)
                j = _ctz(low)
                a ^= low
                st.nbr[m + j] |= (<uint64_t> 1) << i
        for i in range(nv):
            if _popcount(st.nbr[i]) < 2:
                return 0, None
        st.path[0] = 0
        st.depth = 1
        st.budget = <int64_t> node_budget
        res = _ham_search(&st, 0, 1)
        if res == 1:
            return 1, [st.path[i] for i in range(st.depth)]
        return (0, None) if res == 0 else (-1, None)
    finally:
        free(st.nbr); free(st.path)
