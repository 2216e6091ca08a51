# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops.  Signatures mirror :mod:`brieskorn._pykernels`."""
import numpy as np

from libc.stdint cimport int64_t, uint8_t
from libc.stdlib cimport calloc, free, malloc, qsort
from libc.string cimport memcpy

cdef int64_t INF64 = 0x3FFFFFFFFFFFFFFF


cdef struct Key:
    int64_t value
    int64_t idx


cdef int _cmp_key(const void *x, const void *y) noexcept nogil:
    cdef const Key *a = <const Key *> x
    cdef const Key *b = <const Key *> y
    if a.value != b.value:
        return -1 if a.value < b.value else 1
    if a.idx != b.idx:
        return -1 if a.idx < b.idx else 1
    return 0


cdef int _bucket_sort(Key *keys, Py_ssize_t L, int64_t lo, int64_t hi,
                      bint reverse) noexcept nogil:
    # sort by value; within a value keep input order, or reverse it
    cdef Py_ssize_t width = hi - lo + 1, k, j
    cdef Py_ssize_t *start = <Py_ssize_t *> calloc(width + 1, sizeof(Py_ssize_t))
    cdef Key *tmp = <Key *> malloc(L * sizeof(Key))
    if start == NULL or tmp == NULL:
        free(start)
        free(tmp)
        return -1
    for k in range(L):
        start[keys[k].value - lo + 1] += 1
    for j in range(width):
        start[j + 1] += start[j]
    if reverse:
        k = L - 1
        while k >= 0:
            j = keys[k].value - lo
            tmp[start[j]] = keys[k]
            start[j] += 1
            k -= 1
    else:
        for k in range(L):
            j = keys[k].value - lo
            tmp[start[j]] = keys[k]
            start[j] += 1
    memcpy(keys, tmp, L * sizeof(Key))
    free(start)
    free(tmp)
    return 0


cdef void _fill_delta(Py_ssize_t r, const int64_t *a, int64_t *q, int64_t *rem,
                      const int64_t *qs, const int64_t *rs,
                      int64_t lin, int64_t linstep,
                      int64_t *out, Py_ssize_t count) noexcept nogil:
    # q[j], rem[j] track n*s_j = q*a_j + rem; carries are branch-free
    cdef Py_ssize_t n, j
    cdef int64_t v, carry
    for n in range(count):
        v = 1 + lin
        for j in range(r):
            v -= q[j] + (rem[j] != 0)
            rem[j] += rs[j]
            carry = rem[j] >= a[j]
            rem[j] -= carry * a[j]
            q[j] += qs[j] + carry
        out[n] = v
        lin += linstep


cdef Py_ssize_t _stream_extrema3(const int64_t *a, int64_t *q, int64_t *rem,
                                 const int64_t *qs, const int64_t *rs, int64_t linstep,
                                 Py_ssize_t count, Py_ssize_t window,
                                 int64_t *val, int64_t *wmin) noexcept nogil:
    # _stream_extrema with the three carry states held in locals
    cdef int64_t a1 = a[0], a2 = a[1], a3 = a[2]
    cdef int64_t q1 = q[0], q2 = q[1], q3 = q[2]
    cdef int64_t r1 = rem[0], r2 = rem[1], r3 = rem[2]
    cdef int64_t qs1 = qs[0], qs2 = qs[1], qs3 = qs[2]
    cdef int64_t rs1 = rs[0], rs2 = rs[1], rs3 = rs[2]
    cdef int64_t c1, c2, c3, v, lin = 0, t, left = INF64, cur = 0, lo = wmin[0]
    cdef Py_ssize_t n, k = 0
    for n in range(count + window):
        v = 1 + lin - (q1 + (r1 != 0)) - (q2 + (r2 != 0)) - (q3 + (r3 != 0))
        lin += linstep
        r1 += rs1
        c1 = r1 >= a1
        r1 -= c1 * a1
        q1 += qs1 + c1
        r2 += rs2
        c2 = r2 >= a2
        r2 -= c2 * a2
        q2 += qs2 + c2
        r3 += rs3
        c3 = r3 >= a3
        r3 -= c3 * a3
        q3 += qs3 + c3
        if n >= count:
            if v < lo:
                lo = v
        elif v != 0:
            t = cur + v
            if (cur < left and cur < t) or (cur > left and cur > t):
                val[k] = cur
                k += 1
            left = cur
            cur = t
    if cur < left:
        val[k] = cur
        k += 1
    wmin[0] = lo
    return k


cdef Py_ssize_t _stream_extrema(Py_ssize_t r, const int64_t *a, int64_t *q, int64_t *rem,
                                const int64_t *qs, const int64_t *rs, int64_t linstep,
                                Py_ssize_t count, Py_ssize_t window,
                                int64_t *val, int64_t *wmin) noexcept nogil:
    """Extremum values of tau = prefix sums of count delta terms, in one pass.

    Delta is generated on the fly from the carry state (n starts at 0); the
    following ``window`` terms only update ``wmin``.  Returns the number of
    extrema written to ``val``.
    """
    cdef Py_ssize_t n, j, k = 0
    cdef int64_t lin = 0, v, carry, t = 0
    cdef int64_t left = INF64, cur = 0
    if r == 3:
        return _stream_extrema3(a, q, rem, qs, rs, linstep, count, window, val, wmin)
    for n in range(count + window):
        v = 1 + lin
        for j in range(r):
            v -= q[j] + (rem[j] != 0)
            rem[j] += rs[j]
            carry = rem[j] >= a[j]
            rem[j] -= carry * a[j]
            q[j] += qs[j] + carry
        lin += linstep
        if n >= count:
            if v < wmin[0]:
                wmin[0] = v
            continue
        if v != 0:
            t = cur + v
            # the run at value cur ends here with right neighbour t
            if (cur < left and cur < t) or (cur > left and cur > t):
                val[k] = cur
                k += 1
            left = cur
            cur = t
    if cur < left:
        val[k] = cur
        k += 1
    return k


cdef Py_ssize_t _extrema(const int64_t *tau, Py_ssize_t m,
                         int64_t *pos, int64_t *val) noexcept nogil:
    # plateaus collapse into runs; ends of the domain count as +infinity
    cdef Py_ssize_t i = 0, k = 0, start
    cdef int64_t left = INF64, cur, right
    while i < m:
        start = i
        cur = tau[i]
        while i + 1 < m and tau[i + 1] == cur:
            i += 1
        right = tau[i + 1] if i + 1 < m else INF64
        if (cur < left and cur < right) or (cur > left and cur > right):
            if pos != NULL:
                pos[k] = start
            val[k] = cur
            k += 1
        left = cur
        i += 1
    return k


cdef int _towers(const int64_t *values, Py_ssize_t nv, bint rightmost,
                 int64_t *first, int64_t *leaf, int64_t *merge) noexcept nogil:
    """Fill leaf/merge (length L-1, processing order); -1 on allocation failure."""
    cdef Py_ssize_t L = (nv + 1) // 2
    cdef Py_ssize_t t, k, pl, nx
    cdef int64_t cand
    cdef Key *keys = <Key *> malloc(L * sizeof(Key))
    cdef Py_ssize_t *prv = <Py_ssize_t *> malloc(L * sizeof(Py_ssize_t))
    cdef Py_ssize_t *nxt = <Py_ssize_t *> malloc(L * sizeof(Py_ssize_t))
    cdef int64_t *gap = <int64_t *> malloc(L * sizeof(int64_t))
    if keys == NULL or prv == NULL or nxt == NULL or gap == NULL:
        free(keys)
        free(prv)
        free(nxt)
        free(gap)
        return -1
    cdef int64_t lo = INF64, hi = -INF64
    for k in range(L):
        keys[k].value = values[2 * k]
        keys[k].idx = -k if rightmost else k
        prv[k] = k - 1
        nxt[k] = k + 1
        gap[k] = values[2 * k + 1] if k + 1 < L else INF64
        if values[2 * k] < lo:
            lo = values[2 * k]
        if values[2 * k] > hi:
            hi = values[2 * k]
    # leaf values of tau profiles span a short range: counting sort there
    if hi - lo <= 4 * L + 1024:
        if _bucket_sort(keys, L, lo, hi, rightmost) < 0:
            qsort(keys, L, sizeof(Key), _cmp_key)
    else:
        qsort(keys, L, sizeof(Key), _cmp_key)
    first[0] = keys[0].value
    # delete leaves in reverse processing order: the list neighbours of a
    # leaf at deletion time are its nearest previously processed leaves
    t = L - 1
    while t >= 1:
        k = -keys[t].idx if rightmost else keys[t].idx
        pl = prv[k]
        nx = nxt[k]
        cand = INF64
        if pl >= 0:
            cand = gap[pl]
        if nx < L and gap[k] < cand:
            cand = gap[k]
        leaf[t - 1] = values[2 * k]
        merge[t - 1] = cand
        if pl >= 0:
            if nx < L and gap[k] > gap[pl]:
                gap[pl] = gap[k]
            nxt[pl] = nx
        if nx < L:
            prv[nx] = pl
        t -= 1
    free(keys)
    free(prv)
    free(nxt)
    free(gap)
    return 0


def delta_sequence(a, b, e0, p, start, count):
    """Delta_p(n) = 1 - n p e0 - sum ceil(n p b_j / a_j) for n in [start, start+count)."""
    r = len(a)
    state = np.empty((5, r), dtype=np.int64)
    for j in range(r):
        s = p * b[j]
        state[0, j] = a[j]
        state[1, j], state[2, j] = divmod(start * s, a[j])
        state[3, j], state[4, j] = divmod(s, a[j])
    out = np.empty(max(int(count), 0), dtype=np.int64)
    if len(out) == 0:
        return out
    cdef int64_t[:, ::1] st = state
    cdef int64_t[::1] o = out
    cdef int64_t lin = -start * p * e0, step = -p * e0
    cdef Py_ssize_t rr = r, cnt = len(out)
    with nogil:
        _fill_delta(rr, &st[0, 0], &st[1, 0], &st[2, 0], &st[3, 0], &st[4, 0],
                    lin, step, &o[0], cnt)
    return out


def membership(gens, N):
    """Boolean table of the semigroup generated by ``gens`` on [0, N]."""
    out = np.zeros(max(int(N) + 1, 0), dtype=np.uint8)
    g_arr = np.sort(np.asarray(gens, dtype=np.int64))
    cdef uint8_t[::1] o = out
    cdef int64_t[::1] g = g_arr
    cdef Py_ssize_t n, j, m = len(out), r = len(g_arr)
    cdef uint8_t v
    if m:
        with nogil:
            o[0] = 1
            for n in range(1, m):
                v = 0
                for j in range(r):
                    if g[j] > n:
                        break
                    v = v | o[n - g[j]]
                o[n] = v
    return out.view(np.bool_)


def extrema(tau):
    """Positions and values of alternating local minima/maxima (min first and last)."""
    t = np.ascontiguousarray(tau, dtype=np.int64)
    pos = np.empty(len(t), dtype=np.int64)
    val = np.empty(len(t), dtype=np.int64)
    cdef const int64_t[::1] tv = t
    cdef int64_t[::1] pv = pos
    cdef int64_t[::1] vv = val
    cdef Py_ssize_t k = 0
    if len(t):
        k = _extrema(&tv[0], len(t), &pv[0], &vv[0])
    return pos[:k].copy(), val[:k].copy()


def towers(values, rightmost=False):
    """Leaf-ordering decomposition of the graded root given by extremum ``values``.

    Returns (first_leaf_value, leaf_values, merge_values); the finite towers
    are (2*leaf, merge - leaf) in processing order.
    """
    v = np.ascontiguousarray(values, dtype=np.int64)
    cdef Py_ssize_t L = (len(v) + 1) // 2
    leaf = np.empty(max(L - 1, 0), dtype=np.int64)
    merge = np.empty(max(L - 1, 0), dtype=np.int64)
    cdef const int64_t[::1] vv = v
    cdef int64_t[::1] lv = leaf
    cdef int64_t[::1] mv = merge
    cdef int64_t first = 0
    if L == 1:
        return int(v[0]), leaf, merge
    if _towers(&vv[0], len(v), rightmost, &first, &lv[0], &mv[0]) < 0:
        raise MemoryError()
    return int(first), leaf, merge


def lattice_count(long long a, long long b, long long c):
    """#{0<x<a, 0<y<b, 0<z<c : x/a + y/b + z/c < 1}."""
    cdef long long x, y, T, zmax, total = 0, ab = a * b
    for x in range(1, a):
        for y in range(1, b):
            T = c * (ab - x * b - y * a)
            if T <= 0:
                break
            zmax = (T - 1) // ab
            if zmax > c - 1:
                zmax = c - 1
            total += zmax
    return total


cdef int _module_summary(const int64_t *tau, Py_ssize_t m, int64_t *rank,
                         int64_t *top, bint *top_len1) noexcept nogil:
    """Reduced rank, top merge grading and top-tower test of the root of tau."""
    cdef int64_t *val = <int64_t *> malloc(m * sizeof(int64_t))
    if val == NULL:
        return -1
    cdef Py_ssize_t nv = _extrema(tau, m, NULL, val)
    cdef Py_ssize_t L = (nv + 1) // 2, t
    cdef int64_t first
    cdef int64_t *leaf
    cdef int64_t *merge
    rank[0] = 0
    top[0] = -INF64
    top_len1[0] = True
    if L > 1:
        leaf = <int64_t *> malloc((L - 1) * sizeof(int64_t))
        merge = <int64_t *> malloc((L - 1) * sizeof(int64_t))
        if leaf == NULL or merge == NULL or _towers(val, nv, False, &first, leaf, merge) < 0:
            free(leaf)
            free(merge)
            free(val)
            return -1
        for t in range(L - 1):
            rank[0] += merge[t] - leaf[t]
            if merge[t] > top[0]:
                top[0] = merge[t]
        for t in range(L - 1):
            if merge[t] == top[0] and merge[t] - leaf[t] != 1:
                top_len1[0] = False
        free(leaf)
        free(merge)
    free(val)
    return 0


def profile_rank(a, b, e0, p, count, window=0):
    """Reduced rank of the root of tau over Delta_p(0 .. count-1).

    Also evaluates Delta_p on the ``window`` terms after the profile and
    returns their minimum (None for an empty window): ``(rank, window_min)``.
    """
    r = len(a)
    state = np.empty((5, r), dtype=np.int64)
    for j in range(r):
        st = p * b[j]
        state[0, j] = a[j]
        state[1, j] = 0
        state[2, j] = 0
        state[3, j], state[4, j] = divmod(st, a[j])
    cdef int64_t[:, ::1] sv = state
    cdef Py_ssize_t rr = r, cnt = count, win = window, nv, L, t
    cdef int64_t step = -p * e0, wmin = INF64, rank = 0, first
    cdef int64_t *val = <int64_t *> malloc((cnt + 2) * sizeof(int64_t))
    cdef int64_t *leaf = NULL
    cdef int64_t *merge = NULL
    cdef int rc = 0
    if val == NULL:
        raise MemoryError()
    with nogil:
        nv = _stream_extrema(rr, &sv[0, 0], &sv[1, 0], &sv[2, 0], &sv[3, 0], &sv[4, 0],
                             step, cnt, win, val, &wmin)
        L = (nv + 1) // 2
        if L > 1:
            leaf = <int64_t *> malloc((L - 1) * sizeof(int64_t))
            merge = <int64_t *> malloc((L - 1) * sizeof(int64_t))
            if leaf == NULL or merge == NULL or _towers(val, nv, False, &first, leaf, merge) < 0:
                rc = -1
            else:
                for t in range(L - 1):
                    rank += merge[t] - leaf[t]
        free(leaf)
        free(merge)
        free(val)
    if rc < 0:
        raise MemoryError()
    return int(rank), (int(wmin) if window > 0 else None)


cdef struct ScanOut:
    int64_t kappa
    int64_t mismatch
    int64_t tmax
    int64_t tmin
    bint in_range
    bint symmetric
    bint all_trivial


cdef void _scan3(int64_t a, int64_t b, int64_t c, int64_t N, int64_t e0,
                 int64_t b1, int64_t b2, int64_t b3,
                 uint8_t *mem, int64_t *tau, ScanOut *res) noexcept nogil:
    cdef int64_t g1 = a * b, g2 = a * c, g3 = b * c   # ascending for a < b < c
    cdef int64_t n, m = N + 1
    cdef int64_t q1 = 0, q2 = 0, q3 = 0, r1 = 0, r2 = 0, r3 = 0
    cdef int64_t qs1 = b1 // a, rs1 = b1 % a
    cdef int64_t qs2 = b2 // b, rs2 = b2 % b
    cdef int64_t qs3 = b3 // c, rs3 = b3 % c
    cdef int64_t lin = 0, d, rule, t = 0, c1, c2, c3
    cdef int64_t kappa = 0, mismatch = -1, tmax = 0, tmin = 0
    cdef bint in_range = True, symmetric = True, all_trivial = True
    cdef uint8_t v
    mem[0] = 1
    for n in range(1, m):
        v = 0
        if n >= g1:
            v = mem[n - g1]
            if n >= g2:
                v = v | mem[n - g2]
                if n >= g3:
                    v = v | mem[n - g3]
        mem[n] = v
    tau[0] = 0
    for n in range(m):
        d = 1 + lin - (q1 + (r1 != 0)) - (q2 + (r2 != 0)) - (q3 + (r3 != 0))
        lin -= e0
        r1 += rs1
        c1 = r1 >= a
        r1 -= c1 * a
        q1 += qs1 + c1
        r2 += rs2
        c2 = r2 >= b
        r2 -= c2 * b
        q2 += qs2 + c2
        r3 += rs3
        c3 = r3 >= c
        r3 -= c3 * c
        q3 += qs3 + c3
        # 1 on G, else -1 on N - G, else 0
        rule = <int64_t> mem[n] - <int64_t> ((1 - mem[n]) & mem[N - n])
        kappa += mem[n]
        if d != rule and mismatch < 0:
            mismatch = n
        in_range = in_range & (d >= -1) & (d <= 1)
        t += d
        tau[n + 1] = t
        if t > tmax:
            tmax = t
        if t < tmin:
            tmin = t
    for n in range(m + 1):
        if tau[N + 1 - n] != tau[n]:
            symmetric = False
            break
    # trivial maxima: tau == max on [1, n] or on [n, N]
    cdef int64_t pre = 0, suf = N + 1
    while pre + 1 <= N and tau[pre + 1] == tmax:
        pre += 1
    while suf - 1 >= 1 and tau[suf - 1] == tmax:
        suf -= 1
    for n in range(pre + 1, suf):
        if tau[n] == tmax:
            all_trivial = False
            break
    res.kappa = kappa
    res.mismatch = mismatch
    res.tmax = tmax
    res.tmin = tmin
    res.in_range = in_range
    res.symmetric = symmetric
    res.all_trivial = all_trivial


def scan_triple(long long a, long long b, long long c):
    """Fused sweep over one triple; see :func:`brieskorn._pykernels.scan_triple`."""
    a, b, c = sorted((a, b, c))
    cdef int64_t N = a * b * c - a * b - b * c - a * c
    if N < 0:
        return (int(N), 0, -1, True, True, 0, 0, 0, None, True, True)
    e0, bs = _seifert3(a, b, c)
    mem_arr = np.empty(N + 1, dtype=np.uint8)
    tau_arr = np.empty(N + 2, dtype=np.int64)
    cdef uint8_t[::1] mem = mem_arr
    cdef int64_t[::1] tau = tau_arr
    cdef ScanOut res
    cdef int64_t e = e0, x1 = bs[0], x2 = bs[1], x3 = bs[2]
    cdef int64_t rank, top
    cdef bint top_len1
    cdef int rc
    with nogil:
        _scan3(a, b, c, N, e, x1, x2, x3, &mem[0], &tau[0], &res)
        rc = _module_summary(&tau[0], N + 2, &rank, &top, &top_len1)
    if rc < 0:
        raise MemoryError()
    return (int(N), int(res.kappa), int(res.mismatch), bool(res.in_range),
            bool(res.symmetric), int(res.tmax), int(res.tmin), int(rank),
            int(top) if rank > 0 else None, bool(top_len1), bool(res.all_trivial))


cdef tuple _seifert3(long long a, long long b, long long c):
    A = a * b * c
    bs = []
    for aj in (a, b, c):
        bs.append((-pow(A // aj, -1, aj)) % aj)
    e0 = (-1 - sum(bj * (A // aj) for bj, aj in zip(bs, (a, b, c)))) // A
    return e0, tuple(bs)
