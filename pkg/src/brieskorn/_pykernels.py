"""Pure-Python implementations of the inner loops.

Used when the compiled extension is unavailable, when values exceed the
64-bit range the extension works in, or when ``BRIESKORN_PURE_PYTHON`` is set.
Arithmetic is on Python ints; results come back as numpy arrays.
"""
from __future__ import annotations

import numpy as np


def delta_sequence(a, b, e0, p, start, count):
    """Delta_p(n) = 1 - n p e0 - sum ceil(n p b_j / a_j) for n in [start, start+count)."""
    out = []
    steps = [p * bj for bj in b]
    for n in range(start, start + max(count, 0)):
        v = 1 - n * p * e0
        for aj, s in zip(a, steps):
            v -= -((-n * s) // aj)
        out.append(v)
    return np.array(out, dtype=object if _too_wide(out) else np.int64)


def _too_wide(vals):
    return any(abs(v) >= 1 << 62 for v in vals)


def membership(gens, N):
    """Boolean table of the semigroup generated by ``gens`` on [0, N]."""
    m = max(N + 1, 0)
    out = [False] * m
    if m:
        out[0] = True
    gens = sorted(gens)
    for n in range(1, m):
        for g in gens:
            if g > n:
                break
            if out[n - g]:
                out[n] = True
                break
    return np.array(out, dtype=np.bool_)


def extrema(tau):
    """Positions and values of alternating local minima/maxima (min first and last)."""
    tau = [int(x) for x in tau]
    runs = []
    i = 0
    while i < len(tau):
        start = i
        while i + 1 < len(tau) and tau[i + 1] == tau[start]:
            i += 1
        runs.append((start, tau[start]))
        i += 1
    pos, val = [], []
    inf = float("inf")
    for k, (start, v) in enumerate(runs):
        left = runs[k - 1][1] if k > 0 else inf
        right = runs[k + 1][1] if k + 1 < len(runs) else inf
        if (v < left and v < right) or (v > left and v > right):
            pos.append(start)
            val.append(v)
    return np.array(pos, dtype=np.int64), np.array(val, dtype=np.int64)


def towers(values, rightmost=False):
    """Leaf-ordering decomposition of the graded root given by extremum ``values``.

    Returns (first_leaf_value, leaf_values, merge_values); the finite towers
    are (2*leaf, merge - leaf) in processing order.
    """
    values = [int(x) for x in values]
    L = (len(values) + 1) // 2
    leaves = values[0::2]
    order = sorted(range(L), key=lambda k: (leaves[k], -k if rightmost else k))
    prv = list(range(-1, L - 1))
    nxt = list(range(1, L + 1))
    gap = [values[2 * k + 1] for k in range(L - 1)] + [None]
    leaf = [0] * (L - 1)
    merge = [0] * (L - 1)
    # delete leaves in reverse processing order: the list neighbours of a
    # leaf at deletion time are its nearest previously processed leaves
    for t in range(L - 1, 0, -1):
        k = order[t]
        pl, nx = prv[k], nxt[k]
        cands = []
        if pl >= 0:
            cands.append(gap[pl])
        if nx < L:
            cands.append(gap[k])
        leaf[t - 1] = leaves[k]
        merge[t - 1] = min(cands)
        if pl >= 0:
            if nx < L:
                gap[pl] = max(gap[pl], gap[k])
            nxt[pl] = nx
        if nx < L:
            prv[nx] = pl
    return (leaves[order[0]], np.array(leaf, dtype=np.int64),
            np.array(merge, dtype=np.int64))


def lattice_count(a, b, c):
    """#{0<x<a, 0<y<b, 0<z<c : x/a + y/b + z/c < 1}."""
    ab = a * b
    total = 0
    for x in range(1, a):
        for y in range(1, b):
            T = c * (ab - x * b - y * a)
            if T <= 0:
                break
            total += min((T - 1) // ab, c - 1)
    return total


def scan_triple(a, b, c):
    """All per-triple sweep quantities from one profile.

    Returns ``(N, kappa, first_mismatch, delta_in_range, tau_symmetric,
    tau_max, tau_min, rank, top_merge, top_towers_length_one, all_trivial)``
    where ``first_mismatch`` is the first n at which the ceiling formula and
    the semigroup rule disagree (-1 if none) and ``top_merge`` is the largest
    merge grading (None when there are no finite towers).
    """
    N = a * b * c - a * b - b * c - a * c
    if N < 0:
        return (N, 0, -1, True, True, 0, 0, 0, None, True, True)
    A = a * b * c
    bs = [(-pow(A // x, -1, x)) % x for x in (a, b, c)]
    e0 = (-1 - sum(bj * (A // x) for bj, x in zip(bs, (a, b, c)))) // A
    delta = [int(x) for x in delta_sequence((a, b, c), bs, e0, 1, 0, N + 1)]
    mem = membership((b * c, a * c, a * b), N)
    mismatch = -1
    for n in range(N + 1):
        if mem[n]:
            rule = 1
        elif mem[N - n]:
            rule = -1
        else:
            rule = 0
        if delta[n] != rule:
            mismatch = n
            break
    kappa = int(mem.sum())
    in_range = all(-1 <= d <= 1 for d in delta)
    tau = [0]
    for d in delta:
        tau.append(tau[-1] + d)
    symmetric = all(tau[N + 1 - n] == tau[n] for n in range(N + 2))
    tmax, tmin = max(tau), min(tau)
    pre = 0
    while pre + 1 <= N and tau[pre + 1] == tmax:
        pre += 1
    suf = N + 1
    while suf - 1 >= 1 and tau[suf - 1] == tmax:
        suf -= 1
    all_trivial = not any(tau[n] == tmax for n in range(pre + 1, suf))
    _, val = extrema(tau)
    _, leaf, merge = towers(val)
    rank = int((merge - leaf).sum())
    if len(merge):
        top = int(merge.max())
        top_len1 = bool(np.all((merge - leaf)[merge == top] == 1))
    else:
        top, top_len1 = None, True
    return (N, kappa, mismatch, in_range, symmetric, tmax, tmin, rank, top,
            top_len1, all_trivial)


def profile_rank(a, b, e0, p, count, window=0):
    """Reduced rank of the root of tau over Delta_p(0 .. count-1).

    Also returns the minimum of Delta_p on the ``window`` terms after the
    profile (None for an empty window).
    """
    d = [int(x) for x in delta_sequence(a, b, e0, p, 0, count + window)]
    tau = [0]
    for x in d[:count]:
        tau.append(tau[-1] + x)
    _, val = extrema(tau)
    _, leaf, merge = towers(val)
    wmin = min(d[count:]) if window > 0 else None
    return int((merge - leaf).sum()), wmin
