"""Hot inner loops.

Every kernel exists in two flavours:

* ``*_nb``: numba-compiled backtracking (used when :data:`_accel.USE_NUMBA`).
* ``*_np``: the fallback.  Where a vectorized formulation exists (proper
  colorings, exhaustive arrow search) it is plain numpy; the two labeling
  searches have no useful vectorized form, so their fallback is the same
  search run by the interpreter.

The public wrappers at the bottom dispatch on :data:`BACKEND`.  Results are
identical across backends; only the ``nodes`` counters of the arrow search
differ (the numpy path scans every coloring, the numba path prunes).
"""

from __future__ import annotations

import contextlib

import numpy as np

from . import _accel
from .errors import BudgetExceeded

BACKEND = "numba" if _accel.USE_NUMBA else "numpy"

_CHUNK = 1 << 18


@contextlib.contextmanager
def use_backend(name: str):
    """Temporarily force ``"numba"`` or ``"numpy"`` kernels."""
    global BACKEND
    if name not in ("numba", "numpy"):
        raise ValueError(name)
    if name == "numba" and not _accel.HAVE_NUMBA:
        raise RuntimeError("numba is not available")
    old, BACKEND = BACKEND, name
    try:
        yield
    finally:
        BACKEND = old


# --------------------------------------------------------------------------
# proper colorings


@_accel.njit
def _count_colorings_nb(adj, v, n):
    if v == 0:
        return 1
    col = np.zeros(v, np.int64)
    count = 0
    i = 0
    while i >= 0:
        col[i] += 1
        if col[i] > n:
            col[i] = 0
            i -= 1
            continue
        ok = True
        for u in range(i):
            if (adj[i] >> u) & 1 and col[u] == col[i]:
                ok = False
                break
        if not ok:
            continue
        if i == v - 1:
            count += 1
        else:
            i += 1
    return count


@_accel.njit
def _fill_colorings_nb(adj, v, n, out):
    if v == 0:
        return 1
    col = np.zeros(v, np.int64)
    count = 0
    i = 0
    while i >= 0:
        col[i] += 1
        if col[i] > n:
            col[i] = 0
            i -= 1
            continue
        ok = True
        for u in range(i):
            if (adj[i] >> u) & 1 and col[u] == col[i]:
                ok = False
                break
        if not ok:
            continue
        if i == v - 1:
            out[count, :] = col
            count += 1
        else:
            i += 1
    return count


def _edge_pairs(adj, v):
    return [(a, b) for b in range(v) for a in range(b) if (int(adj[b]) >> a) & 1]


def _coloring_chunks(adj, v, n):
    """Yield proper colorings in lexicographic order, one array per chunk."""
    if v == 0:
        yield np.zeros((1, 0), np.int64)
        return
    edges = _edge_pairs(adj, v)
    total = n**v
    powers = n ** np.arange(v - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % n + 1
        keep = np.ones(len(idx), bool)
        for a, b in edges:
            keep &= digits[:, a] != digits[:, b]
        yield digits[keep]


def _count_colorings_np(adj, v, n):
    return int(sum(len(c) for c in _coloring_chunks(adj, v, n)))


def _proper_colorings_np(adj, v, n):
    return np.concatenate(list(_coloring_chunks(adj, v, n)), axis=0)


# --------------------------------------------------------------------------
# canonical labeling: lexicographically least column-major adjacency string


def _canonical_search_py(adj, v):
    best_perm = np.arange(v)
    if v <= 1:
        return best_perm, 0
    full = v * (v - 1) // 2
    perm = np.zeros(v, np.int64)
    cand = np.zeros((v, v), np.int64)
    ncand = np.zeros(v, np.int64)
    pos = np.zeros(v, np.int64)
    prefix = np.zeros(v + 1, np.int64)
    for i in range(v):
        cand[0, i] = i
    ncand[0] = v
    best = -1
    used = 0
    j = 0
    while j >= 0:
        if pos[j] >= ncand[j]:
            j -= 1
            if j >= 0:
                used &= ~(1 << perm[j])
            continue
        c = cand[j, pos[j]]
        pos[j] += 1
        # twins can be swapped by an automorphism fixing the prefix
        skip = False
        for q in range(pos[j] - 1):
            e = cand[j, q]
            if (adj[e] & ~(1 << c)) == (adj[c] & ~(1 << e)):
                skip = True
                break
        if skip:
            continue
        perm[j] = c
        if j == v - 1:
            cert = prefix[v]
            if best < 0 or cert < best:
                best = cert
                best_perm[:] = perm
            continue
        used |= 1 << c
        # column j+1 of any completion is the adjacency of the next vertex to
        # the placed prefix; only vertices minimizing it can lead to the minimum
        mc = -1
        for u in range(v):
            if (used >> u) & 1:
                continue
            col = 0
            for i in range(j + 1):
                col = (col << 1) | ((adj[perm[i]] >> u) & 1)
            if mc < 0 or col < mc:
                mc = col
        p = (prefix[j + 1] << (j + 1)) | mc
        if best >= 0:
            nbits = (j + 1) * (j + 2) // 2
            if p > (best >> (full - nbits)):
                used &= ~(1 << c)
                continue
        k = 0
        for u in range(v):
            if (used >> u) & 1:
                continue
            col = 0
            for i in range(j + 1):
                col = (col << 1) | ((adj[perm[i]] >> u) & 1)
            if col == mc:
                cand[j + 1, k] = u
                k += 1
        ncand[j + 1] = k
        pos[j + 1] = 0
        prefix[j + 2] = p
        j += 1
    return best_perm, best


_canonical_search_nb = _accel.njit(_canonical_search_py) if _accel.HAVE_NUMBA else _canonical_search_py


# --------------------------------------------------------------------------
# automorphisms extending a partial map


def _automorphism_search_py(adj, v, vcol, img0, stop_after, max_out):
    out = np.zeros((max_out, v), np.int64)
    if v == 0:
        return 1, out
    reserved = 0
    for i in range(v):
        w = img0[i]
        if w >= 0:
            if (reserved >> w) & 1 or vcol[w] != vcol[i]:
                return 0, out
            reserved |= 1 << w
    m = np.full(v, -1, np.int64)
    nxt = np.zeros(v, np.int64)
    used = 0
    count = 0
    i = 0
    while i >= 0:
        found = -1
        if img0[i] >= 0:
            if nxt[i] == 0:
                nxt[i] = 1
                w = img0[i]
                ok = True
                for u in range(i):
                    if ((adj[i] >> u) & 1) != ((adj[w] >> m[u]) & 1):
                        ok = False
                        break
                if ok:
                    found = w
        else:
            w = nxt[i]
            while w < v:
                if not ((used | reserved) >> w) & 1 and vcol[w] == vcol[i]:
                    ok = True
                    for u in range(i):
                        if ((adj[i] >> u) & 1) != ((adj[w] >> m[u]) & 1):
                            ok = False
                            break
                    if ok:
                        break
                w += 1
            nxt[i] = w + 1
            if w < v:
                found = w
        if found < 0:
            m[i] = -1
            i -= 1
            if i >= 0 and img0[i] < 0:
                used &= ~(1 << m[i])
            continue
        m[i] = found
        if i == v - 1:
            if count < max_out:
                out[count, :] = m
            count += 1
            if count >= stop_after:
                return count, out
            continue
        if img0[i] < 0:
            used |= 1 << found
        i += 1
        nxt[i] = 0
    return count, out


_automorphism_search_nb = (
    _accel.njit(_automorphism_search_py) if _accel.HAVE_NUMBA else _automorphism_search_py
)


# --------------------------------------------------------------------------
# arrow search: hunt for a coloring of pattern copies in which every copy of
# the target sees more than t colors on the copies of some pattern


@_accel.njit
def _arrow_search_nb(pid, npat, ymem, ylen, ls, li, k, t, budget):
    c = pid.shape[0]
    color = np.zeros(c, np.int64)
    maxc = np.zeros(npat, np.int64)
    prevmax = np.zeros(c, np.int64)
    sets = np.zeros(npat, np.int64)
    nodes = 0
    i = 0
    while i >= 0:
        p = pid[i]
        if color[i] == 0:
            prevmax[i] = maxc[p]
        else:
            maxc[p] = prevmax[i]
        color[i] += 1
        # colors are interchangeable per pattern: only restricted-growth strings
        lim = prevmax[i] + 1
        if lim > k:
            lim = k
        if color[i] > lim:
            color[i] = 0
            i -= 1
            continue
        if color[i] > maxc[p]:
            maxc[p] = color[i]
        nodes += 1
        if nodes > budget:
            return -1, nodes, color
        good = False
        for q in range(ls[i], ls[i + 1]):
            y = li[q]
            sets[:] = 0
            for r in range(ylen[y]):
                cc = ymem[y, r]
                sets[pid[cc]] |= 1 << color[cc]
            ok = True
            for p2 in range(npat):
                x = sets[p2]
                cnt = 0
                while x:
                    x &= x - 1
                    cnt += 1
                if cnt > t:
                    ok = False
                    break
            if ok:
                good = True
                break
        if good:
            continue
        if i == c - 1:
            return 0, nodes, color
        i += 1
    return 1, nodes, color


def _arrow_search_np(pid, npat, ymem, ylen, ls, li, k, t, budget):
    c = len(pid)
    first = {}
    for i, p in enumerate(pid):
        first.setdefault(int(p), i)
    fixed = set(first.values())
    free = [i for i in range(c) if i not in fixed]
    total = k ** len(free)
    if total > budget:
        raise BudgetExceeded(budget, total)
    # per target copy and pattern, the member copy columns
    groups = []
    for y in range(len(ylen)):
        mem = ymem[y, : ylen[y]]
        groups.append([mem[pid[mem] == p] for p in range(npat)])
    powers = k ** np.arange(len(free) - 1, -1, -1, dtype=np.int64)
    nodes = 0
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        cols = np.ones((len(idx), c), np.int64)
        if free:
            cols[:, free] = (idx[:, None] // powers[None, :]) % k + 1
        bits = np.left_shift(np.int64(1), cols)
        good = np.zeros(len(idx), bool)
        for grp in groups:
            ok = np.ones(len(idx), bool)
            for mem in grp:
                if len(mem):
                    seen = np.bitwise_or.reduce(bits[:, mem], axis=1)
                    ok &= np.bitwise_count(seen) <= t
            good |= ok
        bad = np.flatnonzero(~good)
        if len(bad):
            nodes += int(bad[0]) + 1
            return 0, nodes, cols[bad[0]]
        nodes += len(idx)
    return 1, nodes, np.ones(c, np.int64)


# --------------------------------------------------------------------------
# dispatch


def _nb() -> bool:
    return BACKEND == "numba"


def count_proper_colorings(adj: np.ndarray, v: int, n: int) -> int:
    if _nb():
        return int(_count_colorings_nb(adj, v, n))
    return _count_colorings_np(adj, v, n)


def proper_colorings(adj: np.ndarray, v: int, n: int) -> np.ndarray:
    """All proper colorings ``[v] -> 1..n`` as rows, lexicographically sorted."""
    if _nb():
        cnt = _count_colorings_nb(adj, v, n)
        out = np.zeros((cnt, v), np.int64)
        _fill_colorings_nb(adj, v, n, out)
        return out
    return _proper_colorings_np(adj, v, n)


def canonical_search(adj: np.ndarray, v: int) -> tuple[np.ndarray, int]:
    """Return ``(perm, cert)``; ``perm[pos]`` is the vertex placed at ``pos``."""
    fn = _canonical_search_nb if _nb() else _canonical_search_py
    perm, cert = fn(adj, v)
    return np.asarray(perm), int(cert)


def automorphism_search(adj, v, vcol, img0, stop_after, max_out):
    fn = _automorphism_search_nb if _nb() else _automorphism_search_py
    count, out = fn(adj, v, vcol, img0, stop_after, max_out)
    return int(count), out


def arrow_search(pid, npat, ymem, ylen, ls, li, k, t, budget):
    """Return ``(status, nodes, coloring)``; status 1 holds, 0 bad coloring found."""
    if _nb():
        status, nodes, color = _arrow_search_nb(pid, npat, ymem, ylen, ls, li, k, t, budget)
        if status < 0:
            raise BudgetExceeded(budget, int(nodes))
    else:
        status, nodes, color = _arrow_search_np(pid, npat, ymem, ylen, ls, li, k, t, budget)
    return int(status), int(nodes), np.asarray(color).copy()
