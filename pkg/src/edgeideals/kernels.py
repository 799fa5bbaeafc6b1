"""Hot numeric kernels: GF(2) (and general mod-p) homology signatures of
independence complexes, used for bulk graph surveys and fast invariant
queries.

Kernels are compiled with numba's @njit by default; setting the
environment variable ``EDGEIDEALS_DISABLE_NUMBA=1`` selects the pure
NumPy/Python fallback path (same code, interpreted) for debugging and
benchmarking.

Two evaluation strategies:

* table mode (n <= 7): homology signatures of *every* labeled graph on
  k <= n vertices are tabulated once per (k, characteristic); a graph's
  regularity/projective dimension then reduces to table lookups over its
  2^n induced subgraphs.  Tables are memoized on disk.
* direct mode (n <= 13): per-graph subset loop computing each boundary
  rank on the fly, with GF(2) rows packed into uint64 words.

The "signature" of a complex is a bitmask: bit q set iff the reduced
homology H~_{q-1} is nonzero.  Via Hochster's formula a subgraph on k
vertices with bit q set contributes regularity >= q and projective
dimension >= k - q.
"""

from __future__ import annotations

import os
from functools import lru_cache
from pathlib import Path

import numpy as np

from .graphs import Graph, from_edges

USE_NUMBA = os.environ.get("EDGEIDEALS_DISABLE_NUMBA", "").lower() not in (
    "1",
    "true",
    "yes",
)

if USE_NUMBA:
    from numba import njit
else:

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def deco(fn):
            return fn

        return deco


TABLE_MAX_N = 7
DIRECT_MAX_N = 13

_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)

# pair index e = j(j-1)/2 + i  <->  (i, j), i < j  (graph6 bit order)
_MAXNB = DIRECT_MAX_N * (DIRECT_MAX_N - 1) // 2
_PAIR_I = np.zeros(_MAXNB, dtype=np.int64)
_PAIR_J = np.zeros(_MAXNB, dtype=np.int64)
for _j in range(1, DIRECT_MAX_N):
    for _i in range(_j):
        _e = _j * (_j - 1) // 2 + _i
        _PAIR_I[_e] = _i
        _PAIR_J[_e] = _j


@njit(cache=True)
def _pc(x):
    r = 0
    r += np.int64(_POP16[x & 0xFFFF])
    r += np.int64(_POP16[(x >> 16) & 0xFFFF])
    r += np.int64(_POP16[(x >> 32) & 0xFFFF])
    r += np.int64(_POP16[(x >> 48) & 0xFFFF])
    return r


@njit(cache=True)
def _modinv(a, p):
    e = p - 2
    b = a % p
    res = 1
    while e:
        if e & 1:
            res = res * b % p
        b = b * b % p
        e >>= 1
    return res


@njit(cache=True)
def _decode_adj(code, n, adj):
    for v in range(n):
        adj[v] = 0
    nb = n * (n - 1) // 2
    for e in range(nb):
        if (code >> e) & 1:
            i = _PAIR_I[e]
            j = _PAIR_J[e]
            adj[i] |= 1 << j
            adj[j] |= 1 << i


@njit(cache=True)
def _is_connected_mask(adj, n):
    if n == 0:
        return True
    full = (1 << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        t = frontier
        while t:
            low = t & -t
            grow |= adj[_pc(low - 1)]
            t ^= low
        frontier = grow & ~seen
        seen |= frontier
    return seen == full


@njit(cache=True)
def _collect_faces(adj, w, tmp, faces, idx, cnt, start, fill):
    """Independent submasks of w grouped by cardinality.

    Returns (kmax, total); faces[start[c]:start[c]+cnt[c]] holds the
    cardinality-c faces and idx[s] the position of face s in its group.
    """
    m = 0
    s = w
    while True:
        ok = True
        t = s
        while t:
            low = t & -t
            v = _pc(low - 1)
            if adj[v] & s:
                ok = False
                break
            t ^= low
        if ok:
            tmp[m] = s
            m += 1
        if s == 0:
            break
        s = (s - 1) & w
    kmax = 0
    kw = _pc(w)
    for c in range(kw + 2):
        cnt[c] = 0
    for i in range(m):
        c = _pc(tmp[i])
        cnt[c] += 1
        if c > kmax:
            kmax = c
    start[0] = 0
    for c in range(kmax + 1):
        start[c + 1] = start[c] + cnt[c]
        fill[c] = start[c]
    for i in range(m):
        s2 = tmp[i]
        c = _pc(s2)
        pos = fill[c]
        faces[pos] = s2
        idx[s2] = pos - start[c]
        fill[c] = pos + 1
    return kmax, m


@njit(cache=True)
def _sig_subset_gf2(adj, w, tmp, faces, idx, cnt, start, fill, mat, rk):
    """Homology-signature bitmask of the independence complex restricted
    to the vertex set w, over GF(2).  Also returns the top face size."""
    kmax, _ = _collect_faces(adj, w, tmp, faces, idx, cnt, start, fill)
    rk[0] = 0
    for c in range(1, kmax + 1):
        rows = cnt[c]
        cols = cnt[c - 1]
        words = (cols + 63) >> 6
        for i in range(rows):
            for ww in range(words):
                mat[i, ww] = np.uint64(0)
        for i in range(rows):
            f = faces[start[c] + i]
            t = f
            while t:
                low = t & -t
                col = idx[f ^ low]
                mat[i, col >> 6] |= np.uint64(1) << np.uint64(col & 63)
                t ^= low
        r = 0
        for col in range(cols):
            wrd = col >> 6
            b = np.uint64(col & 63)
            piv = -1
            for i in range(r, rows):
                if (mat[i, wrd] >> b) & np.uint64(1):
                    piv = i
                    break
            if piv == -1:
                continue
            if piv != r:
                for ww in range(words):
                    swap = mat[r, ww]
                    mat[r, ww] = mat[piv, ww]
                    mat[piv, ww] = swap
            for i in range(rows):
                if i != r and ((mat[i, wrd] >> b) & np.uint64(1)):
                    for ww in range(words):
                        mat[i, ww] ^= mat[r, ww]
            r += 1
            if r == rows:
                break
        rk[c] = r
    rk[kmax + 1] = 0
    sig = 0
    for c in range(kmax + 1):
        if cnt[c] - rk[c] - rk[c + 1] > 0:
            sig |= 1 << c
    return sig, kmax


@njit(cache=True)
def _sig_subset_modp(adj, w, p, tmp, faces, idx, cnt, start, fill, mat, rk):
    """Same signature over GF(p) for an odd prime p (signed boundary
    entries, dense modular elimination)."""
    kmax, _ = _collect_faces(adj, w, tmp, faces, idx, cnt, start, fill)
    rk[0] = 0
    for c in range(1, kmax + 1):
        rows = cnt[c]
        cols = cnt[c - 1]
        for i in range(rows):
            for j in range(cols):
                mat[i, j] = 0
        for i in range(rows):
            f = faces[start[c] + i]
            t = f
            sign = 1
            while t:
                low = t & -t
                col = idx[f ^ low]
                mat[i, col] = sign % p
                sign = -sign
                t ^= low
        r = 0
        for col in range(cols):
            piv = -1
            for i in range(r, rows):
                if mat[i, col] != 0:
                    piv = i
                    break
            if piv == -1:
                continue
            if piv != r:
                for j in range(col, cols):
                    swap = mat[r, j]
                    mat[r, j] = mat[piv, j]
                    mat[piv, j] = swap
            inv = _modinv(mat[r, col], p)
            for i in range(rows):
                if i != r and mat[i, col] != 0:
                    factor = mat[i, col] * inv % p
                    for j in range(col, cols):
                        mat[i, j] = (mat[i, j] - factor * mat[r, j]) % p
            r += 1
            if r == rows:
                break
        rk[c] = r
    rk[kmax + 1] = 0
    sig = 0
    for c in range(kmax + 1):
        if cnt[c] - rk[c] - rk[c + 1] > 0:
            sig |= 1 << c
    return sig, kmax


@njit(cache=True)
def _build_table_gf2(k, sig_out, alpha_out):
    nb = k * (k - 1) // 2
    adj = np.zeros(k + 1, dtype=np.int64)
    size = 1 << k
    tmp = np.empty(size, dtype=np.int64)
    faces = np.empty(size, dtype=np.int64)
    idx = np.empty(size, dtype=np.int64)
    cnt = np.zeros(k + 3, dtype=np.int64)
    start = np.zeros(k + 3, dtype=np.int64)
    fill = np.zeros(k + 3, dtype=np.int64)
    maxg = 1
    for c in range(k + 1):
        b = 1
        for t in range(c):
            b = b * (k - t) // (t + 1)
        if b > maxg:
            maxg = b
    mat = np.zeros((maxg, (maxg + 63) >> 6), dtype=np.uint64)
    rk = np.zeros(k + 3, dtype=np.int64)
    full = (1 << k) - 1
    for code in range(1 << nb):
        _decode_adj(code, k, adj)
        sig, kmax = _sig_subset_gf2(
            adj, full, tmp, faces, idx, cnt, start, fill, mat, rk
        )
        sig_out[code] = sig
        alpha_out[code] = kmax


@njit(cache=True)
def _build_table_modp(k, p, sig_out, alpha_out):
    nb = k * (k - 1) // 2
    adj = np.zeros(k + 1, dtype=np.int64)
    size = 1 << k
    tmp = np.empty(size, dtype=np.int64)
    faces = np.empty(size, dtype=np.int64)
    idx = np.empty(size, dtype=np.int64)
    cnt = np.zeros(k + 3, dtype=np.int64)
    start = np.zeros(k + 3, dtype=np.int64)
    fill = np.zeros(k + 3, dtype=np.int64)
    maxg = 1
    for c in range(k + 1):
        b = 1
        for t in range(c):
            b = b * (k - t) // (t + 1)
        if b > maxg:
            maxg = b
    mat = np.zeros((maxg, maxg), dtype=np.int64)
    rk = np.zeros(k + 3, dtype=np.int64)
    full = (1 << k) - 1
    for code in range(1 << nb):
        _decode_adj(code, k, adj)
        sig, kmax = _sig_subset_modp(
            adj, full, p, tmp, faces, idx, cnt, start, fill, mat, rk
        )
        sig_out[code] = sig
        alpha_out[code] = kmax


@njit(cache=True)
def _profile_direct(adj, n, p):
    """(alpha, pd, reg) of a single graph by the per-subset rank loop.

    p == 2 uses the packed GF(2) path, odd primes the dense one.
    """
    size = 1 << n
    tmp = np.empty(size, dtype=np.int64)
    faces = np.empty(size, dtype=np.int64)
    idx = np.empty(size, dtype=np.int64)
    cnt = np.zeros(n + 3, dtype=np.int64)
    start = np.zeros(n + 3, dtype=np.int64)
    fill = np.zeros(n + 3, dtype=np.int64)
    maxg = 1
    for c in range(n + 1):
        b = 1
        for t in range(c):
            b = b * (n - t) // (t + 1)
        if b > maxg:
            maxg = b
    matg = np.zeros((maxg, (maxg + 63) >> 6), dtype=np.uint64)
    matp = np.zeros((maxg if p != 2 else 1, maxg if p != 2 else 1), dtype=np.int64)
    rk = np.zeros(n + 3, dtype=np.int64)
    reg = 0
    pd = 0
    alpha = 0
    for w in range(size):
        if p == 2:
            sig, kmax = _sig_subset_gf2(
                adj, w, tmp, faces, idx, cnt, start, fill, matg, rk
            )
        else:
            sig, kmax = _sig_subset_modp(
                adj, w, p, tmp, faces, idx, cnt, start, fill, matp, rk
            )
        if w == size - 1:
            alpha = kmax
        if sig:
            k = _pc(w)
            hi = 0
            lo = 0
            t = sig
            q = 0
            first = True
            while t:
                if t & 1:
                    hi = q
                    if first:
                        lo = q
                        first = False
                q += 1
                t >>= 1
            if hi > reg:
                reg = hi
            if k - lo > pd:
                pd = k - lo
    return alpha, pd, reg


@njit(cache=True)
def _profile_from_tables(code, n, sig_flat, off, pairpos, pairoff):
    """(pd, reg) of the graph with the given edge code via table lookups."""
    reg = 0
    pd = 0
    for w in range(1 << n):
        k = _pc(w)
        base = pairoff[w]
        sub = 0
        for lb in range(k * (k - 1) // 2):
            sub |= ((code >> pairpos[base + lb]) & 1) << lb
        sig = sig_flat[off[k] + sub]
        if sig:
            hi = 0
            lo = 0
            t = sig
            q = 0
            first = True
            while t:
                if t & 1:
                    hi = q
                    if first:
                        lo = q
                        first = False
                q += 1
                t >>= 1
            if hi > reg:
                reg = hi
            if k - lo > pd:
                pd = k - lo
    return pd, reg


@njit(cache=True)
def _scan_codes(
    n, sig_flat, off, alpha_tbl, pairpos, pairoff, connected_only, counts, witmin
):
    """Scan every labeled graph on n vertices, accumulating per-(d, p, r)
    counts and the minimal (graph6-lexicographic) witness code.

    Returns the number of graphs scanned (after the connectivity filter).
    """
    nb = n * (n - 1) // 2
    adj = np.zeros(n + 1, dtype=np.int64)
    stride = n + 1
    scanned = 0
    for code in range(1 << nb):
        _decode_adj(code, n, adj)
        if connected_only and not _is_connected_mask(adj, n):
            continue
        scanned += 1
        pd, reg = _profile_from_tables(code, n, sig_flat, off, pairpos, pairoff)
        alpha = alpha_tbl[code]
        depth = n - pd
        cell = (alpha * stride + depth) * stride + reg
        counts[cell] += 1
        rev = 0
        for e in range(nb):
            rev |= ((code >> e) & 1) << (nb - 1 - e)
        if rev < witmin[cell]:
            witmin[cell] = rev
    return scanned


# ---------------------------------------------------------------------------
# python-side table management and wrappers


def _cache_dir() -> Path | None:
    root = os.environ.get("EDGEIDEALS_CACHE_DIR")
    if root is None:
        root = os.path.join(os.path.expanduser("~"), ".cache", "edgeideals")
    if root == "":
        return None
    path = Path(root)
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError:
        return None
    return path


_k_tables: dict = {}


def _get_k_table(k: int, p: int):
    """(sig, alpha) uint8 arrays over all 2^(k choose 2) edge codes."""
    key = (k, p)
    if key in _k_tables:
        return _k_tables[key]
    cache = _cache_dir()
    fname = cache / f"sig_k{k}_p{p}.npz" if cache else None
    if fname is not None and fname.exists():
        data = np.load(fname)
        pair = (data["sig"], data["alpha"])
        _k_tables[key] = pair
        return pair
    nb = k * (k - 1) // 2
    sig = np.zeros(1 << nb, dtype=np.uint8)
    alpha = np.zeros(1 << nb, dtype=np.uint8)
    if p == 2:
        _build_table_gf2(k, sig, alpha)
    else:
        _build_table_modp(k, p, sig, alpha)
    pair = (sig, alpha)
    _k_tables[key] = pair
    if fname is not None:
        np.savez_compressed(fname, sig=sig, alpha=alpha)
    return pair


@lru_cache(maxsize=None)
def get_tables(n: int, p: int = 2):
    """Concatenated signature tables for k = 0..n plus their offsets."""
    if n > TABLE_MAX_N:
        raise ValueError(f"tables supported up to n = {TABLE_MAX_N}")
    sigs = []
    off = np.zeros(n + 2, dtype=np.int64)
    for k in range(n + 1):
        sig_k, _ = _get_k_table(k, p)
        off[k + 1] = off[k] + sig_k.shape[0]
        sigs.append(sig_k)
    sig_flat = np.concatenate(sigs)
    _, alpha_n = _get_k_table(n, p)
    return sig_flat, off, alpha_n


@lru_cache(maxsize=None)
def _subset_pair_positions(n: int):
    """For every vertex subset w, the global pair-bit positions of its
    local pairs in column-major order (flattened, with per-subset offsets)."""
    pairoff = np.zeros((1 << n) + 1, dtype=np.int64)
    chunks = []
    for w in range(1 << n):
        verts = [v for v in range(n) if w >> v & 1]
        local = [
            verts[j] * (verts[j] - 1) // 2 + verts[i]
            for j in range(1, len(verts))
            for i in range(j)
        ]
        pairoff[w + 1] = pairoff[w] + len(local)
        chunks.append(local)
    flat = np.array(
        [e for chunk in chunks for e in chunk] or [0], dtype=np.int64
    )
    return flat, pairoff[:-1].copy()


def edge_code(g: Graph) -> int:
    """Edge bitmask in graph6 pair order."""
    code = 0
    for v, w in g.edges():
        code |= 1 << (w * (w - 1) // 2 + v)
    return code


def graph_from_code(n: int, code: int) -> Graph:
    edges = []
    for e in range(n * (n - 1) // 2):
        if code >> e & 1:
            edges.append((int(_PAIR_I[e]), int(_PAIR_J[e])))
    return from_edges(n, edges)


def reverse_code(n: int, rev: int) -> int:
    """Undo the MSB-first bit reversal used for witness minimality."""
    nb = n * (n - 1) // 2
    code = 0
    for e in range(nb):
        code |= ((rev >> (nb - 1 - e)) & 1) << e
    return code


@lru_cache(maxsize=1 << 18)
def _profile_cached(n: int, adj: tuple, p: int):
    if n <= TABLE_MAX_N:
        sig_flat, off, alpha_tbl = get_tables(n, p)
        pairpos, pairoff = _subset_pair_positions(n)
        g = Graph(n, adj)
        code = edge_code(g)
        pd, reg = _profile_from_tables(code, n, sig_flat, off, pairpos, pairoff)
        alpha = int(alpha_tbl[code])
    elif n <= DIRECT_MAX_N:
        arr = np.array(adj, dtype=np.int64)
        alpha, pd, reg = _profile_direct(arr, n, p)
        alpha, pd, reg = int(alpha), int(pd), int(reg)
    else:
        raise ValueError(f"fast profile supported up to n = {DIRECT_MAX_N}")
    return alpha, n - pd, reg, pd


def graph_profile(g: Graph, p: int = 2) -> tuple[int, int, int, int]:
    """(dim, depth, reg, pd) of R/I(G) over GF(p), via the fast kernels."""
    return _profile_cached(g.n, g.adj, p)


def survey_scan(n: int, p: int = 2, connected_only: bool = True):
    """Exhaustive labeled scan: per-(d, p, r) counts, minimal witness
    codes, and the scanned-graph total."""
    if n > TABLE_MAX_N:
        raise ValueError(f"exhaustive scan supported up to n = {TABLE_MAX_N}")
    sig_flat, off, alpha_tbl = get_tables(n, p)
    pairpos, pairoff = _subset_pair_positions(n)
    stride = n + 1
    counts = np.zeros(stride**3, dtype=np.int64)
    witmin = np.full(stride**3, np.iinfo(np.int64).max, dtype=np.int64)
    scanned = _scan_codes(
        n, sig_flat, off, alpha_tbl, pairpos, pairoff, connected_only,
        counts, witmin,
    )
    return (
        counts.reshape(stride, stride, stride),
        witmin.reshape(stride, stride, stride),
        int(scanned),
    )


def clear_profile_cache() -> None:
    _profile_cached.cache_clear()
