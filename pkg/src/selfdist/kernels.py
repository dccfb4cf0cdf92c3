"""Scan kernels for axiom and cocycle checks over finite operation tables.

Every scan walks argument tuples in lexicographic order (first argument most
significant) and returns the flat index of the first failing tuple, or -1 when
the property holds everywhere.  Two interchangeable backends exist: numba
jitted loops and vectorized numpy.  Set SELFDIST_PURE_NUMPY=1 to force the
numpy path; both produce identical results, including the failure index.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

_FORCE_NUMPY = bool(os.environ.get("SELFDIST_PURE_NUMPY"))

try:
    if _FORCE_NUMPY:
        raise ImportError("numpy backend forced by SELFDIST_PURE_NUMPY")
    from numba import njit
    USING_NUMBA = True
except ImportError:
    USING_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn
        return wrap


# slab size (elements) for the chunked numpy fallbacks
_SLAB = 1 << 21


@njit(cache=True, nogil=True)
def _exchange_range_njit(tm, tn, N, m, n, x_lo, x_hi):
    Pm = N ** (m - 1)
    Pn = N ** (n - 1)
    ydig = np.empty(m - 1, np.int64)
    for x in range(x_lo, x_hi):
        for yi in range(Pm):
            rem = yi
            for j in range(m - 2, -1, -1):
                ydig[j] = rem % N
                rem //= N
            a = tm[x * Pm + yi]
            for zi in range(Pn):
                lhs = tn[a * Pn + zi]
                idx = tn[x * Pn + zi]
                for j in range(m - 1):
                    idx = idx * N + tn[ydig[j] * Pn + zi]
                if lhs != tm[idx]:
                    return (x * Pm + yi) * Pn + zi
    return -1


def _exchange_range_numpy(tm, tn, N, m, n, x_lo, x_hi):
    Pm = N ** (m - 1)
    Pn = N ** (n - 1)
    inner_m = tm.reshape(N, Pm)
    inner_n = tn.reshape(N, Pn)
    ycap = max(1, _SLAB // Pn)
    for x in range(x_lo, x_hi):
        row_m = inner_m[x]
        xz = inner_n[x]
        for ylo in range(0, Pm, ycap):
            yhi = min(ylo + ycap, Pm)
            yis = np.arange(ylo, yhi)
            lhs = inner_n[row_m[ylo:yhi]]
            idx = np.empty((yhi - ylo, Pn), np.int64)
            idx[:] = xz[None, :]
            for j in range(m - 1):
                p = N ** (m - 2 - j)
                idx *= N
                idx += inner_n[(yis // p) % N]
            bad = np.flatnonzero(lhs != tm[idx])
            if bad.size:
                return (x * Pm + ylo) * Pn + int(bad[0])
    return -1


def exchange_scan(tm, tn, N, m, n, jobs=1):
    """First (x, y.., z..) tuple index violating the exchange law of tm over tn.

    The law: tn(tm(x, y), z) == tm(tn(x, z), tn(y_1, z), ..., tn(y_{m-1}, z)).
    """
    tm = np.ascontiguousarray(tm, dtype=np.int64)
    tn = np.ascontiguousarray(tn, dtype=np.int64)
    rng = _exchange_range_njit if USING_NUMBA else _exchange_range_numpy
    if jobs is None:
        jobs = 1
    if jobs > 1 and N >= 2:
        bounds = np.linspace(0, N, min(jobs, N) + 1).astype(int)
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            hits = list(pool.map(
                lambda b: int(rng(tm, tn, N, m, n, int(b[0]), int(b[1]))),
                zip(bounds[:-1], bounds[1:])))
        hits = [h for h in hits if h >= 0]
        return min(hits) if hits else -1
    return int(rng(tm, tn, N, m, n, 0, N))


def exchange_sample(tm, tn, N, m, n, tuples):
    """Exchange law checked only at the given (S, m+n-1) tuple rows.

    Returns the first failing row index, or -1.  Pure numpy; sample sets are
    small enough that no jitted path is needed.
    """
    tm = np.ascontiguousarray(tm, dtype=np.int64)
    tn = np.ascontiguousarray(tn, dtype=np.int64)
    tuples = np.asarray(tuples, dtype=np.int64)
    Pm = N ** (m - 1)
    Pn = N ** (n - 1)
    x = tuples[:, 0]
    yi = np.zeros(len(tuples), np.int64)
    for j in range(m - 1):
        yi = yi * N + tuples[:, 1 + j]
    zi = np.zeros(len(tuples), np.int64)
    for j in range(n - 1):
        zi = zi * N + tuples[:, m + j]
    lhs = tn[tm[x * Pm + yi] * Pn + zi]
    idx = tn[x * Pn + zi]
    for j in range(m - 1):
        idx = idx * N + tn[tuples[:, 1 + j] * Pn + zi]
    bad = np.flatnonzero(lhs != tm[idx])
    return int(bad[0]) if bad.size else -1


@njit(cache=True, nogil=True)
def _translation_scan_njit(table, N, P):
    seen = np.empty(N, np.int64)
    for t in range(P):
        for v in range(N):
            seen[v] = 0
        for x in range(N):
            v = table[x * P + t]
            if seen[v] == 1:
                return t
            seen[v] = 1
    return -1


def _translation_scan_numpy(table, N, P):
    cols = np.sort(table.reshape(N, P), axis=0)
    ok = (cols == np.arange(N)[:, None]).all(axis=0)
    bad = np.flatnonzero(~ok)
    return int(bad[0]) if bad.size else -1


def translation_scan(table, N, k):
    """First tail-tuple index whose translation x -> W(x, tail) is not a bijection."""
    table = np.ascontiguousarray(table, dtype=np.int64)
    P = N ** (k - 1)
    if USING_NUMBA:
        return int(_translation_scan_njit(table, N, P))
    return _translation_scan_numpy(table, N, P)


@njit(cache=True, nogil=True)
def _compat_scan_njit(A, B, N, which):
    N2 = N * N
    for x in range(N):
        for y0 in range(N):
            for y1 in range(N):
                ay = A[(x * N + y0) * N + y1]
                by = B[(x * N + y0) * N + y1]
                for z0 in range(N):
                    for z1 in range(N):
                        az_y0 = A[(y0 * N + z0) * N + z1]
                        bz_y1 = B[(y1 * N + z0) * N + z1]
                        if which == 1:
                            l = A[(ay * N + z0) * N + z1]
                            r = A[(A[(x * N + z0) * N + z1] * N + az_y0) * N + bz_y1]
                        else:
                            l = B[(by * N + z0) * N + z1]
                            r = B[(B[(x * N + z0) * N + z1] * N + az_y0) * N + bz_y1]
                        if l != r:
                            return ((x * N + y0) * N + y1) * N2 + z0 * N + z1
    return -1


def _compat_scan_numpy(A, B, N, which):
    A3 = A.reshape(N, N, N)
    B3 = B.reshape(N, N, N)
    x = np.arange(N)[:, None, None, None, None]
    y0 = np.arange(N)[None, :, None, None, None]
    y1 = np.arange(N)[None, None, :, None, None]
    z0 = np.arange(N)[None, None, None, :, None]
    z1 = np.arange(N)[None, None, None, None, :]
    T = A3 if which == 1 else B3
    l = T[T[x, y0, y1], z0, z1]
    r = T[T[x, z0, z1], A3[y0, z0, z1], B3[y1, z0, z1]]
    bad = np.flatnonzero(l != r)
    return int(bad[0]) if bad.size else -1


def compat_scan(A, B, N, which):
    """First (x, y0, y1, z0, z1) violating ternary compatibility identity 1 or 2."""
    A = np.ascontiguousarray(A, dtype=np.int64)
    B = np.ascontiguousarray(B, dtype=np.int64)
    if USING_NUMBA:
        return int(_compat_scan_njit(A, B, N, which))
    return _compat_scan_numpy(A, B, N, which)


@njit(cache=True, nogil=True)
def _nary_cocycle_scan_njit(W, phi, N, k, d):
    P = N ** (k - 1)
    ydig = np.empty(k - 1, np.int64)
    for x in range(N):
        for yi in range(P):
            rem = yi
            for j in range(k - 2, -1, -1):
                ydig[j] = rem % N
                rem //= N
            a = W[x * P + yi]
            pxy = phi[x * P + yi]
            for zi in range(P):
                lhs = pxy + phi[a * P + zi]
                idx = W[x * P + zi]
                for j in range(k - 1):
                    idx = idx * N + W[ydig[j] * P + zi]
                rhs = phi[x * P + zi] + phi[idx]
                if (lhs - rhs) % d != 0:
                    return (x * P + yi) * P + zi
    return -1


def _nary_cocycle_scan_numpy(W, phi, N, k, d):
    P = N ** (k - 1)
    innerW = W.reshape(N, P)
    innerF = phi.reshape(N, P)
    ycap = max(1, _SLAB // P)
    for x in range(N):
        rowW = innerW[x]
        rowF = innerF[x]
        xz = innerW[x]
        for ylo in range(0, P, ycap):
            yhi = min(ylo + ycap, P)
            yis = np.arange(ylo, yhi)
            lhs = rowF[ylo:yhi, None] + innerF[rowW[ylo:yhi]]
            idx = np.empty((yhi - ylo, P), np.int64)
            idx[:] = xz[None, :]
            for j in range(k - 1):
                p = N ** (k - 2 - j)
                idx *= N
                idx += innerW[(yis // p) % N]
            rhs = rowF[None, :] + phi[idx]
            bad = np.flatnonzero((lhs - rhs) % d != 0)
            if bad.size:
                return (x * P + ylo) * P + int(bad[0])
    return -1


def nary_cocycle_scan(W, phi, N, k, d):
    """First (x, y.., z..) violating the degree-2 cocycle condition of phi over W.

    The condition: phi(x,y) + phi(W(x,y), z) == phi(x,z) + phi(W(x,z), W(y_j,z)..)
    modulo d, scanned over all N^(2k-1) tuples.
    """
    W = np.ascontiguousarray(W, dtype=np.int64)
    phi = np.ascontiguousarray(phi, dtype=np.int64)
    if USING_NUMBA:
        return int(_nary_cocycle_scan_njit(W, phi, N, k, d))
    return _nary_cocycle_scan_numpy(W, phi, N, k, d)


@njit(cache=True, nogil=True)
def _mutual_cocycle_scan_njit(t0, t1, p0, p1, N, d, which):
    for x in range(N):
        for y in range(N):
            for z in range(N):
                if which == 1:
                    l = p0[x * N + y] + p1[t0[x * N + y] * N + z]
                    r = p1[x * N + z] + p0[t1[x * N + z] * N + t1[y * N + z]]
                else:
                    l = p1[x * N + y] + p0[t1[x * N + y] * N + z]
                    r = p0[x * N + z] + p1[t0[x * N + z] * N + t0[y * N + z]]
                if (l - r) % d != 0:
                    return (x * N + y) * N + z
    return -1


def _mutual_cocycle_scan_numpy(t0, t1, p0, p1, N, d, which):
    s0 = t0.reshape(N, N)
    s1 = t1.reshape(N, N)
    f0 = p0.reshape(N, N)
    f1 = p1.reshape(N, N)
    x = np.arange(N)[:, None, None]
    y = np.arange(N)[None, :, None]
    z = np.arange(N)[None, None, :]
    if which == 1:
        l = f0[x, y] + f1[s0[x, y], z]
        r = f1[x, z] + f0[s1[x, z], s1[y, z]]
    else:
        l = f1[x, y] + f0[s1[x, y], z]
        r = f0[x, z] + f1[s0[x, z], s0[y, z]]
    bad = np.flatnonzero((l - r) % d != 0)
    return int(bad[0]) if bad.size else -1


def mutual_cocycle_scan(t0, t1, p0, p1, N, d, which):
    """First (x, y, z) violating one of the paired binary cocycle conditions."""
    t0 = np.ascontiguousarray(t0, dtype=np.int64)
    t1 = np.ascontiguousarray(t1, dtype=np.int64)
    p0 = np.ascontiguousarray(p0, dtype=np.int64)
    p1 = np.ascontiguousarray(p1, dtype=np.int64)
    if USING_NUMBA:
        return int(_mutual_cocycle_scan_njit(t0, t1, p0, p1, N, d, which))
    return _mutual_cocycle_scan_numpy(t0, t1, p0, p1, N, d, which)


@njit(cache=True, nogil=True)
def _compat_cocycle_scan_njit(A, B, s0, s1, N, d, which, literal):
    for x0 in range(N):
        for x1 in range(N):
            for y0 in range(N):
                for y1 in range(N):
                    for z0 in range(N):
                        for z1 in range(N):
                            a_y = A[(y0 * N + z0) * N + z1]
                            b_y = B[(y1 * N + z0) * N + z1]
                            if which == 1:
                                l = s0[(x0 * N + y0) * N + y1] \
                                    + s1[(B[(x1 * N + y0) * N + y1] * N + z0) * N + z1]
                                r = s1[(x1 * N + z0) * N + z1] \
                                    + s0[(A[(x0 * N + z0) * N + z1] * N + a_y) * N + b_y]
                            else:
                                l = s1[(x1 * N + y0) * N + y1] \
                                    + s0[(A[(x0 * N + y0) * N + y1] * N + z0) * N + z1]
                                lead = x0 if literal == 1 else x1
                                r = s0[(x0 * N + z0) * N + z1] \
                                    + s1[(B[(lead * N + z0) * N + z1] * N + a_y) * N + b_y]
                            if (l - r) % d != 0:
                                return ((((x0 * N + x1) * N + y0) * N + y1) * N + z0) * N + z1
    return -1


def _compat_cocycle_scan_numpy(A, B, s0, s1, N, d, which, literal):
    A3 = A.reshape(N, N, N)
    B3 = B.reshape(N, N, N)
    S0 = s0.reshape(N, N, N)
    S1 = s1.reshape(N, N, N)
    x0 = np.arange(N)[:, None, None, None, None, None]
    x1 = np.arange(N)[None, :, None, None, None, None]
    y0 = np.arange(N)[None, None, :, None, None, None]
    y1 = np.arange(N)[None, None, None, :, None, None]
    z0 = np.arange(N)[None, None, None, None, :, None]
    z1 = np.arange(N)[None, None, None, None, None, :]
    ay = A3[y0, z0, z1]
    by = B3[y1, z0, z1]
    if which == 1:
        l = S0[x0, y0, y1] + S1[B3[x1, y0, y1], z0, z1]
        r = S1[x1, z0, z1] + S0[A3[x0, z0, z1], ay, by]
    else:
        l = S1[x1, y0, y1] + S0[A3[x0, y0, y1], z0, z1]
        lead = x0 if literal else x1
        r = S0[x0, z0, z1] + S1[B3[lead, z0, z1], ay, by]
    bad = np.flatnonzero((l - r) % d != 0)
    return int(bad[0]) if bad.size else -1


def compat_cocycle_scan(A, B, s0, s1, N, d, which, literal=False):
    """First (x0, x1, y0, y1, z0, z1) violating a paired ternary cocycle condition.

    `literal=True` switches the second condition to the variant that feeds the
    first coordinate into both final terms; the default pairs coordinates the
    way the doubled-cocycle composite requires.
    """
    A = np.ascontiguousarray(A, dtype=np.int64)
    B = np.ascontiguousarray(B, dtype=np.int64)
    s0 = np.ascontiguousarray(s0, dtype=np.int64)
    s1 = np.ascontiguousarray(s1, dtype=np.int64)
    if USING_NUMBA:
        return int(_compat_cocycle_scan_njit(A, B, s0, s1, N, d, which,
                                             1 if literal else 0))
    return _compat_cocycle_scan_numpy(A, B, s0, s1, N, d, which, literal)


def warmup():
    """Trigger jit compilation of every kernel on tiny inputs."""
    if not USING_NUMBA:
        return
    t2 = np.zeros(4, np.int64)
    t3 = np.zeros(8, np.int64)
    _exchange_range_njit(t2, t2, 2, 2, 2, 0, 2)
    _exchange_range_njit(t3, t3, 2, 3, 3, 0, 2)
    _exchange_range_njit(t2, t3, 2, 2, 3, 0, 2)
    _exchange_range_njit(t3, t2, 2, 3, 2, 0, 2)
    _translation_scan_njit(t2, 2, 2)
    _compat_scan_njit(t3, t3, 2, 1)
    _compat_scan_njit(t3, t3, 2, 2)
    _nary_cocycle_scan_njit(t2, t2, 2, 2, 2)
    _nary_cocycle_scan_njit(t3, t3, 2, 3, 2)
    _mutual_cocycle_scan_njit(t2, t2, t2, t2, 2, 2, 1)
    _mutual_cocycle_scan_njit(t2, t2, t2, t2, 2, 2, 2)
    _compat_cocycle_scan_njit(t3, t3, t3, t3, 2, 2, 1, 0)
    _compat_cocycle_scan_njit(t3, t3, t3, t3, 2, 2, 2, 0)
    _compat_cocycle_scan_njit(t3, t3, t3, t3, 2, 2, 2, 1)
