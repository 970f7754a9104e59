"""Brute-force reference implementations used as test oracles.

Everything here is written directly from the definitions (enumerate
rotations, run full DP tables, count window sums).  The larger
enumerations are expressed with numpy so the test suites finish in
reasonable time, but the logic stays a transcription of the definitions;
nothing is shared with the fast code paths.
"""

from __future__ import annotations

import math

import numpy as np

INF = math.inf


def _arr(s: bytes) -> np.ndarray:
    return np.frombuffer(bytes(s), dtype=np.uint8)


def hamming(u: bytes, v: bytes) -> float:
    """Number of mismatching positions; inf when lengths differ."""
    if len(u) != len(v):
        return INF
    if len(u) == 0:
        return 0
    return int((_arr(u) != _arr(v)).sum())


def edit_dp(u: bytes, v: bytes) -> int:
    """Levenshtein distance by the full DP table."""
    n, m = len(u), len(v)
    prev = list(range(m + 1))
    for i in range(1, n + 1):
        cur = [i] + [0] * m
        ui = u[i - 1]
        for j in range(1, m + 1):
            cur[j] = min(
                prev[j - 1] + (ui != v[j - 1]),
                prev[j] + 1,
                cur[j - 1] + 1,
            )
        prev = cur
    return prev[m]


def deletion_dp(u: bytes, v: bytes) -> int:
    """Insertion/deletion-only distance (no substitution move)."""
    n, m = len(u), len(v)
    prev = list(range(m + 1))
    for i in range(1, n + 1):
        cur = [i] + [0] * m
        ui = u[i - 1]
        for j in range(1, m + 1):
            best = min(prev[j] + 1, cur[j - 1] + 1)
            if ui == v[j - 1] and prev[j - 1] < best:
                best = prev[j - 1]
            cur[j] = best
        prev = cur
    return prev[m]


def _rotations_matrix(p: np.ndarray) -> np.ndarray:
    m = p.size
    idx = (np.arange(m)[:, None] + np.arange(m)[None, :]) % m
    return p[idx]


def cyc_hamming_min_array(P: bytes, T: bytes) -> np.ndarray:
    """min over rotations of Hamming distance, for every window start of T."""
    p = _arr(P)
    t = _arr(T)
    m, n = p.size, t.size
    if m > n or m == 0:
        return np.zeros(0, dtype=np.int64)
    windows = np.lib.stride_tricks.sliding_window_view(t, m)
    rots = _rotations_matrix(p)
    best = np.full(n - m + 1, m, dtype=np.int64)
    # chunk over rotations to bound the broadcast size
    chunk = max(1, int(4e7) // max(1, windows.shape[0] * m))
    for lo in range(0, m, chunk):
        d = (windows[None, :, :] != rots[lo : lo + chunk, None, :]).sum(axis=2)
        np.minimum(best, d.min(axis=0), out=best)
    return best


def brute_mismatch_cpm_array(P: bytes, T: bytes) -> list[int]:
    return cyc_hamming_min_array(P, T).tolist()


def _cyc_edit_starts(P: bytes, T: bytes, k: int) -> list[int]:
    """Starts i such that some rotation of P matches some T[i..j) with <= k edits.

    Runs the semi-global edit DP for every rotation at once on the reversed
    strings: an occurrence of rot ending at position b of reversed T starts
    at n-b in T.  The in-row dependency is resolved with a running-minimum
    scan (all gap costs are 1).
    """
    m, n = len(P), len(T)
    if m == 0:
        return list(range(n + 1))
    pr = _arr(P[::-1])
    tr = _arr(T[::-1])
    rots = _rotations_matrix(pr)  # rotations of reversed P = reversed rotations of P
    dist = np.zeros((m, n + 1), dtype=np.int32)
    ramp = np.arange(n + 1, dtype=np.int32)
    big = np.int32(n + m + 10)
    for a in range(1, m + 1):
        neq = (rots[:, a - 1 : a] != tr[None, :]).astype(np.int32)
        new = np.empty_like(dist)
        new[:, 0] = a
        new[:, 1:] = np.minimum(dist[:, :-1] + neq, dist[:, 1:] + 1)
        # left-to-right smoothing: new[b] = min over b' <= b of new[b'] + (b - b')
        shifted = np.minimum.accumulate(new - ramp[None, :], axis=1)
        dist = np.minimum(new, shifted + ramp[None, :])
        np.minimum(dist, big, out=dist)
    ends = np.nonzero((dist <= k).any(axis=0))[0]
    return sorted({int(n - b) for b in ends})


def brute_cyc_occ(metric: str, P: bytes, T: bytes, k: int) -> list[int]:
    """Circular k-approximate occurrence starts, straight from the definition."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if metric == "hamming":
        best = cyc_hamming_min_array(P, T)
        return [int(i) for i in np.nonzero(best <= k)[0]]
    if metric == "edit":
        return _cyc_edit_starts(P, T, k)
    raise ValueError(f"unknown metric {metric!r}")


def brute_occ_k(P1: bytes, T: bytes, k: int) -> list[int]:
    """Standard (non-circular) k-mismatch occurrence starts of P1 in T."""
    m, n = len(P1), len(T)
    if m > n or m == 0:
        return []
    windows = np.lib.stride_tricks.sliding_window_view(_arr(T), m)
    d = (windows != _arr(P1)[None, :]).sum(axis=1)
    return [int(i) for i in np.nonzero(d <= k)[0]]


def brute_lpref_all(P: bytes, T: bytes, k: int) -> list[list[int]]:
    """LPref_{k'} arrays for all budgets k' in [0..k], by banded DP per start.

    The DP runs over band offsets j = b - a + k (b = pattern prefix length,
    a = text prefix length) and is vectorized over all starts at once; cells
    outside the band cannot hold values <= k, so the band is exact for every
    budget k' <= k.
    """
    n, m = len(T), len(P)
    if m == 0:
        return [[0] * (n + 1) for _ in range(k + 1)]
    width = 2 * k + 1
    big = np.int32(m + n + 10)
    t = _arr(T).astype(np.int32)
    p = _arr(P).astype(np.int32)
    starts = np.arange(n + 1, dtype=np.int64)

    d = np.full((n + 1, width), big, dtype=np.int32)
    d[:, k:] = np.arange(0, k + 1, dtype=np.int32)[None, :]  # row a=0: cost b
    best = [np.zeros(n + 1, dtype=np.int64) for _ in range(k + 1)]
    joff = np.arange(width, dtype=np.int64)
    for kp in range(k + 1):
        best[kp][:] = np.minimum(kp, m)
    max_a = min(n, m + k)
    for a in range(1, max_a + 1):
        tpos = starts + a - 1
        tch = np.where(tpos < n, t[np.minimum(tpos, n - 1)], np.int32(-1))
        bvals = a + joff - k  # pattern prefix length per band column
        valid_b = (bvals >= 1) & (bvals <= m)
        pch = np.where(valid_b, p[np.clip(bvals - 1, 0, m - 1)], np.int32(-2))
        neq = (tch[:, None] != pch[None, :]).astype(np.int32)

        new = np.full_like(d, big)
        # diagonal move (a-1,b-1) -> (a,b): same band column
        np.minimum(new, d + neq, out=new)
        # text deletion (a-1,b) -> (a,b): band column shifts down by one
        new[:, :-1] = np.minimum(new[:, :-1], d[:, 1:] + 1)
        # pattern deletion (a,b-1) -> (a,b): within-row, sequential over band
        for j in range(width):
            if bvals[j] < 0 or bvals[j] > m:
                new[:, j] = big
                continue
            if bvals[j] == 0:
                new[:, j] = a  # delete a text letters
                continue
            if j > 0:
                np.minimum(new[:, j], new[:, j - 1] + 1, out=new[:, j])
        d = new
        valid_start = tpos <= n  # rows past the end of T are meaningless
        for kp in range(k + 1):
            ok = (d <= kp) & valid_b[None, :] & valid_start[:, None]
            cand = np.where(ok, bvals[None, :], np.int64(-1)).max(axis=1)
            np.maximum(best[kp], cand, out=best[kp])
    return [b.tolist() for b in best]


def brute_lpref(P: bytes, T: bytes, k: int) -> list[int]:
    """LPref_k[i]: longest pattern prefix matching a prefix of T[i..n) with <= k edits."""
    return brute_lpref_all(P, T, k)[k]


def brute_bji(X: bytes | str) -> tuple[list[int], list[int]]:
    """Per-length min/max window sums of a binary string (index t in [1..n])."""
    if isinstance(X, str):
        X = X.encode()
    bits = np.array([_bit(c) for c in X], dtype=np.int64)
    n = bits.size
    mn = [0] * (n + 1)
    mx = [0] * (n + 1)
    csum = np.concatenate([[0], np.cumsum(bits)])
    for t in range(1, n + 1):
        sums = csum[t:] - csum[:-t]
        mn[t] = int(sums.min())
        mx[t] = int(sums.max())
    return mn, mx


def _bit(c: int) -> int:
    if c in (0, ord("0")):
        return 0
    if c in (1, ord("1")):
        return 1
    raise ValueError("binary string expected")


def band_deletion_distances(P: bytes, T: bytes, p: int, K: int) -> np.ndarray:
    """Banded alignment-graph distances D[t, i, j] for all rows t.

    The graph has unit horizontal/vertical edges everywhere and free diagonal
    edges except at in-band mismatch cells (band of diagonals
    [p-K .. p+2K)).  D[t, i, j] is the shortest-path length from
    (0, i + c0) to (t, t + j + c0) with c0 = p - K - 1, for
    i, j in [0..3K+1].  Rows of shortest paths are assumed monotone, which
    the grid structure guarantees; the column box is padded far enough that
    no shortest path is clipped.
    """
    mp, nt = len(P), len(T)
    s = 3 * K + 2
    c0 = p - K - 1
    pad = 5 * K + 8
    col_lo = c0 - pad
    col_hi = c0 + mp + 3 * K + 1 + pad
    width = col_hi - col_lo + 1
    big = np.int64(1 << 40)
    parr = _arr(P).astype(np.int32)
    tarr = _arr(T).astype(np.int32)

    cols = np.arange(col_lo, col_hi + 1, dtype=np.int64)
    starts = c0 + np.arange(s, dtype=np.int64)
    dist = np.abs(cols[None, :] - starts[:, None]).astype(np.int64)

    out = np.empty((mp + 1, s, s), dtype=np.int64)

    def record(t):
        idx = (t + np.arange(s, dtype=np.int64) + c0) - col_lo
        out[t] = dist[:, idx]

    record(0)
    for t in range(mp):
        if nt == 0:
            ch = np.full(width, np.int32(-1))
        else:
            ch = np.where((cols >= 0) & (cols < nt), tarr[np.clip(cols, 0, nt - 1)], np.int32(-1))
        in_band = (cols - t >= p - K) & (cols - t < p + 2 * K)
        blocked = (cols >= 0) & (cols < nt) & in_band & (ch != np.int32(P[t]))
        nxt = dist + 1  # vertical steps
        diag = np.where(blocked[None, :-1], big, dist[:, :-1])
        nxt[:, 1:] = np.minimum(nxt[:, 1:], diag)
        # horizontal smoothing in both directions
        ramp = np.arange(width, dtype=np.int64)
        left = np.minimum.accumulate(nxt - ramp[None, :], axis=1) + ramp[None, :]
        right = (
            np.minimum.accumulate((nxt + ramp[None, :])[:, ::-1], axis=1)[:, ::-1]
            - ramp[None, :]
        )
        dist = np.minimum(left, right)
        record(t + 1)
    return out
