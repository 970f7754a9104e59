"""Longest prefix approximate matching for every budget 0..k at once.

Two engines compute LPref_{k'}[j] (longest pattern prefix matching a prefix
of T[j..n) with at most k' edits) for all budgets and all positions:

* `all_lpam_baseline`: the O(n k^2) wavefront, one anchored run per
  position;
* `all_lpam`: the block engine.  Strings are interleaved with a sentinel so
  edit distance becomes deletion distance (budgets double); per block of k
  positions the banded alignment graph is summarized by a braid of
  3K+1 monotone strands whose crossings are streamed in row order by an
  event queue driven by LCE queries.  Each crossing is one sub-column +2
  increment on a persistent Monge matrix of band distances, and each
  (position, budget) answer is a binary search over row timestamps using
  sub-row minima on the version in force at that row.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from heapq import heappush, heappop

from cycpm.edit import _lpref_at_core
from cycpm.monge import MongeStore
from cycpm.pillar import Fragment, TextStore


@dataclass(frozen=True, slots=True)
class BandSpec:
    """Band of 3K diagonals [start-K .. start+2K) around a block start."""

    start: int
    K: int

    @property
    def nslots(self) -> int:
        return 3 * self.K + 1

    @property
    def dimension(self) -> int:
        return 3 * self.K + 2


@dataclass(frozen=True, slots=True)
class TranspositionStream:
    """Ordered strand crossings: (row t, boundary c) swaps slots c, c+1."""

    entries: tuple[tuple[int, int], ...]
    band: BandSpec


@dataclass
class LprefTable:
    """values[k'][j] = LPref_{k'}[j] for k' in [0..k], j in [0..n]."""

    k: int
    values: list[list[int]]


def dollar_transform(s: bytes, dollar: int) -> bytes:
    """Interleave a sentinel after every letter: s0 $ s1 $ ... s_last $."""
    out = bytearray()
    for ch in s:
        out.append(ch)
        out.append(dollar)
    return bytes(out)


def pick_sentinel(*strings: bytes) -> int:
    used = set()
    for s in strings:
        used.update(s)
    for b in range(256):
        if b not in used:
            return b
    raise ValueError("no sentinel byte available")


def seaweed_stream(store: TextStore, pf: Fragment, tf: Fragment, start: int, K: int) -> TranspositionStream:
    """Crossing events of the band braid of G(pattern, text, band).

    Strands sit between adjacent band diagonals; an uncrossed adjacent pair
    crosses at the first in-band mismatch cell on the diagonal separating
    them, found with one LCE query.  Firing an event swaps the pair, emits
    one transposition and reschedules the two neighbouring boundaries (the
    left one from the next row: within a row the sweep moves left to
    right).
    """
    band = BandSpec(start, K)
    mp = pf.end - pf.start
    nt = tf.end - tf.start
    nslots = band.nslots
    nb = nslots - 1
    off = store._off
    pa = off[pf.source] + pf.start
    ta = off[tf.source] + tf.start
    lce = store._lce

    src = list(range(nslots))
    crossed: set[tuple[int, int]] = set()
    ver = [0] * nb
    heap: list[tuple[int, int, int]] = []

    def cross_time(c: int, t0: int):
        delta = start - K + c
        t1 = t0
        if t1 < -delta:
            t1 = -delta
        if t1 < 0:
            t1 = 0
        if t1 >= mp:
            return None
        b1 = t1 + delta
        if b1 >= nt:
            return None
        z = lce(pa + t1, ta + b1)
        cap_p = mp - t1
        cap_t = nt - b1
        cap = cap_p if cap_p < cap_t else cap_t
        if z >= cap:
            return None  # one string ran out: no further in-band mismatch
        return t1 + z

    def schedule(c: int, t0: int):
        ver[c] += 1
        a, b = src[c], src[c + 1]
        pair = (a, b) if a < b else (b, a)
        if pair in crossed:
            return
        t = cross_time(c, t0)
        if t is not None:
            heappush(heap, (t, c, ver[c]))

    for c in range(nb):
        schedule(c, 0)

    entries: list[tuple[int, int]] = []
    while heap:
        t, c, v = heappop(heap)
        if v != ver[c]:
            continue
        a, b = src[c], src[c + 1]
        entries.append((t, c))
        crossed.add((a, b) if a < b else (b, a))
        src[c], src[c + 1] = b, a
        ver[c] += 1  # the swapped pair has crossed; kill its pending event
        if c > 0:
            schedule(c - 1, t + 1)
        if c + 1 < nb:
            schedule(c + 1, t)
    assert len(entries) <= nslots * (nslots - 1) // 2
    return TranspositionStream(tuple(entries), band)


def replay_sources(stream: TranspositionStream):
    """Yield (t, c, lower_strand, upper_strand) per crossing, replayed from identity."""
    src = list(range(stream.band.nslots))
    out = []
    for t, c in stream.entries:
        a, b = src[c], src[c + 1]
        lo, hi = (a, b) if a < b else (b, a)
        out.append((t, c, lo, hi))
        src[c], src[c + 1] = b, a
    return out


def replay_check(stream: TranspositionStream, d_oracle, rows: int) -> bool:
    """Verify D_t = 2 P_t^Sigma + i - j against an oracle for every row.

    d_oracle(t) must return the (3K+2) x (3K+2) band distance matrix for
    row t; `rows` is the pattern length (number of braid rows).  Test-only;
    quadratic in the matrix size per row.
    """
    import numpy as np

    nslots = stream.band.nslots
    s = nslots + 1
    perm = np.eye(nslots, dtype=np.int64)
    by_row: dict[int, list[tuple[int, int]]] = {}
    for t, c in stream.entries:
        by_row.setdefault(t, []).append((t, c))

    def check(t):
        flip = np.flip(np.cumsum(np.flip(perm, 0), 0), 0)
        core = np.cumsum(flip, 1)
        psig = np.zeros((s, s), dtype=np.int64)
        psig[:nslots, 1:] = core
        ii = np.arange(s)[:, None]
        jj = np.arange(s)[None, :]
        pred = 2 * psig + ii - jj
        return bool((pred == d_oracle(t)).all())

    if not check(0):
        return False
    for t in range(rows):
        for _, c in by_row.get(t, ()):  # crossings in row t, in firing order
            perm[:, [c, c + 1]] = perm[:, [c + 1, c]]
        if not check(t + 1):
            return False
    return True


def all_lpam_baseline(P: bytes, T: bytes, k: int) -> LprefTable:
    """LPref tables by one anchored wavefront per text position."""
    n = len(T)
    store = TextStore([T, P])
    pf = store.full(1)
    values = [[0] * (n + 1) for _ in range(k + 1)]
    for j in range(n + 1):
        col = _lpref_at_core(store, store.frag(0, j, n), pf, k)
        for kp in range(k + 1):
            values[kp][j] = col[kp]
    return LprefTable(k, values)


def all_lpam(P: bytes, T: bytes, k: int) -> LprefTable:
    """LPref tables by the seaweed + persistent-Monge block engine."""
    n, m = len(T), len(P)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0 or m == 0:
        store = TextStore([T, P]) if m else None
        vals = [[0] * (n + 1) for _ in range(k + 1)]
        if m:
            pf = store.full(1)
            for j in range(n + 1):
                l = store.lcp(store.frag(0, j, n), pf)
                for kp in range(k + 1):
                    vals[kp][j] = l
        return LprefTable(k, vals)

    dollar = pick_sentinel(P, T)
    P2 = dollar_transform(P, dollar)
    T2 = dollar_transform(T, dollar)
    store = TextStore([P2, T2])
    pf = store.full(0)
    tf = store.full(1)
    K = 2 * k
    mp2 = len(P2)
    nt2 = len(T2)
    s = 3 * K + 2
    values = [[0] * (n + 1) for _ in range(k + 1)]

    big = 1 << 40
    for p in range(0, n + 1, k):
        stream = seaweed_stream(store, pf, tf, 2 * p, K)
        ms = MongeStore(None, s)
        ts = [0]
        vs = [0]
        cur = 0
        prev_t = None
        for t, c, lo_src, hi_src in replay_sources(stream):
            if prev_t is not None and t != prev_t:
                ts.append(prev_t + 1)
                vs.append(cur)
            cur = ms.subcol_increment(cur, c + 1, lo_src + 1, hi_src, 2)
            prev_t = t
        if prev_t is not None:
            ts.append(prev_t + 1)
            vs.append(cur)

        for i in range(p, min(p + k, n + 1)):
            i2 = 2 * i
            row = i2 - 2 * p + K + 1
            cache: dict[int, int] = {}

            def row_min(t: int) -> int:
                v = cache.get(t)
                if v is None:
                    jlo = i2 - K
                    if i2 - t > jlo:
                        jlo = i2 - t
                    jhi = i2 + K
                    if nt2 - t < jhi:
                        jhi = nt2 - t
                    if jlo > jhi:
                        v = big
                    else:
                        version = vs[bisect.bisect_right(ts, t) - 1]
                        v, _ = ms.subrow_min(
                            version, row, jlo - 2 * p + K + 1, jhi - 2 * p + K + 1
                        )
                    cache[t] = v
                return v

            # t*(k') grows with the budget, so the searches telescope
            t_prev = 0
            for kp in range(k + 1):
                budget = 2 * kp
                if row_min(mp2) <= budget:
                    t_prev = mp2
                else:
                    lo, hi = t_prev, mp2 - 1
                    while lo < hi:
                        mid = (lo + hi + 1) >> 1
                        if row_min(mid) <= budget:
                            lo = mid
                        else:
                            hi = mid - 1
                    t_prev = lo
                values[kp][i] = t_prev >> 1
    return LprefTable(k, values)
