"""Circular matching under edit distance: reporting and decision.

The engine is a banded Landau-Vishkin wavefront: furthest-reaching points
per diagonal, advanced by LCE jumps, compressing all prefix-pair edit
distances <= k into O(k^2) diagonal runs.  Reporting anchors every
candidate occurrence at a text position j where the rotation wraps; the
decision version combines longest-prefix/suffix match tables computed by
the lpam module.
"""

from __future__ import annotations

from dataclasses import dataclass

from cycpm.geometry import merge_intervals
from cycpm.pillar import Fragment, TextStore

_NEG = -(1 << 40)


@dataclass(frozen=True, slots=True)
class LvRun:
    """The run {(a + i, b + i, d) : i in [0..length)} of prefix-pair distances."""

    a: int
    b: int
    d: int
    length: int

    def cells(self):
        for i in range(self.length):
            yield (self.a + i, self.b + i, self.d)


def _lv_runs_core(store: TextStore, tf: Fragment, pf: Fragment, k: int) -> list[LvRun]:
    """Runs covering {(a,b,d): dist(T[0..a), P[0..b)) = d <= k, a,b >= 1}."""
    n = tf.end - tf.start
    m = pf.end - pf.start
    off = store._off
    ta = off[tf.source] + tf.start
    pa = off[pf.source] + pf.start
    lce = store._lce
    width = 2 * k + 1

    def slide(a: int, e: int) -> int:
        amax = n if n < m - e else m - e
        if a >= amax:
            return amax
        z = lce(ta + a, pa + a + e)
        rem = amax - a
        return a + (z if z < rem else rem)

    runs: list[LvRun] = []
    prev = [_NEG] * width  # F_{d-1}, indexed by e + k
    for d in range(k + 1):
        cur = [_NEG] * width
        for e in range(-d, d + 1):
            if e < -k or e > k:
                continue
            if n < -e or m < e:
                continue  # diagonal has no valid cells
            ix = e + k
            if d == 0:
                base = 0
            else:
                base = prev[ix] + 1 if prev[ix] != _NEG else _NEG
                if e + 1 <= k and prev[ix + 1] != _NEG:
                    cand = prev[ix + 1] + 1
                    if cand > base:
                        base = cand
                if e - 1 >= -k and prev[ix - 1] != _NEG:
                    cand = prev[ix - 1]
                    if cand > base:
                        base = cand
                if base == _NEG:
                    continue
            start = max(0, -e)
            if base < start:
                base = start
            amax = n if n < m - e else m - e
            if base > amax:
                base = amax
            reach = slide(base, e)
            if prev[ix] != _NEG and reach < prev[ix]:
                reach = prev[ix]
            cur[ix] = reach
            run_start = prev[ix] + 1 if prev[ix] != _NEG else start
            lo = max(run_start, 1, 1 - e)  # exclude empty-prefix cells
            if reach >= lo:
                runs.append(LvRun(lo, lo + e, d, reach - lo + 1))
        prev = cur
    return runs


def lv_runs(T: bytes, P: bytes, k: int) -> list[LvRun]:
    """Compressed edit distances of all prefix pairs of T and P up to k."""
    store = TextStore([T, P])
    return _lv_runs_core(store, store.full(0), store.full(1), k)


def _lpref_at_core(store: TextStore, tf: Fragment, pf: Fragment, k: int) -> list[int]:
    m = pf.end - pf.start
    vals = [min(kp, m) for kp in range(k + 1)]  # empty text prefix: delete kp letters
    for run in _lv_runs_core(store, tf, pf, k):
        top = run.b + run.length - 1
        if top > vals[run.d]:
            vals[run.d] = top
    for kp in range(1, k + 1):
        if vals[kp - 1] > vals[kp]:
            vals[kp] = vals[kp - 1]
    return vals


def lpref_at(T: bytes, P: bytes, k: int, j: int) -> list[int]:
    """LPref_{k'}[j] for all k' in [0..k]: longest pattern prefix matching a
    prefix of T[j..n) within k' edits."""
    store = TextStore([T, P])
    n = len(T)
    if not 0 <= j <= n:
        raise ValueError("position out of range")
    return _lpref_at_core(store, store.frag(0, j, n), store.full(1), k)


def _report_anchored_core(
    store: TextStore, t_src: int, p_src: int, n: int, m: int, k: int, j: int
) -> list[tuple[int, int]]:
    """Occurrence-start intervals for circular k-edit occurrences whose
    rotation wraps at text position j."""
    pf = store.frag(p_src, 0, m)
    lpref = _lpref_at_core(store, store.frag(t_src, j, n), pf, k)
    out: list[tuple[int, int]] = []
    if lpref[k] >= m:
        out.append((j, j))
    if j > 0:
        rt = store.rev(store.frag(t_src, 0, j))
        rp = store.rev(pf)
        for run in _lv_runs_core(store, rt, rp, k):
            alpha = lpref[k - run.d]
            d0 = m - run.b - alpha
            if d0 < 0:
                d0 = 0
            if d0 <= run.length - 1:
                out.append((j - run.a - run.length + 1, j - run.a - d0))
    return out


def report_anchored(T: bytes, P: bytes, k: int, j: int) -> list[tuple[int, int]]:
    """All i in [0..j] such that T[i..j) matches a pattern suffix and T[j..r)
    matches the complementary prefix with at most k edits in total."""
    store = TextStore([T, P])
    return _report_anchored_core(store, 0, 1, len(T), len(P), k, j)


def report(P: bytes, T: bytes, k: int) -> list[int]:
    """Sorted starts of circular k-edit occurrences of P in T."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n, m = len(T), len(P)
    if k >= m:
        return list(range(n + 1))  # delete the whole pattern anywhere
    store = TextStore([T, P])
    intervals: list[tuple[int, int]] = []
    for j in range(n + 1):
        intervals.extend(_report_anchored_core(store, 0, 1, n, m, k, j))
    out: list[int] = []
    for lo, hi in merge_intervals(intervals):
        out.extend(range(max(lo, 0), hi + 1))
    return out


def decide(P: bytes, T: bytes, k: int, lpam_mode: str = "fast"):
    """Some circular k-edit occurrence start, or None.

    lpam_mode selects the source of the prefix/suffix match tables:
    "fast" uses the seaweed/Monge engine, "baseline" the O(nk^2) wavefront.
    """
    from cycpm import lpam

    if k < 1:
        raise ValueError("k must be >= 1")
    n, m = len(T), len(P)
    if k >= m:
        return 0
    if lpam_mode == "fast":
        lpref = lpam.all_lpam(P, T, k).values
        lsuf_rev = lpam.all_lpam(P[::-1], T[::-1], k).values
    elif lpam_mode == "baseline":
        lpref = lpam.all_lpam_baseline(P, T, k).values
        lsuf_rev = lpam.all_lpam_baseline(P[::-1], T[::-1], k).values
    else:
        raise ValueError(f"unknown lpam mode {lpam_mode!r}")
    lsuf = [list(reversed(row)) for row in lsuf_rev]

    store = None
    for j in range(n + 1):
        for kp in range(k + 1):
            if lpref[kp][j] + lsuf[k - kp][j] >= m:
                if store is None:
                    store = TextStore([T, P])
                hits = _report_anchored_core(store, 0, 1, n, m, k, j)
                assert hits, "anchored reporting must confirm the table hit"
                return min(lo for lo, _ in hits)
    return None
