"""Linear-time exact circular pattern matching via prefix arrays."""

from __future__ import annotations

from cycpm.pillar import zfunction


def prefix_array(s: bytes) -> list[int]:
    """values[i] = max j >= 0 with s[0..j) == s[i..i+j); values[0] = |s|."""
    return zfunction(list(s))


def _merge_intervals(pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Union of inclusive integer intervals, by sorting."""
    out: list[tuple[int, int]] = []
    for lo, hi in sorted(pairs):
        if out and lo <= out[-1][1] + 1:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


def exact_cpm(P: bytes, T: bytes) -> list[tuple[int, int]]:
    """Starts of exact occurrences of any rotation of P in T, as intervals.

    Uses the prefix arrays of PT and of reversed-P reversed-T: a rotation
    with wrap point w occurs iff the forward extension at w plus the
    backward extension at w cover a full pattern length.  Extensions are
    capped at m before combining (a longer raw extension only certifies
    rotations up to length m).
    """
    m, n = len(P), len(T)
    if m == 0 or m > n:
        return []
    fwd = prefix_array(P + T)
    bwd = prefix_array(P[::-1] + T[::-1])
    total = m + n
    pairs = []
    for p in range(m, total):
        x = fwd[p] if p < total else 0
        idx = 2 * m + n - p
        y = bwd[idx] if idx < total else 0
        if x > m:
            x = m
        if y > m:
            y = m
        if x + y < m:
            continue
        w = p - m  # wrap point in text coordinates
        lo = max(w - y, 0)
        hi = min(w + x - m, n - m)
        if lo <= hi:
            pairs.append((lo, hi))
    return _merge_intervals(pairs)


def exact_cpm_positions(P: bytes, T: bytes) -> list[int]:
    out: list[int] = []
    for lo, hi in exact_cpm(P, T):
        out.extend(range(lo, hi + 1))
    return out
