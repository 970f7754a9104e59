"""Byte-string storage with fast longest-common-extension primitives.

A :class:`TextStore` indexes a fixed collection of byte strings (and,
internally, their reversals) with a suffix array, an LCP array and a
sparse-table range-minimum structure.  After the near-linear build, a
longest-common-prefix query between any two stored fragments costs O(1);
longest-common-suffix queries are answered on the reversed copies.  Exact
internal pattern matching (`ipm`) runs on demand via a Z-scan and is
memoized per fragment pair.

The store is immutable after construction; every query is read-only, so
fragments can be queried freely from concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np


@dataclass(frozen=True, slots=True)
class Fragment:
    """A view (source id, start, end) into a stored string; never a copy."""

    source: int
    start: int
    end: int

    def __len__(self) -> int:
        return self.end - self.start


@dataclass(frozen=True, slots=True)
class Progression:
    """Arithmetic progression of positions: first, first+step, ... (count terms)."""

    first: int
    step: int
    count: int

    def positions(self) -> list[int]:
        return [self.first + i * self.step for i in range(self.count)]


def _suffix_array(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Suffix array + rank of an integer sequence by prefix doubling."""
    n = values.size
    rank = np.unique(values, return_inverse=True)[1].astype(np.int64)
    sa = np.argsort(rank, kind="stable")
    shift = 1
    while shift < n:
        key2 = np.full(n, -1, dtype=np.int64)
        key2[: n - shift] = rank[shift:]
        sa = np.lexsort((key2, rank))
        changed = np.ones(n, dtype=bool)
        changed[1:] = (rank[sa[1:]] != rank[sa[:-1]]) | (key2[sa[1:]] != key2[sa[:-1]])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.cumsum(changed) - 1
        rank = new_rank
        if rank[sa[-1]] == n - 1:
            break
        shift *= 2
    return sa, rank


def _kasai_lcp(values: np.ndarray, sa: np.ndarray, rank: np.ndarray) -> list[int]:
    n = values.size
    lcp = [0] * max(n - 1, 0)
    k = 0
    vals = values.tolist()
    sa_l = sa.tolist()
    rank_l = rank.tolist()
    for i in range(n):
        r = rank_l[i]
        if r == n - 1:
            k = 0
            continue
        j = sa_l[r + 1]
        while i + k < n and j + k < n and vals[i + k] == vals[j + k]:
            k += 1
        lcp[r] = k
        if k:
            k -= 1
    return lcp


def zfunction(s: Sequence[int]) -> list[int]:
    """Z array: z[i] = length of the longest common prefix of s and s[i:]."""
    n = len(s)
    z = [0] * n
    if n == 0:
        return z
    z[0] = n
    l = r = 0
    for i in range(1, n):
        if i < r:
            z[i] = min(r - i, z[i - l])
        while i + z[i] < n and s[z[i]] == s[i + z[i]]:
            z[i] += 1
        if i + z[i] > r:
            l, r = i, i + z[i]
    return z


class TextStore:
    """Indexed collection of byte strings supporting O(1) LCE queries."""

    def __init__(self, strings: Sequence[bytes]):
        strings = [bytes(s) for s in strings]
        if not strings:
            raise ValueError("need at least one string")
        used = set()
        for s in strings:
            used.update(s)
        free = [b for b in range(256) if b not in used]
        if not free:
            raise ValueError("inputs use all 256 byte values; no sentinel available")
        self._data = strings
        self._rev = [s[::-1] for s in strings]
        self.sentinels: tuple[int, ...] = tuple(free[:2])
        sep = free[0]

        # concatenation: originals then reversals, one separator after each
        parts: list[bytes] = []
        offsets: list[int] = []
        pos = 0
        for s in strings + self._rev:
            offsets.append(pos)
            parts.append(s)
            parts.append(bytes([sep]))
            pos += len(s) + 1
        self._off = offsets
        concat = b"".join(parts)
        values = np.frombuffer(concat, dtype=np.uint8).astype(np.int64)
        sa, rank = _suffix_array(values)
        lcp = _kasai_lcp(values, sa, rank)
        self._rank = rank.tolist()

        # sparse table over the LCP array for O(1) range minima
        table = [lcp]
        width = 1
        m = len(lcp)
        while 2 * width <= m:
            prev = table[-1]
            table.append(
                [min(prev[i], prev[i + width]) for i in range(m - 2 * width + 1)]
            )
            width *= 2
        self._st = table

    # -- fragment plumbing ------------------------------------------------

    @property
    def num_strings(self) -> int:
        return len(self._data)

    def frag(self, source: int, start: int = 0, end: Optional[int] = None) -> Fragment:
        s = self._data[source] if source < len(self._data) else self._rev[source - len(self._data)]
        if end is None:
            end = len(s)
        if not (0 <= start <= end <= len(s)):
            raise ValueError(f"invalid fragment [{start}..{end}) of string {source}")
        return Fragment(source, start, end)

    def full(self, source: int) -> Fragment:
        return self.frag(source)

    def rev(self, f: Fragment) -> Fragment:
        """Fragment of the reversed source string covering the same bytes."""
        t = len(self._data)
        src = f.source + t if f.source < t else f.source - t
        n = len(self._string(f.source))
        return Fragment(src, n - f.end, n - f.start)

    def _string(self, source: int) -> bytes:
        t = len(self._data)
        return self._data[source] if source < t else self._rev[source - t]

    def length(self, f: Fragment) -> int:
        return f.end - f.start

    def access(self, f: Fragment, i: int) -> int:
        if not (0 <= i < f.end - f.start):
            raise IndexError(f"access index {i} out of range for fragment of length {f.end - f.start}")
        return self._string(f.source)[f.start + i]

    def extract(self, f: Fragment, lo: int = 0, hi: Optional[int] = None) -> bytes:
        n = f.end - f.start
        if hi is None:
            hi = n
        if not (0 <= lo <= hi <= n):
            raise ValueError("extract range out of bounds")
        return self._string(f.source)[f.start + lo : f.start + hi]

    def bytes_of(self, f: Fragment) -> bytes:
        return self._string(f.source)[f.start : f.end]

    # -- longest common extensions ----------------------------------------

    def _lce(self, p1: int, p2: int) -> int:
        """LCE of two absolute positions in the concatenation (uncapped)."""
        if p1 == p2:
            return 1 << 60
        r1 = self._rank[p1]
        r2 = self._rank[p2]
        if r1 > r2:
            r1, r2 = r2, r1
        span = r2 - r1
        k = span.bit_length() - 1
        row = self._st[k]
        a = row[r1]
        b = row[r2 - (1 << k)]
        return a if a < b else b

    def lcp(self, a: Fragment, b: Fragment) -> int:
        la = a.end - a.start
        lb = b.end - b.start
        if la == 0 or lb == 0:
            return 0
        cap = la if la < lb else lb
        v = self._lce(self._off[a.source] + a.start, self._off[b.source] + b.start)
        return v if v < cap else cap

    def lcp_r(self, a: Fragment, b: Fragment) -> int:
        return self.lcp(self.rev(a), self.rev(b))

    def lcp_periodic(self, a: Fragment, q: Fragment, phase: int = 0) -> int:
        """Longest common prefix of `a` and the periodic string Q^inf[phase..].

        Implemented by repeated LCP jumps against the stored period fragment,
        with phase arithmetic; amortized O(|a| / |Q|) LCE queries.
        """
        ql = q.end - q.start
        if ql == 0:
            raise ValueError("empty period")
        la = a.end - a.start
        off = self._off
        pa = off[a.source] + a.start
        pq = off[q.source] + q.start
        pos = 0
        phase %= ql
        while pos < la:
            r = (phase + pos) % ql
            span = ql - r
            rem = la - pos
            cap = span if span < rem else rem
            v = self._lce(pa + pos, pq + r)
            if v > cap:
                v = cap
            if pos + v == la:
                return la
            if v < span:
                return pos + v
            pos += span
        return la

    def lcp_periodic_r(self, a: Fragment, q: Fragment, phase: int = 0) -> int:
        """Longest common suffix of `a` with Q^inf ending at the given phase.

        The phase names the Q^inf position that sits just past a's right
        edge, i.e. a[-1] is compared with Q^inf[phase-1].
        """
        ql = q.end - q.start
        if ql == 0:
            raise ValueError("empty period")
        return self.lcp_periodic(self.rev(a), self.rev(q), (ql - (phase % ql)) % ql)

    # -- internal exact pattern matching -----------------------------------

    def ipm(self, needle: Fragment, haystack: Fragment) -> Optional[Progression]:
        """All exact occurrence starts of `needle` in `haystack` (one AP)."""
        ln = needle.end - needle.start
        lh = haystack.end - haystack.start
        if lh > 2 * ln:
            raise ValueError("ipm requires |haystack| <= 2 |needle|")
        if ln == 0 or ln > lh:
            return None
        key = (needle, haystack)
        cache = getattr(self, "_ipm_cache", None)
        if cache is None:
            cache = self._ipm_cache = {}
        if key in cache:
            return cache[key]
        nb = self.bytes_of(needle)
        hb = self.bytes_of(haystack)
        sep = self.sentinels[0]
        z = zfunction(list(nb) + [sep] + list(hb))
        occ = [i for i in range(lh - ln + 1) if z[ln + 1 + i] >= ln]
        if not occ:
            result = None
        elif len(occ) == 1:
            result = Progression(occ[0], 0, 1)
        else:
            step = occ[1] - occ[0]
            # occurrences of a string in a window of <= 2x its length form
            # one arithmetic progression (periodicity lemma)
            assert all(occ[i + 1] - occ[i] == step for i in range(len(occ) - 1))
            result = Progression(occ[0], step, len(occ))
        cache[key] = result
        return result


def build(strings: Sequence[bytes]) -> TextStore:
    """Index a collection of byte strings for LCE / IPM queries."""
    return TextStore(strings)


def smallest_period(s: bytes) -> int:
    """Length of the smallest period of s (|s| if s is unbordered enough)."""
    n = len(s)
    if n == 0:
        return 0
    z = zfunction(list(s))
    for p in range(1, n):
        if p + z[p] == n and n % p == 0:
            return p
    return n


def is_primitive(s: bytes) -> bool:
    """True if s is not a power B^p with p >= 2 of a shorter string."""
    n = len(s)
    if n == 0:
        return False
    return (s + s).find(s, 1) == n
