"""Occurrence-set geometry shared by the mismatch drivers.

Interval chains compress periodic occurrence sets; viewing text positions
column-by-column on a grid of height q turns each chain into at most three
axis-aligned rectangles, so reporting becomes a rectangle-union sweep.
The decision driver instead minimizes cell weight plus diagonal-segment
weight over a weighted grid (`diagonal_segments_min`).
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field


@dataclass(frozen=True, slots=True)
class IntervalChain:
    """The set [lo..hi] u [lo+diff..hi+diff] u ... u [lo+count*diff..hi+count*diff]."""

    lo: int
    hi: int
    diff: int
    count: int

    def __post_init__(self):
        if self.diff < 1 or self.count < 0 or self.lo > self.hi:
            raise ValueError("malformed interval chain")

    def intervals(self):
        for t in range(self.count + 1):
            yield (self.lo + t * self.diff, self.hi + t * self.diff)

    def positions(self) -> list[int]:
        out: list[int] = []
        for lo, hi in self.intervals():
            out.extend(range(lo, hi + 1))
        return out


def merge_intervals(pairs) -> list[tuple[int, int]]:
    """Union of inclusive intervals as sorted disjoint intervals."""
    out: list[tuple[int, int]] = []
    for lo, hi in sorted(pairs):
        if lo > hi:
            continue
        if out and lo <= out[-1][1] + 1:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


# rectangles are (col_lo, col_hi, row_lo, row_hi), all inclusive, on a grid
# where position p sits at column p // q, row p % q


def chains_to_rectangles(chains, q: int) -> list[tuple[int, int, int, int]]:
    """Map chains with difference q to grid rectangles (<= 3 per chain)."""
    rects: list[tuple[int, int, int, int]] = []
    for ch in chains:
        if ch.diff != q:
            raise ValueError("chain difference does not match grid height")
        if ch.lo < 0:
            raise ValueError("chain positions must be nonnegative")
        if ch.hi - ch.lo + 1 >= q:
            # consecutive blocks fuse into one contiguous run
            a, b = ch.lo, ch.hi + ch.count * q
            c0, r0 = divmod(a, q)
            c1, r1 = divmod(b, q)
            if c0 == c1:
                rects.append((c0, c1, r0, r1))
            else:
                if r0 == 0:
                    rects.append((c0, c1 - 1, 0, q - 1))
                else:
                    rects.append((c0, c0, r0, q - 1))
                    if c1 - c0 >= 2:
                        rects.append((c0 + 1, c1 - 1, 0, q - 1))
                rects.append((c1, c1, 0, r1))
            continue
        c0, r0 = divmod(ch.lo, q)
        r1 = ch.hi % q
        if r0 <= r1:
            rects.append((c0, c0 + ch.count, r0, r1))
        else:
            rects.append((c0, c0 + ch.count, r0, q - 1))
            rects.append((c0 + 1, c0 + 1 + ch.count, 0, r1))
    return rects


def report_rectangle_union(rects, q: int) -> list[int]:
    """Grid points covered by any rectangle, each once, in position order."""
    if not rects:
        return []
    events: dict[int, list[tuple[int, int, int]]] = {}
    cols = set()
    for c0, c1, r0, r1 in rects:
        events.setdefault(c0, []).append((1, r0, r1))
        events.setdefault(c1 + 1, []).append((-1, r0, r1))
        cols.add(c0)
        cols.add(c1 + 1)
    marks = sorted(cols)
    active: list[tuple[int, int]] = []
    out: list[int] = []
    for ci, col in enumerate(marks):
        for sign, r0, r1 in events.get(col, ()):
            if sign > 0:
                active.append((r0, r1))
            else:
                active.remove((r0, r1))
        if not active:
            continue
        rows = merge_intervals(active)
        nxt = marks[ci + 1]
        for c in range(col, nxt):
            base = c * q
            for r0, r1 in rows:
                out.extend(range(base + r0, base + r1 + 1))
    return out


@dataclass(frozen=True, slots=True)
class DiagSegment:
    """Points (x0+t, y0+t) for t in [0..length); weight is added to the cell weight."""

    x0: int
    y0: int
    length: int
    weight: int


@dataclass
class WeightedGrid:
    """Cells cut by vertical/horizontal lines, plus weighted diagonal segments.

    x_cuts[i] is the first column of column-strip i (x_cuts[0] is the domain
    left edge); strips run to x_hi inclusive.  cell_weight[i][j] is the
    weight of the cell in column-strip i, row-strip j.
    """

    x_cuts: list[int]
    y_cuts: list[int]
    x_hi: int
    y_hi: int
    cell_weight: list[list[int]]
    segments: list[DiagSegment] = field(default_factory=list)

    def col_strip(self, x: int) -> int:
        return bisect.bisect_right(self.x_cuts, x) - 1

    def row_strip(self, y: int) -> int:
        return bisect.bisect_right(self.y_cuts, y) - 1

    def cell(self, x: int, y: int) -> int:
        return self.cell_weight[self.col_strip(x)][self.row_strip(y)]

    def diag(self, x: int, y: int) -> int:
        for s in self.segments:
            t = x - s.x0
            if 0 <= t < s.length and s.y0 + t == y:
                return s.weight
        return 0


class _MinSegTree:
    """Point-update range-min tree over compressed keys; entries are (value, key)."""

    _NEUTRAL = (1 << 60, 1 << 60)

    def __init__(self, nkeys: int):
        size = 1
        while size < max(nkeys, 1):
            size *= 2
        self._size = size
        self._val = [self._NEUTRAL] * (2 * size)

    def set(self, idx: int, entry):
        i = idx + self._size
        self._val[i] = entry
        i //= 2
        while i >= 1:
            l, r = self._val[2 * i], self._val[2 * i + 1]
            self._val[i] = l if l <= r else r
            i //= 2

    def clear(self, idx: int):
        self.set(idx, self._NEUTRAL)

    def query(self, lo: int, hi: int):
        """Min entry over key indices [lo..hi]."""
        res = self._NEUTRAL
        lo += self._size
        hi += self._size + 1
        while lo < hi:
            if lo & 1:
                if self._val[lo] < res:
                    res = self._val[lo]
                lo += 1
            if hi & 1:
                hi -= 1
                if self._val[hi] < res:
                    res = self._val[hi]
            lo //= 2
            hi //= 2
        return res


def _sweep_min_crossing(horizontals, verticals):
    """Min-weight crossings of axis-parallel weighted segments.

    horizontals: (v, u_lo, u_hi, weight); verticals: (u, v_lo, v_hi, weight,
    tag).  Returns one hit (total_weight, v, tag) per vertical segment that
    crosses anything: its minimum-weight crossing, ties broken toward the
    smallest v coordinate.  Same-direction segments must be disjoint.
    """
    if not horizontals or not verticals:
        return []
    vs = sorted({h[0] for h in horizontals})
    vidx = {v: i for i, v in enumerate(vs)}
    tree = _MinSegTree(len(vs))
    events = []
    for v, u_lo, u_hi, w in horizontals:
        events.append((u_hi + 1, 0, vidx[v], None))  # removes fire first
        events.append((u_lo, 1, vidx[v], (w, v)))
    for i, (u, _v_lo, _v_hi, _w, _tag) in enumerate(verticals):
        events.append((u, 2, i, None))
    events.sort(key=lambda e: (e[0], e[1], e[2]))
    hits = []
    for _u, kind, idx, payload in events:
        if kind == 0:
            tree.clear(idx)
        elif kind == 1:
            tree.set(idx, payload)
        else:
            _, v_lo, v_hi, w, tag = verticals[idx]
            lo = bisect.bisect_left(vs, v_lo)
            hi = bisect.bisect_right(vs, v_hi) - 1
            if lo > hi:
                continue
            best = tree.query(lo, hi)
            if best != _MinSegTree._NEUTRAL:
                bw, bv = best
                hits.append((bw + w, bv, tag))
    return hits


def diagonal_segments_min(grid: WeightedGrid) -> tuple[tuple[int, int], int]:
    """Point on some diagonal segment minimizing cell weight + segment weight.

    Candidates are segment endpoints (located in cells by cut bisection) and
    the entry points where a segment crosses a cell edge, found by shearing
    the plane so diagonals become vertical and sweeping against the cell
    edges of the other orientation.  Ties break to the lexicographically
    smallest (x, y).
    """
    if not grid.segments:
        raise ValueError("empty instance")
    best: tuple[int, int, int] | None = None  # (value, x, y)

    def consider(val: int, x: int, y: int):
        nonlocal best
        cand = (val, x, y)
        if best is None or cand < best:
            best = cand

    for s in grid.segments:
        for t in (0, s.length - 1):
            x, y = s.x0 + t, s.y0 + t
            consider(grid.cell(x, y) + s.weight, x, y)

    nx = len(grid.x_cuts)
    ny = len(grid.y_cuts)
    x_his = grid.x_cuts[1:] + [grid.x_hi + 1]
    y_his = grid.y_cuts[1:] + [grid.y_hi + 1]

    # segments entering a cell through its bottom edge: shear (x,y) -> (y-x, y)
    horizontals = []
    for yi in range(1, ny):
        yc = grid.y_cuts[yi]
        for xi in range(nx):
            w = grid.cell_weight[xi][yi]
            x_lo, x_hi = grid.x_cuts[xi], x_his[xi] - 1
            horizontals.append((yc, yc - x_hi, yc - x_lo, w))
    verticals = [
        (s.y0 - s.x0, s.y0 + 1, s.y0 + s.length - 1, s.weight, i)
        for i, s in enumerate(grid.segments)
    ]
    for total, v, seg_i in _sweep_min_crossing(horizontals, verticals):
        u = grid.segments[seg_i].y0 - grid.segments[seg_i].x0
        consider(total, v - u, v)

    # segments entering a cell through its left edge: shear (x,y) -> (x-y, x)
    horizontals = []
    for xi in range(1, nx):
        xc = grid.x_cuts[xi]
        for yi in range(ny):
            w = grid.cell_weight[xi][yi]
            y_lo, y_hi = grid.y_cuts[yi], y_his[yi] - 1
            horizontals.append((xc, xc - y_hi, xc - y_lo, w))
    verticals = [
        (s.x0 - s.y0, s.x0 + 1, s.x0 + s.length - 1, s.weight, i)
        for i, s in enumerate(grid.segments)
    ]
    for total, v, seg_i in _sweep_min_crossing(horizontals, verticals):
        u = grid.segments[seg_i].x0 - grid.segments[seg_i].y0
        consider(total, v, v - u)

    assert best is not None
    val, x, y = best
    return (x, y), val
