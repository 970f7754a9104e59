"""Partially persistent dynamic Monge matrix.

Supports sub-column increments (each creating a new immutable version) and
sub-row minimum queries against any version ever created.  Internally the
matrix is negated, so the structure maintains an inverse Monge matrix under
sub-column decrements and answers sub-row maxima through upper envelopes of
column functions:

* deltas live in a persistent sparse segment tree keyed by column-major
  cell index (an increment inserts a +/- pair whose prefix sums reproduce
  the sub-column), so any entry of any version is evaluated in O(log s);
* a static balanced tree over the columns stores, per node, the single
  breakpoint where the right child's envelope overtakes the left child's;
  an update path-copies the O(log s) ancestors of the touched column and
  re-derives each breakpoint by binary search inside the narrow window the
  one-directional advantage shift allows.

Versions are immutable once created; readers never block.
"""

from __future__ import annotations

from typing import Callable

# persistent sparse segment tree over the key universe: node = (sum, left, right)


def _seg_add(node, lo: int, hi: int, key: int, val: int):
    if lo == hi:
        return ((node[0] + val) if node else val, None, None)
    mid = (lo + hi) >> 1
    if node is None:
        s0, l, r = 0, None, None
    else:
        s0, l, r = node
    if key <= mid:
        return (s0 + val, _seg_add(l, lo, mid, key, val), r)
    return (s0 + val, l, _seg_add(r, mid + 1, hi, key, val))


def _seg_prefix(node, lo: int, hi: int, key: int) -> int:
    """Sum of stored values with keys <= key."""
    total = 0
    while node is not None:
        if key >= hi:
            total += node[0]
            break
        mid = (lo + hi) >> 1
        if key <= mid:
            node = node[1]
            hi = mid
        else:
            left = node[1]
            if left is not None:
                total += left[0]
            node = node[2]
            lo = mid + 1
    return total


# envelope tree nodes: (col_lo, col_hi, breakpoint, left, right); leaves have
# left = right = None.


class MongeStore:
    """Versioned Monge matrix with sub-column increments and sub-row minima."""

    def __init__(self, base: Callable[[int, int], int] | None, s: int):
        """`base` evaluates entries of the initial matrix; None means |i-j|."""
        if s < 1:
            raise ValueError("dimension must be positive")
        self._base = base
        self._s = s
        self._keyhi = s * s + s
        # mutable per-cell delta mirror of the newest version (negated world),
        # used for O(1) entry evaluation while rebuilding breakpoints
        self._flat = [0] * (s * s)
        self._flat_version = 0
        droot = None
        env = self._build(0, s - 1)
        self._versions: list[tuple] = [(droot, env)]

    # -- internal evaluation (negated world) -------------------------------

    def _base_at(self, row: int, col: int) -> int:
        b = self._base
        if b is None:
            return row - col if row >= col else col - row
        return b(row, col)

    def _env_eval(self, node, droot, row: int) -> tuple[int, int]:
        """(negated value, column) attaining the node envelope at `row`."""
        while node[3] is not None:
            node = node[3] if row < node[2] else node[4]
        c = node[0]
        b = self._base
        base = (row - c if row >= c else c - row) if b is None else b(row, c)
        return -base + _seg_prefix(droot, 0, self._keyhi, c * self._s + row), c

    def _env_eval_flat(self, node, row: int) -> int:
        """Negated envelope value at `row` using the newest-version mirror."""
        while node[3] is not None:
            node = node[3] if row < node[2] else node[4]
        c = node[0]
        b = self._base
        base = (row - c if row >= c else c - row) if b is None else b(row, c)
        return -base + self._flat[c * self._s + row]

    def _breakpoint(self, left, right, lo: int = 0, hi: int | None = None) -> int:
        """First row in [lo..hi] where the right envelope strictly beats the
        left one, evaluated against the newest version."""
        if hi is None:
            hi = self._s
        ev = self._env_eval_flat
        while lo < hi:
            mid = (lo + hi) >> 1
            if ev(right, mid) > ev(left, mid):
                hi = mid
            else:
                lo = mid + 1
        return lo

    def _build(self, lo, hi):
        if lo == hi:
            return (lo, hi, 0, None, None)
        mid = (lo + hi) >> 1
        left = self._build(lo, mid)
        right = self._build(mid + 1, hi)
        return (lo, hi, self._breakpoint(left, right), left, right)

    def _rebuild_path(self, node, col, row_lo, row_hi, drop):
        """Path-copy the ancestors of `col` after its envelope contribution
        changed on rows [row_lo..row_hi] (drop: the internal value fell).

        The breakpoint is the first row where the right-minus-left advantage
        turns positive; the update shifts the advantage in one direction and
        only on the changed rows, so positivity can flip only there."""
        if node[3] is None:
            return node
        old_bp = node[2]
        if col <= node[3][1]:
            left = self._rebuild_path(node[3], col, row_lo, row_hi, drop)
            right = node[4]
            advantage_up = drop
        else:
            left = node[3]
            right = self._rebuild_path(node[4], col, row_lo, row_hi, drop)
            advantage_up = not drop
        if advantage_up:
            # breakpoint can only move earlier, and only into the changed rows
            if old_bp <= row_lo:
                bp = old_bp
            else:
                w = min(row_hi + 1, old_bp, self._s)
                bp = self._breakpoint(left, right, row_lo, w)
                if bp == w and w < old_bp:
                    bp = old_bp  # nothing flipped inside the window
        else:
            # breakpoint can only move later, at most just past the changed rows
            if old_bp < row_lo or old_bp > row_hi:
                bp = old_bp
            else:
                bp = self._breakpoint(left, right, old_bp, min(row_hi + 1, self._s))
        return (node[0], node[1], bp, left, right)

    # -- public API ---------------------------------------------------------

    @property
    def dimension(self) -> int:
        return self._s

    @property
    def num_versions(self) -> int:
        return len(self._versions)

    def entry(self, version: int, row: int, col: int) -> int:
        s = self._s
        if not (0 <= row < s and 0 <= col < s):
            raise IndexError("entry out of range")
        droot, _ = self._versions[version]
        return self._base_at(row, col) - _seg_prefix(droot, 0, self._keyhi, col * s + row)

    def subcol_increment(
        self, version: int, col: int, row_lo: int, row_hi: int, amount: int
    ) -> int:
        """New version with amount added to rows [row_lo..row_hi] of col."""
        s = self._s
        if not (0 <= col < s and 0 <= row_lo <= row_hi < s):
            raise IndexError("sub-column range out of bounds")
        droot, env = self._versions[version]
        if amount == 0:
            self._versions.append((droot, env))
            return len(self._versions) - 1
        if version != self._flat_version:
            # updating an older version: resynchronize the newest-entry mirror
            self._flat = [
                _seg_prefix(droot, 0, self._keyhi, j * s + i)
                for j in range(s)
                for i in range(s)
            ]
        # negated world: a public increment is a decrement here
        droot = _seg_add(droot, 0, self._keyhi, col * s + row_lo, -amount)
        droot = _seg_add(droot, 0, self._keyhi, col * s + row_hi + 1, amount)
        flat = self._flat
        base = col * s
        for r in range(row_lo, row_hi + 1):
            flat[base + r] -= amount
        env = self._rebuild_path(env, col, row_lo, row_hi, amount > 0)
        self._versions.append((droot, env))
        self._flat_version = len(self._versions) - 1
        return self._flat_version

    def subrow_min(
        self, version: int, row: int, col_lo: int, col_hi: int
    ) -> tuple[int, int]:
        """(min value, argmin column) over columns [col_lo..col_hi] of `row`.

        Ties break to the smallest column.
        """
        s = self._s
        if not (0 <= row < s) or col_lo > col_hi or col_lo < 0 or col_hi >= s:
            raise IndexError("empty or out-of-range query")
        droot, env = self._versions[version]
        best_v = None
        best_c = -1
        stack = [env]
        while stack:
            node = stack.pop()
            lo, hi = node[0], node[1]
            if col_lo <= lo and hi <= col_hi:
                v, c = self._env_eval(node, droot, row)
                if best_v is None or v > best_v or (v == best_v and c < best_c):
                    best_v, best_c = v, c
                continue
            if node[3] is not None:
                if col_lo <= node[3][1]:
                    stack.append(node[3])
                if col_hi >= node[4][0]:
                    stack.append(node[4])
        assert best_v is not None
        return -best_v, best_c

    # test hook: internal envelope nodes for coherence checks
    def _iter_nodes(self, version: int):
        _, env = self._versions[version]
        stack = [env]
        while stack:
            node = stack.pop()
            if node[3] is not None:
                yield node
                stack.append(node[3])
                stack.append(node[4])
