"""Edit-distance kernels.

``edit_distance_dp`` is the reference dynamic program and the oracle for
everything else in this module.  The specialised kernels compute the
distance from an arbitrary string to a string with at most two runs,
either by a closed form (one run), by a minimisation over split points,
or by a single linear pass over the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .strings import LevString, runs


@dataclass(frozen=True)
class TwoRunPattern:
    """The string ``alpha^l beta^r``."""

    alpha: int
    l: int
    beta: int
    r: int

    def __post_init__(self):
        if self.l < 0 or self.r < 0:
            raise ValueError("run lengths must be non-negative")
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("symbols must be non-negative")
        if self.l > 0 and self.r > 0 and self.alpha == self.beta:
            raise ValueError("alpha and beta must differ when both runs are non-empty")

    def to_string(self) -> LevString:
        return (self.alpha,) * self.l + (self.beta,) * self.r

    def __len__(self) -> int:
        return self.l + self.r

    @classmethod
    def from_string(cls, v: Sequence[int]) -> "TwoRunPattern":
        rl = runs(v)
        if len(rl) > 2:
            raise ValueError(f"string has {len(rl)} runs; at most 2 allowed")
        if not rl:
            return cls(0, 0, 0, 0)
        if len(rl) == 1:
            (s, n), = rl
            return cls(s, n, s, 0)
        (s, n), (t, m) = rl
        return cls(s, n, t, m)


def _as_array(w: Sequence[int]) -> np.ndarray:
    return np.fromiter(w, dtype=np.int64, count=len(w))


def edit_distance_dp(u: Sequence[int], v: Sequence[int]) -> int:
    """Levenshtein distance by the full dynamic program.

    Every cell of the ``(|u|+1) x (|v|+1)`` table is evaluated; only two
    rows are kept.  Within a row the insertion chain is resolved with a
    running minimum, so each row is a handful of vectorised operations.
    """
    if len(u) < len(v):
        u, v = v, u
    m, n = len(u), len(v)
    if n == 0:
        return m
    vv = _as_array(v)
    cols = np.arange(n + 1, dtype=np.int64)
    prev = cols.copy()
    cur = np.empty(n + 1, dtype=np.int64)
    for i in range(1, m + 1):
        cur[0] = i
        np.minimum(prev[:-1] + (vv != u[i - 1]), prev[1:] + 1, out=cur[1:])
        cur -= cols
        np.minimum.accumulate(cur, out=cur)
        cur += cols
        prev, cur = cur, prev
    return int(prev[n])


def edit_distance_table(v: Sequence[int], k: int, a: int) -> np.ndarray:
    """Distances from every length-``k`` string to ``v``, in lexicographic order.

    Runs the same recursion as :func:`edit_distance_dp`, but shares DP rows
    between strings with a common prefix: level ``i`` holds one row per
    string of length ``i``.  Entry ``c`` of the result belongs to the
    string whose base-``a`` value is ``c``.
    """
    n = len(v)
    vv = _as_array(v)
    cols = np.arange(n + 1, dtype=np.int64)
    rows = cols[None, :].copy()
    for i in range(1, k + 1):
        parent = np.repeat(rows, a, axis=0)
        sym = np.tile(np.arange(a), rows.shape[0])
        cur = np.empty_like(parent)
        cur[:, 0] = i
        if n:
            cost = (vv[None, :] != sym[:, None]).astype(np.int64)
            np.minimum(parent[:, :-1] + cost, parent[:, 1:] + 1, out=cur[:, 1:])
            cur -= cols
            np.minimum.accumulate(cur, axis=1, out=cur)
            cur += cols
        rows = cur
    return rows[:, n].copy()


def edit_distance_banded(u: Sequence[int], v: Sequence[int]) -> int:
    """Levenshtein distance restricted to a diagonal band that doubles until exact.

    A path through the table with cost ``c`` never leaves the diagonals
    ``|j - i| <= c``, so a banded result ``d <= t`` is exact.
    """
    if len(u) < len(v):
        u, v = v, u
    m, n = len(u), len(v)
    if n == 0:
        return m
    t = m - n + 1
    while True:
        d = _banded(u, v, t)
        if d <= t:
            return d
        t *= 2


def _banded(u: Sequence[int], v: Sequence[int], t: int) -> int:
    m, n = len(u), len(v)
    inf = m + n + 1
    prev = [j if j <= t else inf for j in range(n + 1)]
    for i in range(1, m + 1):
        lo = max(1, i - t)
        hi = min(n, i + t)
        cur = [inf] * (n + 1)
        if i <= t:
            cur[0] = i
        ui = u[i - 1]
        left = cur[lo - 1]
        for j in range(lo, hi + 1):
            best = prev[j - 1] + (ui != v[j - 1])
            if prev[j] + 1 < best:
                best = prev[j] + 1
            if left + 1 < best:
                best = left + 1
            cur[j] = best
            left = best
        prev = cur
    return prev[n]


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError(f"Hamming distance needs equal lengths, got {len(u)} and {len(v)}")
    return sum(1 for x, y in zip(u, v) if x != y)


def dist_one_run(w: Sequence[int], alpha: int, l: int) -> int:
    """Edit distance from ``w`` to ``alpha^l``: ``max(|w|, l) - min(N_alpha(w), l)``."""
    n = w.count(alpha)
    k = len(w)
    return (k if k > l else l) - (n if n < l else l)


def _split_bounds(k: int, l: int, r: int) -> tuple[int, int]:
    i0 = max(0, min(l, k - r))
    i1 = min(k, max(l, k - r))
    return i0, i1


def dist_two_run_minform(w: Sequence[int], p: TwoRunPattern) -> int:
    """Edit distance to ``alpha^l beta^r`` by minimising over split points.

    Reference form, quadratic in ``|w|``; the split index only needs to
    range over ``[i0, i1]``.
    """
    w = tuple(w)
    if p.l == 0 or p.r == 0 or p.alpha == p.beta:
        return _degenerate(w, p)
    k = len(w)
    i0, i1 = _split_bounds(k, p.l, p.r)
    return min(
        dist_one_run(w[:i], p.alpha, p.l) + dist_one_run(w[i:], p.beta, p.r)
        for i in range(i0, i1 + 1)
    )


def _degenerate(w: Sequence[int], p: TwoRunPattern) -> int:
    if p.l == 0:
        return dist_one_run(w, p.beta, p.r)
    if p.r == 0:
        return dist_one_run(w, p.alpha, p.l)
    return dist_one_run(w, p.alpha, p.l + p.r)


def dist_two_run_linear(w: Sequence[int], p: TwoRunPattern) -> int:
    """Edit distance to ``alpha^l beta^r`` in one pass over ``w``.

    The distance splits as ``f1 + min f2``: ``f1`` is constant over the
    admissible split range, and ``f2`` moves by at most one per step, so it
    is tracked incrementally while the split point sweeps ``(i0, i1]``.
    Empty ``w`` and degenerate patterns go through the closed forms.
    """
    if p.l == 0 or p.r == 0 or p.alpha == p.beta:
        return _degenerate(w, p)
    k = len(w)
    if k == 0:
        return p.l + p.r
    alpha, beta, l, r = p.alpha, p.beta, p.l, p.r
    i0, i1 = _split_bounds(k, l, r)
    li = w[:i0].count(alpha)
    ri = w[i0:].count(beta)
    f2 = (l - li if li < l else 0) + (r - ri if ri < r else 0)
    best = f2
    for i in range(i0, i1):
        c = w[i]
        if c == beta:
            if ri <= r:
                f2 += 1
            ri -= 1
        elif c == alpha and li < l:
            f2 -= 1
            if f2 < best:
                best = f2
            li += 1
    excess = k - l - r
    return (excess if excess > 0 else 0) + best


def dist_to_run_pattern(w: Sequence[int], v: Sequence[int]) -> int:
    """Edit distance from ``w`` to a string ``v`` with at most two runs.

    Equal lengths reduce to the Hamming distance; otherwise the one-run or
    two-run kernel applies.
    """
    p = TwoRunPattern.from_string(v)
    if len(w) == len(v):
        return hamming_distance(w, v)
    if not isinstance(w, (tuple, list)):
        w = tuple(w)
    return dist_two_run_linear(w, p)


def edit_distance(u: Sequence[int], v: Sequence[int]) -> int:
    """Levenshtein distance through the fastest applicable kernel."""
    if len(runs(v)) <= 2:
        return dist_to_run_pattern(u, v)
    if len(runs(u)) <= 2:
        return dist_to_run_pattern(v, u)
    return edit_distance_banded(u, v)
