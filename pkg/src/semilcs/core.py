"""Shared types, match-list preprocessing, and dense scoring oracles.

Comparing x (length m) against y (length n) semi-locally means knowing
A(i, j) = LLCS(x, y[i:j]) for every 0 <= i <= j <= n.  The whole matrix is
carried implicitly by a permutation of m+n seaweed endpoints
(CriticalPointSet); DenseScoreMatrix is the direct-DP ground truth that
the fast algorithms are tested against.

Conventions used across the package:

* strings are arbitrary sequences of mutually comparable symbols (str,
  bytes, lists and tuples all work);
* substring ranges are 0-based and half-open, so A(i, j) scores y[i:j];
* half-integer coordinates are stored exactly as twice their value.
  Seaweed s in [0 : m+n) starts at the half-integer (2*(s-m)+1)/2, which
  sweeps the left boundary bottom-to-top and then the top boundary
  left-to-right; end slot e in [0 : m+n) is the half-integer (2*e+1)/2
  along the bottom boundary and then up the right boundary.
"""

import bisect
from dataclasses import dataclass
from typing import Sequence

CharString = Sequence


@dataclass(frozen=True, order=True)
class HalfIntCoord:
    """An exact integer or odd half-integer, stored as twice its value."""

    twice: int

    @property
    def is_odd_half(self) -> bool:
        return self.twice % 2 != 0

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"


@dataclass(frozen=True)
class MatchLists:
    """lists[i] holds, in increasing order, every j with x[i] == y[j]."""

    lists: tuple


def build_match_lists(x, y, alphabet_size=None) -> MatchLists:
    """Match positions of every symbol of x within y.

    The general path sorts y once and binary-searches each symbol of x,
    costing O((m+n) log n).  When a small alphabet_size is supplied the
    positions are bucketed per symbol instead, skipping the sort.
    """
    n = len(y)
    if alphabet_size is not None and alphabet_size < n:
        buckets = {}
        for j, sym in enumerate(y):
            buckets.setdefault(sym, []).append(j)
        return MatchLists(tuple(tuple(buckets.get(sym, ())) for sym in x))
    pairs = sorted(zip(y, range(n)))
    keys = [sym for sym, _ in pairs]
    lists = []
    for sym in x:
        lo = bisect.bisect_left(keys, sym)
        hi = bisect.bisect_right(keys, sym)
        lists.append(tuple(pairs[k][1] for k in range(lo, hi)))
    return MatchLists(tuple(lists))


def llcs_dp(x, y) -> int:
    """Length of the longest common subsequence, by the classic table."""
    if not len(x) or not len(y):
        return 0
    prev = [0] * (len(y) + 1)
    for x_sym in x:
        cur = [0]
        best = 0
        for j, y_sym in enumerate(y):
            if x_sym == y_sym:
                best = prev[j] + 1
            elif prev[j + 1] > best:
                best = prev[j + 1]
            cur.append(best)
        prev = cur
    return prev[-1]


@dataclass(frozen=True)
class DenseScoreMatrix:
    """Triangular table with entry (i, j) = LLCS(x, y[i:j])."""

    n: int
    rows: tuple

    def __getitem__(self, key) -> int:
        i, j = key
        if not 0 <= i <= j <= self.n:
            raise IndexError(f"need 0 <= i <= j <= {self.n}, got ({i}, {j})")
        return self.rows[i][j - i]


def dense_semilocal_oracle(x, y) -> DenseScoreMatrix:
    """Scores of x against every substring of y, by direct DP.

    Test oracle: one DP sweep per start index i extends the substring a
    symbol at a time, so row i holds LLCS(x, y[i:j]) for every j.  Meant
    for small inputs; the cost is O(m n^2).
    """
    m, n = len(x), len(y)
    rows = []
    for i in range(n + 1):
        col = [0] * (m + 1)
        row = [0]
        for y_sym in y[i:]:
            diag = col[0]
            for k in range(1, m + 1):
                keep = col[k]
                if x[k - 1] == y_sym:
                    col[k] = diag + 1
                elif col[k] < col[k - 1]:
                    col[k] = col[k - 1]
                diag = keep
            row.append(col[m])
        rows.append(tuple(row))
    return DenseScoreMatrix(n=n, rows=tuple(rows))


@dataclass(frozen=True)
class CriticalPointSet:
    """The m+n seaweed endpoints, as a permutation from starts to ends.

    end_of[s] is the end slot of the seaweed starting at index s; see the
    module docstring for the half-integer reading of both indices.  The
    score of any window is recovered from the permutation alone.
    """

    m: int
    n: int
    end_of: tuple

    def __post_init__(self):
        size = self.m + self.n
        if len(self.end_of) != size or sorted(self.end_of) != list(range(size)):
            raise ValueError("end_of must be a permutation of range(m + n)")

    def start_coord(self, s) -> HalfIntCoord:
        return HalfIntCoord(2 * (s - self.m) + 1)

    def end_coord(self, e) -> HalfIntCoord:
        return HalfIntCoord(2 * e + 1)

    def points(self):
        """(start, end) half-integer pairs, one per seaweed."""
        for s, e in enumerate(self.end_of):
            yield self.start_coord(s), self.end_coord(e)

    def score(self, i, j) -> int:
        """A(i, j) = LLCS(x, y[i:j]), by a dominance count.

        Counts the seaweeds that start strictly right of i and end
        strictly left of j; each costs the window one unit.  Seaweeds
        outside the stored core cannot satisfy both bounds for any window
        0 <= i <= j <= n (validated against the dense oracle in the test
        suite), so the stored permutation is all that is needed.  Cost is
        one linear scan.
        """
        if not 0 <= i <= j <= self.n:
            raise ValueError(f"need 0 <= i <= j <= {self.n}, got ({i}, {j})")
        end_of = self.end_of
        crossed = sum(1 for s in range(self.m + i, self.m + self.n) if end_of[s] < j)
        return j - i - crossed

    def window_scores(self, width) -> list:
        """A(i, i + width) for every window start i, in order."""
        if not 1 <= width <= self.n:
            raise ValueError(f"need 1 <= width <= {self.n}, got {width}")
        return [self.score(i, i + width) for i in range(self.n - width + 1)]
