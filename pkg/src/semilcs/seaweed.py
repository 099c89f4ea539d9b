"""Row-by-row computation of the seaweed endpoint permutation in O(mn).

This is the production baseline the fancier algorithms are measured
against.  One label enters each row from the left and sweeps rightward
through the standing column labels; a cell exchanges the two labels when
its characters match, or when the sweeping label has already overtaken
the standing one (the pair met before).  Everywhere else the labels
cross and keep their directions, which on the wire bookkeeping is a
no-op.
"""

from dataclasses import dataclass

from .core import CriticalPointSet


@dataclass(frozen=True)
class SeaweedFront:
    """All labels in flight after the first `row` rows of cells.

    down[c] is the twice-encoded label currently moving down through
    column c; right[r] is the label that left the grid rightward at row
    r.  Twice-encoded labels do not depend on how many rows are still to
    come, so one front serves every prefix of x.
    """

    row: int
    down: tuple
    right: tuple

    @classmethod
    def initial(cls, n):
        return cls(0, tuple(range(1, 2 * n, 2)), ())

    def critical_points(self) -> CriticalPointSet:
        """Endpoint permutation of the rows consumed so far against all of y."""
        m, n = self.row, len(self.down)
        end_of = [0] * (m + n)
        for c, label in enumerate(self.down):
            end_of[(label - 1) // 2 + m] = c
        for r, label in enumerate(self.right):
            end_of[(label - 1) // 2 + m] = m + n - 1 - r
        return CriticalPointSet(m, n, tuple(end_of))


def seaweed_row_step(front, x_sym, y) -> SeaweedFront:
    """Advance the front through one row of cells against symbol x_sym."""
    if len(y) != len(front.down):
        raise ValueError("front does not belong to this y")
    down = list(front.down)
    carry = -(2 * front.row + 1)
    for c, y_sym in enumerate(y):
        if x_sym == y_sym or carry > down[c]:
            carry, down[c] = down[c], carry
    return SeaweedFront(front.row + 1, tuple(down), front.right + (carry,))


def seaweed_core(x, y) -> CriticalPointSet:
    """Seaweed endpoint permutation of x against y.

    Same cell rule as seaweed_row_step, folded over all rows with mutable
    state; O(mn) time, O(m+n) working space.
    """
    n = len(y)
    down = list(range(1, 2 * n, 2))
    right = []
    for r, x_sym in enumerate(x):
        carry = -(2 * r + 1)
        for c, y_sym in enumerate(y):
            if x_sym == y_sym or carry > down[c]:
                carry, down[c] = down[c], carry
        right.append(carry)
    return SeaweedFront(len(x), tuple(down), tuple(right)).critical_points()
