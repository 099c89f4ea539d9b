"""LCS algorithms built on the network with anonymous 0/1 tokens.

Feeding ones on the left boundary and zeros on the top, with comparators
sending zeros downward, turns LCS counting into token tracing: the LCS
length p equals the number of ones reaching the bottom edge (equally, of
zeros reaching the right edge).  Tokens moving against the flow (a one
heading down, a zero heading right) are called stray; stray tokens paint
exactly the contours of the prefix-prefix score table, which is what the
similarity-parameterized algorithms below exploit:

* llcs_banded  - O(n(k+1)) for LCS distance k, tracing 1-0 wire
  boundaries only;
* dominant_matches / trace_contours - the contour skeleton itself;
* semilocal_contour - the full endpoint permutation in O(np), touching
  only contour cells because every other cell is a plain crossing.
"""

import bisect
from dataclasses import dataclass, field

from .core import CriticalPointSet, build_match_lists
from .netsim import EqualPolicy, simulate_lcsnet


def llcs_01(x, y) -> int:
    """LCS length as the count of ones reaching the bottom boundary.

    Runs the full network on anonymous tokens.  Comparators here must
    send zeros downward, the opposite of the endpoint-extraction
    orientation, so ones are encoded as 0 and zeros as 1 before handing
    the tokens to simulate_lcsnet (outputs are unaffected by the
    encoding, being a pure order reversal).
    """
    m, n = len(x), len(y)
    outputs = simulate_lcsnet(x, y, [0] * m + [1] * n, EqualPolicy.SWAP_EQUAL)
    return sum(1 for v in outputs[:n] if v == 0)


@dataclass(frozen=True)
class BoundarySet:
    """1-0 boundaries after `stage` stages: wire l carries 1, wire l+1 carries 0."""

    stage: int
    boundaries: tuple


def _scan_boundaries(wires, size):
    return tuple(l for l in range(1, size) if wires[l] == 1 and wires[l + 1] == 0)


def boundary_sets(x, y) -> list:
    """Stage-by-stage boundary snapshots from a full 0/1 simulation.

    Oracle-side helper (cost O((m+n)^2 + mn)); llcs_banded reproduces the
    same evolution touching only the boundaries themselves.  Snapshot 0
    is the initial state; snapshot s follows stage s.
    """
    m, n = len(x), len(y)
    size = m + n
    wires = [None] + [1] * m + [0] * n  # 1-based
    snaps = [BoundarySet(0, _scan_boundaries(wires, size))]
    for s in range(1, size):
        r_hi = min(m - 1, s - 1)
        r_lo = max(0, s - n)
        for r in range(r_hi, r_lo - 1, -1):
            c = s - 1 - r
            if x[r] != y[c]:
                l = m - r + c
                if wires[l] == 1 and wires[l + 1] == 0:
                    wires[l], wires[l + 1] = 0, 1
        snaps.append(BoundarySet(s, _scan_boundaries(wires, size)))
    return snaps


@dataclass
class BandedStats:
    """Per-stage work units and the largest boundary set ever held."""

    stage_units: list = field(default_factory=list)
    max_boundaries: int = 0


def llcs_banded(x, y, stats=None) -> int:
    """LCS length by tracing only the 1-0 wire boundaries.

    Only a comparator sitting exactly on a 1-0 boundary can change the
    wire state, so each stage costs one character comparison per live
    boundary; with k = n - p boundaries never exceed k+1 and the whole
    run is O(n(k+1)).  Needs no match-list preprocessing.  Unequal
    lengths are accepted and traced over all m+n-1 stages.
    """
    m, n = len(x), len(y)
    if m == 0 or n == 0:
        return 0
    wires = [None] + [1] * m + [0] * n  # 1-based
    bounds = {m}
    for s in range(1, m + n):
        if not bounds:
            break  # no boundary can ever reappear once all are gone
        units = 0
        swapped = []
        for l in bounds:
            units += 1
            double_r = m + s - l - 1
            if double_r % 2:
                continue  # no cell sits on this wire pair at this stage
            r = double_r // 2
            c = s - 1 - r
            if 0 <= r < m and 0 <= c < n and x[r] != y[c]:
                swapped.append(l)
        for l in swapped:
            wires[l], wires[l + 1] = 0, 1
            units += 1
        touched = set()
        for l in swapped:
            touched.update((l - 1, l, l + 1))
        for q in touched:
            if 1 <= q <= m + n - 1:
                units += 1
                if wires[q] == 1 and wires[q + 1] == 0:
                    bounds.add(q)
                else:
                    bounds.discard(q)
        if stats is not None:
            stats.stage_units.append(units)
            stats.max_boundaries = max(stats.max_boundaries, len(bounds))
    return sum(wires[1 : n + 1])


@dataclass(frozen=True)
class ContourSet:
    """Dominant matches grouped by rank.

    contours[t-1] lists the rank-t dominant matches as 0-based cells
    (row, col), in increasing row order (hence decreasing column).  The
    number of groups equals the LCS length.
    """

    contours: tuple

    @property
    def llcs(self) -> int:
        return len(self.contours)


def dominant_matches(x, y) -> ContourSet:
    """All dominant matches, found with a threshold array.

    thresholds[t-1] is the least column closing any match chain of length
    t seen so far; a match that tightens a threshold is the next rank-t
    dominant, except that a later match in the same row supersedes it.
    Match columns are scanned in decreasing order within a row so in-row
    updates cannot disturb each other's ranks.  Cost O((r + n) log n).
    """
    lists = build_match_lists(x, y).lists
    thresholds = []
    contours = []
    for r, cols in enumerate(lists):
        for c in reversed(cols):
            t = bisect.bisect_left(thresholds, c)
            if t == len(thresholds):
                thresholds.append(c)
                contours.append([(r, c)])
            elif c < thresholds[t]:
                thresholds[t] = c
                if contours[t][-1][0] == r:
                    contours[t][-1] = (r, c)
                else:
                    contours[t].append((r, c))
    return ContourSet(tuple(tuple(group) for group in contours))


def trace_contours(contour_set, m, n) -> list:
    """Full staircase of cells for each rank, 0-based, in walk order.

    Contour t runs from the right edge along the row of its first
    dominant match, steps down each dominant's column to the next one
    (corners included), and exits down the last dominant's column to the
    bottom edge.  Each contour's cells come out sorted by (row, col) and
    number at most m+n-1.
    """
    traced = []
    for doms in contour_set.contours:
        cells = []
        for a, (r, c) in enumerate(doms):
            right_edge = doms[a - 1][1] if a else n - 1
            cells.extend((r, cc) for cc in range(c, right_edge + 1))
            next_row = doms[a + 1][0] if a + 1 < len(doms) else m
            cells.extend((rr, c) for rr in range(r + 1, next_row))
        traced.append(cells)
    return traced


def stray_cells(x, y) -> set:
    """Cells with a stray token on some port (test oracle, O(mn)).

    Tokens: ones enter on the left moving right, zeros on top moving
    down; a comparator sends the smaller token down and swaps equals, a
    match cell translates left to bottom and top to right.  A token is
    stray when it moves against its flow (a one downward or a zero
    rightward), which makes strayness a function of value and port: top
    input stray iff 1, left input stray iff 0, bottom output stray iff 1,
    right output stray iff 0.
    """
    m, n = len(x), len(y)
    down = [0] * n
    cells = set()
    for r in range(m):
        carry = 1
        x_sym = x[r]
        for c in range(n):
            top, left = down[c], carry
            if x_sym == y[c]:
                bottom, right = left, top
            elif top < left:
                bottom, right = top, left
            else:
                bottom, right = left, top  # covers the equal-swap convention
            if top == 1 or left == 0 or bottom == 1 or right == 0:
                cells.add((r, c))
            down[c] = bottom
            carry = right
    return cells


@dataclass
class ContourStats:
    """Cells actually evaluated by semilocal_contour."""

    touched_cells: int = 0


def semilocal_contour(x, y, stats=None) -> CriticalPointSet:
    """Seaweed endpoint permutation touching only contour cells; O(np).

    Off the contours every cell compares a left-origin label against a
    top-origin label, which is always a plain crossing and therefore a
    no-op on the row bookkeeping.  So the seaweed row sweep needs to
    evaluate its exchange rule only at contour cells, of which there are
    at most p staircases of boundary length each.
    """
    m, n = len(x), len(y)
    contour_set = dominant_matches(x, y)
    by_row = [[] for _ in range(m)]
    # ranks ascend left to right within a row and each traced contour is
    # already (row, col)-sorted, so plain appends keep rows sorted
    for cells in trace_contours(contour_set, m, n):
        for r, c in cells:
            by_row[r].append(c)
    if stats is not None:
        stats.touched_cells += sum(len(row) for row in by_row)

    down = list(range(m, m + n))
    end_of = [0] * (m + n)
    for r in range(m):
        carry = m - 1 - r
        x_sym = x[r]
        for c in by_row[r]:
            if x_sym == y[c] or carry > down[c]:
                carry, down[c] = down[c], carry
        end_of[carry] = m + n - 1 - r
    for c, start in enumerate(down):
        end_of[start] = c
    return CriticalPointSet(m, n, tuple(end_of))
