"""Direct simulation of the comparison network, and the shortcut
evaluation of blocks that contain no matching cells.

The grid of x (rows) against y (columns) is read as a network of m+n
wires running top-left to bottom-right.  Cell (r, c), 0-based, sits on
wires m-r+c and m-r+c+1 in stage r+c+1.  When x[r] != y[c] the cell is a
comparator: the larger value continues downward (the lower-numbered
wire), the smaller one rightward.  Matching cells let both wires pass
untouched.  Feeding the canonical start labels through the network yields
the seaweed endpoint permutation; feeding 0/1 tokens yields the counting
arguments used by the zeroone module.

Everything here is an oracle or a building block: simulate_lcsnet walks
all m*n cells, diamond_outputs evaluates an all-comparator block in time
proportional to its boundary.
"""

from dataclasses import dataclass, field
from enum import Enum

from .core import CriticalPointSet


class EqualPolicy(Enum):
    """What a comparator does with equal values: swap them or hold them.

    The output values are identical either way; the choice only matters
    when the caller tracks value identities.
    """

    SWAP_EQUAL = "swap_equal"
    HOLD_EQUAL = "hold_equal"


def _stage_cells(m, n):
    # stage s holds the cells with r+c == s-1; within a stage, increasing
    # wire number means decreasing row
    for s in range(1, m + n):
        r_hi = min(m - 1, s - 1)
        r_lo = max(0, s - n)
        for r in range(r_hi, r_lo - 1, -1):
            yield r, s - 1 - r


def simulate_lcsnet(x, y, inputs, policy=EqualPolicy.SWAP_EQUAL) -> list:
    """Push m+n input values through every cell, stage by stage.

    Oblivious ground truth for everything else in the package; costs
    O(m n).  Returns the output values by wire: slots [0:n) leave at the
    bottom boundary, slots [n:m+n) leave up the right boundary.
    """
    m, n = len(x), len(y)
    if len(inputs) != m + n:
        raise ValueError(f"need {m + n} input values, got {len(inputs)}")
    wires = list(inputs)
    swap_equal = policy is EqualPolicy.SWAP_EQUAL
    for r, c in _stage_cells(m, n):
        if x[r] != y[c]:
            lo = m - 1 - r + c  # 0-based index of the cell's lower wire
            a, b = wires[lo], wires[lo + 1]
            if a < b or (swap_equal and a == b):
                wires[lo], wires[lo + 1] = b, a
    return wires


def seaweed_inputs(m, n) -> list:
    """Canonical start labels, twice-encoded: odd values 1-2m, ..., 2n-1."""
    if m < 0 or n < 0:
        raise ValueError("lengths must be non-negative")
    return [2 * s - 2 * m + 1 for s in range(m + n)]


def extract_critical_points(inputs, outputs) -> CriticalPointSet:
    """Pair each output slot with the start label that reached it.

    inputs must be the canonical labels from seaweed_inputs; outputs a
    permutation of them, as produced by simulate_lcsnet.
    """
    inputs = list(inputs)
    size = len(inputs)
    if size == 0:
        return CriticalPointSet(0, 0, ())
    m = (1 - inputs[0]) // 2
    n = size - m
    if m < 0 or n < 0 or inputs != seaweed_inputs(m, n):
        raise ValueError("inputs are not canonical seaweed start labels")
    if len(outputs) != size:
        raise ValueError("outputs length differs from inputs length")
    end_of = [-1] * size
    for slot, label in enumerate(outputs):
        s = (label - 1) // 2 + m
        if not 0 <= s < size or inputs[s] != label or end_of[s] != -1:
            raise ValueError("outputs are not a permutation of the inputs")
        end_of[s] = slot
    return CriticalPointSet(m, n, tuple(end_of))


def network_semilocal(x, y) -> CriticalPointSet:
    """Seaweed endpoint permutation via full network simulation."""
    ins = seaweed_inputs(len(x), len(y))
    return extract_critical_points(ins, simulate_lcsnet(x, y, ins))


@dataclass
class DiamondStats:
    """Loop-step counter for diamond_outputs (placements plus cursor moves)."""

    steps: int = 0


@dataclass(frozen=True)
class DiamondInstance:
    """A block with no matching cells: height * width comparators.

    desc_order indexes the inputs from largest to smallest.  Inputs must
    be pairwise distinct; the placement argument breaks on ties.
    """

    height: int
    width: int
    inputs: tuple
    desc_order: tuple

    @classmethod
    def from_inputs(cls, height, width, inputs):
        order = sorted(range(len(inputs)), key=lambda k: inputs[k], reverse=True)
        return cls(height, width, tuple(inputs), tuple(order))

    def __post_init__(self):
        size = self.height + self.width
        if self.height < 0 or self.width < 0 or len(self.inputs) != size:
            raise ValueError("inputs must hold exactly height + width values")
        if sorted(self.desc_order) != list(range(size)):
            raise ValueError("desc_order must be a permutation of the input slots")
        for a, b in zip(self.desc_order, self.desc_order[1:]):
            if not self.inputs[a] > self.inputs[b]:
                raise ValueError("inputs must be distinct and desc_order strictly decreasing")


def diamond_outputs(inst, stats=None):
    """Outputs and routing of a match-free block in O(height + width).

    Values are placed smallest first.  Losers move rightward, so a value
    entering on wire p drifts at most one comparator per column and can
    never leave right of output p + width; a value entering within width
    wires of the rightmost free output loses its way exactly to that
    output.  The free-slot cursor only ever retreats leftward, so the
    whole loop is linear.

    Returns (outputs, route) with route[slot] = input index that reached
    that slot.
    """
    size = inst.height + inst.width
    w = inst.width
    out = [None] * size
    route = [None] * size
    occupied = [False] * size
    cursor = size - 1
    steps = 0
    for idx in reversed(inst.desc_order):
        while cursor >= 0 and occupied[cursor]:
            cursor -= 1
            steps += 1
        pos = cursor if idx + w > cursor else idx + w
        out[pos] = inst.inputs[idx]
        route[pos] = idx
        occupied[pos] = True
        steps += 1
    if stats is not None:
        stats.steps += steps
    return out, route
