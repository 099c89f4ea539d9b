"""Quadtree evaluation of the network: recurse only where the matches are.

A block without matches collapses to a single diamond_outputs call at
boundary cost, so strings with r matches overall cost O(n sqrt(r))
instead of O(n^2).  Every block carries its boundary values together
with their descending order; keeping that order current (by filtering
and merging, never sorting) is what lets the diamond shortcut stay
linear in the boundary.

Wire-order convention for a block of height h and width w: inputs are
the h left-boundary values bottom-to-top followed by the w top-boundary
values left-to-right; outputs are the w bottom values left-to-right
followed by the h right values bottom-to-top.
"""

from dataclasses import dataclass

from .core import CriticalPointSet
from .netsim import DiamondInstance, diamond_outputs


@dataclass
class SparseStats:
    """Work accounting: one unit per boundary element of every block touched."""

    blocks: int = 0
    work_units: int = 0


@dataclass(frozen=True)
class Block:
    """One rectangle of the grid plus everything needed to evaluate it.

    x_sorted / y_sorted hold (symbol, index) pairs of the covered
    substring slices, sorted; they make match counting linear and split
    in linear time with the block.
    """

    x_lo: int
    x_hi: int
    y_lo: int
    y_hi: int
    inputs: tuple
    input_sort: tuple
    x_sorted: tuple
    y_sorted: tuple

    @property
    def height(self):
        return self.x_hi - self.x_lo

    @property
    def width(self):
        return self.y_hi - self.y_lo


def count_block_matches(block) -> int:
    """Number of matching cells in the block, by one scan of both sorted lists."""
    xs, ys = block.x_sorted, block.y_sorted
    total = 0
    i = j = 0
    while i < len(xs) and j < len(ys):
        a, b = xs[i][0], ys[j][0]
        if a < b:
            i += 1
        elif b < a:
            j += 1
        else:
            i2 = i + 1
            while i2 < len(xs) and xs[i2][0] == a:
                i2 += 1
            j2 = j + 1
            while j2 < len(ys) and ys[j2][0] == a:
                j2 += 1
            total += (i2 - i) * (j2 - j)
            i, j = i2, j2
    return total


def merge_output_sort(route, input_sort) -> tuple:
    """Descending order of a block's outputs from its routing permutation.

    route[slot] names the input that reached that slot, so inverting it
    and walking the inputs in descending order walks the outputs in
    descending order.
    """
    slot_of = [0] * len(route)
    for out_pos, in_pos in enumerate(route):
        slot_of[in_pos] = out_pos
    return tuple(slot_of[p] for p in input_sort)


def _merge_desc(vals, *streams):
    # merge position streams that are each descending by value into one
    streams = [s for s in streams if s]
    if len(streams) == 1:
        return tuple(streams[0])
    out = []
    heads = [0] * len(streams)
    while streams:
        best = max(range(len(streams)), key=lambda k: vals[streams[k][heads[k]]])
        out.append(streams[best][heads[best]])
        heads[best] += 1
        if heads[best] == len(streams[best]):
            del streams[best], heads[best]
    return tuple(out)


def _evaluate(blk, stats):
    """Outputs of one block and their descending order."""
    h, w = blk.height, blk.width
    stats.blocks += 1
    stats.work_units += h + w
    if h == 0 or w == 0:
        return blk.inputs, blk.input_sort
    if count_block_matches(blk) == 0:
        inst = DiamondInstance(h, w, blk.inputs, blk.input_sort)
        out, route = diamond_outputs(inst)
        return tuple(out), merge_output_sort(route, blk.input_sort)
    if h == 1 and w == 1:
        # a single matching cell passes both wires straight through
        return blk.inputs, blk.input_sort

    x_mid = blk.x_lo + (h + 1) // 2
    y_mid = blk.y_lo + (w + 1) // 2
    h1, h2 = x_mid - blk.x_lo, blk.x_hi - x_mid
    w1, w2 = y_mid - blk.y_lo, blk.y_hi - y_mid
    xs_top = tuple(p for p in blk.x_sorted if p[1] < x_mid)
    xs_bot = tuple(p for p in blk.x_sorted if p[1] >= x_mid)
    ys_left = tuple(p for p in blk.y_sorted if p[1] < y_mid)
    ys_right = tuple(p for p in blk.y_sorted if p[1] >= y_mid)
    vals, vsort = blk.inputs, blk.input_sort

    # top-left: upper left-boundary values plus the left half of the top
    # boundary, which is one contiguous slice of this block's inputs
    tl = Block(
        blk.x_lo, x_mid, blk.y_lo, y_mid,
        vals[h2 : h2 + h1 + w1],
        tuple(p - h2 for p in vsort if h2 <= p < h2 + h1 + w1),
        xs_top, ys_left,
    )
    tl_out, tl_osort = _evaluate(tl, stats)

    # top-right: fed on the left by top-left's right outputs
    tr_vals = tl_out[w1:] + vals[h + w1 :]
    tr = Block(
        blk.x_lo, x_mid, y_mid, blk.y_hi,
        tr_vals,
        _merge_desc(
            tr_vals,
            tuple(p - w1 for p in tl_osort if p >= w1),
            tuple(h1 + p - h - w1 for p in vsort if p >= h + w1),
        ),
        xs_top, ys_right,
    )
    tr_out, tr_osort = _evaluate(tr, stats)

    # bottom-left: fed on top by top-left's bottom outputs
    bl_vals = vals[:h2] + tl_out[:w1]
    bl = Block(
        x_mid, blk.x_hi, blk.y_lo, y_mid,
        bl_vals,
        _merge_desc(
            bl_vals,
            tuple(p for p in vsort if p < h2),
            tuple(h2 + p for p in tl_osort if p < w1),
        ),
        xs_bot, ys_left,
    )
    bl_out, bl_osort = _evaluate(bl, stats)

    # bottom-right consumes bottom-left's right and top-right's bottom
    br_vals = bl_out[w1:] + tr_out[:w2]
    br = Block(
        x_mid, blk.x_hi, y_mid, blk.y_hi,
        br_vals,
        _merge_desc(
            br_vals,
            tuple(p - w1 for p in bl_osort if p >= w1),
            tuple(h2 + p for p in tr_osort if p < w2),
        ),
        xs_bot, ys_right,
    )
    br_out, br_osort = _evaluate(br, stats)

    out = bl_out[:w1] + br_out + tr_out[w2:]
    out_sort = _merge_desc(
        out,
        tuple(p for p in bl_osort if p < w1),
        tuple(w1 + p if p < w2 else w + p - w2 for p in br_osort),
        tuple(w + h2 + p - w2 for p in tr_osort if p >= w2),
    )
    return out, out_sort


def sparse_semilocal(x, y, stats=None) -> CriticalPointSet:
    """Seaweed endpoint permutation via the quadtree; equals seaweed_core.

    The root inputs are the start indices themselves (already ascending
    by wire, so their descending order is the plain reversal); sorted
    substring orders are computed once and filtered down the recursion.
    """
    m, n = len(x), len(y)
    if stats is None:
        stats = SparseStats()
    root = Block(
        0, m, 0, n,
        inputs=tuple(range(m + n)),
        input_sort=tuple(range(m + n - 1, -1, -1)),
        x_sorted=tuple(sorted(zip(x, range(m)))),
        y_sorted=tuple(sorted(zip(y, range(n)))),
    )
    out, _ = _evaluate(root, stats)
    end_of = [0] * (m + n)
    for slot, start in enumerate(out):
        end_of[start] = slot
    return CriticalPointSet(m, n, tuple(end_of))
