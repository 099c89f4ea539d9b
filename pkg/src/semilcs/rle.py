"""Comparison of run-length compressed strings at run-boundary cost.

The run grid splits the network into uniform blocks: where the two runs
share a symbol the block is all matches and passes its wires straight
through; otherwise it is a pure diamond and diamond_outputs evaluates it
from the boundary.  Either way one block costs O(|run_x| + |run_y|), for
O(xruns*n + m*yruns) overall on decoded lengths m, n.

Also home to the RLE text format used by the command line: compact
"a3b2" or one "symbol,count" pair per line (the parser accepts both, the
emitter writes the compact form).
"""

import re
from dataclasses import dataclass

from .core import CriticalPointSet
from .netsim import DiamondInstance, DiamondStats, diamond_outputs
from .sparse import _merge_desc, merge_output_sort


@dataclass(frozen=True)
class RleString:
    """Canonical run-length form: (symbol, length) pairs, adjacent symbols distinct."""

    runs: tuple

    def __post_init__(self):
        for sym, length in self.runs:
            if length < 1:
                raise ValueError(f"run of {sym!r} has non-positive length {length}")
        for (a, _), (b, _) in zip(self.runs, self.runs[1:]):
            if a == b:
                raise ValueError(f"adjacent runs share the symbol {a!r}")

    @property
    def run_count(self) -> int:
        return len(self.runs)

    @property
    def uncompressed_length(self) -> int:
        return sum(length for _, length in self.runs)


def rle_encode(s) -> RleString:
    """Collapse repeats into (symbol, length) runs; inverse of rle_decode."""
    runs = []
    for sym in s:
        if runs and runs[-1][0] == sym:
            runs[-1][1] += 1
        else:
            runs.append([sym, 1])
    return RleString(tuple((sym, length) for sym, length in runs))


def rle_decode(r) -> list:
    """Expand the runs back into a flat list of symbols."""
    out = []
    for sym, length in r.runs:
        out.extend([sym] * length)
    return out


_COMPACT_RUN = re.compile(r"([^\d\s])(\d+)")


def parse_rle_text(text) -> RleString:
    """Parse compact 'a3b2' text or 'symbol,count' lines into an RleString."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    runs = []
    if any("," in ln for ln in lines):
        for ln in lines:
            sym, _, count = ln.partition(",")
            count = count.strip()
            if not sym or not count.isdigit():
                raise ValueError(f"bad run line {ln!r}, expected symbol,count")
            runs.append((sym, int(count)))
    else:
        compact = "".join(lines)
        pos = 0
        while pos < len(compact):
            run = _COMPACT_RUN.match(compact, pos)
            if run is None:
                raise ValueError(f"bad compact run text at {compact[pos:]!r}")
            runs.append((run.group(1), int(run.group(2))))
            pos = run.end()
    return RleString(tuple(runs))


def format_rle_text(r) -> str:
    """Compact text form; symbols must render as single non-digit characters."""
    parts = []
    for sym, length in r.runs:
        ch = sym if isinstance(sym, str) else chr(sym)
        if len(ch) != 1 or ch.isdigit() or ch.isspace():
            raise ValueError(f"cannot write symbol {sym!r} in compact form")
        parts.append(f"{ch}{length}")
    return "".join(parts)


@dataclass
class RleStats:
    """Work accounting: boundary units plus diamond loop steps per block."""

    blocks: int = 0
    work_units: int = 0


def rle_semilocal(X, Y, stats=None) -> CriticalPointSet:
    """Seaweed endpoint permutation of the decoded strings.

    Identical output to seaweed_core(rle_decode(X), rle_decode(Y)); block
    boundaries are threaded right and down through the run grid in
    row-major order, each with its descending value order so diamonds
    stay linear in the boundary.
    """
    if stats is None:
        stats = RleStats()
    m = X.uncompressed_length
    n = Y.uncompressed_length
    end_of = [0] * (m + n)

    top_vals = []
    top_sorts = []
    col = 0
    for _, length in Y.runs:
        top_vals.append(tuple(range(m + col, m + col + length)))
        top_sorts.append(tuple(range(length - 1, -1, -1)))
        col += length

    dstats = DiamondStats()
    row = 0
    for x_sym, la in X.runs:
        carry_vals = tuple(range(m - row - la, m - row))
        carry_sort = tuple(range(la - 1, -1, -1))
        for b, (y_sym, lb) in enumerate(Y.runs):
            stats.blocks += 1
            stats.work_units += la + lb
            vals = carry_vals + top_vals[b]
            vsort = _merge_desc(vals, carry_sort, tuple(la + p for p in top_sorts[b]))
            if x_sym == y_sym:
                # all-match block: every wire passes straight through
                out, osort = vals, vsort
            else:
                inst = DiamondInstance(la, lb, vals, vsort)
                raw, route = diamond_outputs(inst, stats=dstats)
                out = tuple(raw)
                osort = merge_output_sort(route, vsort)
            top_vals[b] = out[:lb]
            top_sorts[b] = tuple(p for p in osort if p < lb)
            carry_vals = out[lb:]
            carry_sort = tuple(p - lb for p in osort if p >= lb)
        for k, start in enumerate(carry_vals):
            end_of[start] = m + n - row - la + k
        row += la

    col = 0
    for b, (_, length) in enumerate(Y.runs):
        for k, start in enumerate(top_vals[b]):
            end_of[start] = col + k
        col += length

    stats.work_units += dstats.steps
    return CriticalPointSet(m, n, tuple(end_of))
