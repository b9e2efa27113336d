"""MAGNET pre-alignment filter.

MAGNET repeatedly extracts the longest zero run found on any diagonal of
the neighborhood map, copies it into the MAGNET bit-vector, walls it off
with one encapsulating mismatch on each side, and recurses on the parts
to its left and right. At most ``e + 1`` runs are extracted. The pair is
accepted when the bit-vector holds at least ``m - e`` zeros.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitvector import BitVector, FilterDecision
from .codec import PackedSequence
from .errors import InvalidParameters, LengthMismatch
from .neighborhood import build_map


def _range_mask(lo: int, hi: int) -> int:
    # bits for 1-based columns lo..hi
    if lo > hi:
        return 0
    return ((1 << (hi - lo + 1)) - 1) << (lo - 1)


def longest_zero_run(bits: int, lo: int, hi: int) -> tuple[int, int]:
    """Earliest longest run of zero bits within columns ``lo..hi`` (1-based).

    Returns ``(start, length)``; ``(lo, 0)`` when the range holds no zero.
    """
    runs = ~bits & _range_mask(lo, hi)
    if not runs:
        return lo, 0
    # after k steps, bit s is set iff columns s..s+k are all zero
    length = 1
    while True:
        longer = runs & (runs >> 1)
        if not longer:
            break
        runs = longer
        length += 1
    start = (runs & -runs).bit_length()
    return start, length


@dataclass(frozen=True)
class Extraction:
    diagonal: int
    start: int
    len: int
    bounds: tuple[int, int]


@dataclass
class _State:
    diagonals: list[int]
    e: int
    m: int
    budget: int
    bv: int
    extractions: list[Extraction] = field(default_factory=list)


def _scan_order(e: int):
    # smaller |d| first, -|d| before +|d|
    yield 0
    for k in range(1, e + 1):
        yield -k
        yield k


def _extract(state: _State, lo: int, hi: int) -> None:
    if state.budget <= 0 or lo > hi:
        return
    best = None
    for d in _scan_order(state.e):
        start, length = longest_zero_run(state.diagonals[d + state.e], lo, hi)
        # strict > keeps the earlier diagonal in scan order on equal lengths
        if length and (best is None or length > best[2]):
            best = (d, start, length)
    if best is None:
        return
    d, start, length = best
    state.budget -= 1
    state.extractions.append(Extraction(d, start, length, (lo, hi)))
    end = start + length - 1
    state.bv &= ~_range_mask(start, end)
    # flanking columns inside [lo, hi] stay ones in the bit-vector and get masked out of every diagonal
    wall = _range_mask(max(start - 1, lo), min(end + 1, hi))
    state.diagonals = [diag | wall for diag in state.diagonals]
    _extract(state, lo, start - 2)
    _extract(state, end + 2, hi)


def exen(diagonals: list[int], e: int, m: int, lo: int, hi: int, remaining: int, bv: BitVector):
    """Extract-and-encapsulate recursion over columns ``lo..hi``.

    ``diagonals`` is the map's ``2e + 1`` diagonal bit-vectors ordered
    ``d = -e..+e``; it is copied, never mutated. Returns the updated
    bit-vector and the list of extractions in the order they happened.
    """
    state = _State(list(diagonals), e, m, remaining, bv.bits)
    _extract(state, lo, hi)
    return BitVector(bv.m, state.bv), state.extractions


def magnet_filter(pattern: PackedSequence, text: PackedSequence, e: int, with_trace: bool = False):
    m = text.length
    if pattern.length != m:
        raise LengthMismatch(pattern.length, m)
    if e < 0:
        raise InvalidParameters(f"threshold must be non-negative, got {e}")
    if e >= m:
        decision = FilterDecision(True, 0, BitVector(m, 0))
        return (decision, []) if with_trace else decision
    nmap = build_map(pattern, text, e)
    bv, extractions = exen(nmap.diagonals, e, m, 1, m, e + 1, BitVector.ones(m))
    zeros = bv.count_zeros()
    decision = FilterDecision(zeros >= m - e, m - zeros, bv)
    return (decision, extractions) if with_trace else decision
