"""Shouji pre-alignment filter (scalar reference path).

The sweep slides a ``width``-column window one column at a time over the
neighborhood map. In each window the diagonal slice with the most zeros is
picked, and it overwrites the matching slice of the Shouji bit-vector only
when it holds strictly more zeros than what is stored there. The pair is
accepted when the final bit-vector holds at most ``e`` ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .bitvector import BitVector, FilterDecision
from .codec import PackedSequence
from .errors import InvalidParameters, LengthMismatch
from .neighborhood import NeighborhoodMap, build_map

DEFAULT_WIDTH = 4
MIN_WIDTH, MAX_WIDTH = 3, 8


@lru_cache(maxsize=None)
def zeros_table(width: int) -> tuple[int, ...]:
    """Zero count of every ``width``-bit value, indexed by the value."""
    return tuple(width - bin(v).count("1") for v in range(1 << width))


def count_zeros_nibble(slice_bits: int, width: int = DEFAULT_WIDTH) -> int:
    return zeros_table(width)[slice_bits]


@dataclass(frozen=True)
class WindowChoice:
    diagonal: int
    slice: int
    zeros: int

    def render(self, width: int) -> str:
        return format(self.slice, f"0{width}b")[::-1]


@lru_cache(maxsize=None)
def _keys(width: int) -> tuple[int, ...]:
    # rank of a slice: zeros first, a leading (lowest-column) zero breaks ties
    return tuple(2 * z + (1 - (v & 1)) for v, z in enumerate(zeros_table(width)))


@lru_cache(maxsize=None)
def _slice_bytes(width: int) -> tuple[bytes, ...]:
    return tuple(bytes((v >> k) & 1 for k in range(width)) for v in range(1 << width))


def _best(slices, e: int, width: int) -> WindowChoice:
    keys = _keys(width)
    best_key = -1
    best_k = 0
    for k, s in enumerate(slices):
        if keys[s] > best_key:
            best_key, best_k = keys[s], k
    return WindowChoice(best_k - e, slices[best_k], best_key >> 1)


def select_window(nmap: NeighborhoodMap, j: int, width: int = DEFAULT_WIDTH) -> WindowChoice:
    """Best diagonal slice for the window starting at text column ``j`` (1-based).

    Most zeros wins; among equally good slices the first one, scanning
    ``d = -e..+e``, whose leading bit is 0; failing that the first one.
    """
    slices = [nmap.slice(d, j, width) for d in range(-nmap.e, nmap.e + 1)]
    return _best(slices, nmap.e, width)


def _commit(buf: bytearray, j: int, value: int, zeros: int, width: int) -> bool:
    # buf holds one byte per column (0-based); only columns inside buf are compared and written
    span = min(width, len(buf) - j)
    if zeros <= span - sum(buf[j : j + span]):
        return False
    buf[j : j + span] = _slice_bytes(width)[value][:span]
    return True


def _to_int(buf: bytearray) -> int:
    return int.from_bytes(np.packbits(np.frombuffer(bytes(buf), dtype=np.uint8), bitorder="little").tobytes(), "little")


def commit_window(bv: BitVector, j: int, choice: WindowChoice, width: int = DEFAULT_WIDTH) -> BitVector:
    """Store ``choice`` at column ``j`` if it has strictly more zeros than the stored slice.

    Only columns ``j..m`` are compared and written.
    """
    buf = bytearray((bv.bits >> k) & 1 for k in range(bv.m))
    if not _commit(buf, j - 1, choice.slice, choice.zeros, width):
        return bv
    return BitVector(bv.m, _to_int(buf))


def sweep(
    nmap: NeighborhoodMap,
    width: int = DEFAULT_WIDTH,
    on_commit: Optional[Callable[[int, WindowChoice, BitVector], None]] = None,
) -> BitVector:
    """Run all ``m`` windows over ``nmap`` and return the Shouji bit-vector.

    ``on_commit(j, choice, bv)`` is called after every window, for tracing.
    """
    m, e = nmap.m, nmap.e
    keys = _keys(width)
    table = zeros_table(width)
    slice_bytes = _slice_bytes(width)
    top = width - 1
    # one tuple of incoming bits per column, past-the-end columns read as ones
    bits = np.ones((len(nmap.diagonals), m + width), dtype=np.uint8)
    bits[:, :m] = nmap.unpacked()
    incoming = list(zip(*bits.tolist()))
    # per-diagonal shift registers preloaded so the first shift yields window 1
    regs = [0] * len(nmap.diagonals)
    for c in range(top):
        regs = [r | (b << (c + 1)) for r, b in zip(regs, incoming[c])]
    rows = range(len(regs))
    buf = bytearray(b"\x01") * (m + width)
    stored = (1 << width) - 1
    for j in range(m):
        column = incoming[j + top]
        best_key = -1
        best_k = 0
        for k in rows:
            reg = (regs[k] >> 1) | (column[k] << top)
            regs[k] = reg
            key = keys[reg]
            if key > best_key:
                best_key = key
                best_k = k
        # stored holds the bit-vector's columns j..j+width-1; commit only on strictly more zeros
        if best_key >> 1 > table[stored]:
            stored = regs[best_k]
            buf[j : j + width] = slice_bytes[stored]
        if on_commit is not None:
            on_commit(j + 1, WindowChoice(best_k - e, regs[best_k], best_key >> 1),
                      BitVector(m, _to_int(buf[:m])))
        stored = (stored >> 1) | (buf[j + width] << top)
    return BitVector(m, _to_int(buf[:m]))


def check_width(width: int) -> None:
    if not MIN_WIDTH <= width <= MAX_WIDTH:
        raise InvalidParameters(f"window width must be in [{MIN_WIDTH}, {MAX_WIDTH}], got {width}")


def shouji_filter(
    pattern: PackedSequence, text: PackedSequence, e: int, width: int = DEFAULT_WIDTH
) -> FilterDecision:
    m = text.length
    if pattern.length != m:
        raise LengthMismatch(pattern.length, m)
    if e < 0:
        raise InvalidParameters(f"threshold must be non-negative, got {e}")
    check_width(width)
    if e >= m:
        return FilterDecision(True, 0, BitVector(m, 0))
    bv = sweep(build_map(pattern, text, e), width)
    ones = bv.count_ones()
    return FilterDecision(ones <= e, ones, bv)
