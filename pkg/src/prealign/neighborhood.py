"""Banded neighborhood map built from shifted bit-plane comparisons.

Diagonal ``d`` (``-e <= d <= e``) is an ``m``-bit integer indexed by text
coordinate: bit ``j - 1`` is 0 iff ``P[j + d] == T[j]`` (1-based), and 1
on a mismatch, on either base being N, or when ``j + d`` falls outside
``1..m``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codec import PackedSequence
from .errors import LengthMismatch, OutOfBand, ThresholdTooLarge


def _shift(value: int, d: int) -> int:
    # bit j of the result holds bit j + d of value
    return value >> d if d >= 0 else value << -d


def diagonal(pattern: PackedSequence, text: PackedSequence, d: int) -> int:
    m = text.length
    full = (1 << m) - 1
    if d >= 0:
        out_of_range = full ^ ((1 << (m - d)) - 1) if d else 0
    else:
        out_of_range = (1 << -d) - 1
    diff = (
        (_shift(pattern.lo, d) ^ text.lo)
        | (_shift(pattern.hi, d) ^ text.hi)
        | _shift(pattern.n_mask, d)
        | text.n_mask
        | out_of_range
    )
    return diff & full


@dataclass(frozen=True)
class NeighborhoodMap:
    m: int
    e: int
    diagonals: tuple[int, ...]

    def diag(self, d: int) -> int:
        """Bit-vector of diagonal ``d``."""
        return self.diagonals[d + self.e]

    def slice(self, d: int, j: int, width: int) -> int:
        """``width`` bits of diagonal ``d`` starting at text column ``j`` (1-based).

        Bits past column ``m`` read as 1.
        """
        bits = self.diagonals[d + self.e] >> (j - 1)
        past_end = self.m - j + 1
        if past_end < width:
            bits |= ((1 << width) - 1) ^ ((1 << max(past_end, 0)) - 1)
        return bits & ((1 << width) - 1)

    def unpacked(self) -> np.ndarray:
        """``(2e + 1, m)`` uint8 array of the diagonals, one entry per column."""
        nbytes = (self.m + 7) // 8
        raw = b"".join(d.to_bytes(nbytes, "little") for d in self.diagonals)
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return bits.reshape(len(self.diagonals), nbytes * 8)[:, : self.m]

    def window_values(self, width: int) -> list[list[int]]:
        """For each diagonal, the ``width``-bit slice starting at every column.

        Equivalent to ``[[slice(d, j, width) for j in 1..m] for d in -e..e]``
        but computed in one linear pass.
        """
        bits = np.ones((len(self.diagonals), self.m + width - 1), dtype=np.int64)
        bits[:, : self.m] = self.unpacked()
        values = np.zeros((len(self.diagonals), self.m), dtype=np.int64)
        for k in range(width):
            values |= bits[:, k : k + self.m] << k
        return values.tolist()

    def bits(self, d: int) -> str:
        """Diagonal ``d`` rendered as a 0/1 string in text order."""
        return format(self.diag(d), f"0{self.m}b")[::-1]


def build_map(pattern: PackedSequence, text: PackedSequence, e: int) -> NeighborhoodMap:
    m = text.length
    if pattern.length != m:
        raise LengthMismatch(pattern.length, m)
    if e < 0 or 2 * e + 1 > 2 * m - 1:
        raise ThresholdTooLarge(e, m)
    diags = tuple(diagonal(pattern, text, d) for d in range(-e, e + 1))
    return NeighborhoodMap(m=m, e=e, diagonals=diags)


def map_entry(nmap: NeighborhoodMap, i: int, j: int) -> int:
    """Entry for pattern index ``i`` and text index ``j`` (both 1-based)."""
    if abs(i - j) > nmap.e:
        raise OutOfBand(i, j, nmap.e)
    if not (1 <= i <= nmap.m and 1 <= j <= nmap.m):
        raise OutOfBand(i, j, nmap.e)
    return (nmap.diag(i - j) >> (j - 1)) & 1
