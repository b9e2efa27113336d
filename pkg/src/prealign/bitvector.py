from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BitVector:
    """Length-``m`` accumulator; bit ``j - 1`` holds column ``j``. Ones count as edits."""

    m: int
    bits: int

    @classmethod
    def ones(cls, m: int) -> "BitVector":
        return cls(m, (1 << m) - 1)

    def count_ones(self) -> int:
        return self.bits.bit_count()

    def count_zeros(self) -> int:
        return self.m - self.count_ones()

    def __str__(self):
        return format(self.bits, f"0{self.m}b")[::-1]


# Names used by the two filters; both are plain length-m bit-vectors.
ShoujiBitVector = BitVector
MagnetBitVector = BitVector


@dataclass(frozen=True)
class FilterDecision:
    accept: bool
    edit_estimate: int
    bitvector: BitVector

    @property
    def wire(self) -> str:
        return "1" if self.accept else "0"
