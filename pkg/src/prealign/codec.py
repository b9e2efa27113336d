"""Validation and 2-bit packing of DNA sequences.

Bases are stored as two bit-planes (low and high bit of the code
A=00, C=01, G=10, T=11) plus an N-mask plane. Each plane is a Python
``int`` where bit ``k`` holds base ``k`` (0-based), so whole-sequence
shifts and XORs are single big-integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptySequence, IllegalCharacter

_LOOKUP = np.full(256, 255, dtype=np.uint8)
for _code, _chars in enumerate(("Aa", "Cc", "Gg", "Tt", "Nn")):
    for _c in _chars:
        _LOOKUP[ord(_c)] = _code

#: code used for N in unpacked code arrays
N_CODE = 4
_ALPHABET = np.frombuffer(b"ACGTN", dtype=np.uint8)


def _plane(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def _unplane(value: int, length: int) -> np.ndarray:
    raw = np.frombuffer(value.to_bytes((length + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:length]


@dataclass(frozen=True)
class PackedSequence:
    """Immutable 2-bit packed DNA sequence with an N-mask."""

    length: int
    lo: int
    hi: int
    n_mask: int

    def __len__(self):
        return self.length

    def codes(self) -> np.ndarray:
        """Per-base codes 0..3 for ACGT and 4 for N, as a uint8 array."""
        lo = _unplane(self.lo, self.length)
        hi = _unplane(self.hi, self.length)
        n = _unplane(self.n_mask, self.length)
        out = lo | (hi << 1)
        out[n.astype(bool)] = N_CODE
        return out

    def storage_bits(self) -> int:
        return self.lo.bit_length() + self.hi.bit_length() + self.n_mask.bit_length()

    def __str__(self):
        return decode(self)


def encode_codes(codes: np.ndarray) -> PackedSequence:
    codes = np.asarray(codes, dtype=np.uint8)
    if codes.size == 0:
        raise EmptySequence()
    n = codes == N_CODE
    base = np.where(n, 0, codes)
    return PackedSequence(
        length=int(codes.size),
        lo=_plane(base & 1),
        hi=_plane(base >> 1),
        n_mask=_plane(n.astype(np.uint8)),
    )


def to_codes(raw: str | bytes) -> np.ndarray:
    """Map an ASCII sequence to uint8 codes, raising on any byte outside ACGTN."""
    if isinstance(raw, str):
        try:
            raw = raw.encode("ascii")
        except UnicodeEncodeError:
            for pos, ch in enumerate(raw):
                if ord(ch) > 127:
                    raise IllegalCharacter(pos, ch) from None
            raise
    if not raw:
        raise EmptySequence()
    codes = _LOOKUP[np.frombuffer(raw, dtype=np.uint8)]
    bad = np.flatnonzero(codes == 255)
    if bad.size:
        pos = int(bad[0])
        raise IllegalCharacter(pos, chr(raw[pos]))
    return codes


def validate_and_encode(raw: str | bytes) -> PackedSequence:
    """Validate an ASCII DNA string and pack it.

    Lowercase is accepted and normalized. Raises :class:`EmptySequence`
    for empty input and :class:`IllegalCharacter` for the first byte
    outside ``ACGTNacgtn``.
    """
    return encode_codes(to_codes(raw))


def decode(seq: PackedSequence) -> str:
    return _ALPHABET[seq.codes()].tobytes().decode("ascii")
