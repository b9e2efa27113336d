"""Pair datasets: the TSV pair format and a seeded synthetic generator.

A pair file holds one candidate pair per line, ``TEXT<TAB>PATTERN<LF>``,
ASCII, no header. Both columns must have the same length.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import BinaryIO, Iterable, Optional, Union

import numpy as np

from ..codec import PackedSequence, decode, encode_codes, to_codes
from ..errors import InvalidParameters, LengthMismatch, ParseError, PrealignError


@dataclass
class PairDataset:
    """Ordered ``(text, pattern)`` pairs sharing one length ``m``."""

    pairs: list[tuple[PackedSequence, PackedSequence]]
    source: str
    m: int
    _texts: Optional[np.ndarray] = field(default=None, repr=False)
    _patterns: Optional[np.ndarray] = field(default=None, repr=False)

    def __len__(self):
        return len(self.pairs)

    def texts(self) -> np.ndarray:
        if self._texts is None:
            self._texts = np.stack([t.codes() for t, _ in self.pairs])
        return self._texts

    def patterns(self) -> np.ndarray:
        if self._patterns is None:
            self._patterns = np.stack([p.codes() for _, p in self.pairs])
        return self._patterns

    @classmethod
    def from_codes(cls, texts: np.ndarray, patterns: np.ndarray, source: str) -> "PairDataset":
        pairs = [(encode_codes(t), encode_codes(p)) for t, p in zip(texts, patterns)]
        return cls(pairs, source, texts.shape[1], np.asarray(texts), np.asarray(patterns))


def load_pairs(source: Union[BinaryIO, Iterable[bytes]], name: str = "<stream>") -> PairDataset:
    texts, patterns = [], []
    m = None
    for lineno, raw in enumerate(source, 1):
        line = raw.rstrip(b"\n").rstrip(b"\r")
        if not line:
            raise ParseError(lineno, "blank line")
        cols = line.split(b"\t")
        if len(cols) != 2:
            raise ParseError(lineno, f"expected 2 tab-separated columns, found {len(cols)}")
        try:
            text, pattern = to_codes(cols[0]), to_codes(cols[1])
        except PrealignError as exc:
            raise ParseError(lineno, str(exc)) from exc
        if text.size != pattern.size:
            raise LengthMismatch(text.size, pattern.size, line=lineno)
        if m is None:
            m = text.size
        elif text.size != m:
            raise LengthMismatch(m, text.size, line=lineno)
        texts.append(text)
        patterns.append(pattern)
    if not texts:
        raise ParseError(0, "no pairs in input")
    return PairDataset.from_codes(np.stack(texts), np.stack(patterns), name)


def write_pairs(dataset: PairDataset, out: BinaryIO) -> None:
    for text, pattern in dataset.pairs:
        out.write(f"{decode(text)}\t{decode(pattern)}\n".encode("ascii"))


@dataclass(frozen=True)
class EditSpec:
    """Planted-edit count drawn uniformly from ``lo..hi`` (inclusive)."""

    lo: int
    hi: int

    @classmethod
    def parse(cls, spec: Union[str, int, "EditSpec"]) -> "EditSpec":
        if isinstance(spec, EditSpec):
            return spec
        if isinstance(spec, int):
            return cls(spec, spec)
        match = re.fullmatch(r"\s*(\d+)\s*(?:-\s*(\d+)\s*)?", spec)
        if not match:
            raise InvalidParameters(f"bad edit spec {spec!r}; expected K or A-B")
        lo = int(match.group(1))
        hi = int(match.group(2)) if match.group(2) is not None else lo
        if lo > hi:
            raise InvalidParameters(f"bad edit spec {spec!r}; range is empty")
        return cls(lo, hi)

    def __str__(self):
        return str(self.lo) if self.lo == self.hi else f"{self.lo}-{self.hi}"


def plant_edits(text: np.ndarray, count: int, rng: np.random.Generator) -> np.ndarray:
    """Derive a same-length pattern from ``text`` with at most ``count`` edits.

    Substitutions always change the base. An insertion or deletion is only
    chosen while the edits used plus the net length change still fit in
    ``count``; the net change is then undone by trimming or padding the
    end, so ``count`` bounds the edit distance.
    """
    m = text.size
    seq = text.tolist()
    used = net = 0
    while used + abs(net) < count:
        op = rng.integers(3)
        if op == 1 and used + 1 + abs(net + 1) <= count:
            seq.insert(int(rng.integers(len(seq) + 1)), int(rng.integers(4)))
            net += 1
        elif op == 2 and len(seq) > 1 and used + 1 + abs(net - 1) <= count:
            del seq[int(rng.integers(len(seq)))]
            net -= 1
        else:
            pos = int(rng.integers(len(seq)))
            seq[pos] = (seq[pos] + 1 + int(rng.integers(3))) % 4
        used += 1
    if net > 0:
        del seq[m:]
    elif net < 0:
        seq.extend(int(b) for b in rng.integers(4, size=-net))
    return np.asarray(seq, dtype=np.uint8)


def generate_pairs(seed: int, count: int, m: int, edits: Union[str, int, EditSpec]) -> PairDataset:
    """Random texts with patterns derived by planting edits; deterministic per seed."""
    spec = EditSpec.parse(edits)
    if m < 1 or count < 1:
        raise InvalidParameters(f"need m >= 1 and count >= 1, got m={m}, count={count}")
    if spec.hi > m:
        raise InvalidParameters(f"edit count {spec.hi} exceeds sequence length {m}")
    rng = np.random.default_rng(seed)
    texts = rng.integers(4, size=(count, m), dtype=np.uint8)
    planted = rng.integers(spec.lo, spec.hi + 1, size=count)
    patterns = np.empty_like(texts)
    for i in range(count):
        patterns[i] = plant_edits(texts[i], int(planted[i]), rng)
    return PairDataset.from_codes(texts, patterns, f"gen:seed={seed},count={count},len={m},edits={spec}")
