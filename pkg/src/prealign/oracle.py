"""Ground-truth unit-cost Levenshtein distance.

An N position costs a substitution against every base, N included, the
same rule the filters apply.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .codec import N_CODE, PackedSequence
from .errors import InvalidParameters, LengthMismatch


@dataclass(frozen=True)
class AlignmentVerdict:
    within_threshold: bool
    distance: Optional[int] = None


def _codes(seq) -> list[int]:
    if isinstance(seq, PackedSequence):
        return seq.codes().tolist()
    return list(seq)


def full_edit_distance(pattern, text) -> int:
    """Quadratic-time Levenshtein distance; lengths may differ."""
    a, b = _codes(pattern), _codes(text)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i] + [0] * len(b)
        for j, cb in enumerate(b, 1):
            sub = prev[j - 1] + (ca != cb or ca == N_CODE)
            cur[j] = min(sub, prev[j] + 1, cur[j - 1] + 1)
        prev = cur
    return prev[-1]


def banded_edit_distance(pattern, text, e: int) -> AlignmentVerdict:
    """Levenshtein distance restricted to the ``2e + 1`` diagonals around the main one."""
    a, b = _codes(pattern), _codes(text)
    m = len(b)
    if len(a) != m:
        raise LengthMismatch(len(a), m)
    if e < 0:
        raise InvalidParameters(f"threshold must be non-negative, got {e}")
    band = min(e, m)
    inf = band + 1
    # row[k] holds column j = i + k - band
    width = 2 * band + 1
    prev = [k - band if k >= band else inf for k in range(width)]
    for i in range(1, m + 1):
        ca = a[i - 1]
        cur = [inf] * width
        for k in range(width):
            j = i + k - band
            if j < 0 or j > m:
                continue
            if j == 0:
                cur[k] = min(i, inf)
                continue
            cb = b[j - 1]
            best = prev[k] + (ca != cb or ca == N_CODE)
            if k + 1 < width and prev[k + 1] + 1 < best:
                best = prev[k + 1] + 1
            if k > 0 and cur[k - 1] + 1 < best:
                best = cur[k - 1] + 1
            cur[k] = min(best, inf)
        if min(cur) > band:
            return AlignmentVerdict(False)
        prev = cur
    dist = prev[band]
    if dist <= e:
        return AlignmentVerdict(True, dist)
    return AlignmentVerdict(False)


def banded_distances(patterns: np.ndarray, texts: np.ndarray, e: int) -> np.ndarray:
    """Banded distances for a batch of equal-length pairs.

    ``patterns`` and ``texts`` are ``(n, m)`` uint8 code arrays. Returns an
    int array where entries above ``e`` are reported as ``e + 1``.
    """
    patterns = np.asarray(patterns, dtype=np.uint8)
    texts = np.asarray(texts, dtype=np.uint8)
    if patterns.shape != texts.shape:
        raise LengthMismatch(patterns.shape[-1], texts.shape[-1])
    n, m = texts.shape
    band = min(e, m)
    cap = band + 1
    width = 2 * band + 1
    ks = np.arange(width)
    # sentinel column so out-of-range lookups stay in bounds
    tpad = np.concatenate([np.full((n, band + 1), N_CODE, np.uint8), texts,
                           np.full((n, band + 1), N_CODE, np.uint8)], axis=1)
    prev = np.where(ks >= band, ks - band, cap).astype(np.int32)
    prev = np.broadcast_to(prev, (n, width)).copy()
    up = np.empty_like(prev)
    for i in range(1, m + 1):
        j = i + ks - band
        cols = tpad[:, j + band]  # text[j - 1] shifted by the left pad of band + 1
        pa = patterns[:, i - 1 : i]
        cost = ((cols != pa) | (pa == N_CODE)).astype(np.int32)
        cur = prev + cost
        up[:, :-1] = prev[:, 1:] + 1
        up[:, -1] = cap
        np.minimum(cur, up, out=cur)
        cur[:, j < 0] = cap
        cur[:, j == 0] = min(i, cap)
        # horizontal chain: cur[k] = min over l <= k of cur[l] + (k - l)
        cur = np.minimum.accumulate(cur - ks, axis=1) + ks
        cur[:, j > m] = cap
        np.minimum(cur, cap, out=cur)
        prev = cur
    return prev[:, band].astype(np.int64)
