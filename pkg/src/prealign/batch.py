"""Vectorized Shouji over many equal-length pairs at once.

Same decisions as :func:`prealign.shouji.shouji_filter`, bit for bit; the
per-window work is done across all pairs with numpy while the window
sweep itself stays sequential.
"""

from __future__ import annotations

import numpy as np

from .codec import N_CODE
from .errors import InvalidParameters, LengthMismatch
from .shouji import DEFAULT_WIDTH, check_width


def neighborhood_arrays(patterns: np.ndarray, texts: np.ndarray, e: int, pad: int = 0) -> np.ndarray:
    """Mismatch arrays of shape ``(n, 2e + 1, m + pad)``; padding columns are ones."""
    n, m = texts.shape
    out = np.ones((n, 2 * e + 1, m + pad), dtype=np.uint8)
    t_n = texts == N_CODE
    for k, d in enumerate(range(-e, e + 1)):
        lo, hi = max(0, -d), min(m, m - d)
        if lo >= hi:
            continue
        p = patterns[:, lo + d : hi + d]
        t = texts[:, lo:hi]
        out[:, k, lo:hi] = (p != t) | (p == N_CODE) | t_n[:, lo:hi]
    return out


def shouji_batch(
    patterns: np.ndarray, texts: np.ndarray, e: int, width: int = DEFAULT_WIDTH
) -> tuple[np.ndarray, np.ndarray]:
    """Run Shouji on ``(n, m)`` code arrays.

    Returns ``(accept, bitvectors)`` where ``bitvectors`` is ``(n, m)`` uint8.
    """
    patterns = np.asarray(patterns, dtype=np.uint8)
    texts = np.asarray(texts, dtype=np.uint8)
    if patterns.shape != texts.shape:
        raise LengthMismatch(patterns.shape[-1], texts.shape[-1])
    if e < 0:
        raise InvalidParameters(f"threshold must be non-negative, got {e}")
    check_width(width)
    n, m = texts.shape
    if e >= m:
        return np.ones(n, dtype=bool), np.zeros((n, m), dtype=np.uint8)

    diags = neighborhood_arrays(patterns, texts, e, pad=width - 1)
    zeros = 1 - diags
    csum = np.zeros((n, 2 * e + 1, m + width), dtype=np.int16)
    np.cumsum(zeros, axis=2, out=csum[:, :, 1:])
    win_zeros = csum[:, :, width : width + m] - csum[:, :, :m]
    # max zeros, then leading zero, then first diagonal (argmax returns the first maximum)
    key = 2 * win_zeros + zeros[:, :, :m]
    choice = np.argmax(key, axis=1)
    chosen_zeros = np.take_along_axis(win_zeros, choice[:, None, :], axis=1)[:, 0, :]

    rows = np.arange(n)
    offsets = np.arange(width)
    bv = np.ones((n, m + width - 1), dtype=np.uint8)
    for j in range(m):
        window = bv[:, j : j + width]
        better = chosen_zeros[:, j] > width - window.sum(axis=1)
        if not better.any():
            continue
        idx = rows[better]
        window[idx] = diags[idx[:, None], choice[idx, j][:, None], j + offsets]
    bits = bv[:, :m]
    return bits.sum(axis=1) <= e, np.ascontiguousarray(bits)
