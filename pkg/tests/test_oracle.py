import random
from functools import lru_cache

import numpy as np
import pytest

from prealign.codec import to_codes, validate_and_encode as enc
from prealign.errors import LengthMismatch
from prealign.oracle import AlignmentVerdict, banded_distances, banded_edit_distance, full_edit_distance

from conftest import FIG1_PATTERN, FIG1_TEXT, mutate, naive_edit_distance, random_dna


def recursive_distance(a: str, b: str) -> int:
    @lru_cache(maxsize=None)
    def d(i, j):
        if i == 0 or j == 0:
            return i + j
        same = a[i - 1] == b[j - 1] and a[i - 1] != "N"
        return min(d(i - 1, j) + 1, d(i, j - 1) + 1, d(i - 1, j - 1) + (not same))

    return d(len(a), len(b))


def test_fig1_distance_is_four():
    # GGTG, AGAG and T cover only 9 of 12 columns, and a 3-edit alignment of
    # two length-12 strings would need 9 matches on one diagonal
    assert recursive_distance(FIG1_PATTERN, FIG1_TEXT) == 4
    assert full_edit_distance(enc(FIG1_PATTERN), enc(FIG1_TEXT)) == 4


@pytest.mark.parametrize("a,b,d", [("AAAA", "AAAA", 0), ("ACGT", "ACGA", 1), ("ACGT", "CGTA", 2), ("ACGT", "AC", 2)])
def test_full_examples(a, b, d):
    assert full_edit_distance(enc(a), enc(b)) == d


def test_banded_examples():
    s = enc("ACGTACGT")
    assert banded_edit_distance(s, s, 0) == AlignmentVerdict(True, 0)
    p, t = enc(FIG1_PATTERN), enc(FIG1_TEXT)
    assert banded_edit_distance(p, t, 4) == AlignmentVerdict(True, 4)
    assert banded_edit_distance(p, t, 3) == AlignmentVerdict(False)
    assert banded_edit_distance(p, t, 2) == AlignmentVerdict(False)
    with pytest.raises(LengthMismatch):
        banded_edit_distance(enc("ACGT"), enc("ACG"), 1)


def test_n_costs_a_substitution():
    assert full_edit_distance(enc("ANA"), enc("ANA")) == 1
    assert banded_edit_distance(enc("NN"), enc("NN"), 2) == AlignmentVerdict(True, 2)


def test_full_matches_recursion():
    rng = random.Random(1)
    for _ in range(300):
        a = random_dna(rng, rng.randint(1, 12), "ACGTN")
        b = random_dna(rng, rng.randint(1, 12), "ACGTN")
        assert full_edit_distance(enc(a), enc(b)) == recursive_distance(a, b)


def test_banded_agrees_with_full():
    rng = random.Random(17)
    for _ in range(10_000):
        m = rng.randint(1, 64)
        e = rng.randint(0, 10)
        t = random_dna(rng, m)
        p = mutate(rng, t, rng.randint(0, 12)) if rng.random() < 0.9 else random_dna(rng, m)
        full = naive_edit_distance(p, t)
        verdict = banded_edit_distance(enc(p), enc(t), e)
        if full <= e:
            assert verdict == AlignmentVerdict(True, full)
        else:
            assert verdict == AlignmentVerdict(False)


def test_metric_properties():
    rng = random.Random(23)
    for _ in range(300):
        m = rng.randint(1, 30)
        a = random_dna(rng, m)
        b = mutate(rng, a, rng.randint(0, 6))
        c = mutate(rng, b, rng.randint(0, 6))
        ab = full_edit_distance(enc(a), enc(b))
        assert ab == full_edit_distance(enc(b), enc(a))
        assert full_edit_distance(enc(a), enc(c)) <= ab + full_edit_distance(enc(b), enc(c))
        assert full_edit_distance(enc(a), enc(a)) == 0


def test_batch_matches_scalar():
    rng = random.Random(31)
    for _ in range(200):
        m = rng.randint(1, 40)
        e = rng.randint(0, 12)
        texts, patterns, expected = [], [], []
        for _ in range(8):
            t = random_dna(rng, m, "ACGTN" if rng.random() < 0.2 else "ACGT")
            p = mutate(rng, t, rng.randint(0, 8))
            texts.append(to_codes(t))
            patterns.append(to_codes(p))
            v = banded_edit_distance(enc(p), enc(t), e)
            expected.append(v.distance if v.within_threshold else e + 1)
        got = banded_distances(np.stack(patterns), np.stack(texts), e)
        assert got.tolist() == expected
