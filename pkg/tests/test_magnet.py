import random

import pytest

from prealign.bitvector import BitVector
from prealign.codec import validate_and_encode as enc
from prealign.errors import LengthMismatch
from prealign.magnet import exen, longest_zero_run, magnet_filter
from prealign.neighborhood import build_map

from conftest import FIG1_PATTERN, FIG1_TEXT, mutate, random_dna


def bits(s: str) -> int:
    return int(s[::-1], 2)


def naive_longest(s: str, lo: int, hi: int):
    best = (lo, 0)
    j = lo
    while j <= hi:
        if s[j - 1] == "0":
            k = j
            while k <= hi and s[k - 1] == "0":
                k += 1
            if k - j > best[1]:
                best = (j, k - j)
            j = k
        else:
            j += 1
    return best


@pytest.mark.parametrize(
    "s,lo,hi,expected",
    [
        ("11111", 1, 5, (1, 0)),
        ("1001101", 1, 7, (2, 2)),
        ("0011001100", 1, 10, (1, 2)),
        ("0011001100", 2, 10, (5, 2)),
        ("000", 3, 2, (3, 0)),
    ],
)
def test_longest_zero_run(s, lo, hi, expected):
    assert longest_zero_run(bits(s), lo, hi) == expected


def test_longest_zero_run_matches_naive():
    rng = random.Random(2)
    for _ in range(2000):
        m = rng.randint(1, 70)
        s = "".join(rng.choice("0111" if rng.random() < 0.5 else "01") for _ in range(m))
        lo = rng.randint(1, m)
        hi = rng.randint(lo - 1, m)
        assert longest_zero_run(bits(s), lo, hi) == naive_longest(s, lo, hi)


def test_exen_all_ones():
    diags = [bits("1" * 8)] * 3
    bv, ex = exen(diags, 1, 8, 1, 8, 2, BitVector.ones(8))
    assert bv == BitVector.ones(8) and ex == []


def test_exen_identical_pair():
    s = enc("ACGTACGTAA")
    nmap = build_map(s, s, 2)
    bv, ex = exen(nmap.diagonals, 2, 10, 1, 10, 1, BitVector.ones(10))
    assert bv.bits == 0
    assert [(x.diagonal, x.start, x.len) for x in ex] == [(0, 1, 10)]


def test_exen_does_not_mutate_input():
    nmap = build_map(enc(FIG1_PATTERN), enc(FIG1_TEXT), 3)
    diags = list(nmap.diagonals)
    exen(diags, 3, 12, 1, 12, 4, BitVector.ones(12))
    assert diags == list(nmap.diagonals)


def test_fig1_trace():
    decision, ex = magnet_filter(enc(FIG1_PATTERN), enc(FIG1_TEXT), 3, with_trace=True)
    assert [x.len for x in ex] == [4, 4, 1]
    assert [(x.diagonal, x.start) for x in ex] == [(0, 1), (-1, 6), (-1, 11)]
    assert decision.bitvector.count_zeros() == 9
    assert decision.accept and decision.edit_estimate == 3
    assert str(decision.bitvector) == "000010000101"


def test_simple_decisions():
    s = enc("ACGTTGCA")
    assert magnet_filter(s, s, 0).accept
    d = magnet_filter(enc("A" * 12), enc("C" * 12), 3)
    assert not d.accept and d.bitvector.count_zeros() == 0
    with pytest.raises(LengthMismatch):
        magnet_filter(enc("ACGT"), enc("ACG"), 1)


def test_budget_limits_extractions():
    # four separated matches but only e + 1 = 2 extractions allowed
    t, p = "AAACAAACAAACAAAC", "AAAGAAAGAAAGAAAG"
    d, ex = magnet_filter(enc(p), enc(t), 1, with_trace=True)
    assert len(ex) == 2
    assert d.bitvector.count_zeros() == 6


def test_invariants_random():
    rng = random.Random(13)
    for _ in range(1500):
        m = rng.randint(2, 80)
        e = rng.randint(0, min(8, m - 1))
        t = random_dna(rng, m, "ACGTN" if rng.random() < 0.1 else "ACGT")
        p = mutate(rng, t, rng.randint(0, m // 4 + 1))
        nmap = build_map(enc(p), enc(t), e)
        d, ex = magnet_filter(enc(p), enc(t), e, with_trace=True)
        assert len(ex) <= e + 1
        spans = sorted((x.start, x.start + x.len - 1) for x in ex)
        for (_, end), (start, _) in zip(spans, spans[1:]):
            assert start >= end + 2
        for x in ex:
            lo, hi = x.bounds
            assert lo <= x.start and x.start + x.len - 1 <= hi
            run = (nmap.diag(x.diagonal) >> (x.start - 1)) & ((1 << x.len) - 1)
            assert run == 0
        zeros = d.bitvector.count_zeros()
        assert zeros == sum(x.len for x in ex)
        longest = max(longest_zero_run(diag, 1, m)[1] for diag in nmap.diagonals)
        assert longest <= zeros <= m
        assert d.accept == (str(d.bitvector).count("0") >= m - e)
        assert d.edit_estimate == m - zeros
