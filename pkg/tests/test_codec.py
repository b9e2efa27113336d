import random

import pytest
from hypothesis import given, strategies as st

from prealign.codec import decode, validate_and_encode
from prealign.errors import EmptySequence, IllegalCharacter

from conftest import FIG1_PATTERN, FIG1_TEXT


def test_canonical_alphabet():
    seq = validate_and_encode("ACGT")
    assert seq.length == 4
    assert seq.n_mask == 0
    assert decode(seq) == "ACGT"


@pytest.mark.parametrize("raw", [FIG1_TEXT, FIG1_PATTERN])
def test_figure_sequences_roundtrip(raw):
    seq = validate_and_encode(raw)
    assert seq.length == 12
    assert decode(seq) == raw


def test_lowercase_and_n():
    assert decode(validate_and_encode("acgt")) == "ACGT"
    seq = validate_and_encode("NNN")
    assert decode(seq) == "NNN"
    assert seq.n_mask == 0b111


def test_illegal_character():
    with pytest.raises(IllegalCharacter) as info:
        validate_and_encode("ACGX")
    assert (info.value.position, info.value.byte) == (3, "X")


def test_non_ascii_is_illegal():
    with pytest.raises(IllegalCharacter) as info:
        validate_and_encode("ACé")
    assert info.value.position == 2


def test_empty():
    with pytest.raises(EmptySequence):
        validate_and_encode("")


def test_code_assignment():
    seq = validate_and_encode("ACGT")
    # A=00 C=01 G=10 T=11, base k at bit k
    assert seq.lo == 0b1010
    assert seq.hi == 0b1100


def test_roundtrip_many():
    rng = random.Random(11)
    for _ in range(10_000):
        m = rng.randint(1, 512)
        raw = "".join(rng.choice("ACGTNacgtn") for _ in range(m))
        assert decode(validate_and_encode(raw)) == raw.upper()


@given(st.text(alphabet="ACGTNacgtn", min_size=1, max_size=300))
def test_roundtrip_property(raw):
    seq = validate_and_encode(raw)
    assert decode(seq) == raw.upper()
    assert seq.storage_bits() <= 3 * seq.length


def test_immutable():
    seq = validate_and_encode("ACGT")
    with pytest.raises(AttributeError):
        seq.length = 3
