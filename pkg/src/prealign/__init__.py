"""Bit-parallel pre-alignment filters (Shouji, MAGNET) with an edit-distance oracle."""

from .bitvector import BitVector, FilterDecision
from .codec import PackedSequence, decode, validate_and_encode
from .errors import (
    EmptySequence,
    IllegalCharacter,
    InvalidParameters,
    LengthMismatch,
    OutOfBand,
    ParseError,
    PrealignError,
    ThresholdTooLarge,
)
from .magnet import magnet_filter
from .neighborhood import NeighborhoodMap, build_map, map_entry
from .oracle import AlignmentVerdict, banded_edit_distance, full_edit_distance
from .shouji import shouji_filter

__version__ = "0.1.0"

__all__ = [
    "AlignmentVerdict",
    "BitVector",
    "EmptySequence",
    "FilterDecision",
    "IllegalCharacter",
    "InvalidParameters",
    "LengthMismatch",
    "NeighborhoodMap",
    "OutOfBand",
    "PackedSequence",
    "ParseError",
    "PrealignError",
    "ThresholdTooLarge",
    "banded_edit_distance",
    "build_map",
    "decode",
    "full_edit_distance",
    "magnet_filter",
    "map_entry",
    "shouji_filter",
    "validate_and_encode",
]
