"""Filter-versus-oracle evaluation over a pair dataset."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from ..batch import shouji_batch
from ..errors import InvalidParameters
from ..magnet import magnet_filter
from ..oracle import banded_distances
from ..shouji import DEFAULT_WIDTH, check_width
from .dataset import PairDataset

ALGORITHMS = ("shouji", "magnet", "oracle")
CHUNK = 2048


@dataclass(frozen=True)
class PairResult:
    accept: bool
    edit_estimate: int
    oracle_distance: Optional[int] = None


@dataclass(frozen=True)
class EvalReport:
    e: int
    total: int
    oracle_accepted: int
    oracle_rejected: int
    filter_accepted: int
    filter_rejected: int
    falsely_accepted: int
    falsely_rejected: int
    fa_rate: float
    fr_rate: float

    @classmethod
    def tally(cls, e: int, filter_accept, oracle_accept) -> "EvalReport":
        f = np.asarray(filter_accept, dtype=bool)
        o = np.asarray(oracle_accept, dtype=bool)
        oracle_accepted = int(o.sum())
        oracle_rejected = int(o.size - oracle_accepted)
        fa = int((f & ~o).sum())
        fr = int((~f & o).sum())
        return cls(
            e=e,
            total=int(o.size),
            oracle_accepted=oracle_accepted,
            oracle_rejected=oracle_rejected,
            filter_accepted=int(f.sum()),
            filter_rejected=int(f.size - f.sum()),
            falsely_accepted=fa,
            falsely_rejected=fr,
            fa_rate=fa / oracle_rejected if oracle_rejected else 0.0,
            fr_rate=fr / oracle_accepted if oracle_accepted else 0.0,
        )

    def to_dict(self) -> dict:
        return asdict(self)

    def check(self) -> None:
        """Assert the arithmetic identities between the counts."""
        assert self.oracle_accepted + self.oracle_rejected == self.total
        assert self.filter_accepted + self.filter_rejected == self.total
        assert self.falsely_accepted <= self.oracle_rejected
        assert self.falsely_rejected <= self.oracle_accepted
        assert self.filter_accepted == self.oracle_accepted - self.falsely_rejected + self.falsely_accepted
        assert 0.0 <= self.fa_rate <= 1.0 and 0.0 <= self.fr_rate <= 1.0


def _filter_chunk(patterns, texts, pairs, e, algo, width):
    if algo == "shouji":
        accept, bits = shouji_batch(patterns, texts, e, width)
        return accept, bits.sum(axis=1)
    if algo == "magnet":
        decisions = [magnet_filter(p, t, e) for t, p in pairs]
        return (np.array([d.accept for d in decisions], dtype=bool),
                np.array([d.edit_estimate for d in decisions], dtype=np.int64))
    dist = banded_distances(patterns, texts, e)
    return dist <= e, dist


def _chunks(dataset: PairDataset):
    texts, patterns = dataset.texts(), dataset.patterns()
    for lo in range(0, len(dataset), CHUNK):
        hi = lo + CHUNK
        yield patterns[lo:hi], texts[lo:hi], dataset.pairs[lo:hi]


def _map_chunks(fn, dataset: PairDataset, threads: int):
    if threads <= 1:
        return [fn(*chunk) for chunk in _chunks(dataset)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda chunk: fn(*chunk), _chunks(dataset)))


def _validate(e: int, algo: str, width: int) -> None:
    if algo not in ALGORITHMS:
        raise InvalidParameters(f"unknown algorithm {algo!r}")
    if e < 0:
        raise InvalidParameters(f"threshold must be non-negative, got {e}")
    check_width(width)


def run_filter(dataset: PairDataset, e: int, algo: str = "shouji", width: int = DEFAULT_WIDTH,
               threads: int = 1) -> list[PairResult]:
    """Per-pair decisions in input order, without consulting the oracle (unless it is the filter)."""
    _validate(e, algo, width)
    parts = _map_chunks(lambda p, t, pairs: _filter_chunk(p, t, pairs, e, algo, width), dataset, threads)
    accept = np.concatenate([a for a, _ in parts])
    estimate = np.concatenate([s for _, s in parts])
    return [PairResult(bool(a), int(s)) for a, s in zip(accept, estimate)]


def evaluate(dataset: PairDataset, e: int, algo: str = "shouji", width: int = DEFAULT_WIDTH,
             threads: int = 1) -> tuple[EvalReport, list[PairResult]]:
    """Run the oracle and the chosen filter on every pair and tally the confusion counts."""
    _validate(e, algo, width)

    def work(patterns, texts, pairs):
        dist = banded_distances(patterns, texts, e)
        accept, estimate = _filter_chunk(patterns, texts, pairs, e, algo, width)
        return dist, accept, estimate

    parts = _map_chunks(work, dataset, threads)
    dist = np.concatenate([d for d, _, _ in parts])
    accept = np.concatenate([a for _, a, _ in parts])
    estimate = np.concatenate([s for _, _, s in parts])
    oracle_accept = dist <= e
    report = EvalReport.tally(e, accept, oracle_accept)
    results = [
        PairResult(bool(a), int(s), int(d) if d <= e else None)
        for a, s, d in zip(accept, estimate, dist)
    ]
    return report, results
