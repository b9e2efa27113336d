from .bench import BenchResult, bench, scaling_table, write_csv
from .dataset import EditSpec, PairDataset, generate_pairs, load_pairs, write_pairs
from .evaluate import EvalReport, PairResult, evaluate, run_filter

__all__ = [
    "BenchResult",
    "EditSpec",
    "EvalReport",
    "PairDataset",
    "PairResult",
    "bench",
    "evaluate",
    "generate_pairs",
    "load_pairs",
    "run_filter",
    "scaling_table",
    "write_csv",
    "write_pairs",
]
