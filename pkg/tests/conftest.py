import random

import pytest

FIG1_TEXT = "GGTGCAGAGCTC"
FIG1_PATTERN = "GGTGAGAGTTGT"


def random_dna(rng: random.Random, m: int, alphabet: str = "ACGT") -> str:
    return "".join(rng.choice(alphabet) for _ in range(m))


def mutate(rng: random.Random, s: str, edits: int, alphabet: str = "ACGT") -> str:
    """Random substitutions and equal-length shifts; no distance guarantee."""
    out = list(s)
    for _ in range(edits):
        op = rng.randrange(3)
        pos = rng.randrange(len(out))
        if op == 0:
            out[pos] = rng.choice(alphabet)
        elif op == 1:
            out.insert(pos, rng.choice(alphabet))
            out.pop()
        else:
            del out[pos]
            out.append(rng.choice(alphabet))
    return "".join(out)


def naive_edit_distance(a: str, b: str) -> int:
    """Textbook DP on characters; N never matches."""
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            same = ca == cb and ca != "N"
            cur.append(min(prev[j - 1] + (not same), prev[j] + 1, cur[j - 1] + 1))
        prev = cur
    return prev[-1]


_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
