"""Session corpora shared across test modules.

Two collections get built once: a batch of random cographs for
cross-checking the tree algorithms against dense linear algebra, and a
batch of equivalent pairs obtained by single structural edits, reused by
the shared-spectrum and cospectrality checks.
"""

import random

import pytest

from cographlap.cotree import random_cotree
from cographlap.twins import equivalent_edits

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def criterion_line():
    def record(line: str) -> None:
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def random_cographs():
    """500 random normalized cotrees with at most 12 leaves."""
    rng = random.Random(0xC06AF)
    return [random_cotree(rng.randrange(1, 13), rng) for _ in range(500)]


@pytest.fixture(scope="session")
def equivalent_pairs():
    """500 (original, edited) equivalent pairs, at most 30 leaves each.

    Edits that change the reduction are already filtered out by
    equivalent_edits, so every pair here is equivalent by construction.
    """
    rng = random.Random(0xE417)
    pairs = []
    while len(pairs) < 500:
        t = random_cotree(rng.randrange(4, 31), rng)
        for e in equivalent_edits(t):
            pairs.append((t, e))
            if len(pairs) == 500:
                break
    return pairs
