import pytest

from wspm.families import h8, k4, k33, necklace, petersen, random_cubic, spliced, theta

ACCEPTANCE_LINES: list[str] = []

RANDOM_SIZES = range(4, 17, 2)
RANDOM_PER_SIZE = 72  # 7 sizes x 72 = 504 graphs


def named_graphs():
    graphs = [("theta", theta()), ("k4", k4()), ("k33", k33()), ("petersen", petersen()), ("h8", h8())]
    graphs += [(f"necklace({k})", necklace(k)) for k in range(2, 6)]
    return graphs


def build_corpus():
    corpus = named_graphs()
    corpus += [(f"random({n},{s})", random_cubic(n, s)) for n in RANDOM_SIZES for s in range(RANDOM_PER_SIZE)]
    corpus += [(f"spliced({n},{s})", spliced(n, s)) for n in RANDOM_SIZES for s in range(12)]
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    """A cheaper slice for the exponential brute-force oracles."""
    out = named_graphs()[:6]
    out += [(f"random({n},{s})", random_cubic(n, s)) for n in (4, 6, 8) for s in range(6)]
    out += [(f"spliced({n},{s})", spliced(n, s)) for n in (6, 8) for s in range(6)]
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
