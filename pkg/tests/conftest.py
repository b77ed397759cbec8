import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from raagflags.graph import SimpleGraph  # noqa: E402

# keep the corpus cache inside the test session unless the caller chose one
os.environ.setdefault("RAAG_CACHE_DIR", str(Path(__file__).parent / ".corpus-cache"))


def graph(spec: str, vertices: str = "") -> SimpleGraph:
    """``graph("ab bc")`` is the path a-b-c."""
    return SimpleGraph.from_edges([tuple(e) for e in spec.split()], vertices)


P3 = graph("ab bc")
P4 = graph("ab bc cd")
P5 = graph("ab bc cd de")
C4 = graph("ab bc cd da")
K3 = graph("ab bc ca")


@pytest.fixture
def p3():
    return P3


@pytest.fixture
def p4():
    return P4


@pytest.fixture
def c4():
    return C4


@pytest.fixture
def k3():
    return K3


# acceptance lines collected by test_acceptance and echoed in the summary
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
