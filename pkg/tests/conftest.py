import os
from pathlib import Path

import pytest

from sna import load_graph

ROOT = Path(__file__).resolve().parent.parent
WIKI_VOTE_CANDIDATES = (
    ROOT / "tests" / "data" / "wiki-Vote.txt",
    ROOT / "tests" / "data" / "wiki-Vote.txt.gz",
    ROOT / "data" / "wiki-Vote.txt",
    ROOT / "data" / "wiki-Vote.txt.gz",
)


def wiki_vote_path():
    env = os.environ.get("SNA_WIKI_VOTE")
    if env:
        return Path(env)
    for p in WIKI_VOTE_CANDIDATES:
        if p.exists():
            return p
    return None


@pytest.fixture(scope="session")
def wiki_vote_file():
    path = wiki_vote_path()
    if path is None or not path.exists():
        pytest.fail(
            "wiki-Vote.txt not found: download https://snap.stanford.edu/data/wiki-Vote.txt.gz "
            "into data/ or point SNA_WIKI_VOTE at it",
            pytrace=False,
        )
    return path


@pytest.fixture(scope="session")
def wiki_vote(wiki_vote_file):
    return load_graph(wiki_vote_file)


_acceptance = {}
_details: dict[str, list[str]] = {}


@pytest.fixture
def record(request):
    """Attach a result line to the acceptance summary for this test."""
    lines = _details.setdefault(request.node.name, [])
    return lines.append


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.outcome != "passed":
        prev = _acceptance.get(name)
        if prev in (None, "passed"):
            _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        tag = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{tag}] {name}")
        for line in _details.get(name, []):
            terminalreporter.write_line(f"         {line}")
