import random

import pytest

from ncpoisson.constructions import random_suite_algebra
from ncpoisson.document import load_corpus

VALID_CORPUS = ("m2-cartan", "heis3", "m2-double", "sl2-lie", "aff2-lie", "shift3", "untight-z")
RANDOM_SEEDS = range(60)


@pytest.fixture(scope="session")
def corpus():
    return {name: load_corpus(name) for name in VALID_CORPUS}


@pytest.fixture(scope="session")
def m2(corpus):
    return corpus["m2-cartan"]


@pytest.fixture(scope="session")
def heis(corpus):
    return corpus["heis3"]


@pytest.fixture(scope="session")
def double(corpus):
    return corpus["m2-double"]


@pytest.fixture(scope="session")
def random_algebras():
    return [random_suite_algebra(random.Random(seed)) for seed in RANDOM_SEEDS]


@pytest.fixture(scope="session")
def suite(corpus, random_algebras):
    return list(corpus.values()) + random_algebras


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", None) != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for criterion, status in sorted(lines):
            terminalreporter.write_line(f"{status}  {criterion}")
