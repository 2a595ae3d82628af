from __future__ import annotations

import json
from pathlib import Path

import pytest

from knotq.diagrams.pd import parse_pd
from knotq.laurent import parse
from knotq.tables import load_fixtures

DATA = Path(__file__).parent / "data"

TREFOIL = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"
FIGURE_EIGHT = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
HOPF = "X(1,3,2,4) X(3,1,4,2)"


def golden() -> dict[str, dict]:
    out = {}
    with open(DATA / "knotinfo_golden.jsonl", encoding="utf-8") as fh:
        for line in fh:
            rec = json.loads(line)
            rec["q"] = parse(rec["q"])
            out[rec["name"]] = rec
    return out


@pytest.fixture(scope="session")
def records():
    return load_fixtures()


@pytest.fixture(scope="session")
def gold():
    return golden()


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL)


@pytest.fixture
def figure_eight():
    return parse_pd(FIGURE_EIGHT)


# acceptance lines collected by test_acceptance.py, shown after the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
