from __future__ import annotations

import time
from pathlib import Path

import pytest

from facetforge import ParseOutcome, parse_canonical_json

FIXTURES_DIR = Path(__file__).resolve().parents[1] / "fixtures"
AEROGEL_PATH = FIXTURES_DIR / "aerogel_excerpt.json"
BATTERY_PATH = FIXTURES_DIR / "battery_excerpt.json"

_SESSION_START = time.monotonic()
SUITE_RUNTIME_BUDGET_SECONDS = 120.0


def load_fixture(path: Path) -> ParseOutcome:
    return parse_canonical_json(path.read_bytes())


@pytest.fixture(scope="session")
def aerogel():
    return load_fixture(AEROGEL_PATH).ontology


@pytest.fixture(scope="session")
def battery():
    return load_fixture(BATTERY_PATH).ontology


def pytest_sessionfinish(session, exitstatus):
    # Acceptance: the full primary suite must finish inside the budget.
    elapsed = time.monotonic() - _SESSION_START
    passed = elapsed < SUITE_RUNTIME_BUDGET_SECONDS
    state = "PASS" if passed else "FAIL"
    print(
        f"\n[acceptance] full-suite runtime {elapsed:.1f}s "
        f"(budget {SUITE_RUNTIME_BUDGET_SECONDS:.0f}s): {state}"
    )
    if not passed and exitstatus == 0:
        session.exitstatus = 1
