"""Shared test helpers: locate bundled package data independent of CWD."""

import re
import sys
from importlib import resources
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

DATA_DIR = Path(str(resources.files("ontofreight"))) / "data"
NETWORK_DIR = DATA_DIR / "network"
DOCS_DIR = DATA_DIR / "docs"

_CRITERION_RE = re.compile(r"test_criterion_(\d+)")


def pytest_runtest_logreport(report):
    """One FAIL line per acceptance criterion (PASS lines print in-test)."""
    if report.when == "call" and report.failed:
        match = _CRITERION_RE.search(report.nodeid)
        if match:
            print(f"\nFAIL criterion {match.group(1)}: see failure detail above")
