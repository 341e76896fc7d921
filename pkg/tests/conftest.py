import re

import pytest

from epimodal import build_fr_model, build_pr_model

CRITERION = re.compile(r"test_criterion_(\d+)")


@pytest.fixture(scope="session")
def fr_model():
    return build_fr_model()


@pytest.fixture(scope="session")
def pr_model():
    return build_pr_model()


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion."""
    results = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            match = CRITERION.search(getattr(report, "nodeid", ""))
            if match:
                number = int(match.group(1))
                ok = outcome == "passed" and results.get(number, True)
                results[number] = ok
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        verdict = "PASS" if results[number] else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}")
