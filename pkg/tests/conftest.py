"""Shared test configuration.

The terminal-summary hook prints one line per acceptance criterion (the
test_criterion_* functions in test_acceptance.py) so a full run ends with
an explicit pass/fail table for the acceptance gate.
"""

ACCEPTANCE_PREFIX = "test_criterion_"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results: dict[str, str] = {}
    for status, label in (
        ("passed", "PASS"),
        ("failed", "FAIL"),
        ("error", "FAIL"),
        ("skipped", "SKIP"),
    ):
        for report in terminalreporter.stats.get(status, ()):
            nodeid = getattr(report, "nodeid", "")
            name = nodeid.rsplit("::", 1)[-1]
            if not name.startswith(ACCEPTANCE_PREFIX):
                continue
            if getattr(report, "when", "call") != "call" and status == "passed":
                continue
            results[name] = label
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(results):
        slug = name[len(ACCEPTANCE_PREFIX):]
        number, _, title = slug.partition("_")
        terminalreporter.write_line(
            f"criterion {number} ({title.replace('_', ' ')}): {results[name]}"
        )
