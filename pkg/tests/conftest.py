"""Shared test plumbing: the acceptance-criteria report.

Acceptance tests register one line per criterion; the lines are replayed in a
dedicated terminal section after the run so they are visible regardless of
pytest's capture mode.
"""

_CRITERION_LINES: list[str] = []


def record_criterion(number: int, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    line = f"[criterion {number:2d}] {status} - {detail}"
    _CRITERION_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERION_LINES):
            terminalreporter.write_line(line)
