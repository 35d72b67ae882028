import re

_CRITERION = re.compile(r"test_criterion_(\d+)")
_outcomes: dict[int, str] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    if report.when == "call" or report.failed:
        if report.passed and _outcomes.get(k) != "FAIL":
            _outcomes[k] = "PASS"
        elif report.failed:
            _outcomes[k] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance")
    for k in sorted(_outcomes):
        terminalreporter.write_line(f"ACCEPTANCE {k}: {_outcomes[k]}")
