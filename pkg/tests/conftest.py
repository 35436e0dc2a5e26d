import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")


_CRITERIA = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        _CRITERIA[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_CRITERIA):
        name = nodeid.split("::")[-1]
        number = int(name.split("_")[2])
        verdict = "PASS" if _CRITERIA[nodeid] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {name}")
