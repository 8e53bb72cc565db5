_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" in report.nodeid and (report.when == "call" or report.failed):
        name = report.nodeid.split("::test_", 1)[1]
        _criteria[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda n: int(n.split("_")[1])):
        terminalreporter.write_line(f"{_criteria[name]}  {name}")
