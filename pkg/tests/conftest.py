"""Shared pytest configuration.

Acceptance tests are marked with @pytest.mark.criterion(num, label); a
summary block at the end of the run lists each one with its outcome so
the criteria can be read off a full run at a glance.
"""

_CRITERIA = {}
_OUTCOMES = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "criterion(num, label): numbered acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _CRITERIA[item.nodeid] = (mark.args[0], mark.args[1])


def pytest_runtest_logreport(report):
    if report.when != "call" or report.nodeid not in _CRITERIA:
        return
    _OUTCOMES[report.nodeid] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    lines = []
    for nodeid, (num, label) in sorted(_CRITERIA.items(),
                                       key=lambda kv: kv[1][0]):
        outcome = _OUTCOMES.get(nodeid, "NOT RUN")
        lines.append("[%2d] %s: %s" % (num, label, outcome))
    terminalreporter.write_sep("-", "acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
