"""Terminal summary with one PASS/FAIL line per acceptance criterion."""

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: numbered acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        crit = getattr(getattr(item, "function", None), "criterion", None)
        if crit is not None:
            item.user_properties.append(("criterion", crit))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _results[crit] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, text), passed in _results.items():
        terminalreporter.write_line(f"criterion {number:>3}: {'PASS' if passed else 'FAIL'}  {text}")
