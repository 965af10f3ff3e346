"""Session hooks: print a one-line ledger entry per acceptance criterion."""

_registered: dict[str, str] = {}
_outcomes: dict[str, str] = {}


def pytest_collection_modifyitems(session, config, items):
    for item in items:
        module = getattr(item, "module", None)
        if (
            module is not None
            and module.__name__ == "test_acceptance"
            and item.name.startswith("test_criterion_")
        ):
            func = getattr(item, "function", None)
            doc = (getattr(func, "__doc__", None) or item.name).strip()
            _registered[item.nodeid] = doc.splitlines()[0]


def pytest_runtest_logreport(report):
    if report.nodeid in _registered and report.when == "call":
        _outcomes[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _registered:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, desc in _registered.items():
        outcome = _outcomes.get(nodeid, "not run")
        flag = {"passed": "PASS", "failed": "FAIL"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"[{flag}] {desc}")
