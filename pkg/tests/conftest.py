import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--run-n6", action="store_true", help="also run the n = 6 maximum check")


def pytest_configure(config):
    config.addinivalue_line("markers", "n6: opt-in n = 6 exhaustive check")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-n6"):
        return
    skip = pytest.mark.skip(reason="opt in with --run-n6")
    for item in items:
        if "n6" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def record():
    def _record(criterion: str, ok: bool, detail: str = "") -> bool:
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
