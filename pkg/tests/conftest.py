import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path_factory, monkeypatch):
    # CLI runs must never read a developer's real cache
    monkeypatch.setenv("CTL_CACHE_DIR", str(tmp_path_factory.getbasetemp() / "ctl-cache"))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and rep.passed):
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, {"title": title, "ok": True, "failed": []})
    if not rep.passed:
        entry["ok"] = False
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        line = f"criterion {number:2d}  {'PASS' if e['ok'] else 'FAIL'}  {e['title']}"
        if e["failed"]:
            line += f"  [failing: {', '.join(e['failed'])}]"
        tr.write_line(line)

