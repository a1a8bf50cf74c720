import pytest

from mnwords import _kernels_py, bijection, tilings, words

try:
    from mnwords import _kernels as _compiled
except ImportError:
    _compiled = None

_BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    _BACKENDS["compiled"] = _compiled

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture(params=sorted(_BACKENDS))
def backend(request, monkeypatch):
    """Run the test once per available kernel implementation."""
    module = _BACKENDS[request.param]
    for mod in (words, tilings, bijection):
        monkeypatch.setattr(mod, "kernels", module)
    return request.param


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    backend = item.callspec.params.get("backend", "-") if hasattr(item, "callspec") else "-"
    key = (number, title)
    entry = _results.setdefault(key, {})
    entry[backend] = report.passed and entry.get(backend, True)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), by_backend in sorted(_results.items()):
        ok = all(by_backend.values())
        detail = ", ".join(f"{b}={'pass' if v else 'FAIL'}" for b, v in sorted(by_backend.items()))
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title} ({detail})")
