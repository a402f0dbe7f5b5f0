"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""

from __future__ import annotations

_RESULTS: dict[int, tuple[str, bool]] = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    number, title = mark.args
    ok = call.excinfo is None
    prev = _RESULTS.get(number, (title, True))[1]
    _RESULTS[number] = (title, prev and ok)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
