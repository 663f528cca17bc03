"""A1-A12 at their full bounds; one PASS/FAIL line per criterion is printed."""

import pytest

from dtcol import acceptance

RESULTS = {}


@pytest.mark.parametrize("name,check", acceptance.CRITERIA, ids=[n for n, _ in acceptance.CRITERIA])
def test_criterion(name, check, record_property):
    result = acceptance.run(only={name}, report=None)[name]
    ok, detail, seconds = result
    RESULTS[name] = result
    line = "%-4s %s  %s (%.1fs)" % (name, "PASS" if ok else "FAIL", detail, seconds)
    print(line)
    record_property("acceptance", line)
    assert ok, line


def test_runtime_limits():
    limits = {"A1": 60, "A2": 60, "A8": 300}
    for name, limit in limits.items():
        if name in RESULTS:
            assert RESULTS[name][2] < limit, name
