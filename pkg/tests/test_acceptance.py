"""Acceptance criteria 1-13, one test each.

Each test prints a single pass/fail line.  SUPERSTAB_MAX_N selects the tier:
2 is fast, 4 (default) is full, 5 is extended.
"""

import os

import pytest

from superstab.suite import CRITERIA, run_criterion

MAX_N = int(os.environ.get("SUPERSTAB_MAX_N", "4"))


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    res = run_criterion(number, MAX_N, 0)
    with capsys.disabled():
        print("\n" + res.line())
        for msg in res.failures[:5]:
            print("    " + str(msg))
    assert res.passed, "\n".join(str(m) for m in res.failures[:5])
