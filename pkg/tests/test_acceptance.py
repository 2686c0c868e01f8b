"""Acceptance gate: one pass/fail line per criterion.

Criterion 5's verbatim-word comparison is expected to fail: the reference
letters it compares against fail their own invariant certificate (the core
generator subscript appears misprinted; every convention sweep confirms
only a sigma_3 core reproduces the m(8_20) sublink).  The criterion is kept
faithful rather than weakened -- see notes/decisions.md in the workspace
notes for the full analysis.  Every certificate *value* it names passes.
"""

import pytest

from quasibraid.verify import _CRITERIA, CriterionResult, run_all

_RESULTS: list[CriterionResult] = run_all()


@pytest.mark.parametrize(
    "result", _RESULTS, ids=[f"criterion_{r.number}" for r in _RESULTS]
)
def test_criterion(result):
    print(result.line())
    assert result.ok, result.line()


def test_every_criterion_ran():
    assert [r.number for r in _RESULTS] == [n for n, _, _ in _CRITERIA]
