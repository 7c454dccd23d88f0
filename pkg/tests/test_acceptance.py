"""Acceptance gate: one test per criterion, each at its stated tolerance.

The per-criterion pass/fail lines are printed in the terminal summary.
"""

import pytest

from unruh_teleport import checks

from .conftest import ACCEPTANCE_RESULTS


@pytest.mark.parametrize("check", checks.ALL_CHECKS, ids=lambda c: c.__name__)
def test_criterion(check, quiet_package_logs):
    result = check()
    ACCEPTANCE_RESULTS.append(result)
    print(result.line())
    assert result.passed, result.line()
