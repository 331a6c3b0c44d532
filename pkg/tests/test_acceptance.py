"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import pytest

from opuc.acceptance import CHECKS


@pytest.mark.parametrize("number", sorted(CHECKS))
def test_criterion(number, capsys):
    result = CHECKS[number]()
    with capsys.disabled():
        print(f"\n{result.line()}  {result.details if not result.passed else ''}".rstrip())
    assert result.passed, result.details
