"""Acceptance gate: runs every verification check, one pass/fail line each.

Run with `pytest -v -s tests/test_acceptance.py` to see the lines as they
complete; the same checks back the `twisted-bruhat verify` subcommand.
"""

import pytest

from twisted_bruhat import verify


@pytest.mark.parametrize(
    "check", verify.ALL_CHECKS, ids=[fn.__name__ for fn in verify.ALL_CHECKS]
)
def test_acceptance(check):
    name, ok, detail = check()
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    assert ok, f"{name}: {detail}"
