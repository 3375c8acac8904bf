"""Exact cone membership: certificates checked independently of the solver."""

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from twisted_bruhat.linprog import cone_membership


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def test_unit_cone_contains_positive_orthant():
    gens = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    cert = cone_membership(gens, (2, 3, 5))
    assert cert.feasible
    assert list(cert.coefficients) == [2, 3, 5]


def test_unit_cone_excludes_negative_directions():
    gens = [(1, 0), (0, 1)]
    cert = cone_membership(gens, (-1, 2))
    assert not cert.feasible
    y = cert.functional
    assert dot(y, (-1, 2)) > 0
    assert all(dot(y, g) <= 0 for g in gens)


def test_zero_target_always_feasible():
    cert = cone_membership([(1, 2), (-3, 1)], (0, 0))
    assert cert.feasible
    assert all(c == 0 for c in cert.coefficients)


def test_dependent_generators():
    gens = [(1, 1), (2, 2), (-1, -1)]
    cert = cone_membership(gens, (3, 3))
    assert cert.feasible
    combo = [
        sum(c * g[i] for c, g in zip(cert.coefficients, gens)) for i in range(2)
    ]
    assert combo == [3, 3]


def test_random_certificates_verify():
    rng = random.Random(71)
    n_feasible = n_infeasible = 0
    for _ in range(300):
        m = rng.randrange(2, 5)
        n = rng.randrange(1, 7)
        gens = [
            tuple(Fraction(rng.randrange(-5, 6)) for _ in range(m))
            for _ in range(n)
        ]
        target = tuple(Fraction(rng.randrange(-5, 6)) for _ in range(m))
        cert = cone_membership(gens, target)
        if cert.feasible:
            n_feasible += 1
            assert all(c >= 0 for c in cert.coefficients)
            for i in range(m):
                assert (
                    sum(c * g[i] for c, g in zip(cert.coefficients, gens))
                    == target[i]
                )
        else:
            n_infeasible += 1
            y = cert.functional
            assert dot(y, target) > 0
            assert all(dot(y, g) <= 0 for g in gens)
    assert n_feasible > 20 and n_infeasible > 20


@settings(max_examples=80, deadline=None)
@given(
    data=st.data(),
    m=st.integers(2, 4),
    n=st.integers(1, 5),
)
def test_feasible_by_construction(data, m, n):
    """A target built as a nonneg combination is always certified feasible."""
    coeff_st = st.fractions(
        min_value=0, max_value=5, max_denominator=4
    )
    entry_st = st.integers(-4, 4)
    gens = [
        tuple(data.draw(entry_st) for _ in range(m)) for _ in range(n)
    ]
    coeffs = [data.draw(coeff_st) for _ in range(n)]
    target = tuple(
        sum(c * g[i] for c, g in zip(coeffs, gens)) for i in range(m)
    )
    cert = cone_membership(gens, target)
    assert cert.feasible
