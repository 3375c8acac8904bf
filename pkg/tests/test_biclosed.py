"""Biclosed sets of affine roots: membership oracle, classification,
equality, dot action, and the text format."""

import random

import pytest

from twisted_bruhat import (
    build_system,
    dot_action,
    empty_biclosed,
    format_biclosed,
    from_inversion_set,
    from_word,
    full_positive_biclosed,
    identity,
    inversion_set,
    parse_biclosed,
)
from twisted_bruhat.biclosed import BiclosedSet, dot_action_pointwise
from conftest import random_biclosed, random_element

TYPES = ("A2", "A3", "B2", "G2")

CLASSES = {
    "Finite",
    "Cofinite",
    "InfiniteWordInversion",
    "InfiniteWordCoinversion",
    "Mixed",
}


def all_roots_to_level(datum, level):
    out = []
    for base in datum.roots:
        k0 = 0 if datum.is_positive(base) else 1
        out.extend((base, k) for k in range(k0, level + 1))
    return out


@pytest.mark.parametrize("label", TYPES)
def test_membership_matches_pointwise_definition(label):
    """O(1) chain membership == twist-dot-action of the finite core P."""
    rng = random.Random(31)
    datum = build_system(label)
    for _ in range(8):
        B = random_biclosed(label, rng)
        P_hat = BiclosedSet(identity(datum), B.psi, B.delta1, B.delta2)
        for r in all_roots_to_level(datum, 6):
            expected = dot_action_pointwise(B.twist, P_hat.contains, r)
            assert B.contains(r) == expected, (format_biclosed(B), r)


@pytest.mark.parametrize("label", ("A2", "G2"))
def test_count_in_chain_matches_scan(label):
    rng = random.Random(32)
    datum = build_system(label)
    for _ in range(6):
        B = random_biclosed(label, rng)
        for base in datum.roots:
            k0 = 0 if datum.is_positive(base) else 1
            for lo in range(k0, 5):
                for hi in range(lo - 1, 8):
                    scan = sum(
                        1 for k in range(lo, hi + 1) if B.contains((base, k))
                    )
                    assert B.count_in_chain(base, lo, hi) == scan


def test_classification_values():
    rng = random.Random(33)
    d = build_system("A2")
    assert empty_biclosed(d).classify() == "Finite"
    assert full_positive_biclosed(d).classify() == "InfiniteWordInversion"
    # the complement keeps the structural (delta1, delta2) = (0, 0) shape
    assert full_positive_biclosed(d).complement().classify() == (
        "InfiniteWordInversion"
    )
    w = from_word(d, (1, 2, 3))
    assert from_inversion_set(w).classify() == "Finite"
    for label in TYPES:
        for _ in range(10):
            assert random_biclosed(label, rng).classify() in CLASSES


def test_complement_membership_and_class_swap():
    rng = random.Random(34)
    d = build_system("A3")
    swap = {
        "Finite": "Cofinite",
        "Cofinite": "Finite",
        "InfiniteWordInversion": "InfiniteWordCoinversion",
        "InfiniteWordCoinversion": "InfiniteWordInversion",
        "Mixed": "Mixed",
    }
    for _ in range(10):
        B = random_biclosed("A3", rng)
        C = B.complement()
        if B.delta1 or B.delta2:
            assert C.classify() == swap[B.classify()]
        for r in all_roots_to_level(d, 4):
            assert C.contains(r) != B.contains(r)


def test_from_inversion_set_matches_N():
    rng = random.Random(35)
    for label in TYPES:
        d = build_system(label)
        for _ in range(10):
            w = random_element(d, rng, 8)
            B = from_inversion_set(w)
            N = inversion_set(w)
            for r in all_roots_to_level(d, 6):
                assert B.contains(r) == (r in N)


def test_dot_action_composes():
    rng = random.Random(36)
    d = build_system("A2")
    for _ in range(10):
        B = random_biclosed("A2", rng)
        u = random_element(d, rng, 5)
        v = random_element(d, rng, 5)
        lhs = dot_action(u, dot_action(v, B))
        rhs = dot_action(u * v, B)
        assert lhs.equals(rhs)


def test_dot_action_identity_on_N():
    """u . N(v)-hat = N(uv)-hat."""
    rng = random.Random(37)
    d = build_system("A2")
    for _ in range(15):
        u = random_element(d, rng, 6)
        v = random_element(d, rng, 6)
        assert dot_action(u, from_inversion_set(v)).equals(
            from_inversion_set(u * v)
        )


def test_equals_and_canonicalized():
    rng = random.Random(38)
    for label in ("A2", "B2"):
        for _ in range(10):
            B = random_biclosed(label, rng)
            C = B.canonicalized()
            assert B.equals(C)
            assert C.twist.length() <= B.twist.length()


@pytest.mark.parametrize("label", TYPES)
def test_format_parse_roundtrip(label):
    rng = random.Random(39)
    datum = build_system(label)
    for _ in range(8):
        B = random_biclosed(label, rng)
        C = parse_biclosed(datum, format_biclosed(B))
        assert B.equals(C)


def test_parse_errors():
    d = build_system("A2")
    with pytest.raises(ValueError):
        parse_biclosed(d, "nonsense")
    with pytest.raises(ValueError):
        parse_biclosed(d, "twist:e psi:e d1:{99} d2:{}")
