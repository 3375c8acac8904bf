"""Finite root systems, Weyl groups, and finitely biclosed sets."""

import pytest

from twisted_bruhat import build_system
from twisted_bruhat.finite import (
    enumerate_biclosed_finite,
    enumerate_P_triples,
    is_biclosed,
    is_two_closed,
    make_P,
    root_from_json,
    root_to_json,
    standard_positive_system,
)

# (roots, positive roots, |W|, biclosed subsets, P-triples, highest root)
EXPECTED = {
    "A2": (6, 3, 6, 20, 42, (1, 1)),
    "A3": (12, 6, 24, 138, 408, (1, 1, 1)),
    "B2": (8, 4, 8, 26, 56, (1, 2)),
    "G2": (12, 6, 12, 38, 84, (3, 2)),
}


@pytest.mark.parametrize("label", sorted(EXPECTED))
def test_root_system_counts(label):
    d = build_system(label)
    n_roots, n_pos, n_weyl, n_bic, n_triples, highest = EXPECTED[label]
    assert len(d.roots) == n_roots
    assert len(d.positive_roots) == n_pos
    assert len(d.weyl_elements) == n_weyl
    assert len(list(enumerate_biclosed_finite(d))) == n_bic
    assert len(list(enumerate_P_triples(d))) == n_triples


@pytest.mark.parametrize("label", sorted(EXPECTED))
def test_reflections_permute_roots(label):
    d = build_system(label)
    root_set = set(d.roots)
    for s in d.simple_reflections():
        assert {tuple(s.apply(r)) for r in d.roots} == root_set


@pytest.mark.parametrize("label", sorted(EXPECTED))
def test_inner_product_invariance(label):
    d = build_system(label)
    for w in d.weyl_elements:
        for r in d.positive_roots:
            assert d.inner(w.apply(r), w.apply(r)) == d.inner(r, r)


@pytest.mark.parametrize("label", sorted(EXPECTED))
def test_word_roundtrip_and_length(label):
    d = build_system(label)
    for w in d.weyl_elements:
        word = w.word()
        rebuilt = d.identity()
        for i in word:
            rebuilt = rebuilt * d.simple_reflection(i)
        assert rebuilt == w
        assert len(word) == w.length()


def test_longest_element_length():
    for label, n_pos in (("A2", 3), ("A3", 6), ("B2", 4), ("G2", 6)):
        d = build_system(label)
        assert max(w.length() for w in d.weyl_elements) == n_pos


@pytest.mark.parametrize("label", sorted(EXPECTED))
def test_enumerated_biclosed_are_biclosed(label):
    d = build_system(label)
    for subset in enumerate_biclosed_finite(d):
        assert is_biclosed(d, subset)


@pytest.mark.parametrize("label", ("A2", "B2"))
def test_P_triples_are_two_closed(label):
    d = build_system(label)
    for psi, d1, d2 in enumerate_P_triples(d):
        P = make_P(psi, d1, d2)
        assert is_two_closed(d, P.roots)


def test_positive_system_simple_system():
    d = build_system("A2")
    psi = standard_positive_system(d)
    assert set(psi.simple_system) == set(d.simple_roots)
    assert psi.roots == frozenset(d.positive_roots)


def test_root_name_roundtrip():
    for label in EXPECTED:
        d = build_system(label)
        for r in d.roots:
            assert d.parse_root_name(d.root_name(r)) == r


def test_root_json_roundtrip():
    d = build_system("G2")
    for r in d.roots:
        assert root_from_json(root_to_json(r)) == r


def test_bad_type_label():
    with pytest.raises((ValueError, KeyError)):
        build_system("E8")
