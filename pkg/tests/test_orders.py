"""Twisted strong and weak orders: covers, intervals, coranks, level sets."""

import random

import pytest

from twisted_bruhat import (
    build_system,
    covers,
    downset_corank,
    empty_biclosed,
    from_inversion_set,
    from_word,
    full_positive_biclosed,
    identity,
    interval,
    inversion_set,
    lower_covers,
    strong_leq,
    twisted_length_left,
    twisted_length_right,
    upper_covers,
    weak_chain,
    weak_leq,
)
from twisted_bruhat.orders import (
    antichain_at_level,
    dot_iso_check,
    level_set_sample,
    no_local_extremum_check,
)
from conftest import random_biclosed, random_element


def test_covers_of_identity_alcove_order():
    """Frozen: e has lower covers s1, s2 and upper covers s3, s1s3s1, s2s3s2."""
    d = build_system("A2")
    B = full_positive_biclosed(d)
    lower, upper, certs = covers(identity(d), B)
    assert {w.word() for _, w in lower} == {(1,), (2,)}
    assert {w.word() for _, w in upper} == {(3,), (1, 3, 1), (2, 3, 2)}
    assert certs
    for cert in certs:
        assert cert.drift[0] != 0 and cert.drift[1] != 0


def test_cover_deltas_are_plus_minus_one():
    rng = random.Random(41)
    for label in ("A2", "A3", "B2", "G2"):
        d = build_system(label)
        for _ in range(4):
            B = random_biclosed(label, rng)
            w = random_element(d, rng, 5)
            lw = twisted_length_left(w, B)
            for _, lo in lower_covers(w, B):
                assert twisted_length_left(lo, B) == lw - 1
            for _, up in upper_covers(w, B):
                assert twisted_length_left(up, B) == lw + 1


def test_interval_grading_and_membership():
    rng = random.Random(42)
    d = build_system("A2")
    B = full_positive_biclosed(d)
    for _ in range(15):
        y = random_element(d, rng, 5)
        x = y
        for _ in range(3):
            los = lower_covers(x, B)
            if not los:
                break
            _, x = rng.choice(los)
        poset = interval(x, y, B)
        assert poset.check_grading()
        keys = set(poset.keys())
        assert x in keys and y in keys
        for z in keys:
            assert strong_leq(x, z, B) and strong_leq(z, y, B)


def test_strong_leq_antisymmetry_and_reflexivity():
    rng = random.Random(43)
    d = build_system("A2")
    B = full_positive_biclosed(d)
    for _ in range(20):
        w = random_element(d, rng, 6)
        assert strong_leq(w, w, B)
        v = random_element(d, rng, 6)
        if w != v and strong_leq(w, v, B):
            assert not strong_leq(v, w, B)


def test_downset_corank_matches_poincare_counts():
    """Frozen layer sizes of the alcove order, both parities."""
    d = build_system("A2")
    B = full_positive_biclosed(d)
    even = [len(downset_corank(identity(d), B, n)) for n in range(9)]
    odd = [len(downset_corank(from_word(d, (1,)), B, n)) for n in range(9)]
    assert even == [1, 2, 4, 5, 7, 8, 10, 11, 13]
    assert odd == [1, 3, 4, 6, 7, 9, 10, 12, 13]


def test_empty_twist_weak_order_is_inversion_containment():
    """u <='_{emptyset} v iff N(u) subseteq N(v) (right weak order)."""
    rng = random.Random(44)
    d = build_system("A2")
    B = empty_biclosed(d)
    for _ in range(60):
        u = random_element(d, rng, 6)
        v = random_element(d, rng, 6)
        assert weak_leq(u, v, B, side="right") == (
            inversion_set(u) <= inversion_set(v)
        )


def test_weak_implies_strong():
    rng = random.Random(45)
    d = build_system("A2")
    B = full_positive_biclosed(d)
    hits = 0
    for _ in range(80):
        u = random_element(d, rng, 5)
        v = random_element(d, rng, 5)
        if weak_leq(u, v, B, side="left"):
            hits += 1
            assert strong_leq(u, v, B)
    assert hits > 5


def test_weak_chain_structure():
    rng = random.Random(46)
    d = build_system("A2")
    B = full_positive_biclosed(d)
    for _ in range(40):
        u = random_element(d, rng, 5)
        v = random_element(d, rng, 5)
        if not weak_leq(u, v, B, side="right"):
            continue
        chain = weak_chain(u, v, B)
        assert chain[0] == u and chain[-1] == v
        for a, b in zip(chain, chain[1:]):
            assert twisted_length_right(b, B) == twisted_length_right(a, B) + 1


def test_level_sets_grow():
    d = build_system("A2")
    B = full_positive_biclosed(d)
    for k in (-1, 0, 1):
        sizes = [len(level_set_sample(B, k, r)) for r in (4, 8, 12)]
        assert sizes[0] < sizes[1] < sizes[2]


def test_antichain_elements_incomparable():
    rng = random.Random(47)
    B = random_biclosed("A3", rng, mixed=True, twist_len=1)
    chain = antichain_at_level(B, 0, 20, 14)
    assert len(chain) == 20
    assert {twisted_length_right(w, B) for w in chain} == {0}
    sample = rng.sample(chain, 6)
    for i, a in enumerate(sample):
        for b in sample[i + 1:]:
            assert not weak_leq(a, b, B, side="right")
            assert not weak_leq(b, a, B, side="right")


def test_no_local_extrema_alcove():
    d = build_system("A2")
    B = full_positive_biclosed(d)
    assert no_local_extremum_check(B, 4) == []


def test_local_extrema_exist_for_finite_B():
    """A Finite twisting set has a global minimum, hence a local one."""
    d = build_system("A2")
    w = from_word(d, (1, 2, 3))
    B = from_inversion_set(w)
    violations = no_local_extremum_check(B, 3)
    assert (w, "no lower neighbor") in violations


def test_dot_action_order_isomorphism():
    rng = random.Random(48)
    d = build_system("A2")
    B = full_positive_biclosed(d)
    w = random_element(d, rng, 4)
    pairs = [
        (random_element(d, rng, 5), random_element(d, rng, 5))
        for _ in range(25)
    ]
    assert dot_iso_check(w, B, pairs) == []
