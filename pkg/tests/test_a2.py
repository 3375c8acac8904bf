"""The rank-2 alcove order: class deltas, closed-form inversion sets,
sphericity, the dihedral coset decomposition, automorphisms, the Poincare
series, and the Hasse-figure fragment."""

import random

import pytest

from twisted_bruhat import (
    build_system,
    from_word,
    identity,
    interval,
    inversion_set,
    reflection,
    strong_leq,
    twisted_length_left,
    upper_covers,
)
from twisted_bruhat import a2


@pytest.fixture(scope="module")
def setup():
    d = build_system("A2")
    return d, a2.alcove_biclosed()


def rand_elem(d, rng, max_len=10):
    return from_word(d, tuple(rng.choice((1, 2, 3)) for _ in range(rng.randrange(0, max_len))))


def test_class_of_translation_cosets(setup):
    d, _ = setup
    assert a2.class_of(a2.translation(2, -1)) == "T"
    assert a2.class_of(from_word(d, (1,)) * a2.translation(1, 1)) == "saT"
    assert a2.class_of(from_word(d, (2,))) == "sbT"
    assert a2.class_of(from_word(d, (1, 2))) == "sasbT"
    assert a2.class_of(from_word(d, (2, 1))) == "sbsaT"
    assert a2.class_of(from_word(d, (1, 2, 1))) == "sbsasbT"


def test_class_deltas_match_engine(setup):
    d, B = setup
    rng = random.Random(51)
    for _ in range(12):
        w = rand_elem(d, rng, 7)
        lw = twisted_length_left(w, B)
        for gamma in (a2.ALPHA, a2.BETA, a2.AB):
            for k in range(-8, 9):
                got = twisted_length_left(reflection(d, (gamma, k)) * w, B) - lw
                assert got == a2.predicted_delta(w, gamma, k)


def test_closed_forms_match_inversion_sets():
    evens = range(-4, 5, 2)
    ks = range(-4, 5)
    for name in a2.CLOSED_FORMS:
        if name == "t":
            params = [(k1, k2, 0) for k1 in evens for k2 in evens]
        elif name.startswith("t"):
            params = [(k1, k2, k) for k1 in evens for k2 in evens for k in ks]
        else:
            params = [(0, 0, k) for k in ks]
        for k1, k2, k in params:
            elem = a2.closed_form_element(name, k1, k2, k)
            if elem is None:
                continue
            assert a2.closed_form_set(name, k1, k2, k) == inversion_set(elem), (
                name, k1, k2, k,
            )


def test_translation_inversion_even_parameters():
    for k1 in range(-6, 7, 2):
        for k2 in range(-6, 7, 2):
            elem = a2.root_translation(k1, k2)
            assert a2.translation_inversion(k1, k2) == inversion_set(elem)


def test_root_translation_rejects_odd():
    with pytest.raises(ValueError):
        a2.root_translation(1, 0)


def test_sphericity_frozen_examples(setup):
    d, B = setup
    cases = (
        ((2,), (2, 3, 2), "Spherical"),
        ((1, 2), (2, 1, 3, 2), "NonSpherical"),
        ((3, 2, 1), (3, 1), "Spherical"),
        ((2, 3), (2, 3, 1, 2, 3), "NonSpherical"),
    )
    for lo, hi, want in cases:
        poset = interval(from_word(d, lo), from_word(d, hi), B)
        assert a2.sphericity(poset) == want


def test_sphericity_rejects_long_intervals(setup):
    d, B = setup
    x = identity(d)
    for _ in range(4):
        x = upper_covers(x, B)[0][1]
    poset = interval(identity(d), x, B)
    with pytest.raises(a2.UnsupportedLength):
        a2.sphericity(poset)


def test_dihedral_decomposition_roundtrip_and_length(setup):
    d, B = setup
    rng = random.Random(52)
    forms = set()
    for _ in range(400):
        w = rand_elem(d, rng, 12)
        dec = a2.dihedral_decompose(w)
        assert a2.dihedral_reassemble(dec) == w
        assert dec.predicted_twisted_length() == twisted_length_left(w, B)
        # alternating u/v word
        assert all(x != y for x, y in zip(dec.u_v_word, dec.u_v_word[1:]))
        forms.add(dec.form)
    assert forms == {"u(vu)^k", "(vu)^k", "v(uv)^k", "(uv)^k"}


def test_coset_prefix_inverses_are_minimal():
    for i in range(-6, 7):
        m = a2.coset_prefix(i).inverse()
        dec = a2.dihedral_decompose(m)
        assert dec.i == i and dec.u_v_word == ()


def test_uvk_u_wi_inversion_closed_form(setup):
    d, _ = setup
    u, v = a2.u_element(), a2.v_element()
    for k in range(0, 4):
        for i in range(-5, 6):
            w = identity(d)
            for _ in range(k):
                w = w * u * v
            w = w * u * a2.coset_prefix(i)
            assert a2.uvk_u_wi_inversion(k, i) == inversion_set(w)


def test_automorphism_lengths(setup):
    d, B = setup
    rng = random.Random(53)
    for _ in range(100):
        w = rand_elem(d, rng, 10)
        lb = twisted_length_left(w, B)
        assert twisted_length_left(a2.automorphism("eta", w), B) == lb - 2
        assert twisted_length_left(a2.automorphism("eta_prime", w), B) == lb - 2
        assert twisted_length_left(a2.automorphism("rho", w), B) == lb


def test_automorphisms_preserve_order(setup):
    """eta and rho carry cover pairs to comparable pairs."""
    d, B = setup
    rng = random.Random(54)
    for _ in range(40):
        w = rand_elem(d, rng, 6)
        ups = upper_covers(w, B)
        if not ups:
            continue
        _, w2 = rng.choice(ups)
        for kind in ("eta", "eta_prime", "rho"):
            assert strong_leq(
                a2.automorphism(kind, w), a2.automorphism(kind, w2), B
            )


def test_rho_shifts_coset_index(setup):
    d, _ = setup
    u, v = a2.u_element(), a2.v_element()
    for i in range(-5, 6):
        for z in (identity(d), u, v, u * v, v * u):
            w = a2.coset_prefix(i).inverse() * z
            dec0 = a2.dihedral_decompose(w)
            dec1 = a2.dihedral_decompose(a2.automorphism("rho", w))
            assert dec1.i == dec0.i + 2
            assert dec1.u_v_word == dec0.u_v_word


def test_eta_prime_inv_roundtrip(setup):
    d, _ = setup
    rng = random.Random(55)
    for _ in range(50):
        w = rand_elem(d, rng, 8)
        assert a2.automorphism("eta_prime_inv", a2.automorphism("eta_prime", w)) == w


def test_sigma_is_a_homomorphism(setup):
    d, _ = setup
    rng = random.Random(56)
    for _ in range(30):
        x, y = rand_elem(d, rng, 6), rand_elem(d, rng, 6)
        assert a2.sigma(x * y) == a2.sigma(x) * a2.sigma(y)
        assert a2.sigma(a2.sigma(x, inverse=True)) == x


def test_poincare_series_frozen():
    assert a2.poincare_series("even", 8) == [1, 2, 4, 5, 7, 8, 10, 11, 13]
    assert a2.poincare_series("odd", 8) == [1, 3, 4, 6, 7, 9, 10, 12, 13]
    r1, r2 = a2.poincare_recursion_residual(10)
    assert not any(r1) and not any(r2)
    with pytest.raises(ValueError):
        a2.poincare_series("both", 4)


def test_figure_hasse_fragment():
    poset = a2.figure_hasse(6)
    labels = {n.label for n in poset.nodes}
    assert set(a2.FIGURE_LABELS) <= labels
    assert poset.check_grading()
    kinds = {e.kind for e in poset.edges}
    assert kinds == {"weak", "strong"}
    grade = {n.label: n.grade for n in poset.nodes}
    assert grade["e"] == 0 and grade["3"] == 1 and grade["1"] == -1
