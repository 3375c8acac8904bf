"""The rank-2 alcove order worked in full: closed-form cover deltas for the
six translation-coset classes, explicit inversion-set formulas, sphericity
of short intervals, the infinite-dihedral coset decomposition, poset
automorphisms, the Poincare series, and the Hasse-figure fragment.

Throughout, B is hard-fixed to {a, b, a+b}^hat (all three positive chains
in full); other twisting sets go through the generic engine.

Translation indexing: ``translation(m1, m2)`` is t_{m1 a^vee + m2 b^vee}
(coroot-lattice coordinates).  The closed forms below use a normalization
with (a,a) = 1, under which the same element is written t_{k1 a + k2 b}
with k1 = 2 m1, k2 = 2 m2; `translation_inversion` takes those doubled
parameters and floors the resulting fractional chain bounds.  (Odd k's do
not correspond to group elements; the formula set is still well defined.)

Poincare grading note: the closed-form series matches the twisted-length
grading l_B(w) - l_B(u) of the downset counts (the ordinary-length grading
does not; see tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .affine import clip_chain, materialize
from .affine_group import (
    AffineWeylElement,
    from_word,
    identity,
    inversion_set,
    reflection,
    translation as _translation,
)
from .biclosed import full_positive_biclosed
from .finite import build_system
from .orders import (
    length_ball,
    lower_covers,
    twisted_length_left,
    weak_leq,
)
from .poset import GradedPoset, PosetEdge, PosetNode

ALPHA = (1, 0)
BETA = (0, 1)
AB = (1, 1)

SIX_CLASSES = ("T", "sasbT", "sbsaT", "sbsasbT", "sbT", "saT")


class UnsupportedLength(Exception):
    pass


def datum():
    return build_system("A2")


def alcove_biclosed():
    """B = {a, b, a+b}^hat, the twisting set of the alcove order."""
    return full_positive_biclosed(datum())


def translation(m1: int, m2: int) -> AffineWeylElement:
    """t_{m1 a^vee + m2 b^vee}."""
    return _translation(datum(), (m1, m2))


def root_translation(k1: int, k2: int) -> AffineWeylElement:
    """The element t_{k1 a + k2 b} in the (a,a)=1 normalization (k's even)."""
    if k1 % 2 or k2 % 2:
        raise ValueError("t_{k1 a + k2 b} is a group element only for even k1, k2")
    return translation(k1 // 2, k2 // 2)


# ----- six classes and their cover deltas ----------------------------------

_CLASS_DELTAS = {
    # tag -> {gamma: (slope, const)} for l_B(s_{gamma+k d} w) - l_B(w)
    "T": {ALPHA: (-2, -1), BETA: (-2, -1), AB: (-4, -3)},
    "sasbT": {ALPHA: (4, 1), BETA: (-2, -1), AB: (2, 1)},
    "sbsaT": {ALPHA: (-2, -1), BETA: (4, 1), AB: (2, 1)},
    "sbsasbT": {ALPHA: (2, 1), BETA: (2, 1), AB: (4, 3)},
    "sbT": {ALPHA: (-4, -1), BETA: (2, 1), AB: (-2, -1)},
    "saT": {ALPHA: (2, 1), BETA: (-4, -1), AB: (-2, -1)},
}


def _class_table():
    d = datum()
    sa = d.reflection(ALPHA)
    sb = d.reflection(BETA)
    return {
        d.identity().imgs: "T",
        (sa * sb).imgs: "sasbT",
        (sb * sa).imgs: "sbsaT",
        (sa * sb * sa).imgs: "sbsasbT",
        sb.imgs: "sbT",
        sa.imgs: "saT",
    }


def class_of(w: AffineWeylElement) -> str:
    """Which of the six translation cosets w lies in (by its finite part)."""
    return _class_table()[w.fin.imgs]


def predicted_delta(w, gamma, k: int) -> int:
    """Closed-form l_B(s_{gamma+k delta} w) - l_B(w) for the alcove order."""
    tag = class_of(w) if isinstance(w, AffineWeylElement) else w
    slope, const = _CLASS_DELTAS[tag][tuple(gamma)]
    return slope * k + const


# ----- explicit inversion-set closed forms ---------------------------------

NEG = lambda r: tuple(-x for x in r)
F = Fraction


def _chains(*specs):
    out = []
    for base, lo, hi in specs:
        c = clip_chain(base, lo, hi)
        if c is not None:
            out.append(c)
    return out


def _t(k1, k2):
    # valid only for even k1, k2 (callers with odd parameters get None)
    if k1 % 2 or k2 % 2:
        return None
    return root_translation(k1, k2)


def _refl(gamma, k):
    return reflection(datum(), (gamma, k))


def _prod(k1, k2, *letters):
    t = _t(k1, k2)
    if t is None:
        return None
    for x in letters:
        t = t * x
    return t


def _sa():
    return _refl(ALPHA, 0)


def _sb():
    return _refl(BETA, 0)


#: name -> (element builder, chain-form builder).  Element builders return
#: None when the parameters do not give a group element (odd k1/k2).
CLOSED_FORMS = {
    "s(a+kd), k>=0": (
        lambda k1, k2, k: _refl(ALPHA, k) if k >= 0 else None,
        lambda k1, k2, k: _chains(
            (ALPHA, 0, 2 * k), (NEG(BETA), 1, k), (AB, 0, k - 1)
        ),
    ),
    "s(a+kd), k<0": (
        lambda k1, k2, k: _refl(ALPHA, k) if k < 0 else None,
        lambda k1, k2, k: _chains(
            (NEG(ALPHA), 1, -2 * k - 1), (BETA, 0, -k - 1), (NEG(AB), 1, -k)
        ),
    ),
    "s(a+b+kd), k>=0": (
        lambda k1, k2, k: _refl(AB, k) if k >= 0 else None,
        lambda k1, k2, k: _chains(
            (AB, 0, 2 * k), (ALPHA, 0, k), (BETA, 0, k)
        ),
    ),
    "s(a+b+kd), k<0": (
        lambda k1, k2, k: _refl(AB, k) if k < 0 else None,
        lambda k1, k2, k: _chains(
            (NEG(AB), 1, -2 * k - 1),
            (NEG(ALPHA), 1, -k - 1),
            (NEG(BETA), 1, -k - 1),
        ),
    ),
    "s(b+kd), k>=0": (
        lambda k1, k2, k: _refl(BETA, k) if k >= 0 else None,
        lambda k1, k2, k: _chains(
            (BETA, 0, 2 * k), (NEG(ALPHA), 1, k), (AB, 0, k - 1)
        ),
    ),
    "s(b+kd), k<0": (
        lambda k1, k2, k: _refl(BETA, k) if k < 0 else None,
        lambda k1, k2, k: _chains(
            (NEG(BETA), 1, -2 * k - 1), (ALPHA, 0, -k - 1), (NEG(AB), 1, -k)
        ),
    ),
    "t": (
        lambda k1, k2, k: _t(k1, k2),
        lambda k1, k2, k: _chains(
            (ALPHA, 0, k1 - F(k2, 2) - 1),
            (NEG(ALPHA), 1, -k1 + F(k2, 2)),
            (BETA, 0, -F(k1, 2) + k2 - 1),
            (NEG(BETA), 1, F(k1, 2) - k2),
            (AB, 0, F(k1 + k2, 2) - 1),
            (NEG(AB), 1, -F(k1 + k2, 2)),
        ),
    ),
    "t.s(a+kd)": (
        lambda k1, k2, k: _prod(k1, k2, _refl(ALPHA, k)),
        lambda k1, k2, k: _chains(
            (ALPHA, 0, k1 - F(k2, 2) + 2 * k),
            (NEG(ALPHA), 1, -2 * k - 1 - k1 + F(k2, 2)),
            (BETA, 0, -k - 1 - F(k1, 2) + k2),
            (NEG(BETA), 1, k + F(k1, 2) - k2),
            (AB, 0, k - 1 + F(k1 + k2, 2)),
            (NEG(AB), 1, -k - F(k1 + k2, 2)),
        ),
    ),
    "t.s(a+b+kd)": (
        lambda k1, k2, k: _prod(k1, k2, _refl(AB, k)),
        lambda k1, k2, k: _chains(
            (ALPHA, 0, k + k1 - F(k2, 2)),
            (NEG(ALPHA), 1, -k - 1 - k1 + F(k2, 2)),
            (BETA, 0, k - F(k1, 2) + k2),
            (NEG(BETA), 1, -k - 1 + F(k1, 2) - k2),
            (AB, 0, 2 * k + F(k1 + k2, 2)),
            (NEG(AB), 1, -2 * k - 1 - F(k1 + k2, 2)),
        ),
    ),
    "t.sa": (
        lambda k1, k2, k: _prod(k1, k2, _sa()),
        lambda k1, k2, k: _chains(
            (ALPHA, 0, k1 - F(k2, 2)),
            (NEG(ALPHA), 1, -k1 + F(k2, 2) - 1),
            (BETA, 0, -F(k1, 2) + k2 - 1),
            (NEG(BETA), 1, F(k1, 2) - k2),
            (AB, 0, F(k1 + k2, 2) - 1),
            (NEG(AB), 1, -F(k1 + k2, 2)),
        ),
    ),
    "t.sa.s(a+kd)": (
        lambda k1, k2, k: _prod(k1, k2, _sa(), _refl(ALPHA, k)),
        lambda k1, k2, k: _chains(
            (ALPHA, 0, -2 * k - 1 + k1 - F(k2, 2)),
            (NEG(ALPHA), 1, 2 * k - k1 + F(k2, 2)),
            (BETA, 0, k - 1 - F(k1, 2) + k2),
            (NEG(BETA), 1, -k + F(k1, 2) - k2),
            (AB, 0, -k - 1 + F(k1 + k2, 2)),
            (NEG(AB), 1, k - F(k1 + k2, 2)),
        ),
    ),
    "t.sa.s(b+kd)": (
        lambda k1, k2, k: _prod(k1, k2, _sa(), _refl(BETA, k)),
        lambda k1, k2, k: _chains(
            (ALPHA, 0, k + k1 - F(k2, 2)),
            (NEG(ALPHA), 1, -k - 1 - k1 + F(k2, 2)),
            (BETA, 0, k - 1 - F(k1, 2) + k2),
            (NEG(BETA), 1, -k + F(k1, 2) - k2),
            (AB, 0, 2 * k + F(k1 + k2, 2)),
            (NEG(AB), 1, -2 * k - 1 - F(k1 + k2, 2)),
        ),
    ),
    "t.sa.s(a+b+kd)": (
        lambda k1, k2, k: _prod(k1, k2, _sa(), _refl(AB, k)),
        lambda k1, k2, k: _chains(
            (ALPHA, 0, -k - 1 + k1 - F(k2, 2)),
            (NEG(ALPHA), 1, k - k1 + F(k2, 2)),
            (BETA, 0, 2 * k - F(k1, 2) + k2),
            (NEG(BETA), 1, -2 * k - 1 + F(k1, 2) - k2),
            (AB, 0, k + F(k1 + k2, 2)),
            (NEG(AB), 1, -k - 1 - F(k1 + k2, 2)),
        ),
    ),
    "t.sa.sb": (
        lambda k1, k2, k: _prod(k1, k2, _sa(), _sb()),
        lambda k1, k2, k: _chains(
            (ALPHA, 0, k1 - F(k2, 2)),
            (NEG(ALPHA), 1, -k1 + F(k2, 2) - 1),
            (BETA, 0, -F(k1, 2) + k2 - 1),
            (NEG(BETA), 1, F(k1, 2) - k2),
            (AB, 0, F(k1 + k2, 2)),
            (NEG(AB), 1, -F(k1 + k2, 2) - 1),
        ),
    ),
    "t.sa.sb.s(a+kd)": (
        lambda k1, k2, k: _prod(k1, k2, _sa(), _sb(), _refl(ALPHA, k)),
        lambda k1, k2, k: _chains(
            (ALPHA, 0, -k + k1 - F(k2, 2)),
            (NEG(ALPHA), 1, k - 1 - k1 + F(k2, 2)),
            (BETA, 0, 2 * k - F(k1, 2) + k2),
            (NEG(BETA), 1, -2 * k - 1 + F(k1, 2) - k2),
            (AB, 0, k + F(k1 + k2, 2)),
            (NEG(AB), 1, -k - 1 - F(k1 + k2, 2)),
        ),
    ),
    "t.sa.sb.s(b+kd)": (
        lambda k1, k2, k: _prod(k1, k2, _sa(), _sb(), _refl(BETA, k)),
        lambda k1, k2, k: _chains(
            (ALPHA, 0, -k + k1 - F(k2, 2)),
            (NEG(ALPHA), 1, k - 1 - k1 + F(k2, 2)),
            (BETA, 0, -k - 1 - F(k1, 2) + k2),
            (NEG(BETA), 1, k + F(k1, 2) - k2),
            (AB, 0, -2 * k - 1 + F(k1 + k2, 2)),
            (NEG(AB), 1, 2 * k - F(k1 + k2, 2)),
        ),
    ),
    "t.sa.sb.s(a+b+kd)": (
        lambda k1, k2, k: _prod(k1, k2, _sa(), _sb(), _refl(AB, k)),
        lambda k1, k2, k: _chains(
            (ALPHA, 0, -2 * k - 1 + k1 - F(k2, 2)),
            (NEG(ALPHA), 1, 2 * k - k1 + F(k2, 2)),
            (BETA, 0, k - F(k1, 2) + k2),
            (NEG(BETA), 1, -k - 1 + F(k1, 2) - k2),
            (AB, 0, -k - 1 + F(k1 + k2, 2)),
            (NEG(AB), 1, k - F(k1 + k2, 2)),
        ),
    ),
    "t.sa.sb.sa": (
        lambda k1, k2, k: _prod(k1, k2, _sa(), _sb(), _sa()),
        lambda k1, k2, k: _chains(
            (ALPHA, 0, k1 - F(k2, 2)),
            (NEG(ALPHA), 1, -k1 + F(k2, 2) - 1),
            (BETA, 0, -F(k1, 2) + k2),
            (NEG(BETA), 1, F(k1, 2) - k2 - 1),
            (AB, 0, F(k1 + k2, 2)),
            (NEG(AB), 1, -F(k1 + k2, 2) - 1),
        ),
    ),
    "t.sa.sb.sa.s(a+kd)": (
        lambda k1, k2, k: _prod(k1, k2, _sa(), _sb(), _sa(), _refl(ALPHA, k)),
        lambda k1, k2, k: _chains(
            (ALPHA, 0, k + k1 - F(k2, 2)),
            (NEG(ALPHA), 1, -k - 1 - k1 + F(k2, 2)),
            (BETA, 0, -2 * k - 1 - F(k1, 2) + k2),
            (NEG(BETA), 1, 2 * k + F(k1, 2) - k2),
            (AB, 0, -k + F(k1 + k2, 2)),
            (NEG(AB), 1, k - 1 - F(k1 + k2, 2)),
        ),
    ),
    "t.sa.sb.sa.s(a+b+kd)": (
        lambda k1, k2, k: _prod(k1, k2, _sa(), _sb(), _sa(), _refl(AB, k)),
        lambda k1, k2, k: _chains(
            (ALPHA, 0, -k - 1 + k1 - F(k2, 2)),
            (NEG(ALPHA), 1, k - k1 + F(k2, 2)),
            (BETA, 0, -k - 1 - F(k1, 2) + k2),
            (NEG(BETA), 1, k + F(k1, 2) - k2),
            (AB, 0, -2 * k - 1 + F(k1 + k2, 2)),
            (NEG(AB), 1, 2 * k - F(k1 + k2, 2)),
        ),
    ),
}


def closed_form_set(name, k1=0, k2=0, k=0):
    """Materialized root set of one closed form (None where empty)."""
    _, chains = CLOSED_FORMS[name]
    return materialize(chains(k1, k2, k))


def closed_form_element(name, k1=0, k2=0, k=0):
    builder, _ = CLOSED_FORMS[name]
    return builder(k1, k2, k)


def translation_inversion(k1: int, k2: int):
    """The six-chain closed form for N(t_{k1 a + k2 b}) (root coordinates)."""
    return closed_form_set("t", k1, k2)


# ----- sphericity ----------------------------------------------------------


def sphericity(poset: GradedPoset) -> str:
    """'Spherical' iff every length-2 subinterval has exactly 4 elements."""
    grades = poset.grading()
    if not grades:
        raise UnsupportedLength("empty interval")
    length = max(grades.values()) - min(grades.values())
    if length not in (2, 3):
        raise UnsupportedLength(f"interval length {length}, want 2 or 3")
    keys = poset.keys()
    for a in keys:
        for b in keys:
            if grades[b] - grades[a] == 2 and poset.leq(a, b):
                middles = [
                    z
                    for z in keys
                    if grades[z] == grades[a] + 1
                    and poset.leq(a, z)
                    and poset.leq(z, b)
                ]
                if len(middles) != 2:
                    return "NonSpherical"
    return "Spherical"


# ----- infinite-dihedral coset decomposition -------------------------------


def u_element() -> AffineWeylElement:
    """u = s_a s_b s_a = s_{a+b}."""
    return from_word(datum(), (1, 2, 1))


def v_element() -> AffineWeylElement:
    """v = s_{delta-a-b}."""
    return from_word(datum(), (3,))


def coset_prefix(i: int) -> AffineWeylElement:
    """w(i): the length-|i| prefix of (s_b s_3 s_a)^inf (i>=0) or
    (s_a s_3 s_b)^inf (i<0)."""
    cycle = (2, 3, 1) if i >= 0 else (1, 3, 2)
    n = abs(i)
    return from_word(datum(), tuple(cycle[j % 3] for j in range(n)))


@dataclass(frozen=True)
class DihedralDecomposition:
    i: int
    u_v_word: tuple  # alternating letters in {'u', 'v'}
    form: str  # one of 'u(vu)^k', '(vu)^k', 'v(uv)^k', '(uv)^k'
    k: int

    def predicted_twisted_length(self) -> int:
        even = self.i % 2 == 0
        k = self.k
        if self.form == "u(vu)^k":
            return -4 * k - 3 if even else -4 * k - 2
        if self.form == "(vu)^k":
            return -4 * k if even else -4 * k - 1
        if self.form == "v(uv)^k":
            return 4 * k + 1 if even else 4 * k + 2
        return 4 * k if even else 4 * k - 1


def _u_subgroup_positive_roots(level_bound: int):
    """Positive roots of U = <v, u>: the (a+b) +- k delta lines."""
    out = []
    for k in range(0, level_bound + 1):
        out.append((AB, k))
    for k in range(1, level_bound + 1):
        out.append((NEG(AB), k))
    return out


def dihedral_decompose(w: AffineWeylElement) -> DihedralDecomposition:
    """Write w = w(i)^{-1} z with z in U = <v, u>, w(i)^{-1} minimal in wU."""
    u, v = u_element(), v_element()
    m = w
    letters = []
    while True:
        if (m * u).length() < m.length():
            m = m * u
            letters.append("u")
        elif (m * v).length() < m.length():
            m = m * v
            letters.append("v")
        else:
            break
    # minimality in wU: m sends no root on the (a+b) lines negative
    bound = m.max_inversion_level() + 1
    assert not any(
        m.inverse().in_inversion_set(r)
        for r in _u_subgroup_positive_roots(bound)
    ), "greedy coset descent did not reach the minimal representative"
    z_word = tuple(reversed(letters))
    assert all(x != y for x, y in zip(z_word, z_word[1:])), "non-alternating"
    i = _match_prefix_index(m)
    if not z_word:
        form, k = "(uv)^k", 0
    elif z_word[0] == "u" and z_word[-1] == "u":
        form, k = "u(vu)^k", (len(z_word) - 1) // 2
    elif z_word[0] == "v" and z_word[-1] == "v":
        form, k = "v(uv)^k", (len(z_word) - 1) // 2
    elif z_word[0] == "v":
        form, k = "(vu)^k", len(z_word) // 2
    else:
        form, k = "(uv)^k", len(z_word) // 2
    return DihedralDecomposition(i, z_word, form, k)


def _match_prefix_index(m: AffineWeylElement) -> int:
    bound = m.length() + 2
    for i in range(-bound, bound + 1):
        if coset_prefix(i).inverse() == m:
            return i
    raise AssertionError("coset minimum is not a w(i)^{-1}")


def dihedral_reassemble(dec: DihedralDecomposition) -> AffineWeylElement:
    w = coset_prefix(dec.i).inverse()
    parts = {"u": u_element(), "v": v_element()}
    for letter in dec.u_v_word:
        w = w * parts[letter]
    return w


def uvk_u_wi_inversion(k: int, i: int):
    """Closed form for N((uv)^k u w(i)) from the coset-length computation."""
    ci = ceil(Fraction(i, 2))
    fi = floor(Fraction(i, 2))
    return materialize(
        _chains(
            (ALPHA, 0, k - ci),
            (BETA, 0, k + fi),
            (AB, 0, 2 * k),
            (NEG(ALPHA), 1, ci - k - 1),
            (NEG(BETA), 1, ceil(Fraction(-i, 2)) - k - 1),
        )
    )


# ----- automorphisms -------------------------------------------------------

_SIGMA = {1: 2, 2: 3, 3: 1}
_SIGMA_INV = {1: 3, 2: 1, 3: 2}


def sigma(w: AffineWeylElement, inverse=False) -> AffineWeylElement:
    """The order-3 diagram rotation s_3 -> s_1 -> s_2 -> s_3."""
    table = _SIGMA_INV if inverse else _SIGMA
    return from_word(datum(), tuple(table[a] for a in w.word()))


def automorphism(kind: str, w: AffineWeylElement) -> AffineWeylElement:
    """sigma / eta / eta_prime / rho -- automorphisms of the alcove order.

    eta(w) = sigma(w) s_a s_b and eta_prime(w) = sigma^{-1}(w) s_b s_a both
    lower l_B by 2; rho = eta o eta_prime^{-1} preserves l_B and shifts the
    coset-prefix index i by 2 while fixing the U-factor.
    """
    d = datum()
    sasb = from_word(d, (1, 2))
    sbsa = from_word(d, (2, 1))
    if kind == "sigma":
        return sigma(w)
    if kind == "eta":
        return sigma(w) * sasb
    if kind == "eta_prime":
        return sigma(w, inverse=True) * sbsa
    if kind == "eta_prime_inv":
        return sigma(w * sasb)
    if kind == "rho":
        return automorphism("eta", automorphism("eta_prime_inv", w))
    raise ValueError(f"unknown automorphism kind: {kind}")


# ----- Poincare series -----------------------------------------------------

_DENOM = (1, 0, -2, 0, 1)  # t^4 - 2t^2 + 1, constant term first
_NUM_EVEN = (1, 2, 2, 1)  # 1 + 2t + 2t^2 + t^3
_NUM_ODD = (1, 3, 2)  # 1 + 3t + 2t^2


def _series(num, denom, d_max):
    out = []
    for n in range(d_max + 1):
        c = num[n] if n < len(num) else 0
        for j in range(1, min(n, len(denom) - 1) + 1):
            c -= denom[j] * out[n - j]
        assert c % denom[0] == 0
        out.append(c // denom[0])
    return out


def poincare_series(parity: str, d_max: int):
    """Power-series coefficients of the closed-form Poincare series."""
    if d_max < 0:
        raise ValueError("d_max must be >= 0")
    if parity == "even":
        return _series(_NUM_EVEN, _DENOM, d_max)
    if parity == "odd":
        return _series(_NUM_ODD, _DENOM, d_max)
    raise ValueError("parity must be 'even' or 'odd'")


def poincare_recursion_residual(d_max: int):
    """Residual coefficients of F1 = 1 + 2tF2 - 2t^2 F1 + t^3 F2 and
    F2 = 1 + 3tF1 - 2t^2 F2; all zero if the closed forms are consistent."""
    f1 = poincare_series("even", d_max)
    f2 = poincare_series("odd", d_max)

    def coef(seq, n):
        return seq[n] if 0 <= n < len(seq) else 0

    res1, res2 = [], []
    for n in range(d_max + 1):
        rhs1 = (
            (1 if n == 0 else 0)
            + 2 * coef(f2, n - 1)
            - 2 * coef(f1, n - 2)
            + coef(f2, n - 3)
        )
        rhs2 = (1 if n == 0 else 0) + 3 * coef(f1, n - 1) - 2 * coef(f2, n - 2)
        res1.append(f1[n] - rhs1)
        res2.append(f2[n] - rhs2)
    return res1, res2


# ----- the Hasse-figure fragment -------------------------------------------

#: Every node label printed in the Hasse-diagram figure fragment.
FIGURE_LABELS = (
    "e", "1", "2", "3", "31", "32", "13", "23", "131", "132", "232",
    "123", "213", "231", "1231", "1232", "1213", "2131", "2132", "3123",
    "3213", "21231", "32131", "32132", "12132", "13123", "213123",
)


def figure_hasse(word_length_bound: int = 6) -> GradedPoset:
    """The alcove-order Hasse fragment on the l(w) <= bound ball.

    Nodes carry canonical-word digit labels; edges are covering relations,
    'weak' kind when also a cover in the B-twisted left weak order (the
    figure's black edges) and 'strong' otherwise (blue).
    """
    d = datum()
    B = alcove_biclosed()
    ball = set(length_ball(d, word_length_bound))
    # display words: keep the figure's choice of reduced word where one is
    # given, else fall back to the canonical (lex-least) word
    preferred = {
        from_word(d, tuple(int(c) for c in lab)): lab
        for lab in FIGURE_LABELS
        if lab != "e"
    }
    nodes = [
        PosetNode(
            w,
            twisted_length_left(w, B),
            preferred.get(w) or "".join(map(str, w.word())) or "e",
        )
        for w in sorted(ball, key=lambda w: (w.length(), w.word()))
    ]
    edges = []
    for w in ball:
        for refl_root, w2 in lower_covers(w, B):
            if w2 in ball:
                kind = "weak" if weak_leq(w2, w, B, side="left") else "strong"
                name = d.root_name(refl_root[0])
                k = refl_root[1]
                label = f"s[{name}{'+' if k >= 0 else ''}{k}d]" if k else f"s[{name}]"
                edges.append(PosetEdge(w2, w, label, kind))
    return GradedPoset(nodes, edges)
