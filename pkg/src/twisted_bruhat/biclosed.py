"""Biclosed sets in the affine root system, as twisted lifts of finite ones.

Every biclosed set of positive affine roots is of the form
``w . P(psi, d1, d2)^hat`` where ``P^hat`` lifts a finite biclosed set to
all its delta-chains and ``.`` is the dot action
``w . B = (N(w) \\ w(-B)) | (w(B) \\ -N(w))``.  This module makes that
representation a total, O(1)-per-root membership oracle, with exact
per-chain member counting (used heavily by the twisted length functions).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .affine import is_positive_affine, negate
from .affine_group import (
    AffineWeylElement,
    format_word,
    from_word,
    identity,
    parse_word,
)
from .finite import (
    CartanDatum,
    FiniteBiclosed,
    PositiveSystem,
    WeylElement,
    build_system,
    finite_biclosed_index,
    standard_positive_system,
)

CLASSES = (
    "Finite",
    "Cofinite",
    "InfiniteWordInversion",
    "InfiniteWordCoinversion",
    "Mixed",
)


@lru_cache(maxsize=None)
def _longest_element(type_label) -> WeylElement:
    datum = build_system(type_label)
    for w in datum.weyl_elements:
        if all(
            not datum.is_positive(w.apply(r)) for r in datum.positive_roots
        ):
            return w
    raise AssertionError("no longest element")


class BiclosedSet:
    """w . P(psi, d1, d2)^hat with a decidable membership oracle."""

    def __init__(
        self,
        twist: AffineWeylElement,
        psi: PositiveSystem,
        delta1=(),
        delta2=(),
    ):
        self.datum = psi.datum
        self.twist = twist
        self.psi = psi
        self.finite_part = FiniteBiclosed(psi, delta1, delta2)
        self.delta1 = self.finite_part.delta1
        self.delta2 = self.finite_part.delta2
        self.P_roots = self.finite_part.roots
        self._per_base = None
        self._lB = {}
        self._lBp = {}

    # ----- representation-level data ----------------------------------

    def _base_data(self):
        """Per finite base root: constants making membership O(1) in the level.

        For positive r = mu + k delta:
          r in B  iff  (pos_in_P and k >= a)  or  (k <= nw_hi and not
                       (neg_in_P and k <= b))
        where nu = u^{-1}(mu), c = (mu, u(v)) for twist = u t_v,
        a = c + base_zero(nu), b = c - base_zero(-nu), nw_hi the top of the
        N(twist) chain over mu (or None).
        """
        if self._per_base is None:
            datum = self.datum
            u = self.twist.fin
            uinv = self.twist._fin_inverse()
            uv = tuple(Fraction(x) for x in u.apply(self.twist.trans))
            nw = self.twist.inversion_chains()
            data = {}
            for mu in datum.roots:
                c = datum.inner(mu, uv)
                assert c.denominator == 1
                c = int(c)
                nu = uinv.apply(mu)
                pos_in_P = nu in self.P_roots
                neg_in_P = tuple(-x for x in nu) in self.P_roots
                a = c + (0 if datum.is_positive(nu) else 1)
                b = c - (0 if not datum.is_positive(nu) else 1)
                ch = nw.get(mu)
                nw_hi = ch[1] if ch is not None else None
                data[mu] = (pos_in_P, a, neg_in_P, b, nw_hi)
            self._per_base = data
        return self._per_base

    def contains(self, r) -> bool:
        base, k = r
        if not is_positive_affine(self.datum, r):
            raise ValueError("membership is defined on positive affine roots")
        pos_in_P, a, neg_in_P, b, nw_hi = self._base_data()[tuple(base)]
        if pos_in_P and k >= a:
            return True
        if nw_hi is not None and k <= nw_hi:
            return not (neg_in_P and k <= b)
        return False

    def count_in_chain(self, base, lo: int, hi: int) -> int:
        """|B intersect {base + k delta : lo <= k <= hi}| in O(1)."""
        if hi < lo:
            return 0
        pos_in_P, a, neg_in_P, b, nw_hi = self._base_data()[tuple(base)]
        # S1 = [a, inf) if pos_in_P; S2 = [s2lo, nw_hi] (minus nothing if
        # neg root of P absent).
        n1 = max(0, hi - max(lo, a) + 1) if pos_in_P else 0
        if nw_hi is None:
            return n1
        s2lo = b + 1 if neg_in_P else lo
        lo2, hi2 = max(lo, s2lo), min(hi, nw_hi)
        n2 = max(0, hi2 - lo2 + 1)
        if pos_in_P and n2:
            overlap = max(0, hi2 - max(lo2, a) + 1)
        else:
            overlap = 0
        return n1 + n2 - overlap

    def count_inversions_in(self, w: AffineWeylElement, inverse: bool) -> int:
        """|N(w^{-1}) ∩ B| (inverse=True) or |N(w) ∩ B|."""
        elem = w.inverse() if inverse else w
        total = 0
        for base, (lo, hi) in elem.inversion_chains().items():
            total += self.count_in_chain(base, lo, hi)
        return total

    # ----- derived structure -------------------------------------------

    def I_roots(self) -> frozenset:
        """I_B: finite roots whose chain meets B infinitely often."""
        u = self.twist.fin
        return frozenset(u.apply(p) for p in self.P_roots)

    def I_of(self) -> FiniteBiclosed:
        """I_B as an explicit finite biclosed set P(psi', d1', d2')."""
        roots = self.I_roots()
        index = finite_biclosed_index(self.datum.type_label)
        triple = index.get(roots)
        if triple is None:  # pragma: no cover - would contradict the theory
            raise AssertionError("I_B is not of the P(psi,d1,d2) form")
        psi, d1, d2 = triple
        return FiniteBiclosed(psi, d1, d2)

    def A_nonempty(self, base) -> bool:
        """Does the chain over `base` meet B at all? (exact, no truncation)"""
        base = tuple(base)
        pos_in_P, a, neg_in_P, b, nw_hi = self._base_data()[base]
        if pos_in_P:
            return True
        if nw_hi is None:
            return False
        k0 = 0 if self.datum.is_positive(base) else 1
        return self.count_in_chain(base, k0, nw_hi) > 0

    def classify(self) -> str:
        d = frozenset(self.psi.simple_system)
        if self.delta1 == d:
            return "Finite"
        if self.delta2 == d:
            return "Cofinite"
        if self.delta1 and self.delta2:
            return "Mixed"
        if self.delta2:
            return "InfiniteWordCoinversion"
        return "InfiniteWordInversion"

    def complement(self) -> "BiclosedSet":
        """The biclosed complement: w . P(psi^-, -d2, -d1)^hat."""
        w0 = _longest_element(self.datum.type_label)
        psi_neg = PositiveSystem(self.datum, self.psi.chamber * w0)
        neg = lambda s: [tuple(-x for x in r) for r in s]
        return BiclosedSet(self.twist, psi_neg, neg(self.delta2), neg(self.delta1))

    def materialize_finite(self) -> frozenset:
        """The root set, valid only for the Finite class.

        With delta1 = Delta the finite part P is empty, so B = N(twist).
        """
        if self.classify() != "Finite":
            raise ValueError("only Finite-class sets materialize")
        from .affine_group import inversion_set

        return inversion_set(self.twist)

    # ----- equality and canonical form ---------------------------------

    def level_star(self, other: "BiclosedSet" = None) -> int:
        l = self.twist.max_inversion_level()
        if other is not None:
            l = max(l, other.twist.max_inversion_level())
        return 1 + l

    def equals(self, other: "BiclosedSet") -> bool:
        """Oracle equality: I_B match plus agreement up to level L*."""
        if self is other:
            return True
        if self.I_roots() != other.I_roots():
            return False
        lstar = self.level_star(other)
        datum = self.datum
        for base in datum.roots:
            k0 = 0 if datum.is_positive(base) else 1
            for k in range(k0, lstar + 1):
                if self.contains((base, k)) != other.contains((base, k)):
                    return False
        return True

    def canonicalized(self) -> "BiclosedSet":
        """Greedily strip trailing twist letters that fix the oracle."""
        current = self
        while True:
            word = current.twist.word()
            if not word:
                return current
            shorter = BiclosedSet(
                from_word(self.datum, word[:-1]),
                current.psi,
                current.delta1,
                current.delta2,
            )
            if shorter.equals(current):
                current = shorter
            else:
                return current

    def __repr__(self):
        return format_biclosed(self)


def dot_action(u: AffineWeylElement, B: BiclosedSet) -> BiclosedSet:
    """u . (w . P^hat) = (uw) . P^hat (the representation composes twists)."""
    return BiclosedSet(u * B.twist, B.psi, B.delta1, B.delta2)


def dot_action_pointwise(u: AffineWeylElement, member_fn, r) -> bool:
    """Membership of r in u.B straight from the defining formula.

    (N(u) \\ u(-B)) | (u(B) \\ -N(u)) -- used as the oracle cross-check.
    """
    datum = u.datum
    in_nu = u.in_inversion_set(r)
    ui_r = u.inv_apply(r)
    neg_ui_r = negate(ui_r)
    in_u_minus_B = is_positive_affine(datum, neg_ui_r) and member_fn(neg_ui_r)
    if in_nu and not in_u_minus_B:
        return True
    in_uB = is_positive_affine(datum, ui_r) and member_fn(ui_r)
    # r is positive, so r never lies in -N(u) (a set of negative roots).
    return in_uB


def empty_biclosed(datum: CartanDatum) -> BiclosedSet:
    """B = empty set: P(psi, Delta, {}) with trivial twist."""
    psi = standard_positive_system(datum)
    return BiclosedSet(identity(datum), psi, psi.simple_system, ())


def full_positive_biclosed(datum: CartanDatum) -> BiclosedSet:
    """B = (Phi+)^hat: every positive chain in full."""
    return BiclosedSet(identity(datum), standard_positive_system(datum))


def from_inversion_set(x: AffineWeylElement) -> BiclosedSet:
    """N(x) as a BiclosedSet: x . P(psi, Delta, {})^hat = x . {} = N(x)."""
    return BiclosedSet(
        x,
        standard_positive_system(x.datum),
        standard_positive_system(x.datum).simple_system,
        (),
    )


# ----- text grammar --------------------------------------------------------

_BIC_RE = re.compile(
    r"^\s*twist:(?P<twist>\S+)\s+psi:(?P<psi>\S+)\s+"
    r"d1:\{(?P<d1>[^}]*)\}\s+d2:\{(?P<d2>[^}]*)\}\s*$"
)


def parse_biclosed(datum: CartanDatum, text: str) -> BiclosedSet:
    """Parse 'twist:<word> psi:<word> d1:{i,j} d2:{k}'.

    psi is the finite chamber word over letters 1..rank; d-indices i refer
    to the psi-simple roots chamber(alpha_i), 1-based.
    """
    m = _BIC_RE.match(text)
    if m is None:
        raise ValueError(f"bad biclosed syntax: {text!r}")
    twist = from_word(datum, parse_word(datum, m.group("twist")))
    psi_word = parse_word(datum, m.group("psi"))
    if any(a > datum.rank for a in psi_word):
        raise ValueError("psi word must use finite letters only")
    chamber = datum.identity()
    for a in psi_word:
        chamber = chamber * datum.simple_reflection(a - 1)
    psi = PositiveSystem(datum, chamber)

    def indices(group):
        group = group.strip()
        if not group:
            return []
        out = [int(p) for p in group.split(",")]
        for i in out:
            if not 1 <= i <= datum.rank:
                raise ValueError(f"simple-root index {i} out of range 1..{datum.rank}")
        return out

    d1 = [chamber.apply(datum.simple_roots[i - 1]) for i in indices(m.group("d1"))]
    d2 = [chamber.apply(datum.simple_roots[i - 1]) for i in indices(m.group("d2"))]
    return BiclosedSet(twist, psi, d1, d2)


def format_biclosed(B: BiclosedSet) -> str:
    datum = B.datum
    chamber = B.psi.chamber
    chamber_word = chamber.word()
    inv = chamber.inverse()

    def idx(roots):
        out = []
        for r in roots:
            pre = inv.apply(r)
            out.append(datum.simple_roots.index(pre) + 1)
        return ",".join(map(str, sorted(out)))

    return (
        f"twist:{format_word(B.twist.word())}"
        f" psi:{format_word(tuple(a + 1 for a in chamber_word))}"
        f" d1:{{{idx(B.delta1)}}} d2:{{{idx(B.delta2)}}}"
    )
