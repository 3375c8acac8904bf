"""The affine Weyl group W~ = W x| T in translation normal form.

An element is stored as a pair ``(finite_part, translation)`` meaning
``w = finite_part . t_v`` where ``t_v(x) = x + (x, v) delta``.  The
translation vector ``v`` lives in the coroot lattice, written over the
simple-root basis (rational coordinates; integral for simply-laced types).

Convention (fixed globally, following the source convention for twisted
orders): ``inversion_set(w)`` is the set of positive affine roots sent
negative by ``w^{-1}`` -- i.e. the inversion set of the *inverse*.  With
this convention N(uv) decomposes by the product formula and
N(s_1...s_k) = {a_{s_1}, s_1(a_{s_2}), ...} for reduced words.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .affine import (
    base_zero,
    is_positive_affine,
    negate,
    simple_affine_roots,
)
from .finite import CartanDatum, WeylElement, build_system


def _frv(vec):
    return tuple(Fraction(x) for x in vec)


class AffineWeylElement:
    """Element of the affine Weyl group in (finite part, translation) form."""

    __slots__ = ("datum", "fin", "trans", "_hash", "_inv", "_chains", "_word")

    def __init__(self, datum: CartanDatum, fin: WeylElement, trans):
        self.datum = datum
        self.fin = fin
        self.trans = _frv(trans)
        self._hash = hash((fin.imgs, self.trans))
        self._inv = None
        self._chains = None
        self._word = None

    # ----- group structure --------------------------------------------

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        # (u1 t_v1)(u2 t_v2) = u1 u2 t_{u2^{-1}(v1) + v2}
        u2inv = other._fin_inverse()
        v = tuple(
            a + b for a, b in zip(_frv(u2inv.apply(self.trans)), other.trans)
        )
        return AffineWeylElement(self.datum, self.fin * other.fin, v)

    def inverse(self) -> "AffineWeylElement":
        if self._inv is None:
            uinv = self._fin_inverse()
            v = tuple(-x for x in _frv(self.fin.apply(self.trans)))
            self._inv = AffineWeylElement(self.datum, uinv, v)
            self._inv._inv = self
        return self._inv

    def _fin_inverse(self) -> WeylElement:
        return _weyl_inverse(self.datum.type_label, self.fin)

    def is_identity(self) -> bool:
        return self.fin.is_identity() and all(x == 0 for x in self.trans)

    # ----- action on affine roots -------------------------------------

    def apply(self, r):
        base, level = r
        shift = self.datum.inner(base, self.trans)
        assert shift.denominator == 1, "translation not in the coroot lattice"
        return (self.fin.apply(base), level + int(shift))

    def inv_apply(self, r):
        return self.inverse().apply(r)

    # ----- inversion data ---------------------------------------------

    def inversion_chains(self):
        """Per finite base root, the chain [lo, hi] of N(self); dict base->(lo,hi).

        N(w) = positive affine roots r with w^{-1}(r) negative; over base mu
        this is the chain base_zero(mu) .. c_mu - (1 if u^{-1}(mu) > 0 else 0)
        where c_mu = (mu, u(v)).
        """
        if self._chains is None:
            datum = self.datum
            u = self.fin
            uinv = self._fin_inverse()
            uv = _frv(u.apply(self.trans))
            chains = {}
            for mu in datum.roots:
                c = datum.inner(mu, uv)
                assert c.denominator == 1
                c = int(c)
                nu = uinv.apply(mu)
                hi = c - 1 if datum.is_positive(nu) else c
                lo = 0 if datum.is_positive(mu) else 1
                if hi >= lo:
                    chains[mu] = (lo, hi)
            self._chains = chains
        return self._chains

    def length(self) -> int:
        return sum(hi - lo + 1 for lo, hi in self.inversion_chains().values())

    def max_inversion_level(self) -> int:
        chains = self.inversion_chains()
        return max((hi for _, hi in chains.values()), default=0)

    def in_inversion_set(self, r) -> bool:
        base, level = r
        ch = self.inversion_chains().get(tuple(base))
        return ch is not None and ch[0] <= level <= ch[1]

    # ----- words -------------------------------------------------------

    def word(self):
        """Canonical reduced word: lexicographically least, 1-based letters.

        Letters 1..rank are the finite simple reflections, rank+1 the
        affine one (s_{delta - theta}).
        """
        if self._word is None:
            simples = simple_affine_roots(self.datum)
            gens = simple_reflections(self.datum)
            w = self
            out = []
            while not w.is_identity():
                for i, a in enumerate(simples):
                    if w.in_inversion_set(a):
                        out.append(i + 1)
                        w = gens[i] * w
                        break
                else:  # pragma: no cover
                    raise AssertionError("no descent found")
            self._word = tuple(out)
        return self._word

    def __eq__(self, other):
        return (
            isinstance(other, AffineWeylElement)
            and self.fin.imgs == other.fin.imgs
            and self.trans == other.trans
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        w = self.word()
        return "Aff[" + (".".join(map(str, w)) if w else "e") + "]"


@lru_cache(maxsize=None)
def _weyl_inverse_table(type_label):
    datum = build_system(type_label)
    return {w: w.inverse() for w in datum.weyl_elements}


def _weyl_inverse(type_label, w: WeylElement) -> WeylElement:
    return _weyl_inverse_table(type_label)[w]


# ----- constructors --------------------------------------------------------


def identity(datum: CartanDatum) -> AffineWeylElement:
    return AffineWeylElement(datum, datum.identity(), (0,) * datum.rank)


@lru_cache(maxsize=None)
def _simple_reflections_cached(type_label):
    datum = build_system(type_label)
    gens = []
    for a in datum.simple_roots:
        gens.append(AffineWeylElement(datum, datum.reflection(a), (0,) * datum.rank))
    theta = datum.highest_root
    # s_{delta - theta} = s_theta t_{theta^vee}
    gens.append(AffineWeylElement(datum, datum.reflection(theta), datum.coroot(theta)))
    return tuple(gens)


def simple_reflections(datum: CartanDatum):
    """The rank+1 simple reflections of the affine group (affine one last)."""
    return _simple_reflections_cached(datum.type_label)


def reflection(datum: CartanDatum, r) -> AffineWeylElement:
    """s_{mu + n delta} = s_mu t_{-n mu^vee} for an affine root r = (mu, n)."""
    mu, n = r
    if not datum.is_root(mu):
        raise ValueError(f"not a root: {mu}")
    v = tuple(-n * x for x in datum.coroot(mu))
    return AffineWeylElement(datum, datum.reflection(mu), v)


def translation(datum: CartanDatum, vec) -> AffineWeylElement:
    """t_v for a coroot-lattice vector given over the simple-root basis."""
    return AffineWeylElement(datum, datum.identity(), vec)


def from_word(datum: CartanDatum, letters) -> AffineWeylElement:
    """Product of 1-based simple-reflection letters (rank+1 = affine)."""
    gens = simple_reflections(datum)
    w = identity(datum)
    for a in letters:
        if not 1 <= a <= datum.rank + 1:
            raise ValueError(f"letter out of range: {a}")
        w = w * gens[a - 1]
    return w


def parse_word(datum: CartanDatum, text: str):
    text = text.strip()
    if text in ("", "e"):
        return ()
    try:
        letters = tuple(int(p) for p in text.split("."))
    except ValueError as exc:
        raise ValueError(f"bad word syntax: {text!r}") from exc
    for a in letters:
        if not 1 <= a <= datum.rank + 1:
            raise ValueError(
                f"letter {a} out of range 1..{datum.rank + 1} in {text!r}"
            )
    return letters


def format_word(letters) -> str:
    return ".".join(map(str, letters)) if letters else "e"


def project_pi(w: AffineWeylElement) -> WeylElement:
    """The canonical projection W~ -> W (kills translations)."""
    return w.fin


# ----- inversion sets as materialized sets ---------------------------------


def inversion_set(w: AffineWeylElement) -> frozenset:
    """N(w): positive affine roots made negative by w^{-1} (note convention)."""
    out = set()
    for base, (lo, hi) in w.inversion_chains().items():
        out.update((base, k) for k in range(lo, hi + 1))
    return frozenset(out)


def product_inversion(w: AffineWeylElement, u: AffineWeylElement) -> frozenset:
    """N(wu) = (N(w) \\ w(-N(u))) union (w N(u) \\ -N(w)) -- the product formula."""
    nw = inversion_set(w)
    nu = inversion_set(u)
    w_minus_nu = frozenset(w.apply(negate(r)) for r in nu)
    w_nu = frozenset(w.apply(r) for r in nu)
    minus_nw = frozenset(negate(r) for r in nw)
    return (nw - w_minus_nu) | (w_nu - minus_nw)


def is_straight(w: AffineWeylElement, n_max: int) -> bool:
    """Bounded straightness certificate: l(w^n) = n*l(w) for 2 <= n <= n_max."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    l1 = w.length()
    if l1 == 0:
        return False
    p = w
    for n in range(2, n_max + 1):
        p = p * w
        if p.length() != n * l1:
            return False
    return True


# ----- infinite reduced words ----------------------------------------------


class InfiniteReducedWord:
    """An infinite reduced word, by its inversion-set oracle.

    kind "periodic": N(w^infty) = union of N(w^i) for a straight w.
    kind "canonical": N = B for a biclosed set with classification
    InfiniteWordInversion (delta2 empty, delta1 proper) -- the canonical
    form every infinite-word inversion set takes.
    """

    def __init__(self, kind: str, *, straight=None, biclosed=None):
        if kind == "periodic":
            if straight is None:
                raise ValueError("periodic kind needs a straight element")
            self.straight = straight
            self.datum = straight.datum
        elif kind == "canonical":
            if biclosed is None:
                raise ValueError("canonical kind needs a biclosed set")
            self.biclosed = biclosed
            self.datum = biclosed.datum
        else:
            raise ValueError(f"unknown kind: {kind}")
        self.kind = kind
        self._prefix_cache = {}

    def contains(self, r) -> bool:
        """Membership of a positive affine root in N(word)."""
        if not is_positive_affine(self.datum, r):
            raise ValueError("membership is defined on positive affine roots")
        if self.kind == "canonical":
            return self.biclosed.contains(r)
        w = self.straight
        # r in N(w^m) iff w^{-m}(r) < 0; the sets N(w^m) increase, and the
        # chain over base(r) grows at least once per order(pi(w)) powers,
        # so this bound is sufficient.
        d = _order_of(project_pi(w), self.datum)
        m_max = d * (abs(r[1]) + 2) + w.length()
        winv = w.inverse()
        z = winv
        for _ in range(m_max):
            if not is_positive_affine(self.datum, z.apply(r)):
                return True
            z = winv * z
        return False

    def prefix(self, n: int) -> AffineWeylElement:
        """The length-n prefix element (periodic kind only)."""
        if self.kind != "periodic":
            raise ValueError("prefix is defined for periodic words")
        if n not in self._prefix_cache:
            word = self.straight.word()
            letters = [word[i % len(word)] for i in range(n)]
            self._prefix_cache[n] = from_word(self.datum, letters)
        return self._prefix_cache[n]


def _order_of(u: WeylElement, datum: CartanDatum) -> int:
    p = u
    for n in range(1, len(datum.weyl_elements) + 1):
        if p.is_identity():
            return n
        p = p * u
    raise AssertionError("finite Weyl element of unbounded order")
