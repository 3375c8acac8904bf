"""Finite crystallographic root systems with exact rational arithmetic.

Shipped types: A2, A3, B2, G2.  Roots are integer coefficient vectors over
the simple basis; all inner products go through the Gram matrix, so every
computation is exact (`fractions.Fraction`, no floating point anywhere).

Also houses the finite Weyl group (fully enumerated -- at rank <= 3 it has
at most 24 elements), positive systems, and the finite biclosed sets
P(psi, d1, d2) = (psi \\ span(d1)) | span(d2) for orthogonal simple
subsets d1, d2.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache

#: Gram matrices of pairwise inner products of the simple roots, in a
#: normalization where every entry is rational.
_GRAM_TABLE = {
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B2": ((2, -1), (-1, 1)),
    "G2": ((2, -3), (-3, 6)),
}

#: Coxeter numbers, used as stabilization horizons by the cover search.
COXETER_NUMBER = {"A2": 3, "A3": 4, "B2": 4, "G2": 6}

_LETTERS = "abc"


def _fr(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class CartanDatum:
    """A finite irreducible crystallographic root system of rank <= 3.

    Roots are tuples of ints (coefficients over the simple basis).
    """

    def __init__(self, type_label: str):
        if type_label not in _GRAM_TABLE:
            raise ValueError(f"unknown type label: {type_label!r}")
        self.type_label = type_label
        gram = _GRAM_TABLE[type_label]
        self.rank = len(gram)
        self.gram = tuple(tuple(Fraction(x) for x in row) for row in gram)
        self.coxeter_number = COXETER_NUMBER[type_label]
        self.simple_roots = tuple(
            tuple(1 if j == i else 0 for j in range(self.rank))
            for i in range(self.rank)
        )
        self.roots = self._generate_roots()
        self.positive_roots = tuple(
            sorted(r for r in self.roots if self.is_positive(r))
        )
        self.highest_root = self._find_highest_root()
        self._weyl = None

    # ----- basic linear algebra over the simple basis ------------------

    def inner(self, u, v) -> Fraction:
        """Exact inner product of two coefficient vectors."""
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui:
                row = self.gram[i]
                for j, vj in enumerate(v):
                    if vj:
                        total += _fr(ui) * _fr(vj) * row[j]
        return total

    def norm_sq(self, r) -> Fraction:
        return self.inner(r, r)

    def coroot(self, r):
        """r^vee = 2r/(r,r) as a tuple of Fractions over the simple basis."""
        c = Fraction(2) / self.norm_sq(r)
        return tuple(c * x for x in r)

    def pairing(self, v, r) -> Fraction:
        """<v, r^vee> = 2(v,r)/(r,r)."""
        return 2 * self.inner(v, r) / self.norm_sq(r)

    def reflect(self, mirror, v):
        """Reflection of v in the hyperplane of `mirror`: v - <v,m^vee> m."""
        if tuple(mirror) not in self._root_set():
            raise ValueError(f"not a root: {mirror}")
        c = self.pairing(v, mirror)
        out = tuple(_fr(x) - c * _fr(m) for x, m in zip(v, mirror))
        if all(f.denominator == 1 for f in out):
            out = tuple(int(f) for f in out)
        return out

    @lru_cache(maxsize=None)
    def _root_set(self):
        return frozenset(self.roots)

    def is_root(self, v) -> bool:
        return tuple(v) in self._root_set()

    @staticmethod
    def is_positive(r) -> bool:
        """Positivity dichotomy: some coefficient > 0 (then all are >= 0)."""
        return any(x > 0 for x in r)

    def _generate_roots(self):
        frontier = set(self.simple_roots)
        roots = set(frontier)
        while frontier:
            nxt = set()
            for r in frontier:
                for s in self.simple_roots:
                    c = self.pairing(r, s)
                    img = tuple(int(x - c * m) for x, m in zip(r, s))
                    if img not in roots:
                        nxt.add(img)
            roots |= nxt
            frontier = nxt
        return tuple(sorted(roots))

    def _find_highest_root(self):
        # Maximal element of the root order: theta - r has nonnegative
        # coefficients for every root r.
        for theta in self.positive_roots:
            if all(
                all(t - x >= 0 for t, x in zip(theta, r))
                for r in self.positive_roots
            ):
                return theta
        raise AssertionError("no highest root found")

    # ----- Weyl group --------------------------------------------------

    @property
    def weyl_elements(self):
        """All elements of the finite Weyl group, enumerated once."""
        if self._weyl is None:
            e = self.identity()
            seen = {e}
            frontier = [e]
            gens = self.simple_reflections()
            while frontier:
                nxt = []
                for w in frontier:
                    for s in gens:
                        ws = w * s
                        if ws not in seen:
                            seen.add(ws)
                            nxt.append(ws)
                frontier = nxt
            self._weyl = tuple(sorted(seen, key=lambda w: w.imgs))
        return self._weyl

    def identity(self) -> "WeylElement":
        return WeylElement(self, self.simple_roots)

    def simple_reflection(self, i: int) -> "WeylElement":
        s = self.simple_roots[i]
        return WeylElement(
            self, tuple(self.reflect(s, a) for a in self.simple_roots)
        )

    def simple_reflections(self):
        return tuple(self.simple_reflection(i) for i in range(self.rank))

    def reflection(self, r) -> "WeylElement":
        """The reflection s_r for a finite root r."""
        return WeylElement(
            self, tuple(self.reflect(r, a) for a in self.simple_roots)
        )

    # ----- rendering ---------------------------------------------------

    def root_name(self, r) -> str:
        """Render a root as e.g. 'a', '-b', 'a+b', '3a+2b'."""
        terms = []
        for i, c in enumerate(r):
            if c == 0:
                continue
            letter = _LETTERS[i]
            if c == 1:
                term = letter
            elif c == -1:
                term = "-" + letter
            else:
                term = f"{c}{letter}"
            terms.append(term)
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def parse_root_name(self, text: str):
        coords = [0] * self.rank
        text = text.strip()
        if text == "0":
            return tuple(coords)
        import re

        for m in re.finditer(r"([+-]?)(\d*)([a-c])", text):
            sign = -1 if m.group(1) == "-" else 1
            mag = int(m.group(2)) if m.group(2) else 1
            coords[_LETTERS.index(m.group(3))] = sign * mag
        return tuple(coords)

    def __repr__(self):
        return f"CartanDatum({self.type_label})"


class WeylElement:
    """Finite Weyl group element, stored as the images of the simple roots."""

    __slots__ = ("datum", "imgs", "_hash")

    def __init__(self, datum: CartanDatum, imgs):
        self.datum = datum
        self.imgs = tuple(tuple(r) for r in imgs)
        self._hash = hash(self.imgs)

    def apply(self, v):
        """Image of a coefficient vector (roots stay integral)."""
        n = self.datum.rank
        out = [Fraction(0)] * n
        for i, c in enumerate(v):
            if c:
                img = self.imgs[i]
                for j in range(n):
                    out[j] += _fr(c) * img[j]
        if all(f.denominator == 1 for f in out):
            return tuple(int(f) for f in out)
        return tuple(out)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(
            self.datum, tuple(self.apply(r) for r in other.imgs)
        )

    def inverse(self) -> "WeylElement":
        # Solve by permutation of roots: the inverse sends w(a_i) back to a_i.
        n = self.datum.rank
        imgs = [None] * n
        # Build matrix inverse by Gaussian elimination over Fractions.
        m = [[_fr(self.imgs[i][j]) for i in range(n)] for j in range(n)]
        inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            d = m[col][col]
            m[col] = [x / d for x in m[col]]
            inv[col] = [x / d for x in inv[col]]
            for r in range(n):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
                    inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        for i in range(n):
            col = tuple(inv[j][i] for j in range(n))
            imgs[i] = tuple(int(x) if x.denominator == 1 else x for x in col)
        return WeylElement(self.datum, imgs)

    def is_identity(self) -> bool:
        return self.imgs == self.datum.simple_roots

    def length(self) -> int:
        return sum(
            1
            for r in self.datum.positive_roots
            if not self.datum.is_positive(self.apply(r))
        )

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.imgs == other.imgs

    def __hash__(self):
        return self._hash

    def __repr__(self):
        word = self.word()
        return "W[" + (".".join(str(i + 1) for i in word) if word else "e") + "]"

    def word(self):
        """Canonical (lex-least) reduced word, as 0-based simple indices."""
        w = self
        out = []
        datum = self.datum
        winv = w.inverse()
        while not w.is_identity():
            for i, s in enumerate(datum.simple_roots):
                if not datum.is_positive(winv.apply(s)):
                    out.append(i)
                    w = datum.simple_reflection(i) * w
                    winv = w.inverse()
                    break
            else:  # pragma: no cover
                raise AssertionError("no descent found")
        return out


class PositiveSystem:
    """A positive system w(Phi+), stored by its chamber element w."""

    def __init__(self, datum: CartanDatum, chamber: WeylElement):
        self.datum = datum
        self.chamber = chamber
        self._roots = None

    @property
    def roots(self) -> frozenset:
        if self._roots is None:
            self._roots = frozenset(
                self.chamber.apply(r) for r in self.datum.positive_roots
            )
        return self._roots

    @property
    def simple_system(self):
        return tuple(
            sorted(self.chamber.apply(a) for a in self.datum.simple_roots)
        )

    def __eq__(self, other):
        return (
            isinstance(other, PositiveSystem) and self.roots == other.roots
        )

    def __hash__(self):
        return hash(frozenset(self.roots))

    def __repr__(self):
        return f"PositiveSystem({self.chamber!r})"


def standard_positive_system(datum: CartanDatum) -> PositiveSystem:
    return PositiveSystem(datum, datum.identity())


def _span_roots(datum: CartanDatum, simples):
    """All roots in the rational span of the given simple-subset."""
    simples = list(simples)
    if not simples:
        return frozenset()
    out = set()
    for r in datum.roots:
        # r in span(simples): solve r = sum c_i s_i exactly.
        if _in_span(datum, simples, r):
            out.add(r)
    return frozenset(out)


def _in_span(datum, vectors, target) -> bool:
    n = datum.rank
    rows = [[_fr(v[j]) for v in vectors] + [_fr(target[j])] for j in range(n)]
    # Gaussian elimination; consistent iff no row reduces to (0...0 | c != 0).
    k = len(vectors)
    pivot_row = 0
    for col in range(k):
        piv = next(
            (r for r in range(pivot_row, n) if rows[r][col] != 0), None
        )
        if piv is None:
            continue
        rows[pivot_row], rows[piv] = rows[piv], rows[pivot_row]
        d = rows[pivot_row][col]
        rows[pivot_row] = [x / d for x in rows[pivot_row]]
        for r in range(n):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
    return all(row[-1] == 0 for row in rows[pivot_row:])


class FiniteBiclosed:
    """The finite biclosed set P(psi, d1, d2) = (psi \\ span(d1)) | span(d2)."""

    def __init__(self, psi: PositiveSystem, delta1, delta2):
        datum = psi.datum
        d1 = frozenset(tuple(r) for r in delta1)
        d2 = frozenset(tuple(r) for r in delta2)
        simples = set(psi.simple_system)
        if not d1 <= simples or not d2 <= simples:
            raise ValueError("delta1/delta2 must be simple roots of psi")
        for a in d1:
            for b in d2:
                if datum.inner(a, b) != 0:
                    raise ValueError(
                        f"orthogonality violated: ({datum.root_name(a)},"
                        f" {datum.root_name(b)}) != 0"
                    )
        self.datum = datum
        self.psi = psi
        self.delta1 = d1
        self.delta2 = d2
        self.roots = frozenset(
            (psi.roots - _span_roots(datum, d1)) | _span_roots(datum, d2)
        )

    def __eq__(self, other):
        return isinstance(other, FiniteBiclosed) and self.roots == other.roots

    def __hash__(self):
        return hash(self.roots)

    def __repr__(self):
        names = sorted(self.datum.root_name(r) for r in self.roots)
        return "P{" + ",".join(names) + "}"


def make_P(psi: PositiveSystem, delta1, delta2) -> FiniteBiclosed:
    return FiniteBiclosed(psi, delta1, delta2)


def _cone_pairs(datum: CartanDatum):
    """For each unordered root pair, the roots in their strictly-positive span."""
    table = {}
    roots = datum.roots
    for a, b in itertools.combinations(roots, 2):
        hits = []
        for g in roots:
            if g == a or g == b:
                continue
            # g = x*a + y*b with x,y > 0?
            sol = _solve_pair(datum, a, b, g)
            if sol is not None and sol[0] > 0 and sol[1] > 0:
                hits.append(g)
        if hits:
            table[frozenset((a, b))] = tuple(hits)
    return table


def _solve_pair(datum, a, b, g):
    n = datum.rank
    rows = [[_fr(a[j]), _fr(b[j]), _fr(g[j])] for j in range(n)]
    # two-unknown exact solve
    piv = next((r for r in range(n) if rows[r][0] != 0), None)
    if piv is None:
        return None
    rows[0], rows[piv] = rows[piv], rows[0]
    d = rows[0][0]
    rows[0] = [x / d for x in rows[0]]
    for r in range(1, n):
        if rows[r][0] != 0:
            f = rows[r][0]
            rows[r] = [x - f * y for x, y in zip(rows[r], rows[0])]
    piv = next((r for r in range(1, n) if rows[r][1] != 0), None)
    if piv is None:
        y = None
        # b-column zero below: need g-column zero too outside row 0
        if any(rows[r][2] != 0 for r in range(1, n)):
            return None
        return None  # degenerate (a,b parallel) -- not used for root pairs
    rows[1], rows[piv] = rows[piv], rows[1]
    d = rows[1][1]
    rows[1] = [x / d for x in rows[1]]
    y = rows[1][2]
    x = rows[0][2] - rows[0][1] * y
    for r in range(2, n):
        if rows[r][1] * y != rows[r][2]:
            return None
    return (x, y)


@lru_cache(maxsize=None)
def _cone_pairs_cached(type_label):
    return _cone_pairs(build_system(type_label))


def is_two_closed(datum: CartanDatum, subset) -> bool:
    """2-closure check: pairs of members never positively combine outside."""
    s = frozenset(tuple(r) for r in subset)
    table = _cone_pairs_cached(datum.type_label)
    for a, b in itertools.combinations(sorted(s), 2):
        for g in table.get(frozenset((a, b)), ()):
            if g not in s:
                return False
    return True


def is_biclosed(datum: CartanDatum, subset) -> bool:
    s = frozenset(tuple(r) for r in subset)
    comp = frozenset(datum.roots) - s
    return is_two_closed(datum, s) and is_two_closed(datum, comp)


def enumerate_biclosed_finite(datum: CartanDatum):
    """All biclosed subsets of Phi by exhaustive scan (rank <= 3 only)."""
    if datum.rank > 3:
        raise ValueError("exhaustive enumeration supported for rank <= 3 only")
    out = []
    roots = datum.roots
    for bits in itertools.product((0, 1), repeat=len(roots)):
        s = frozenset(r for r, b in zip(roots, bits) if b)
        if is_biclosed(datum, s):
            out.append(s)
    return out


def enumerate_P_triples(datum: CartanDatum):
    """All valid (psi, d1, d2) with d1 orthogonal to d2."""
    triples = []
    seen_psi = set()
    for w in datum.weyl_elements:
        psi = PositiveSystem(datum, w)
        if psi.roots in seen_psi:
            continue
        seen_psi.add(psi.roots)
        simples = psi.simple_system
        n = len(simples)
        for mask1 in range(1 << n):
            d1 = [simples[i] for i in range(n) if mask1 >> i & 1]
            rest = [simples[i] for i in range(n) if not mask1 >> i & 1]
            for mask2 in range(1 << len(rest)):
                d2 = [rest[i] for i in range(len(rest)) if mask2 >> i & 1]
                if all(
                    datum.inner(a, b) == 0 for a in d1 for b in d2
                ):
                    triples.append((psi, frozenset(d1), frozenset(d2)))
    return triples


@lru_cache(maxsize=None)
def finite_biclosed_index(type_label):
    """Map root-set -> a representing (psi, d1, d2) triple."""
    datum = build_system(type_label)
    index = {}
    for psi, d1, d2 in enumerate_P_triples(datum):
        fb = FiniteBiclosed(psi, d1, d2)
        index.setdefault(fb.roots, (psi, d1, d2))
    return index


# ----- serialization -------------------------------------------------------


def root_to_json(r) -> str:
    return json.dumps([str(Fraction(x)) for x in r])


def root_from_json(text: str):
    vals = [Fraction(s) for s in json.loads(text)]
    if all(v.denominator == 1 for v in vals):
        return tuple(int(v) for v in vals)
    return tuple(vals)


@lru_cache(maxsize=None)
def build_system(type_label: str) -> CartanDatum:
    """Build (and cache) the root-system datum for a shipped type label."""
    return CartanDatum(type_label)
