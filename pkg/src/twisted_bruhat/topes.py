"""Hemispaces (topes) of the affine root system's oriented matroid.

A hemispace is H = B union -(Phi^hat \\ B) (sign '+') or its negation
(sign '-') for B a biclosed set of positive affine roots; the order based
at a hemispace H0 is F <= G iff (F delta H0) subset (G delta H0), which is
finite-checkable inside a block (hemispaces at finite symmetric
difference).  Cone feasibility questions are answered exactly by the
rational simplex in linprog; convexity is certified only at a truncation,
non-convexity absolutely (a violation is a finite certificate).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .affine import is_positive_affine, negate
from .biclosed import BiclosedSet, dot_action
from .finite import CartanDatum, _span_roots
from .linprog import cone_membership
from .poset import GradedPoset, PosetEdge, PosetNode


class DifferentBlocks(Exception):
    pass


class NotComparable(Exception):
    pass


def _k0(datum, base):
    return 0 if datum.is_positive(base) else 1


def positive_roots_to_level(datum: CartanDatum, level: int):
    out = []
    for base in datum.roots:
        for k in range(_k0(datum, base), level + 1):
            out.append((base, k))
    return out


def all_roots_to_level(datum: CartanDatum, level: int):
    pos = positive_roots_to_level(datum, level)
    return pos + [negate(r) for r in pos]


class Hemispace:
    """Total membership oracle over the whole affine root system.

    Backed either by a BiclosedSet (`biclosed`) or by a descriptor: a set
    of finite base roots whose full delta-chains lie in B (`full_bases`)
    together with a finite set of flipped roots (`flips`, symmetric
    difference against the chain pattern).
    """

    def __init__(self, datum, sign="+", biclosed=None, full_bases=None,
                 flips=(), label=""):
        if sign not in ("+", "-"):
            raise ValueError("sign must be '+' or '-'")
        self.datum = datum
        self.sign = sign
        self.biclosed = biclosed
        self.full_bases = (
            frozenset(tuple(b) for b in full_bases)
            if full_bases is not None
            else None
        )
        self.flips = frozenset((tuple(b), k) for b, k in flips)
        self.label = label
        if (biclosed is None) == (full_bases is None):
            raise ValueError("exactly one backing representation required")

    def _in_B(self, r) -> bool:
        if self.biclosed is not None:
            return self.biclosed.contains(r)
        return (tuple(r[0]) in self.full_bases) != (
            (tuple(r[0]), r[1]) in self.flips
        )

    def contains(self, r) -> bool:
        if is_positive_affine(self.datum, r):
            inb = self._in_B(r)
        else:
            inb = not self._in_B(negate(r))
        return inb if self.sign == "+" else not inb

    def negated(self) -> "Hemispace":
        h = Hemispace.__new__(Hemispace)
        h.datum = self.datum
        h.sign = "-" if self.sign == "+" else "+"
        h.biclosed = self.biclosed
        h.full_bases = self.full_bases
        h.flips = self.flips
        h.label = "-" + self.label if self.label else ""
        return h

    def level_bound(self) -> int:
        """All membership variation happens at levels <= this bound."""
        if self.biclosed is not None:
            return self.biclosed.level_star() + 1
        return max((k for _, k in self.flips), default=0) + 1

    def partition_check(self, level: int) -> bool:
        """Exactly one of r, -r belongs to H, for all roots to the level."""
        return all(
            self.contains(r) != self.contains(negate(r))
            for r in positive_roots_to_level(self.datum, level)
        )

    def __repr__(self):
        return f"Hemispace({self.label or self.sign})"


def from_biclosed(B: BiclosedSet, sign="+", label="") -> Hemispace:
    return Hemispace(B.datum, sign, biclosed=B, label=label)


def symdiff_positive(F: Hemispace, G: Hemispace) -> frozenset:
    """{positive r : F, G disagree on r}; finite iff same block.

    Hemispace symmetric differences are stable under negation, so the
    positive half determines the whole.  Raises DifferentBlocks when
    disagreements persist beyond both oracles' variation bounds.
    """
    bound = max(F.level_bound(), G.level_bound())
    out = set()
    margin_clean = True
    for r in positive_roots_to_level(F.datum, bound + 2):
        if F.contains(r) != G.contains(r):
            if r[1] > bound:
                margin_clean = False
            out.add(r)
    if not margin_clean:
        raise DifferentBlocks(
            "symmetric difference does not stabilize: different blocks"
        )
    return frozenset(out)


def tope_leq(F: Hemispace, G: Hemispace, base: Hemispace) -> bool:
    """F <= G in the tope poset based at `base`."""
    return symdiff_positive(F, base) <= symdiff_positive(G, base)


# ----- exact cone queries ---------------------------------------------------


def _vec(datum, r):
    base, k = r
    return tuple(Fraction(x) for x in base) + (Fraction(k),)


def cone_member(datum: CartanDatum, target, generators):
    """Exact rational feasibility of target in cone(generators)."""
    return cone_membership(
        [_vec(datum, g) for g in generators], _vec(datum, target)
    )


def check_convex_truncated(H: Hemispace, level_bound: int, combo_size: int = 3):
    """Search for a root of -H in the cone of roots of H (all levels
    truncated).  A found violation is an absolute non-convexity
    certificate; 'no violation' certifies nothing beyond the truncation.
    """
    datum = H.datum
    universe = all_roots_to_level(datum, level_bound)
    h_roots = [r for r in universe if H.contains(r)]
    checked = 0
    for target in universe:
        if H.contains(target):
            continue
        checked += 1
        cert = cone_member(datum, target, h_roots)
        if cert.feasible:
            support = [
                (g, c)
                for g, c in zip(h_roots, cert.coefficients)
                if c != 0
            ]
            assert len(support) <= combo_size + (len(target[0]) + 1)
            return {
                "violation": {
                    "target": target,
                    "generators": [g for g, _ in support],
                    "coefficients": [c for _, c in support],
                },
                "level_bound": level_bound,
                "targets_checked": checked,
            }
    result = {
        "violation": None,
        "level_bound": level_bound,
        "targets_checked": checked,
    }
    if H.biclosed is not None and H.biclosed.classify() == "Mixed":
        witness = _mixed_violation(H)
        if witness is not None:
            result["violation"] = witness
    return result


def _mixed_violation(H: Hemispace, search_level: int = 24):
    """The +-delta construction: a = nu + s delta and b = -nu + t delta in
    H sum to a delta-multiple; adding it repeatedly to a root of H on an
    upper-bounded chain escapes into -H."""
    datum = H.datum
    for nu in datum.roots:
        neg_nu = tuple(-x for x in nu)
        for s in range(_k0(datum, nu), search_level):
            a = (nu, s)
            if not H.contains(a):
                continue
            for t in range(_k0(datum, neg_nu), search_level):
                b = (neg_nu, t)
                if not H.contains(b) or s + t < 1:
                    continue
                found = _escape_along_delta(H, a, b, search_level)
                if found is not None:
                    return found
    return None


def _escape_along_delta(H, a, b, search_level):
    step = a[1] + b[1]
    for c in all_roots_to_level(H.datum, search_level):
        if not H.contains(c):
            continue
        for m in range(1, 6):
            tgt = (c[0], c[1] + m * step)
            if not H.contains(tgt):
                return {
                    "target": tgt,
                    "generators": [c, a, b],
                    "coefficients": [Fraction(1), Fraction(m), Fraction(m)],
                }
    return None


# ----- oriented-matroid axiom spot checks -----------------------------------


def _closure(datum, subset, universe):
    gens = [_vec(datum, r) for r in subset]
    return frozenset(
        r for r in universe if cone_membership(gens, _vec(datum, r)).feasible
    )


def closure_axiom_check(datum: CartanDatum, level: int, samples: int, seed=0):
    """Spot-check the four oriented-matroid axioms for cone closure on the
    roots of level <= `level`: (i) finite support, (ii) cx(X)* = cx(X*),
    (iii) x in cx(X u {x*}) => x in cx(X), (iv) exchange."""
    rng = random.Random(seed)
    universe = all_roots_to_level(datum, level)
    for _ in range(samples):
        X = rng.sample(universe, rng.randint(1, 4))
        cx = _closure(datum, X, universe)
        # (i): witnessed by the LP's finite support; assert membership of X.
        if not set(X) <= cx:
            return False
        # (ii)
        cx_neg = _closure(datum, [negate(r) for r in X], universe)
        if frozenset(negate(r) for r in cx) != cx_neg:
            return False
        # (iii)
        x = rng.choice(universe)
        with_star = _closure(datum, X + [negate(x)], universe)
        if x in with_star:
            strip = _closure(datum, X, universe)
            if x not in strip and not any(
                r == negate(x) for r in X
            ):
                # x in cx(X u {x*}) must force x in cx(X)
                return False
        # (iv) exchange
        y = rng.choice(universe)
        base = [r for r in X if r != y]
        cx_base = _closure(datum, base, universe)
        cx_with_ystar = _closure(datum, base + [negate(y)], universe)
        if x in cx_with_ystar and x not in cx_base:
            cx_exch = _closure(datum, base + [negate(x)], universe)
            if y not in cx_exch:
                return False
    return True


# ----- tope blocks ----------------------------------------------------------


def _block_generators(center: Hemispace):
    """Reflections generating W' for the center's representation: s_mu and
    s_{delta-mu} for the roots mu spanning Delta1 u Delta2 (these contain
    the canonical simple generators of the affine reflection subgroup)."""
    from .affine_group import reflection

    B = center.biclosed
    datum = B.datum
    d12 = set(B.delta1) | set(B.delta2)
    span = _span_roots(datum, d12) if d12 else frozenset()
    if span == frozenset(datum.roots):
        # W' is the whole affine group; use its simple reflections.
        from .affine_group import simple_reflections

        return list(simple_reflections(datum))
    gens = []
    for mu in sorted(span):
        if datum.is_positive(mu):
            gens.append(reflection(datum, (mu, 0)))
            gens.append(reflection(datum, (tuple(-x for x in mu), 1)))
    return gens


def tope_block(center: Hemispace, base: Hemispace, radius: int):
    """The radius-ball of the block {wH : w in W'} around `center`, graded
    and ordered based at `base` (which must lie in the same block).

    Returns a GradedPoset whose node keys are the positive symmetric
    differences with `base`; the poset carries a `reps` dict mapping keys
    to (element, Hemispace) representatives.
    """
    if center.biclosed is None:
        raise ValueError("block generation needs a biclosed-backed center")
    from .affine_group import identity

    datum = center.datum
    gens = _block_generators(center)
    seen = {}
    e = identity(datum)
    key0 = symdiff_positive(center, base)  # raises DifferentBlocks if apart
    seen[key0] = (e, center)
    frontier = [(e, center)]
    for _ in range(radius):
        nxt = []
        for w, F in frontier:
            for g in gens:
                w2 = g * w
                F2 = from_biclosed(
                    dot_action(w2, center.biclosed), center.sign
                )
                key = symdiff_positive(F2, base)
                if key not in seen:
                    seen[key] = (w2, F2)
                    nxt.append((w2, F2))
        frontier = nxt
    nodes = []
    for key, (w, F) in sorted(seen.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
        label = ".".join(map(str, w.word())) or "e"
        nodes.append(PosetNode(key, len(key), label))
    edges = []
    keys = list(seen)
    for a in keys:
        for b in keys:
            if len(b) == len(a) + 1 and a < b:
                edges.append(PosetEdge(a, b, "", "weak"))
    poset = GradedPoset(nodes, edges)
    poset.reps = seen
    return poset


def interval_lattice_check(H1: Hemispace, H2: Hemispace, base: Hemispace):
    """Enumerate [H1, H2] in the tope poset based at `base` and verify
    every pair has a unique meet and join inside the interval."""
    d1 = symdiff_positive(H1, base)
    d2 = symdiff_positive(H2, base)
    if not d1 <= d2:
        raise NotComparable("H1 is not <= H2 based at the given base")
    if H1.biclosed is None:
        raise ValueError("interval enumeration needs a biclosed-backed H1")
    radius = len(d2) - len(d1) + 1
    block = tope_block(H1, base, radius)
    members = {
        key: rep
        for key, rep in block.reps.items()
        if d1 <= key <= d2
    }
    keys = list(members)
    leq = lambda a, b: a <= b
    problems = []
    for i, a in enumerate(keys):
        for b in keys[i:]:
            for kind, pred in (
                ("meet", lambda z: leq(z, a) and leq(z, b)),
                ("join", lambda z: leq(a, z) and leq(b, z)),
            ):
                bounds = [z for z in keys if pred(z)]
                if kind == "meet":
                    extreme = [
                        z for z in bounds
                        if all(leq(y, z) for y in bounds)
                    ]
                else:
                    extreme = [
                        z for z in bounds
                        if all(leq(z, y) for y in bounds)
                    ]
                if len(extreme) != 1:
                    problems.append((kind, a, b))
    return {
        "interval_size": len(keys),
        "is_lattice": not problems,
        "problems": problems,
    }


# ----- the rank-2 tope-poset figure ----------------------------------------

_A = (1, 0)
_B = (0, 1)
_AB = (1, 1)
_NA = (-1, 0)
_NB = (0, -1)
_NAB = (-1, -1)

#: finite biclosed parts of the bottom hemispace tier (inversion sets).
_H_FINITE = {
    "H1": (),
    "H2": ((_A, 0),),
    "H3": ((_B, 0),),
    "H4": ((_NAB, 1),),
    "H5": ((_A, 0), (_AB, 0)),
    "H6": ((_B, 0), (_AB, 0)),
    "H7": ((_A, 0), (_NB, 1)),
    "H8": ((_NAB, 1), (_NB, 1)),
    "H9": ((_B, 0), (_NA, 1)),
    "H10": ((_NAB, 1), (_NA, 1)),
    "H11": ((_A, 0), (_AB, 0), (_B, 0)),
    "H12": ((_A, 0), (_AB, 0), (_A, 1)),
    "H13": ((_B, 0), (_AB, 0), (_B, 1)),
    "H14": ((_A, 0), (_NB, 1), (_A, 1)),
    "H15": ((_A, 0), (_NB, 1), (_NAB, 1)),
    "H16": ((_NAB, 2), (_NB, 1), (_NAB, 1)),
    "H17": ((_B, 0), (_NA, 1), (_B, 1)),
    "H18": ((_B, 0), (_NA, 1), (_NAB, 1)),
    "H19": ((_NAB, 2), (_NA, 1), (_NAB, 1)),
}

#: middle tier: two full chains plus finite perturbations on a third line.
_T_BASES = {
    "T1": (_A, _AB),
    "T2": (_B, _AB),
    "T3": (_B, _NA),
    "T4": (_NAB, _NA),
    "T5": (_NAB, _NB),
    "T6": (_A, _NB),
}
#: per T_i, the two perturbation roots e1 (level 0 side) and e2 (level 1).
_T_EXTRAS = {
    "T1": ((_B, 0), (_NB, 1)),
    "T2": ((_A, 0), (_NA, 1)),
    "T3": ((_AB, 0), (_NAB, 1)),
    "T4": ((_B, 0), (_NB, 1)),
    "T5": ((_A, 0), (_NA, 1)),
    "T6": ((_AB, 0), (_NAB, 1)),
}

#: top tier: the six positive systems, all chains in full.
_U_BASES = {
    "U1": (_A, _B, _AB),
    "U2": (_NA, _B, _AB),
    "U3": (_NA, _B, _NAB),
    "U4": (_NA, _NB, _NAB),
    "U5": (_A, _NB, _NAB),
    "U6": (_A, _NB, _AB),
}

_H_EDGES = [
    ("H1", "H2"), ("H1", "H3"), ("H1", "H4"),
    ("H2", "H5"), ("H2", "H7"), ("H3", "H6"), ("H3", "H9"),
    ("H4", "H8"), ("H4", "H10"),
    ("H5", "H11"), ("H5", "H12"), ("H6", "H11"), ("H6", "H13"),
    ("H7", "H14"), ("H7", "H15"), ("H8", "H15"), ("H8", "H16"),
    ("H9", "H17"), ("H9", "H18"), ("H10", "H18"), ("H10", "H19"),
]


def _figure_datum():
    from .finite import build_system

    return build_system("A2")


def figure_hemispaces():
    """All labelled hemispaces of the displayed tope poset (plus negatives)."""
    datum = _figure_datum()
    out = {}
    for name, roots in _H_FINITE.items():
        out[name] = Hemispace(
            datum, "+", full_bases=(), flips=roots, label=name
        )
    for name, bases in _T_BASES.items():
        e1, e2 = _T_EXTRAS[name]
        out[name] = Hemispace(
            datum, "+", full_bases=bases, flips=(), label=name
        )
        out[name + "1"] = Hemispace(
            datum, "+", full_bases=bases, flips=(e1,), label=name + "1"
        )
        out[name + "2"] = Hemispace(
            datum, "+", full_bases=bases, flips=(e2,), label=name + "2"
        )
        out[name + "3"] = Hemispace(
            datum, "+", full_bases=bases,
            flips=(e1, (e1[0], e1[1] + 1)), label=name + "3"
        )
        out[name + "4"] = Hemispace(
            datum, "+", full_bases=bases,
            flips=(e2, (e2[0], e2[1] + 1)), label=name + "4"
        )
    for name, bases in _U_BASES.items():
        out[name] = Hemispace(
            datum, "+", full_bases=bases, flips=(), label=name
        )
    for name in list(out):
        out["-" + name] = out[name].negated()
    return out


def _figure_edges():
    edges = list(_H_EDGES)
    for i in range(1, 7):
        t = f"T{i}"
        edges += [(t, t + "1"), (t, t + "2"), (t + "1", t + "3"),
                  (t + "2", t + "4")]
    # mirrored tiers, direction reversed under negation
    edges += [("-" + b, "-" + a) for a, b in edges]
    return edges


def _figure_grade(label: str) -> int:
    neg = label.startswith("-")
    core = label[1:] if neg else label
    if core.startswith("H"):
        g = len(_H_FINITE[core])
    elif core.startswith("U"):
        g = 0
    else:  # T tier
        g = 0 if len(core) == 2 else (1 if core[2] in "12" else 2)
    if neg:
        span = 3 if core.startswith("H") else (0 if core.startswith("U") else 2)
        return span - g
    return g


def figure_topes():
    """Regenerate the displayed tope-poset fragment.

    Returns (records, poset): structured descriptor records for every
    label, and a GradedPoset over the labels whose edges are the figure's
    covers, each verified against the finite tope-order criterion (the
    lower tope agrees with -Phi^hat on the one-root symmetric difference).
    Grades are per connected component (the tiers lie in distinct blocks).
    """
    datum = _figure_datum()
    hs = figure_hemispaces()
    records = []
    for label, h in hs.items():
        flip_names = sorted(
            (datum.root_name(b), k) for b, k in h.flips
        )
        records.append(
            {
                "label": label,
                "sign": h.sign,
                "full_chain_bases": sorted(
                    datum.root_name(b) for b in h.full_bases
                ),
                "flips": [f"{n}+{k}d" for n, k in flip_names],
            }
        )
    nodes = [
        PosetNode(label, _figure_grade(label), label) for label in hs
    ]
    edges = []
    for lo, hi in _figure_edges():
        F, G = hs[lo], hs[hi]
        diff = symdiff_positive(F, G)
        assert len(diff) == 1, (lo, hi, diff)
        (r,) = diff
        # upward = away from the all-negative hemispace: the lower tope
        # holds the negative root of the flipped pair.
        assert F.contains(negate(r)) and G.contains(r), (lo, hi, r)
        edges.append(PosetEdge(lo, hi, datum.root_name(r[0]), "weak"))
    poset = GradedPoset(nodes, edges)
    assert poset.check_grading()
    return records, poset
