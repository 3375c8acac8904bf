"""Affine (loop-extended) root system: roots alpha + k*delta and delta-chains.

An affine root is a pair ``(base, level)`` where ``base`` is a finite root
and ``level`` the integer coefficient of delta.  delta pairs to zero with
everything, so inner products only ever see the base.

Positivity: (base positive, level >= 0) or (base negative, level >= 1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .finite import CartanDatum

#: Sentinel for an infinite upper chain bound (explicit, never a magic int).
INFINITE = "inf"


def affine_root(base, level: int):
    return (tuple(base), int(level))


def is_positive_affine(datum: CartanDatum, r) -> bool:
    base, level = r
    if datum.is_positive(base):
        return level >= 0
    return level >= 1


def negate(r):
    base, level = r
    return (tuple(-x for x in base), -level)


def base_zero(datum: CartanDatum, base):
    """The minimal positive affine root over a finite root."""
    return (tuple(base), 0 if datum.is_positive(base) else 1)


def affine_reflect(datum: CartanDatum, mirror, target):
    """s_{alpha+p*delta}(beta+q*delta) = s_alpha(beta) + (q - <beta,alpha^vee> p) delta."""
    (a, p), (b, q) = mirror, target
    if not datum.is_root(a):
        raise ValueError(f"mirror base is not a root: {a}")
    pairing = datum.pairing(b, a)
    assert pairing.denominator == 1
    return (datum.reflect(a, b), q - int(pairing) * p)


def simple_affine_roots(datum: CartanDatum):
    """Delta union {delta - theta}: the simple system of the affine group."""
    out = [(a, 0) for a in datum.simple_roots]
    out.append((tuple(-x for x in datum.highest_root), 1))
    return tuple(out)


def dominates(datum: CartanDatum, b, a) -> bool:
    """True iff b in N(w) forces a in N(w): same base, a lower on the chain."""
    if not (is_positive_affine(datum, b) and is_positive_affine(datum, a)):
        raise ValueError("dominance is defined on positive affine roots")
    return b[0] == a[0] and a[1] <= b[1]


@dataclass(frozen=True)
class DeltaChain:
    """A contiguous chain {base + d*delta | lo <= d <= hi} (hi may be INFINITE)."""

    base: tuple
    lo: int
    hi: object  # int or INFINITE

    def __post_init__(self):
        if self.hi != INFINITE and self.hi < self.lo:
            raise ValueError("empty chain")

    @property
    def infinite(self) -> bool:
        return self.hi == INFINITE

    def size(self) -> int:
        if self.infinite:
            raise ValueError("infinite chain has no size")
        return self.hi - self.lo + 1

    def members(self):
        if self.infinite:
            raise ValueError("cannot materialize an infinite chain")
        return [(self.base, k) for k in range(self.lo, self.hi + 1)]

    def __contains__(self, r):
        base, level = r
        if base != self.base or level < self.lo:
            return False
        return self.infinite or level <= self.hi


def chain_decompose(datum: CartanDatum, roots):
    """Partition a finite set of affine roots into maximal delta-chains."""
    by_base = {}
    for base, level in roots:
        by_base.setdefault(tuple(base), []).append(level)
    chains = []
    for base in sorted(by_base):
        levels = sorted(set(by_base[base]))
        lo = prev = levels[0]
        for k in levels[1:]:
            if k == prev + 1:
                prev = k
            else:
                chains.append(DeltaChain(base, lo, prev))
                lo = prev = k
        chains.append(DeltaChain(base, lo, prev))
    chains.sort(key=lambda c: (c.base, c.lo))
    return chains


def clip_chain(base, lo, hi):
    """Build a DeltaChain from possibly-fractional bounds; None if empty.

    Fractional bounds arise in closed-form inversion formulas; integer
    members are exactly those in [ceil(lo), floor(hi)].
    """
    lo_i = ceil(Fraction(lo))
    hi_i = floor(Fraction(hi)) if hi != INFINITE else INFINITE
    if hi_i != INFINITE and hi_i < lo_i:
        return None
    return DeltaChain(tuple(base), lo_i, hi_i)


# ----- rendering / parsing -------------------------------------------------


def render_chain(datum: CartanDatum, chain: DeltaChain) -> str:
    name = datum.root_name(chain.base)
    if not (len(name) == 1 and name.isalpha()):
        name = f"({name})"
    hi = "inf" if chain.infinite else str(chain.hi)
    return f"{name}[{chain.lo}..{hi}]"


def render_chains(datum: CartanDatum, chains) -> str:
    return " ".join(render_chain(datum, c) for c in chains)


_CHAIN_RE = re.compile(r"(\(([^)]*)\)|([a-c]))\[(-?\d+)\.\.(-?\d+|inf)\]")


def parse_chains(datum: CartanDatum, text: str):
    chains = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _CHAIN_RE.match(text, pos)
        if m is None:
            raise ValueError(f"bad chain syntax at column {pos}: {text[pos:]!r}")
        name = m.group(2) if m.group(2) is not None else m.group(3)
        base = datum.parse_root_name(name)
        if not datum.is_root(base):
            raise ValueError(f"not a root: {name!r}")
        lo = int(m.group(4))
        hi = INFINITE if m.group(5) == "inf" else int(m.group(5))
        chains.append(DeltaChain(base, lo, hi))
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
    return chains


def materialize(chains):
    """Flatten finite chains into a frozenset of affine roots."""
    out = set()
    for c in chains:
        out.update(c.members())
    return frozenset(out)
