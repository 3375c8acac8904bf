"""Guided tour of the rank-2 alcove order.

The twisting set is B = {a, b, a+b}^ (every positive affine root whose
finite part is positive), so l_B grades alcoves by how deep they sit on
the negative side of the three root hyperplane families.

Run: python3 demos/alcove_order_walkthrough.py
"""

import random

from twisted_bruhat import (
    covers,
    from_word,
    identity,
    twisted_length_left,
)
from twisted_bruhat import a2


def fmt(w):
    return ".".join(map(str, w.word())) or "e"


def main():
    d = a2.datum()
    B = a2.alcove_biclosed()
    e = identity(d)

    print("== Covers of the fundamental alcove ==")
    lower, upper, _ = covers(e, B)
    print("lower covers:", sorted(fmt(w) for _, w in lower))
    print("upper covers:", sorted(fmt(w) for _, w in upper))
    print()

    print("== Closed-form cover deltas by translation coset ==")
    rng = random.Random(0)
    w = from_word(d, tuple(rng.choice((1, 2, 3)) for _ in range(7)))
    print(f"w = {fmt(w)} lies in coset {a2.class_of(w)}")
    for gamma, name in ((a2.ALPHA, "a"), (a2.BETA, "b"), (a2.AB, "a+b")):
        for k in range(3):
            pred = a2.predicted_delta(w, gamma, k)
            s = a2.reflection(d, (gamma, k))
            actual = twisted_length_left(s * w, B) - twisted_length_left(w, B)
            mark = "ok" if pred == actual else "MISMATCH"
            print(f"  l_B(s_({name}+{k}d) w) - l_B(w) = {actual:+d}  "
                  f"(closed form {pred:+d}, {mark})")
    print()

    print("== Infinite-dihedral coset decomposition ==")
    print("w = w(i)^-1 z with z in U = <v, u>; l_B(w) from (i mod 2, form, k):")
    for word in ((3,), (1, 3, 1), (1, 2, 3, 1), (3, 2, 3, 1, 2)):
        w = from_word(d, word)
        dec = a2.dihedral_decompose(w)
        lb = twisted_length_left(w, B)
        print(f"  {fmt(w):12s} i={dec.i:+d}  z={''.join(dec.u_v_word) or 'e'}"
              f"  form={dec.form:8s} k={dec.k}"
              f"  predicted l_B={dec.predicted_twisted_length():+d}"
              f"  actual {lb:+d}")
    print()

    print("== Poincare series of the order (downset sizes by corank) ==")
    for parity in ("even", "odd"):
        print(f"  {parity}: {a2.poincare_series(parity, 8)}")
    print()

    print("== Interval sphericity ==")
    for xw, yw in (((2,), (2, 3, 2)), ((1, 2), (2, 1, 3, 2))):
        from twisted_bruhat import interval
        P = interval(from_word(d, xw), from_word(d, yw), B)
        print(f"  [{'.'.join(map(str, xw))}, {'.'.join(map(str, yw))}] "
              f"has {len(P.nodes)} elements: {a2.sphericity(P)}")


if __name__ == "__main__":
    main()
