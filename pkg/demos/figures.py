"""Render the two rank-2 figures as Graphviz DOT files.

- hasse_fragment.dot : the alcove-order Hasse diagram up to word length 6,
  weak-order covers solid, strong-only covers dashed, rows by l_B.
- tope_poset.dot     : the tope poset of the rank-2 affine root system,
  hemispaces H, truncations T, and upper sets U, with their negatives.

Run: python3 demos/figures.py [outdir]
"""

import pathlib
import sys

from twisted_bruhat import a2, topes


def main(outdir="."):
    out = pathlib.Path(outdir)
    out.mkdir(parents=True, exist_ok=True)

    hasse = a2.figure_hasse(6)
    (out / "hasse_fragment.dot").write_text(hasse.to_dot())
    print(f"hasse_fragment.dot: {len(hasse.nodes)} nodes, "
          f"{len(hasse.edges)} edges, grades "
          f"{min(n.grade for n in hasse.nodes)}..{max(n.grade for n in hasse.nodes)}")

    records, poset = topes.figure_topes()
    (out / "tope_poset.dot").write_text(poset.to_dot())
    print(f"tope_poset.dot: {len(records)} topes, {len(poset.edges)} edges")
    print("render with e.g.:  dot -Tsvg hasse_fragment.dot -o hasse_fragment.svg")


if __name__ == "__main__":
    main(*sys.argv[1:2])
