"""Finite graded posets (Hasse DAGs) with DOT and JSON-lines export."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class PosetNode:
    key: object  # hashable element handle
    grade: int
    label: str


@dataclass(frozen=True)
class PosetEdge:
    lower: object
    upper: object
    reflection: str  # label of the covering reflection ('' if not applicable)
    kind: str = "strong"  # 'weak' edges are also weak-order covers


@dataclass
class GradedPoset:
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)

    def grading(self) -> dict:
        return {n.key: n.grade for n in self.nodes}

    def labels(self) -> dict:
        return {n.key: n.label for n in self.nodes}

    def keys(self):
        return [n.key for n in self.nodes]

    def check_grading(self) -> bool:
        """Every Hasse edge must raise the grade by exactly 1."""
        g = self.grading()
        return all(g[e.upper] - g[e.lower] == 1 for e in self.edges)

    def upper_map(self) -> dict:
        out = {n.key: [] for n in self.nodes}
        for e in self.edges:
            out[e.lower].append(e.upper)
        return out

    def lower_map(self) -> dict:
        out = {n.key: [] for n in self.nodes}
        for e in self.edges:
            out[e.upper].append(e.lower)
        return out

    def leq(self, a, b) -> bool:
        """Reachability a -> b upward in the Hasse DAG."""
        if a == b:
            return True
        up = self.upper_map()
        seen = {a}
        frontier = [a]
        while frontier:
            nxt = []
            for x in frontier:
                for y in up[x]:
                    if y == b:
                        return True
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return False

    def interval_keys(self, a, b):
        """All keys z with a <= z <= b inside this poset."""
        return [k for k in self.keys() if self.leq(a, k) and self.leq(k, b)]

    # ----- export ------------------------------------------------------

    def to_dot(self, name="poset") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        ids = {n.key: f"n{i}" for i, n in enumerate(self.nodes)}
        by_grade = {}
        for n in self.nodes:
            by_grade.setdefault(n.grade, []).append(n)
            lines.append(
                f'  {ids[n.key]} [label="{n.label}\\n{n.grade}"];'
            )
        for g in sorted(by_grade):
            group = " ".join(ids[n.key] + ";" for n in by_grade[g])
            lines.append(f"  {{ rank=same; {group} }}")
        for e in self.edges:
            color = "black" if e.kind == "weak" else "blue"
            attr = f'[color={color}'
            if e.reflection:
                attr += f', label="{e.reflection}"'
            attr += "]"
            lines.append(f"  {ids[e.lower]} -> {ids[e.upper]} {attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_jsonl(self) -> str:
        lines = []
        for n in self.nodes:
            lines.append(
                json.dumps(
                    {"type": "node", "label": n.label, "grade": n.grade},
                    sort_keys=True,
                )
            )
        labels = self.labels()
        for e in self.edges:
            lines.append(
                json.dumps(
                    {
                        "type": "edge",
                        "lower": labels[e.lower],
                        "upper": labels[e.upper],
                        "reflection": e.reflection,
                        "kind": e.kind,
                    },
                    sort_keys=True,
                )
            )
        return "\n".join(lines) + "\n"


def parse_jsonl(text: str):
    """Round-trip parse of to_jsonl output: returns (node records, edge records)."""
    nodes, edges = [], []
    for line in text.strip().splitlines():
        rec = json.loads(line)
        (nodes if rec["type"] == "node" else edges).append(rec)
    return nodes, edges
