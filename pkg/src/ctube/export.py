"""Serialization of patterns, vector tables and exchange graphs."""

from __future__ import annotations

import csv
import io
import json
from collections import deque

from .cluster import Pattern
from .rigid import MaximalRigid, mutate_rigid


def dumps(data) -> str:
    """Canonical JSON text: two-space indent, trailing newline."""
    return json.dumps(data, indent=2) + "\n"


def _objs(xs) -> list:
    return [x.to_json() for x in xs]


def pattern_to_json(pattern: Pattern, coefficients: bool = True) -> dict:
    s0 = pattern.seeds[0]
    n = pattern.n
    records = []
    for rec in pattern.sorted_records():
        var = rec.variable
        if not coefficients:
            var = var.substitute_ones(range(n + 1, 2 * n + 1))
        entry = rec.to_json()
        entry["terms"] = var.to_json()
        records.append(entry)
    clusters = sorted([[x.a, x.b] for x in sorted(s.objects.summands)] for s in pattern.seeds)
    return {
        "n": n,
        "coefficients": "principal" if coefficients else "trivial",
        "initial": _objs(pattern.initial.summands),
        "initial_cluster_objects": _objs(s0.objects.summands),
        "b_matrix": s0.principal().tolist(),
        "variables": records,
        "clusters": clusters,
    }


def records_to_csv(pattern: Pattern) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    n = pattern.n
    w.writerow(["object"] + [f"den{i}" for i in range(1, n + 1)] + [f"g{i}" for i in range(1, n + 1)])
    for rec in pattern.sorted_records():
        w.writerow([str(rec.object)] + list(rec.den) + list(rec.g or ()))
    return buf.getvalue()


def vectors_to_csv(rows: list[tuple[str, tuple[int, ...]]], prefix: str, label: str = "object") -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    width = len(rows[0][1]) if rows else 0
    w.writerow([label] + [f"{prefix}{i}" for i in range(1, width + 1)])
    for label, vec in rows:
        w.writerow([label] + list(vec))
    return buf.getvalue()


def exchange_graph(t: MaximalRigid) -> tuple[list[MaximalRigid], list[tuple[int, int, int]]]:
    """BFS over maximal rigid objects; edges ``(i, j, k)`` with ``i < j`` labelled by slot."""
    nodes = [t]
    seen = {t.key: 0}
    edges: list[tuple[int, int, int]] = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for k in range(1, t.n + 1):
            nxt, _ = mutate_rigid(nodes[i], k)
            j = seen.get(nxt.key)
            if j is None:
                j = len(nodes)
                seen[nxt.key] = j
                nodes.append(nxt)
                queue.append(j)
            if i < j:
                edges.append((i, j, k))
    return nodes, sorted(edges)


def _label(t: MaximalRigid) -> str:
    return "+".join(str(x) for x in sorted(t.summands))


def export_exchange_graph(t: MaximalRigid, fmt: str = "json") -> str:
    nodes, edges = exchange_graph(t)
    if fmt == "json":
        return dumps(
            {
                "n": t.n,
                "nodes": [{"id": i, "objects": _objs(sorted(v.summands))} for i, v in enumerate(nodes)],
                "edges": [{"source": i, "target": j, "direction": k} for i, j, k in edges],
            }
        )
    if fmt == "dot":
        lines = ["graph exchange {"]
        for i, v in enumerate(nodes):
            lines.append(f'  s{i} [label="{_label(v)}"];')
        for i, j, k in edges:
            lines.append(f'  s{i} -- s{j} [label="{k}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown graph format {fmt!r}")
