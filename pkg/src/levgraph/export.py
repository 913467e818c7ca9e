"""Serialisers for graphs, resolving sets, embeddings and automorphisms.

All writers are deterministic: nodes in rank order, edges sorted, JSON
keys in a fixed order.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Sequence

import numpy as np

from .graph import LevGraph
from .resolving import ResolvingSet
from .strings import GraphSpec, format_string
from .symmetry import Automorphism, Permutation

FORMAT_VERSION = 1


def _dumps(obj) -> str:
    return json.dumps(obj, indent=None, separators=(",", ":")) + "\n"


def graph_to_json(g: LevGraph) -> str:
    return _dumps({
        "format_version": FORMAT_VERSION,
        "spec": g.spec.as_dict(),
        "nodes": [g.literal(i) for i in range(g.vertex_count)],
        "edges": g.edges().tolist(),
    })


def graph_to_dot(g: LevGraph) -> str:
    s = g.spec
    lines = [f'graph "L_{s.k1}_{s.k2}_{s.a}" {{']
    names = [g.literal(i) for i in range(g.vertex_count)]
    lines += [f'  n{i} [label="{name}"];' for i, name in enumerate(names)]
    lines += [f"  n{i} -- n{j};" for i, j in g.edges().tolist()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def resolving_set_to_text(R: ResolvingSet) -> str:
    return "".join(f"{lit}  # {', '.join(tags)}\n" for lit, tags in zip(R.literals(), R.provenance))


def embeddings_to_json(spec: GraphSpec, R: ResolvingSet, strings: Sequence, vectors: np.ndarray) -> str:
    a = spec.a
    return _dumps({
        "format_version": FORMAT_VERSION,
        "spec": spec.as_dict(),
        "resolving_set": R.literals(),
        "embeddings": {format_string(w, a): vec.tolist() for w, vec in zip(strings, vectors)},
    })


def embeddings_to_csv(spec: GraphSpec, R: ResolvingSet, strings: Sequence, vectors: np.ndarray) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["string"] + [f"c{j + 1}" for j in range(len(R))])
    for w, vec in zip(strings, vectors):
        out.writerow([format_string(w, spec.a)] + vec.tolist())
    return buf.getvalue()


def automorphisms_to_json(
    spec: GraphSpec,
    explicit: Iterable[Permutation] = (),
    structural: Iterable[Automorphism] = (),
) -> str:
    return _dumps({
        "format_version": FORMAT_VERSION,
        "spec": spec.as_dict(),
        "structural": [phi.as_dict() for phi in structural],
        "explicit": [list(p) for p in explicit],
    })
