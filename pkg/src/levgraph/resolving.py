"""Resolving sets, multilateration embeddings and exact metric dimension."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .distance import dist_to_run_pattern, hamming_distance
from .errors import ResourceLimitError
from .graph import LevGraph, all_pairs_distances, bfs_distances, geodesic_is_levenshtein
from .strings import GraphSpec, LevString, format_string, run_count

DEFAULT_DIMENSION_GUARD = 40


def build_Rka(k: int, a: int, *, dedup: bool = True) -> list[LevString]:
    """Two-run strings ``(2n)^i (2n+1)^(k-i)`` that separate all length-``k`` strings."""
    if k < 0 or a < 2:
        raise ValueError(f"need k >= 0 and a >= 2, got k={k}, a={a}")
    out = [(2 * n,) * i + (2 * n + 1,) * (k - i)
           for n in range(a // 2) for i in range(k + 1)]
    if dedup:
        out = list(dict.fromkeys(out))
    return out


def shift_chars(w: Sequence[int], i: int, a: int) -> LevString:
    """Apply the cyclic relabelling ``s -> s + 1 (mod a)`` ``i`` times."""
    return tuple((s + i) % a for s in w)


@dataclass(frozen=True)
class ResolvingSet:
    spec: GraphSpec
    nodes: tuple[LevString, ...]
    provenance: tuple[tuple[str, ...], ...]
    raw_size: int

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def literals(self) -> list[str]:
        return [format_string(w, self.spec.a) for w in self.nodes]


def _construction(spec: GraphSpec) -> list[tuple[LevString, str]]:
    k1, k2, a = spec.k1, spec.k2, spec.a
    tagged = [((alpha,) * k2, "R0") for alpha in range(a)]
    for i in range((k2 - k1) // 2 + 1):
        tag = f"R1(i={i},shift={i})"
        tagged += [(shift_chars(w, i, a), tag) for w in build_Rka(k2 - 2 * i, a, dedup=False)]
    if (k2 - k1) % 2:
        tagged += [(w, "Rk1-odd-tail") for w in build_Rka(k1, a, dedup=False)]
    return tagged


def build_resolving_set(spec: GraphSpec) -> ResolvingSet:
    """Union of the constant strings of length ``k2`` and shifted two-run families.

    Nodes keep their first position; a node produced more than once
    collects every provenance tag.
    """
    tagged = _construction(spec)
    tags: dict[LevString, list[str]] = {}
    for w, tag in tagged:
        lst = tags.setdefault(w, [])
        if tag not in lst:
            lst.append(tag)
    return ResolvingSet(spec, tuple(tags), tuple(tuple(t) for t in tags.values()), len(tagged))


def resolving_set_size_bound(spec: GraphSpec) -> int:
    """Upper bound ``a + floor(a/2)(k1+1) + floor(a/2) * sum_i (k2 - 2i + 1)``."""
    h = spec.a // 2
    s = sum(spec.k2 - 2 * i + 1 for i in range((spec.k2 - spec.k1) // 2 + 1))
    return spec.a + h * (spec.k1 + 1) + h * s


def _distance_columns(g: LevGraph, nodes: Sequence[LevString]) -> np.ndarray:
    ranks = [g.check_vertex(w) for w in nodes]
    if not ranks:
        return np.zeros((g.vertex_count, 0), dtype=np.int64)
    return np.stack([bfs_distances(g, r) for r in ranks], axis=1)


def first_collision(profiles: np.ndarray) -> tuple[int, int] | None:
    """First pair of rows (in row order) with identical profiles, if any."""
    seen: dict[bytes, int] = {}
    prof = np.ascontiguousarray(profiles)
    for i in range(prof.shape[0]):
        key = prof[i].tobytes()
        j = seen.setdefault(key, i)
        if j != i:
            return j, i
    return None


def is_resolving(g: LevGraph, nodes: Sequence[Sequence[int]]) -> tuple[bool, tuple[LevString, LevString] | None]:
    """Check that graph distances to ``nodes`` separate every pair of vertices.

    Returns ``(True, None)`` or ``(False, (u, v))`` with the first
    unresolved pair in rank order.
    """
    cols = _distance_columns(g, [tuple(w) for w in nodes])
    hit = first_collision(cols)
    if hit is None:
        return True, None
    return False, (g.string(hit[0]), g.string(hit[1]))


def embed(spec: GraphSpec, R: ResolvingSet | Sequence[Sequence[int]], u: Sequence[int]) -> np.ndarray:
    """Vector of graph distances from ``u`` to each resolving node.

    Every resolving node has at most two runs, so each coordinate costs
    one linear pass over ``u``.
    """
    if not spec.contains(u):
        raise ValueError(f"{format_string(u, spec.a)} is outside the graph's vertex set")
    nodes = R.nodes if isinstance(R, ResolvingSet) else [tuple(w) for w in R]
    u = tuple(u)
    if geodesic_is_levenshtein(spec):
        return np.array([dist_to_run_pattern(u, r) for r in nodes], dtype=np.int64)
    # k1 = k2 > 2: graph distance is Hamming
    return np.array([hamming_distance(u, r) for r in nodes], dtype=np.int64)


def embed_all(spec: GraphSpec, R: ResolvingSet | Sequence[Sequence[int]], strings) -> np.ndarray:
    return np.stack([embed(spec, R, u) for u in strings]) if strings else np.zeros((0, len(R)), dtype=np.int64)


@dataclass(frozen=True)
class DimensionResult:
    beta: int
    witness: tuple[LevString, ...]


def exact_metric_dimension(
    g: LevGraph, max_size: int | None = None, guard: int = DEFAULT_DIMENSION_GUARD
) -> DimensionResult:
    """Smallest resolving set by exhaustive search, sizes ascending, ranks lexicographic."""
    n = g.vertex_count
    if n > guard:
        raise ResourceLimitError("metric dimension vertex count", n, guard)
    D = all_pairs_distances(g)
    limit = n if max_size is None else min(max_size, n)
    for size in range(0, limit + 1):
        for combo in itertools.combinations(range(n), size):
            if first_collision(D[:, combo]) is None:
                return DimensionResult(size, tuple(g.string(i) for i in combo))
    raise ValueError(f"no resolving set of size <= {limit}")


def check_dimension_bounds(spec: GraphSpec, beta: int) -> bool:
    """``a^k2 <= (k2+1)^beta`` and ``beta`` does not exceed the constructed set's size."""
    if beta < 1:
        raise ValueError("beta must be >= 1")
    return spec.a**spec.k2 <= (spec.k2 + 1) ** beta and beta <= len(build_resolving_set(spec))


def all_two_runs(nodes: Sequence[Sequence[int]]) -> bool:
    return all(run_count(w) <= 2 for w in nodes)
