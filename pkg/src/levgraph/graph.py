"""Levenshtein graphs: construction, degrees and geodesic distances."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .distance import edit_distance, hamming_distance
from .errors import ResourceLimitError
from .strings import GraphSpec, LevString, code_to_string, format_string, rank, run_count, unrank

DEFAULT_MAX_VERTICES = 10**6
UNREACHABLE = -1


@dataclass(frozen=True, eq=False)
class LevGraph:
    """Immutable graph on all strings of lengths ``k1..k2``.

    Adjacency is stored in CSR form: the neighbours of rank ``i`` are
    ``indices[indptr[i]:indptr[i+1]]``, sorted ascending.
    """

    spec: GraphSpec
    indptr: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return len(self.indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self.indices) // 2

    def neighbors(self, r: int) -> np.ndarray:
        return self.indices[self.indptr[r]:self.indptr[r + 1]]

    def degree(self, r: int) -> int:
        return int(self.indptr[r + 1] - self.indptr[r])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def has_edge(self, r: int, s: int) -> bool:
        nb = self.neighbors(r)
        i = np.searchsorted(nb, s)
        return bool(i < len(nb) and nb[i] == s)

    def rank(self, w: Sequence[int]) -> int:
        return rank(w, self.spec)

    def string(self, r: int) -> LevString:
        return unrank(r, self.spec)

    def strings(self) -> list[LevString]:
        a = self.spec.a
        return [code_to_string(c, k, a)
                for k in range(self.spec.k1, self.spec.k2 + 1) for c in range(a**k)]

    def literal(self, r: int) -> str:
        return format_string(self.string(r), self.spec.a)

    def edges(self) -> np.ndarray:
        """``(E, 2)`` array of edges ``(i, j)`` with ``i < j``, sorted."""
        src = np.repeat(np.arange(self.vertex_count), self.degrees())
        mask = src < self.indices
        return np.stack([src[mask], self.indices[mask]], axis=1)

    def adjacency_sets(self) -> list[frozenset[int]]:
        return [frozenset(self.neighbors(i).tolist()) for i in range(self.vertex_count)]

    def check_vertex(self, w: Sequence[int]) -> int:
        if not self.spec.contains(w):
            raise ValueError(
                f"{format_string(w, self.spec.a)} is not a vertex of L_{{{self.spec.k1},{self.spec.k2};{self.spec.a}}}"
            )
        return self.rank(w)


def _length_edges(spec: GraphSpec, k: int) -> list[np.ndarray]:
    """Substitution edges inside length ``k`` and insertion edges to ``k + 1``."""
    a = spec.a
    codes = np.arange(a**k, dtype=np.int64)
    off = spec.length_offset(k)
    out = []
    for p in range(k):
        place = a ** (k - 1 - p)
        digit = (codes // place) % a
        for c in range(1, a):
            # (digit + c) mod a covers every other symbol once
            new = codes + (((digit + c) % a) - digit) * place
            mask = codes < new
            out.append(np.stack([codes[mask] + off, new[mask] + off], axis=1))
    if k < spec.k2:
        off_up = spec.length_offset(k + 1)
        for p in range(k + 1):
            tail = a ** (k - p)
            head, rest = np.divmod(codes, tail)
            for c in range(a):
                new = (head * a + c) * tail + rest
                out.append(np.stack([codes + off, new + off_up], axis=1))
    return out


def build_graph(spec: GraphSpec, max_vertices: int = DEFAULT_MAX_VERTICES) -> LevGraph:
    """Build ``L_{k1,k2;a}`` by generating single-edit neighbourhoods.

    Deletion edges are the reverses of insertion edges, so only
    substitutions and insertions are generated before symmetrising.
    """
    n = spec.vertex_count
    if n > max_vertices:
        raise ResourceLimitError("vertex count", n, max_vertices)
    parts = [e for k in range(spec.k1, spec.k2 + 1) for e in _length_edges(spec, k)]
    if parts:
        e = np.concatenate(parts)
        e = np.unique(e, axis=0)
        both = np.concatenate([e, e[:, ::-1]])
    else:
        both = np.empty((0, 2), dtype=np.int64)
    order = np.lexsort((both[:, 1], both[:, 0]))
    both = both[order]
    counts = np.bincount(both[:, 0], minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    indices = np.ascontiguousarray(both[:, 1])
    indptr.setflags(write=False)
    indices.setflags(write=False)
    return LevGraph(spec, indptr, indices)


def degree_formula(u: Sequence[int], a: int) -> tuple[int, int, int]:
    """Neighbour counts of ``u`` in the unbounded graph, by neighbour length.

    Returns ``(shorter, same, longer)`` = ``(r(u), |u|(a-1), a + |u|(a-1))``.
    """
    k = len(u)
    return run_count(u), k * (a - 1), a + k * (a - 1)


def bfs_distances(g: LevGraph, source: int) -> np.ndarray:
    dist = np.full(g.vertex_count, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    d = 0
    indptr, indices = g.indptr, g.indices
    while frontier.size:
        d += 1
        starts = indptr[frontier]
        lens = indptr[frontier + 1] - starts
        # gather all neighbour slices of the frontier in one shot
        pos = np.repeat(starts - np.cumsum(lens) + lens, lens) + np.arange(lens.sum())
        nb = np.unique(indices[pos])
        nb = nb[dist[nb] == UNREACHABLE]
        dist[nb] = d
        frontier = nb
    return dist


def geodesic_bfs(g: LevGraph, source: Sequence[int]) -> np.ndarray:
    """Graph distance from ``source`` to every vertex, indexed by rank."""
    return bfs_distances(g, g.check_vertex(source))


def geodesic_is_levenshtein(spec: GraphSpec) -> bool:
    """Whether graph distance equals edit distance for every pair of vertices."""
    return spec.k1 < spec.k2 or spec.k2 <= 2


def geodesic_closed_form(g: LevGraph, u: Sequence[int], v: Sequence[int]) -> int:
    """Graph distance without search: edit distance, or Hamming distance for ``k1 = k2 > 2``."""
    g.check_vertex(u)
    g.check_vertex(v)
    return geodesic_distance(g.spec, u, v)


def geodesic_distance(spec: GraphSpec, u: Sequence[int], v: Sequence[int]) -> int:
    if geodesic_is_levenshtein(spec):
        return edit_distance(u, v)
    return hamming_distance(u, v)


def all_pairs_distances(g: LevGraph, max_vertices: int = 5000) -> np.ndarray:
    n = g.vertex_count
    if n > max_vertices:
        raise ResourceLimitError("all-pairs vertex count", n, max_vertices)
    return np.stack([bfs_distances(g, s) for s in range(n)])


def diameter(g: LevGraph, max_vertices: int = 5000) -> int:
    return int(all_pairs_distances(g, max_vertices).max())


def is_connected(g: LevGraph) -> bool:
    return bool((bfs_distances(g, 0) != UNREACHABLE).all())
