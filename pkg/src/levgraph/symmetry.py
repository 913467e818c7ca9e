"""Automorphisms and determining sets of Levenshtein graphs.

Two representations are used.  :class:`Automorphism` is the structural
form, a relabelling of symbols optionally combined with string reversal.
An explicit automorphism is a tuple ``perm`` with ``perm[i]`` the rank of
the image of vertex ``i``; it can describe any graph automorphism,
including those of the small graphs where lengths are not preserved.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import ResourceLimitError
from .graph import LevGraph
from .strings import GraphSpec, LevString, format_string

DEFAULT_AUTOMORPHISM_GUARD = 64

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class Automorphism:
    """Reverse (optionally), then relabel each symbol ``s`` as ``xi[s]``."""

    xi: tuple[int, ...]
    reversed: bool = False

    def __post_init__(self):
        if sorted(self.xi) != list(range(len(self.xi))):
            raise ValueError(f"xi must be a permutation of 0..{len(self.xi) - 1}, got {self.xi}")

    @classmethod
    def identity(cls, a: int) -> "Automorphism":
        return cls(tuple(range(a)), False)

    def __call__(self, u: Sequence[int]) -> LevString:
        return apply_automorphism(self, u)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """``self o other``: apply ``other`` first."""
        # reversal commutes with relabelling
        return Automorphism(tuple(self.xi[s] for s in other.xi), self.reversed != other.reversed)

    def inverse(self) -> "Automorphism":
        inv = [0] * len(self.xi)
        for s, t in enumerate(self.xi):
            inv[t] = s
        return Automorphism(tuple(inv), self.reversed)

    def to_permutation(self, g: LevGraph) -> Permutation:
        return tuple(g.rank(self(w)) for w in g.strings())

    def as_dict(self) -> dict:
        return {"xi": list(self.xi), "reversed": self.reversed}


def apply_automorphism(phi: Automorphism, u: Sequence[int]) -> LevString:
    w = reversed(u) if phi.reversed else u
    return tuple(phi.xi[s] for s in w)


def construct_theorem_group(a: int) -> list[Automorphism]:
    """All ``2 * a!`` compositions of a symbol relabelling with optional reversal."""
    if a < 2:
        raise ValueError(f"alphabet size must be >= 2, got {a}")
    return [Automorphism(xi, rev)
            for rev in (False, True) for xi in itertools.permutations(range(a))]


def _refine(adj: list[frozenset[int]]) -> list[int]:
    """Stable vertex colouring by iterated neighbour-colour multisets."""
    n = len(adj)
    colour = [len(adj[v]) for v in range(n)]
    while True:
        sig = [(colour[v], tuple(sorted(Counter(colour[u] for u in adj[v]).items()))) for v in range(n)]
        relabel = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [relabel[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            return new
        colour = new


def _search_order(adj: list[frozenset[int]], colour: list[int]) -> list[int]:
    """Vertices ordered so each one touches as many earlier ones as possible."""
    n = len(adj)
    size = Counter(colour)
    placed: list[int] = []
    links = [0] * n
    left = set(range(n))
    while left:
        v = min(left, key=lambda x: (-links[x], size[colour[x]], x))
        placed.append(v)
        left.remove(v)
        for u in adj[v]:
            links[u] += 1
    return placed


def enumerate_automorphisms(
    g: LevGraph, guard: int = DEFAULT_AUTOMORPHISM_GUARD
) -> list[Permutation]:
    """Every automorphism of ``g`` as an explicit rank permutation, sorted.

    Backtracking over a refined colouring: a vertex may only map to a
    vertex of the same colour, and every partial map must agree on
    adjacency with all vertices placed before it.
    """
    n = g.vertex_count
    if n > guard:
        raise ResourceLimitError("automorphism search vertex count", n, guard)
    adj = g.adjacency_sets()
    colour = _refine(adj)
    order = _search_order(adj, colour)
    by_colour: dict[int, list[int]] = {}
    for v in range(n):
        by_colour.setdefault(colour[v], []).append(v)
    # per step: earlier positions adjacent / not adjacent to order[step]
    earlier_nb = [[j for j in range(i) if order[j] in adj[order[i]]] for i in range(n)]
    earlier_non = [[j for j in range(i) if order[j] not in adj[order[i]]] for i in range(n)]

    image = [0] * n
    used = [False] * n
    found: list[Permutation] = []

    def extend(i: int) -> None:
        if i == n:
            perm = [0] * n
            for j, v in enumerate(order):
                perm[v] = image[j]
            found.append(tuple(perm))
            return
        v = order[i]
        nbs = earlier_nb[i]
        if nbs:
            cands = adj[image[nbs[0]]]
        else:
            cands = by_colour[colour[v]]
        for c in cands:
            if used[c] or colour[c] != colour[v]:
                continue
            ac = adj[c]
            if any(image[j] not in ac for j in nbs) or any(image[j] in ac for j in earlier_non[i]):
                continue
            used[c] = True
            image[i] = c
            extend(i + 1)
            used[c] = False

    extend(0)
    found.sort()
    return found


def expected_automorphism_count(spec: GraphSpec) -> int:
    """Size of the automorphism group for each parameter regime."""
    k1, k2, a = spec.k1, spec.k2, spec.a
    if k1 == k2:
        return math.factorial(k2) * math.factorial(a) ** k2
    if k2 == 1:
        return math.factorial(a + 1)
    return 2 * math.factorial(a)


def in_theorem_regime(spec: GraphSpec) -> bool:
    return spec.k1 != spec.k2 and spec.k2 >= 2


def match_groups(g: LevGraph, guard: int = DEFAULT_AUTOMORPHISM_GUARD) -> bool:
    """Whether the enumerated group equals relabellings composed with reversal."""
    if not in_theorem_regime(g.spec):
        raise ValueError("group comparison needs k1 != k2 and k2 >= 2")
    found = set(enumerate_automorphisms(g, guard))
    built = {phi.to_permutation(g) for phi in construct_theorem_group(g.spec.a)}
    return found == built


def compose_permutations(p: Permutation, q: Permutation) -> Permutation:
    """``p o q``: apply ``q`` first."""
    return tuple(p[i] for i in q)


def invert_permutation(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _chunks(symbols: list[int], k: int) -> list[LevString]:
    """Cover ``symbols`` with length-``k`` strings, padding the last by repetition."""
    out = []
    for i in range(0, len(symbols), k):
        block = symbols[i:i + k]
        out.append(tuple(block + [block[-1]] * (k - len(block))))
    return out


def build_determining_set(spec: GraphSpec) -> list[LevString]:
    """Determining set of size ``ceil(a / k2)`` for ``k1 != k2``, ``k2 >= 2``, ``(k2, a) != (2, 2)``."""
    k1, k2, a = spec.k1, spec.k2, spec.a
    if k1 == k2 or k2 < 2 or (k2, a) == (2, 2):
        raise ValueError(
            f"no construction for L_{{{k1},{k2};{a}}}: it needs k1 != k2, k2 >= 2 and (k2, a) != (2, 2); "
            "use exact_determining_number for these graphs"
        )
    if k2 >= a:
        if a == 2:
            return [(0,) * (k2 - 1) + (1,)]
        return [(0,) * (k2 - a + 2) + tuple(range(1, a - 1))]
    if k2 > 2:
        head = [(0, 0) + tuple(range(1, k2 - 1))]
        return head + _chunks(list(range(k2 - 1, a - 1)), k2)
    return [(0, 1), (1, 2)] + _chunks(list(range(3, a - 1)), 2)


def _moved_masks(autos: Sequence[Permutation]) -> tuple[list[int], int]:
    """For each vertex, bitmask of the non-identity automorphisms that move it."""
    nontrivial = [p for p in autos if any(i != j for i, j in enumerate(p))]
    n = len(autos[0]) if autos else 0
    masks = [0] * n
    for b, p in enumerate(nontrivial):
        for v in range(n):
            if p[v] != v:
                masks[v] |= 1 << b
    return masks, (1 << len(nontrivial)) - 1


def is_determining(
    g: LevGraph, D: Sequence[Sequence[int]], autos: Sequence[Permutation] | None = None
) -> bool:
    """Only the identity fixes every node of ``D``."""
    ranks = [g.check_vertex(w) for w in D]
    if autos is None:
        autos = enumerate_automorphisms(g)
    masks, full = _moved_masks(autos)
    got = 0
    for r in ranks:
        got |= masks[r]
    return got == full


@dataclass(frozen=True)
class DeterminingResult:
    det: int
    witness: tuple[LevString, ...]


def exact_determining_number(
    g: LevGraph, autos: Sequence[Permutation] | None = None
) -> DeterminingResult:
    if autos is None:
        autos = enumerate_automorphisms(g)
    masks, full = _moved_masks(autos)
    n = g.vertex_count
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            got = 0
            for r in combo:
                got |= masks[r]
            if got == full:
                return DeterminingResult(size, tuple(g.string(r) for r in combo))
    raise AssertionError("the full vertex set is always determining")


def describe_permutation(g: LevGraph, p: Permutation) -> str:
    a = g.spec.a
    moved = [f"{format_string(g.string(i), a)}->{format_string(g.string(j), a)}"
             for i, j in enumerate(p) if i != j]
    return ", ".join(moved) if moved else "identity"
