"""Oracle cross-checks grouped into suites, as run by ``levgraph verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .distance import edit_distance_table
from .errors import ResourceLimitError
from .graph import (
    LevGraph,
    UNREACHABLE,
    bfs_distances,
    build_graph,
    degree_formula,
    geodesic_distance,
)
from .resolving import build_resolving_set, embed, is_resolving
from .strings import GraphSpec, format_string
from .symmetry import (
    build_determining_set,
    construct_theorem_group,
    describe_permutation,
    enumerate_automorphisms,
    exact_determining_number,
    expected_automorphism_count,
    in_theorem_regime,
    is_determining,
)

PASS, FAIL, SKIPPED, INFO = "PASS", "FAIL", "SKIPPED", "INFO"
SUITES = ("geodesic", "resolve", "auto", "det")
PAIRWISE_GUARD = 500


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    status: str
    detail: str = ""

    def line(self) -> str:
        tail = f"  {self.detail}" if self.detail else ""
        return f"[{self.status}] {self.suite}: {self.name}{tail}"


class _Ctx:
    """Lazily computed, shared per-spec data."""

    def __init__(self, spec: GraphSpec, max_vertices: int, auto_guard: int):
        self.spec = spec
        self.max_vertices = max_vertices
        self.auto_guard = auto_guard
        self._g: LevGraph | None = None
        self._dist: np.ndarray | None = None
        self._autos = None

    @property
    def g(self) -> LevGraph:
        if self._g is None:
            self._g = build_graph(self.spec, self.max_vertices)
        return self._g

    def lit(self, w) -> str:
        return format_string(w, self.spec.a)

    def distances(self) -> np.ndarray:
        g = self.g
        if g.vertex_count > PAIRWISE_GUARD:
            raise ResourceLimitError("pairwise check vertex count", g.vertex_count, PAIRWISE_GUARD)
        if self._dist is None:
            self._dist = np.stack([bfs_distances(g, s) for s in range(g.vertex_count)])
        return self._dist

    def autos(self):
        if self._autos is None:
            self._autos = enumerate_automorphisms(self.g, self.auto_guard)
        return self._autos


def _geodesic(ctx: _Ctx):
    g, spec = ctx.g, ctx.spec
    d0 = bfs_distances(g, 0)
    missing = np.flatnonzero(d0 == UNREACHABLE)
    if missing.size:
        yield FAIL, "connected", f"{ctx.lit(g.string(int(missing[0])))} unreachable from {ctx.lit(g.string(0))}"
    else:
        yield PASS, "connected", f"{g.vertex_count} vertices reached"

    bad = None
    for r in range(g.vertex_count):
        u = g.string(r)
        if not spec.k1 < len(u) < spec.k2:
            continue
        lens = np.array([len(g.string(int(s))) for s in g.neighbors(r)])
        got = (int((lens < len(u)).sum()), int((lens == len(u)).sum()), int((lens > len(u)).sum()))
        if got != degree_formula(u, spec.a):
            bad = (u, got, degree_formula(u, spec.a))
            break
    if bad:
        yield FAIL, "degree formula", f"{ctx.lit(bad[0])}: counted {bad[1]}, formula {bad[2]}"
    else:
        yield PASS, "degree formula", ""

    try:
        D = ctx.distances()
    except ResourceLimitError as e:
        yield SKIPPED, "edges are edit distance 1", str(e)
        yield SKIPPED, "closed-form geodesic equals BFS", str(e)
        return
    strings = g.strings()
    bad = None
    for r, u in enumerate(strings):
        lev = np.concatenate([edit_distance_table(u, k, spec.a) for k in range(spec.k1, spec.k2 + 1)])
        adj = np.zeros(g.vertex_count, dtype=bool)
        adj[g.neighbors(r)] = True
        wrong = np.flatnonzero(adj != (lev == 1))
        if wrong.size:
            bad = (u, strings[int(wrong[0])])
            break
    if bad:
        yield FAIL, "edges are edit distance 1", f"counterexample {ctx.lit(bad[0])} {ctx.lit(bad[1])}"
    else:
        yield PASS, "edges are edit distance 1", ""

    bad = None
    for i, u in enumerate(strings):
        for j in range(i + 1, len(strings)):
            if geodesic_distance(spec, u, strings[j]) != D[i, j]:
                bad = (u, strings[j], int(D[i, j]))
                break
        if bad:
            break
    if bad:
        yield FAIL, "closed-form geodesic equals BFS", f"counterexample {ctx.lit(bad[0])} {ctx.lit(bad[1])} (BFS {bad[2]})"
    else:
        yield PASS, "closed-form geodesic equals BFS", f"diameter {int(D.max())} <= k2"


def _resolve(ctx: _Ctx):
    g, spec = ctx.g, ctx.spec
    R = build_resolving_set(spec)
    ok, pair = is_resolving(g, R.nodes)
    name = f"constructed set of size {len(R)} resolves"
    empirical = spec.k1 == spec.k2 and spec.k2 > 2
    if ok:
        yield (INFO if empirical else PASS), name, "empirical (Hamming regime)" if empirical else ""
    else:
        detail = f"unresolved pair {ctx.lit(pair[0])} {ctx.lit(pair[1])}"
        yield (INFO if empirical else FAIL), name, detail

    cols = np.stack([bfs_distances(g, g.rank(w)) for w in R.nodes], axis=1)
    bad = None
    for r, u in enumerate(g.strings()):
        vec = embed(spec, R, u)
        if not np.array_equal(vec, cols[r]):
            j = int(np.flatnonzero(vec != cols[r])[0])
            bad = (u, R.nodes[j], int(vec[j]), int(cols[r, j]))
            break
    if bad:
        yield FAIL, "embedding equals BFS distances", (
            f"{ctx.lit(bad[0])} to {ctx.lit(bad[1])}: kernel {bad[2]}, BFS {bad[3]}")
    else:
        yield PASS, "embedding equals BFS distances", f"coordinates within [0, {int(cols.max())}]"


def _auto(ctx: _Ctx):
    g, spec = ctx.g, ctx.spec
    try:
        autos = ctx.autos()
    except ResourceLimitError as e:
        yield SKIPPED, "automorphism count", str(e)
        return
    want = expected_automorphism_count(spec)
    status = PASS if len(autos) == want else FAIL
    yield status, "automorphism count", f"|Aut| = {len(autos)}, expected {want}"
    if in_theorem_regime(spec):
        found = set(autos)
        built = {phi: phi.to_permutation(g) for phi in construct_theorem_group(spec.a)}
        extra = found - set(built.values())
        missing = [phi for phi, p in built.items() if p not in found]
        if extra:
            yield FAIL, "relabelling and reversal generate the group", (
                f"unexpected automorphism {describe_permutation(g, min(extra))}")
        elif missing:
            yield FAIL, "relabelling and reversal generate the group", f"not an automorphism: {missing[0]}"
        else:
            yield PASS, "relabelling and reversal generate the group", ""
    index = set(autos)
    sample = autos if len(autos) <= 500 else autos[:100]
    closed = all(tuple(p[i] for i in q) in index for p in sample for q in sample)
    yield (PASS if closed else FAIL), "closed under composition", ""


def _expected_det(spec: GraphSpec) -> int | None:
    if spec.k1 == 0 and spec.k2 == 1:
        return spec.a
    if in_theorem_regime(spec):
        return 2 if (spec.k2, spec.a) == (2, 2) else math.ceil(spec.a / spec.k2)
    return None


def _det(ctx: _Ctx):
    g, spec = ctx.g, ctx.spec
    try:
        autos = ctx.autos()
    except ResourceLimitError as e:
        yield SKIPPED, "determining number", str(e)
        return
    res = exact_determining_number(g, autos)
    want = _expected_det(spec)
    witness = " ".join(ctx.lit(w) for w in res.witness) or "(empty)"
    if want is None:
        yield INFO, "determining number", f"Det = {res.det}, witness {witness}"
    else:
        status = PASS if res.det == want else FAIL
        yield status, "determining number", f"Det = {res.det}, expected {want}, witness {witness}"
    if in_theorem_regime(spec) and (spec.k2, spec.a) != (2, 2):
        D = build_determining_set(spec)
        ok = is_determining(g, D, autos)
        yield (PASS if ok else FAIL), "constructed determining set", " ".join(ctx.lit(w) for w in D)


_RUNNERS: dict[str, Callable] = {"geodesic": _geodesic, "resolve": _resolve, "auto": _auto, "det": _det}


def run_suites(
    spec: GraphSpec,
    suites=SUITES,
    max_vertices: int = 10**6,
    auto_guard: int = 64,
) -> list[Check]:
    ctx = _Ctx(spec, max_vertices, auto_guard)
    out = []
    for suite in suites:
        try:
            for status, name, detail in _RUNNERS[suite](ctx):
                out.append(Check(suite, name, status, detail))
        except ResourceLimitError as e:
            out.append(Check(suite, "suite", SKIPPED, str(e)))
    return out
