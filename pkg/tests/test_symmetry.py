import itertools
import math
import random

import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from levgraph.distance import edit_distance_dp
from levgraph.errors import ResourceLimitError
from levgraph.graph import build_graph
from levgraph.strings import GraphSpec, count_symbol, run_count
from levgraph.symmetry import (
    Automorphism,
    apply_automorphism,
    build_determining_set,
    compose_permutations,
    construct_theorem_group,
    enumerate_automorphisms,
    exact_determining_number,
    expected_automorphism_count,
    invert_permutation,
    is_determining,
    match_groups,
)

from conftest import strings_up_to, to_networkx


def s(text):
    return tuple(int(c) for c in text) if text != "-" else ()


def test_apply_examples():
    assert apply_automorphism(Automorphism((0, 1), True), s("001")) == s("100")
    assert apply_automorphism(Automorphism((1, 0)), s("001")) == s("110")
    assert apply_automorphism(Automorphism((2, 0, 1), True), ()) == ()
    with pytest.raises(ValueError):
        Automorphism((0, 0))


def test_random_maps_preserve_edit_distance():
    rng = random.Random(5)
    for _ in range(2000):
        a = rng.randint(2, 5)
        xi = list(range(a))
        rng.shuffle(xi)
        phi = Automorphism(tuple(xi), rng.random() < 0.5)
        u = tuple(rng.randrange(a) for _ in range(rng.randint(0, 9)))
        v = tuple(rng.randrange(a) for _ in range(rng.randint(0, 9)))
        assert edit_distance_dp(phi(u), phi(v)) == edit_distance_dp(u, v)


def test_structural_maps_preserve_distance_exhaustive():
    strings = strings_up_to(4, 2)
    D = {(u, v): edit_distance_dp(u, v) for u in strings for v in strings}
    for phi in construct_theorem_group(2):
        assert all(D[phi(u), phi(v)] == d for (u, v), d in D.items())


@pytest.mark.parametrize("a", [2, 3, 4])
def test_theorem_group_is_a_group(a):
    G = construct_theorem_group(a)
    assert len(G) == len(set(G)) == 2 * math.factorial(a)
    members = set(G)
    e = Automorphism.identity(a)
    assert e in members
    for x in G:
        assert x.compose(x.inverse()) == e
        for y in G:
            assert x.compose(y) in members
    # composition agrees with applying one map after another
    w = tuple(range(a)) + (0,)
    for x, y in itertools.product(G, repeat=2):
        assert x.compose(y)(w) == x(y(w))


def nx_automorphism_count(g):
    G = to_networkx(g)
    return sum(1 for _ in GraphMatcher(G, G).isomorphisms_iter())


@pytest.mark.parametrize("spec", [GraphSpec(0, 3, 2), GraphSpec(1, 3, 3), GraphSpec(0, 1, 2),
                                  GraphSpec(2, 2, 2), GraphSpec(2, 3, 2), GraphSpec(0, 2, 3),
                                  GraphSpec(1, 2, 2), GraphSpec(0, 1, 3), GraphSpec(3, 3, 2),
                                  GraphSpec(0, 0, 2), GraphSpec(1, 1, 4)])
def test_enumeration_counts(spec):
    g = build_graph(spec)
    autos = enumerate_automorphisms(g)
    assert len(autos) == len(set(autos)) == expected_automorphism_count(spec)
    assert len(autos) == nx_automorphism_count(g)
    adj = g.adjacency_sets()
    for p in autos:
        assert sorted(p) == list(range(g.vertex_count))
        assert all({p[j] for j in adj[i]} == adj[p[i]] for i in range(g.vertex_count))


@pytest.mark.parametrize("spec", [GraphSpec(0, 3, 2), GraphSpec(1, 3, 3), GraphSpec(0, 4, 2), GraphSpec(3, 3, 2)])
def test_enumerated_group_axioms(spec):
    autos = enumerate_automorphisms(build_graph(spec))
    members = set(autos)
    ident = tuple(range(len(autos[0])))
    assert ident in members
    for p in autos:
        assert invert_permutation(p) in members
        for q in autos:
            assert compose_permutations(p, q) in members


@pytest.mark.parametrize("spec", [GraphSpec(0, 3, 2), GraphSpec(2, 3, 2), GraphSpec(1, 3, 3),
                                  GraphSpec(0, 2, 3), GraphSpec(0, 4, 2), GraphSpec(1, 2, 4)])
def test_match_groups(spec):
    assert match_groups(build_graph(spec))


def test_match_groups_outside_regime():
    with pytest.raises(ValueError):
        match_groups(build_graph(GraphSpec(2, 2, 2)))
    with pytest.raises(ValueError):
        match_groups(build_graph(GraphSpec(0, 1, 2)))
    assert len(enumerate_automorphisms(build_graph(GraphSpec(2, 2, 2)))) == 8


def test_enumeration_guard():
    with pytest.raises(ResourceLimitError):
        enumerate_automorphisms(build_graph(GraphSpec(0, 6, 2)))


@pytest.mark.parametrize("spec", [GraphSpec(0, 3, 2), GraphSpec(1, 3, 3), GraphSpec(0, 4, 2), GraphSpec(1, 2, 4)])
def test_invariants_in_theorem_regime(spec):
    g = build_graph(spec)
    strings = g.strings()
    a, k2 = spec.a, spec.k2
    constants = {(x,) * k2 for x in range(a)}
    for p in enumerate_automorphisms(g):
        img = {u: strings[p[i]] for i, u in enumerate(strings)}
        assert all(len(img[u]) == len(u) for u in strings)
        assert {img[c] for c in constants} == constants
        xi = [img[(x,) * k2][0] for x in range(a)]
        for u in strings:
            assert all(count_symbol(u, x) == count_symbol(img[u], xi[x]) for x in range(a))
            if len(u) == k2:
                assert run_count(img[u]) == run_count(u)


def test_determining_set_construction_examples():
    assert build_determining_set(GraphSpec(0, 3, 2)) == [s("001")]
    assert build_determining_set(GraphSpec(0, 2, 3)) == [s("01"), s("12")]
    assert build_determining_set(GraphSpec(1, 4, 3)) == [s("0001")]
    assert build_determining_set(GraphSpec(0, 3, 5)) == [s("001"), s("233")]
    assert build_determining_set(GraphSpec(0, 2, 6)) == [s("01"), s("12"), s("34")]
    for bad in [GraphSpec(2, 2, 3), GraphSpec(0, 1, 3), GraphSpec(0, 2, 2)]:
        with pytest.raises(ValueError):
            build_determining_set(bad)


@pytest.mark.parametrize("spec", [GraphSpec(0, 3, 2), GraphSpec(1, 3, 3), GraphSpec(0, 2, 3), GraphSpec(1, 2, 4),
                                  GraphSpec(2, 3, 4), GraphSpec(0, 3, 3), GraphSpec(1, 2, 5)])
def test_constructed_determining_sets(spec):
    g = build_graph(spec)
    autos = enumerate_automorphisms(g, guard=100)
    D = build_determining_set(spec)
    assert len(D) == math.ceil(spec.a / spec.k2)
    assert is_determining(g, D, autos)
    res = exact_determining_number(g, autos)
    assert res.det == len(D)
    assert is_determining(g, res.witness, autos)
    used = {x for w in res.witness for x in w}
    assert len(used) >= spec.a - 1


def test_is_determining_examples():
    g = build_graph(GraphSpec(0, 2, 2))
    assert is_determining(g, [s("01"), s("00")])
    assert not is_determining(g, [])
    assert not is_determining(build_graph(GraphSpec(0, 3, 3)), [s("000")])
    with pytest.raises(ValueError):
        is_determining(g, [s("012")])


@pytest.mark.parametrize("spec,det", [(GraphSpec(0, 2, 2), 2), (GraphSpec(1, 2, 2), 2), (GraphSpec(0, 3, 2), 1),
                                      (GraphSpec(0, 1, 2), 2), (GraphSpec(0, 1, 3), 3), (GraphSpec(0, 0, 2), 0)])
def test_exact_determining_number(spec, det):
    assert exact_determining_number(build_graph(spec)).det == det


def test_trivial_group_has_determining_number_zero():
    g = build_graph(GraphSpec(0, 0, 3))
    assert enumerate_automorphisms(g) == [(0,)]
    assert exact_determining_number(g).witness == ()
