import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from dsrw import Graph, Homomorphism, check_homomorphism, compose, find_isomorphism, identity, is_omega_injective
from dsrw.disconnect import disconnect_edges
from dsrw.errors import (
    DomainMismatch,
    HomomorphismError,
    LabelNotPreserved,
    NotTotal,
    SuccessorNotPreserved,
    UnlabeledImageOfLabeled,
)
from dsrw.morphism import is_homomorphism, iter_homomorphisms

from conftest import load_rules
from oracles import all_maps, brute_isomorphic
from randgraphs import random_graph


def test_pattern_hom_is_homomorphism(pattern_hom):
    assert pattern_hom("d") == "n"
    assert pattern_hom.edge(("c", 1)) == ("o", 1)


def test_identity_is_homomorphism(sample_graph):
    assert check_homomorphism(sample_graph, sample_graph, {n: n for n in sample_graph.nodes}) == identity(sample_graph)


def test_label_not_preserved(sample_graph, sample_pattern):
    with pytest.raises(LabelNotPreserved) as exc:
        check_homomorphism(sample_pattern, sample_graph, {"a": "m", "b": "n", "c": "p", "d": "n", "e": "p"})
    assert exc.value.node == "c"


def test_other_failures(sample_graph, sample_pattern):
    with pytest.raises(NotTotal):
        check_homomorphism(sample_pattern, sample_graph, {"a": "m"})
    with pytest.raises(UnlabeledImageOfLabeled):
        check_homomorphism(sample_pattern, sample_graph, {"a": "n", "b": "n", "c": "o", "d": "n", "e": "p"})
    with pytest.raises(SuccessorNotPreserved) as exc:
        check_homomorphism(sample_pattern, sample_graph, {"a": "m", "b": "q", "c": "o", "d": "n", "e": "p"})
    assert (exc.value.node, exc.value.index) == ("a", 1)


def test_omega_injectivity(pattern_hom):
    assert is_omega_injective(pattern_hom)
    rule = load_rules("split_constants.rules").rule("split")
    u = Graph({"m", "o"}, {"m": "g", "o": "a"}, {"m": ("o",), "o": ()})
    mu = check_homomorphism(rule.lhs, u, {"n1": "m", "n2": "m", "n3": "o"})
    assert not is_omega_injective(mu)
    blank = Graph({"x", "y"})
    assert is_omega_injective(Homomorphism(blank, u, {"x": "m", "y": "m"}))


def test_identity_law(pattern_hom):
    assert compose(pattern_hom, identity(pattern_hom.cod)) == pattern_hom
    assert compose(identity(pattern_hom.dom), pattern_hom) == pattern_hom


def test_compose_domain_mismatch(pattern_hom):
    with pytest.raises(DomainMismatch):
        compose(pattern_hom, pattern_hom)


def test_connection_undoes_inclusion():
    rule = load_rules("add_one_cell.rules").rule("add1")
    d = disconnect_edges(rule.lhs, {("m", 2)})
    assert all(d.connection(n) == n for n in rule.lhs.nodes)


def test_composition_table_small_graphs():
    rng = random.Random(7)
    checked = 0
    while checked < 20:
        a, b, c = (random_graph(rng, rng.randint(1, 3), prefix=p) for p in "abc")
        ab = [m for m in all_maps(a, b) if is_homomorphism(a, b, m)]
        bc = [m for m in all_maps(b, c) if is_homomorphism(b, c, m)]
        for f, g in itertools.product(ab, bc):
            h = compose(Homomorphism(a, b, f), Homomorphism(b, c, g))
            assert dict(h.map) == {x: g[f[x]] for x in a.nodes}
            checked += 1


def test_iter_homomorphisms_matches_brute_force():
    rng = random.Random(11)
    for _ in range(150):
        a = random_graph(rng, rng.randint(0, 4), prefix="a")
        b = random_graph(rng, rng.randint(1, 4), prefix="b")
        expected = sorted(tuple(sorted(m.items())) for m in all_maps(a, b) if is_homomorphism(a, b, m))
        got = [tuple(sorted(h.map.items())) for h in iter_homomorphisms(a, b)]
        assert len(got) == len(set(got))
        assert sorted(got) == expected


def test_find_isomorphism_renaming(sample_graph):
    primed = Graph(
        {n + "'" for n in sample_graph.nodes},
        {n + "'": s for n, s in sample_graph.labels.items()},
        {n + "'": tuple(t + "'" for t in s) for n, s in sample_graph.successors.items()},
    )
    iso = find_isomorphism(sample_graph, primed)
    assert iso is not None and all(iso(n) == n + "'" for n in sample_graph.nodes)


def test_find_isomorphism_cardinality(sample_graph, sample_pattern):
    assert find_isomorphism(sample_graph, sample_pattern) is None


def test_find_isomorphism_against_permutations():
    rng = random.Random(5)
    hits = 0
    for trial in range(300):
        g = random_graph(rng, 5, prefix="g")
        if trial % 2:
            # a relabeled copy, so isomorphic pairs show up often
            perm = dict(zip(g.sorted_nodes(), rng.sample([f"h{i}" for i in range(5)], 5)))
            h = Graph(
                perm.values(),
                {perm[n]: s for n, s in g.labels.items()},
                {perm[n]: tuple(perm[t] for t in s) for n, s in g.successors.items()},
            )
            if rng.random() < 0.5 and h.labeled:
                n = rng.choice(sorted(h.labeled))
                if h.successors[n]:
                    succ = dict(h.successors)
                    succ[n] = (rng.choice(h.sorted_nodes()),) + succ[n][1:]
                    h = Graph(h.nodes, h.labels, succ)
        else:
            h = random_graph(rng, 5, prefix="h")
        iso = find_isomorphism(g, h)
        assert (iso is not None) == brute_isomorphic(g, h)
        assert (find_isomorphism(h, g) is not None) == (iso is not None)
        if iso is not None:
            hits += 1
            inv = {v: k for k, v in iso.map.items()}
            assert len(inv) == len(g)
            assert is_homomorphism(h, g, inv)
    assert hits > 50


def test_faithfulness(pattern_hom):
    again = Homomorphism(pattern_hom.dom, pattern_hom.cod, dict(pattern_hom.map))
    assert again == pattern_hom and hash(again) == hash(pattern_hom)
    other = Homomorphism(pattern_hom.dom, pattern_hom.cod, {**pattern_hom.map, "b": "q"})
    assert other != pattern_hom


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_perturbed_maps_are_rejected(seed):
    rng = random.Random(seed)
    a = random_graph(rng, rng.randint(1, 4), prefix="a")
    b = random_graph(rng, rng.randint(1, 5), prefix="b")
    homs = list(iter_homomorphisms(a, b))
    if not homs or not a.labeled:
        return
    h = dict(rng.choice(homs).map)
    n = rng.choice(sorted(a.labeled))
    wrong = [x for x in b.sorted_nodes() if x != h[n]]
    if not wrong:
        return
    h[n] = rng.choice(wrong)
    # the perturbed map stays valid only if it still satisfies both conditions
    ok = (
        b.is_labeled(h[n])
        and b.labels[h[n]] == a.labels[n]
        and all(h[s] == t for s, t in zip(a.succ(n), b.succ(h[n])))
        and all(h[s] == t for m in a.labeled if n in a.succ(m) for s, t in zip(a.succ(m), b.succ(h[m])))
    )
    assert is_homomorphism(a, b, h) == ok
    if not ok:
        with pytest.raises(HomomorphismError):
            check_homomorphism(a, b, h)
