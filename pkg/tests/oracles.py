"""Exhaustive reference implementations used to cross-check the library."""

from __future__ import annotations

import itertools

from dsrw import Graph
from dsrw.morphism import is_homomorphism


def all_maps(dom: Graph, cod: Graph):
    """Every node map dom -> cod."""
    src = dom.sorted_nodes()
    for images in itertools.product(cod.sorted_nodes(), repeat=len(src)):
        yield dict(zip(src, images))


def brute_homomorphisms(dom: Graph, cod: Graph, *, omega_injective: bool = False) -> list[dict]:
    out = []
    for m in all_maps(dom, cod):
        if not is_homomorphism(dom, cod, m):
            continue
        if omega_injective and len({m[n] for n in dom.labeled}) != len(dom.labeled):
            continue
        out.append(m)
    return out


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if len(g) != len(h):
        return False
    src = g.sorted_nodes()
    for perm in itertools.permutations(h.sorted_nodes()):
        m = dict(zip(src, perm))
        inv = {v: k for k, v in m.items()}
        if is_homomorphism(g, h, m) and is_homomorphism(h, g, inv):
            return True
    return False


def as_key(m) -> tuple:
    return tuple(sorted(dict(m).items()))
