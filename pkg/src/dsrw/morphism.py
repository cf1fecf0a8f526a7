"""Graph homomorphisms: validation, composition, enumeration, isomorphism."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Mapping
from types import MappingProxyType

from .errors import (
    DomainMismatch,
    LabelNotPreserved,
    NotTotal,
    SuccessorNotPreserved,
    UnlabeledImageOfLabeled,
)
from .graph import Edge, Graph, NodeId


class Homomorphism:
    """A node map between two graphs.

    The node map is the whole identity of a homomorphism: two values with
    the same domain, codomain and map are equal.  The constructor does not
    validate; use :func:`check_homomorphism` for untrusted maps.
    """

    __slots__ = ("dom", "cod", "_map")

    def __init__(self, dom: Graph, cod: Graph, mapping: Mapping[NodeId, NodeId]):
        self.dom = dom
        self.cod = cod
        self._map = MappingProxyType(dict(mapping))

    @property
    def map(self) -> Mapping[NodeId, NodeId]:
        return self._map

    def __call__(self, n: NodeId) -> NodeId:
        return self._map[n]

    def edge(self, e: Edge) -> Edge:
        return Edge(self._map[e[0]], e[1])

    def image(self, nodes) -> set[NodeId]:
        return {self._map[n] for n in nodes}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Homomorphism):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self._map == other._map

    def __hash__(self) -> int:
        return hash((self.dom, self.cod, frozenset(self._map.items())))

    def __repr__(self) -> str:
        body = "; ".join(f"{k}->{self._map[k]}" for k in sorted(self._map))
        return f"Homomorphism[{body}]"


def check_homomorphism(dom: Graph, cod: Graph, mapping: Mapping[NodeId, NodeId]) -> Homomorphism:
    """Validate ``mapping`` as a homomorphism ``dom -> cod`` and wrap it."""
    missing = dom.nodes - mapping.keys()
    if missing:
        raise NotTotal(f"map undefined on {sorted(missing)}")
    for n in sorted(dom.nodes):
        if mapping[n] not in cod.nodes:
            raise NotTotal(f"image {mapping[n]!r} of {n!r} is not a node of the codomain")
    for n in sorted(dom.labeled):
        m = mapping[n]
        if not cod.is_labeled(m):
            raise _err(UnlabeledImageOfLabeled, f"labeled {n!r} mapped to unlabeled {m!r}", n)
        if cod.labels[m] != dom.labels[n]:
            raise _err(
                LabelNotPreserved, f"{n!r}:{dom.labels[n]} mapped to {m!r}:{cod.labels[m]}", n
            )
    # successors only after every label agrees, so label faults are reported first
    for n in sorted(dom.labeled):
        m = mapping[n]
        for i, (s, t) in enumerate(zip(dom.successors[n], cod.successors[m]), start=1):
            if mapping[s] != t:
                exc = _err(
                    SuccessorNotPreserved,
                    f"successor {i} of {n!r} is {s!r} -> {mapping[s]!r}, but successor {i} of {m!r} is {t!r}",
                    n,
                )
                exc.index = i
                raise exc
    return Homomorphism(dom, cod, {n: mapping[n] for n in dom.nodes})


def _err(cls, msg, node):
    exc = cls(msg)
    exc.node = node
    return exc


def is_homomorphism(dom: Graph, cod: Graph, mapping: Mapping[NodeId, NodeId]) -> bool:
    try:
        check_homomorphism(dom, cod, mapping)
    except (NotTotal, UnlabeledImageOfLabeled, LabelNotPreserved, SuccessorNotPreserved):
        return False
    return True


def identity(g: Graph) -> Homomorphism:
    return Homomorphism(g, g, {n: n for n in g.nodes})


def is_omega_injective(phi: Homomorphism) -> bool:
    """True iff ``phi`` is injective on the labeled nodes of its domain."""
    images = [phi(n) for n in phi.dom.labeled]
    return len(images) == len(set(images))


def compose(phi: Homomorphism, psi: Homomorphism) -> Homomorphism:
    """``psi . phi``: first ``phi``, then ``psi``."""
    if phi.cod != psi.dom:
        raise DomainMismatch("codomain of the first map is not the domain of the second")
    out = Homomorphism(phi.dom, psi.cod, {n: psi(phi(n)) for n in phi.dom.nodes})
    if __debug__:
        check_homomorphism(out.dom, out.cod, out.map)
    return out


def iter_homomorphisms(
    dom: Graph,
    cod: Graph,
    *,
    omega_injective: bool = False,
    injective: bool = False,
    unlabeled_to_unlabeled: bool = False,
    seed: Mapping[NodeId, NodeId] | None = None,
) -> Iterator[Homomorphism]:
    """Enumerate homomorphisms ``dom -> cod`` by backtracking.

    Labeled nodes are assigned first, starting from the label that is rarest
    in ``cod``; assigning a labeled node forces its successors.  Unlabeled
    nodes left unconstrained are enumerated last over all candidates.  The
    order is deterministic.
    """
    freq = Counter(cod.labels.values())
    by_label: dict[str, list[NodeId]] = {}
    for m in sorted(cod.labeled):
        by_label.setdefault(cod.labels[m], []).append(m)
    labeled_order = sorted(dom.labeled, key=lambda n: (freq[dom.labels[n]], n))
    free_order = sorted(dom.unlabeled)
    cod_all = cod.sorted_nodes()
    cod_unlabeled = sorted(cod.unlabeled)

    def bind(assign: dict, used: set, pairs) -> bool:
        work = list(pairs)
        while work:
            x, y = work.pop()
            if x in assign:
                if assign[x] != y:
                    return False
                continue
            if injective and y in used:
                return False
            if dom.is_labeled(x):
                if not cod.is_labeled(y) or cod.labels[y] != dom.labels[x]:
                    return False
                if omega_injective and y in used:
                    return False
                work.extend(zip(dom.successors[x], cod.successors[y]))
            elif unlabeled_to_unlabeled and cod.is_labeled(y):
                return False
            assign[x] = y
            if injective or (omega_injective and dom.is_labeled(x)):
                used.add(y)
        return True

    def free(assign: dict, used: set, k: int):
        while k < len(free_order) and free_order[k] in assign:
            k += 1
        if k == len(free_order):
            yield Homomorphism(dom, cod, assign)
            return
        n = free_order[k]
        for y in cod_unlabeled if unlabeled_to_unlabeled else cod_all:
            if injective and y in used:
                continue
            a = dict(assign)
            a[n] = y
            u = used | {y} if injective else used
            yield from free(a, u, k + 1)

    def search(assign: dict, used: set, k: int):
        while k < len(labeled_order) and labeled_order[k] in assign:
            k += 1
        if k == len(labeled_order):
            yield from free(assign, used, 0)
            return
        n = labeled_order[k]
        for y in by_label.get(dom.labels[n], ()):
            a, u = dict(assign), set(used)
            if bind(a, u, [(n, y)]):
                yield from search(a, u, k + 1)

    assign: dict[NodeId, NodeId] = {}
    used: set[NodeId] = set()
    if seed and not bind(assign, used, seed.items()):
        return
    yield from search(assign, used, 0)


def find_isomorphism(g: Graph, h: Graph) -> Homomorphism | None:
    """A bijective homomorphism ``g -> h`` whose inverse is a homomorphism, or None."""
    if (
        len(g.nodes) != len(h.nodes)
        or len(g.labeled) != len(h.labeled)
        or Counter(g.labels.values()) != Counter(h.labels.values())
    ):
        return None
    for iso in iter_homomorphisms(g, h, injective=True, unlabeled_to_unlabeled=True):
        return iso
    return None


def inverse(iso: Homomorphism) -> Homomorphism:
    return Homomorphism(iso.cod, iso.dom, {v: k for k, v in iso.map.items()})
