"""Pushouts of graph spans.

Nodes of the two feet are tagged ``(1, id)`` for the left foot and
``(2, id)`` for the right foot; tuple ordering gives the fixed total order
used for class ids (left before right, then lexicographic).

The pushout of a span exists whenever the span is strongly labeled: inside
every equivalence class of the glued node set all labeled nodes agree on
their symbol and have class-wise equal successor strings.  The graph is
built on the set quotient; each labeled class takes its label and
successors from one chosen labeled member (the section).
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any, Optional

from .errors import DomainMismatch, InvalidSquare, NotStronglyLabeled
from .graph import Graph, NodeId
from .morphism import Homomorphism, check_homomorphism, is_homomorphism, iter_homomorphisms

Tagged = tuple[int, NodeId]

LABEL_CLASH = "LabelClash"
SUCCESSOR_CLASH = "SuccessorClash"


@dataclass(frozen=True)
class Span:
    apex: Graph
    left: Homomorphism
    right: Homomorphism

    def __post_init__(self):
        if self.left.dom != self.apex or self.right.dom != self.apex:
            raise DomainMismatch("both legs of a span must start at its apex")

    @classmethod
    def of(cls, left: Homomorphism, right: Homomorphism) -> "Span":
        return cls(left.dom, left, right)

    @property
    def g1(self) -> Graph:
        return self.left.cod

    @property
    def g2(self) -> Graph:
        return self.right.cod

    def foot(self, side: int) -> Graph:
        return self.g1 if side == 1 else self.g2


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # the smaller element stays the root, so roots are class minima
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass(frozen=True)
class QuotientWitness:
    """Partition of the disjoint union of the feet; a class id is its least member."""

    classes: Mapping[Tagged, frozenset[Tagged]]
    class_of: Mapping[Tagged, Tagged]

    def __len__(self) -> int:
        return len(self.classes)


def quotient(span: Span) -> QuotientWitness:
    uf = _UnionFind([(1, n) for n in span.g1.nodes] + [(2, n) for n in span.g2.nodes])
    for n0 in span.apex.nodes:
        uf.union((1, span.left(n0)), (2, span.right(n0)))
    class_of = {x: uf.find(x) for x in uf.parent}
    classes: dict[Tagged, set[Tagged]] = {}
    for x, c in class_of.items():
        classes.setdefault(c, set()).add(x)
    return QuotientWitness({c: frozenset(m) for c, m in sorted(classes.items())}, class_of)


@dataclass(frozen=True)
class StrongLabelDiagnostic:
    ok: bool
    offending_class: Optional[frozenset[Tagged]] = None
    conflict: Optional[tuple[Tagged, Tagged, str]] = None

    def __bool__(self) -> bool:
        return self.ok


def _labeled_members(span: Span, members: Iterable[Tagged]) -> list[Tagged]:
    return sorted(x for x in members if span.foot(x[0]).is_labeled(x[1]))


def is_strongly_labeled(span: Span, witness: QuotientWitness | None = None) -> StrongLabelDiagnostic:
    w = witness or quotient(span)
    for members in w.classes.values():
        labeled = _labeled_members(span, members)
        if len(labeled) < 2:
            continue
        first = labeled[0]
        g = span.foot(first[0])
        sym = g.labels[first[1]]
        succ = [w.class_of[(first[0], s)] for s in g.successors[first[1]]]
        for other in labeled[1:]:
            h = span.foot(other[0])
            if h.labels[other[1]] != sym:
                return StrongLabelDiagnostic(False, members, (first, other, LABEL_CLASH))
            if [w.class_of[(other[0], s)] for s in h.successors[other[1]]] != succ:
                return StrongLabelDiagnostic(False, members, (first, other, SUCCESSOR_CLASH))
    return StrongLabelDiagnostic(True)


def default_section(class_id: Tagged, labeled: Sequence[Tagged]) -> Tagged:
    """Prefer a right-foot representative, else the least left-foot one."""
    right = [x for x in labeled if x[0] == 2]
    return right[0] if right else labeled[0]


@dataclass(frozen=True)
class PushoutResult:
    result: Graph
    left_leg: Homomorphism
    right_leg: Homomorphism
    witness: QuotientWitness
    section: Mapping[Tagged, Tagged]
    names: Mapping[Tagged, NodeId] = field(repr=False)

    def node_of(self, x: Tagged) -> NodeId:
        return self.names[self.witness.class_of[x]]


def _assign_names(preferred: Mapping[Tagged, Tagged], key: Callable[[Tagged], Any]) -> dict[Tagged, NodeId]:
    order = sorted(preferred, key=lambda c: key(preferred[c]))
    names: dict[Tagged, NodeId] = {}
    taken: set[NodeId] = set()
    clashes = []
    for c in order:
        want = preferred[c][1]
        if want in taken:
            clashes.append(c)
        else:
            names[c] = want
            taken.add(want)
    for c in clashes:
        base = preferred[c][1]
        k = 1
        while f"{base}_{k}" in taken:
            k += 1
        names[c] = f"{base}_{k}"
        taken.add(names[c])
    return names


def pushout(
    span: Span,
    *,
    section: Callable[[Tagged, Sequence[Tagged]], Tagged] | None = None,
    name_key: Callable[[Tagged], Any] | None = None,
) -> PushoutResult:
    """Build the pushout of a strongly labeled span.

    ``section`` picks the labeled representative of each labeled class.
    ``name_key`` orders class members for naming: each result node is named
    after its class's least member under ``name_key``, and earlier classes
    win name clashes (the losers get a ``_k`` suffix).  Without it a labeled
    class is named after its representative and an unlabeled one after its
    class id.
    """
    w = quotient(span)
    diag = is_strongly_labeled(span, w)
    if not diag.ok:
        raise NotStronglyLabeled(diag)
    pick = section or default_section

    reps: dict[Tagged, Tagged] = {}
    for c, members in w.classes.items():
        labeled = _labeled_members(span, members)
        if labeled:
            rep = pick(c, labeled)
            if rep not in labeled:
                raise ValueError(f"section chose {rep}, which is not a labeled member of class {c}")
            reps[c] = rep

    if name_key is None:
        preferred = {c: reps.get(c, c) for c in w.classes}
        names = _assign_names(preferred, key=lambda x: x)
    else:
        preferred = {c: min(m, key=name_key) for c, m in w.classes.items()}
        names = _assign_names(preferred, key=name_key)

    labels: dict[NodeId, str] = {}
    succ: dict[NodeId, tuple[NodeId, ...]] = {}
    for c, (side, n) in reps.items():
        g = span.foot(side)
        labels[names[c]] = g.labels[n]
        succ[names[c]] = tuple(names[w.class_of[(side, s)]] for s in g.successors[n])
    g3 = Graph(names.values(), labels, succ, span.g1.signature.merge(span.g2.signature))

    legs = []
    for side in (1, 2):
        g = span.foot(side)
        mapping = {n: names[w.class_of[(side, n)]] for n in g.nodes}
        legs.append(check_homomorphism(g, g3, mapping) if __debug__ else Homomorphism(g, g3, mapping))
    return PushoutResult(g3, legs[0], legs[1], w, reps, names)


# -- verification -------------------------------------------------------------


def _check_square(span: Span, psi1: Homomorphism, psi2: Homomorphism) -> None:
    if psi1.dom != span.g1 or psi2.dom != span.g2:
        raise InvalidSquare("the legs must start at the feet of the span")
    if psi1.cod != psi2.cod:
        raise InvalidSquare("the legs must share a codomain")


def is_commutative(span: Span, psi1: Homomorphism, psi2: Homomorphism) -> bool:
    return all(psi1(span.left(n)) == psi2(span.right(n)) for n in span.apex.nodes)


def is_set_pushout(span: Span, psi1: Homomorphism, psi2: Homomorphism) -> bool:
    """The node square is isomorphic to the canonical quotient square."""
    w = quotient(span)
    legs = {1: psi1, 2: psi2}
    seen: dict[NodeId, Tagged] = {}
    for c, members in w.classes.items():
        images = {legs[side](n) for side, n in members}
        if len(images) != 1:
            return False
        (img,) = images
        if img in seen:
            return False
        seen[img] = c
    return seen.keys() == psi1.cod.nodes


def labeled_nodes_covered(psi1: Homomorphism, psi2: Homomorphism) -> bool:
    covered = {psi1(n) for n in psi1.dom.labeled} | {psi2(n) for n in psi2.dom.labeled}
    return psi1.cod.labeled <= covered


def verify_pushout(
    span: Span,
    psi1: Homomorphism,
    psi2: Homomorphism,
    *,
    cones: Iterable[tuple[Homomorphism, Homomorphism]] = (),
    bound: int = 8,
) -> bool:
    """Check that the square formed by ``span`` and the legs is a pushout.

    The structural test is: the square commutes, its node square is a
    pushout of sets, and every labeled corner node is hit by a labeled node
    of a foot.  Each cone in ``cones`` whose graphs have at most ``bound``
    nodes is additionally checked against the universal property by
    exhaustive search for mediating maps.
    """
    _check_square(span, psi1, psi2)
    if not (
        is_commutative(span, psi1, psi2)
        and is_set_pushout(span, psi1, psi2)
        and labeled_nodes_covered(psi1, psi2)
    ):
        return False
    for theta1, theta2 in cones:
        if len(psi1.cod) > bound or len(theta1.cod) > bound:
            continue
        if not is_commutative(span, theta1, theta2):
            continue
        if len(mediating_maps(psi1, psi2, theta1, theta2)) != 1:
            return False
    return True


def mediating_maps(
    psi1: Homomorphism, psi2: Homomorphism, theta1: Homomorphism, theta2: Homomorphism
) -> list[dict[NodeId, NodeId]]:
    """All homomorphisms ``m`` from the corner with ``m.psi_i = theta_i``, found by brute force.

    Every node map from the corner to the cone's tip that meets the
    commutation equations is tried and kept if it is a homomorphism.
    """
    g3, g4 = psi1.cod, theta1.cod
    forced: dict[NodeId, set[NodeId]] = {}
    for psi, theta in ((psi1, theta1), (psi2, theta2)):
        for n in psi.dom.nodes:
            forced.setdefault(psi(n), set()).add(theta(n))
    order = g3.sorted_nodes()
    choices = []
    for x in order:
        c = forced.get(x)
        if c is not None and len(c) > 1:
            return []
        choices.append(sorted(c) if c else g4.sorted_nodes())
    found = []
    for images in itertools.product(*choices):
        m = dict(zip(order, images))
        if not is_homomorphism(g3, g4, m):
            continue
        if all(m[psi(n)] == theta(n) for psi, theta in ((psi1, theta1), (psi2, theta2)) for n in psi.dom.nodes):
            found.append(m)
    return found


def candidate_cones(
    span: Span,
    tips: Iterable[Graph],
    *,
    per_leg: int = 24,
    limit: int = 64,
) -> list[tuple[Homomorphism, Homomorphism]]:
    """Commuting pairs ``(theta1, theta2)`` into each graph of ``tips``."""
    out = []
    for g4 in tips:
        lefts = list(itertools.islice(iter_homomorphisms(span.g1, g4), per_leg))
        rights = list(itertools.islice(iter_homomorphisms(span.g2, g4), per_leg))
        for t1 in lefts:
            for t2 in rights:
                if is_commutative(span, t1, t2):
                    out.append((t1, t2))
                    if len(out) >= limit:
                        return out
    return out


def cone_tips(corner: Graph) -> list[Graph]:
    """Cone tips derived from a corner graph: itself, and itself with spare nodes."""
    spare_unlabeled = "~u"
    labels = dict(corner.labels)
    succ = dict(corner.successors)
    tips = [corner, Graph(corner.nodes | {spare_unlabeled}, labels, succ, corner.signature)]
    # a copy of every labeled node, pointing where the original points
    copies = {n: f"~{n}" for n in corner.labeled}
    if copies:
        labels2 = dict(labels)
        succ2 = dict(succ)
        for n, c in copies.items():
            labels2[c] = labels[n]
            succ2[c] = succ[n]
        tips.append(Graph(corner.nodes | set(copies.values()), labels2, succ2, corner.signature))
    return tips

