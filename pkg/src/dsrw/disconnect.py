"""Edge and node disconnection.

``disconnect_edges(G, E)`` redirects every edge in ``E`` to its own fresh
unlabeled node, named ``source[index]``.  The connection homomorphism sends
each fresh node back to the edge's original target.  ``disconnect_node``
does the same for all incoming edges of one node at once, sharing a single
fresh node ``mr``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .errors import FreshIdCollision, InvalidHom, NoSuchNode
from .graph import Edge, Graph, NodeId
from .morphism import Homomorphism, check_homomorphism


def fresh_edge_id(edge: Edge) -> NodeId:
    return f"{edge[0]}[{edge[1]}]"


@dataclass(frozen=True)
class DisconnectionResult:
    disconnected: Graph
    fresh_nodes: Mapping[Edge, NodeId]
    connection: Homomorphism

    @property
    def original(self) -> Graph:
        return self.connection.cod


@dataclass(frozen=True)
class NodeDisconnectionResult:
    disconnected: Graph
    mr: NodeId
    connection: Homomorphism


def _edge_set(g: Graph, edges: Iterable) -> list[Edge]:
    out = sorted({Edge(*e) for e in edges})
    for e in out:
        g.target(e)  # raises NoSuchEdge
    return out


def disconnect_edges(g: Graph, edges: Iterable[Edge]) -> DisconnectionResult:
    es = _edge_set(g, edges)
    fresh = {e: fresh_edge_id(e) for e in es}
    for e, name in fresh.items():
        if name in g.nodes:
            raise FreshIdCollision(f"cannot disconnect {e}: a node named {name!r} already exists")
    succ = {n: list(s) for n, s in g.successors.items()}
    for (n, i), name in fresh.items():
        succ[n][i - 1] = name
    d = Graph(g.nodes | set(fresh.values()), g.labels, succ, g.signature)
    delta = {n: n for n in g.nodes}
    delta.update({name: g.target(e) for e, name in fresh.items()})
    return DisconnectionResult(d, fresh, check_homomorphism(d, g, delta))


def disconnect_hom(
    phi: Homomorphism,
    edges: Iterable[Edge],
    *,
    source: DisconnectionResult | None = None,
    target: DisconnectionResult | None = None,
) -> Homomorphism:
    """The disconnected homomorphism ``D(G,E) -> D(H, phi(E))``.

    ``phi(E)`` is the set image, so edges merged by ``phi`` share one fresh
    target in the codomain.  Precomputed disconnections can be passed in to
    avoid rebuilding them.
    """
    es = _edge_set(phi.dom, edges)
    if source is None:
        source = disconnect_edges(phi.dom, es)
    if target is None:
        target = disconnect_edges(phi.cod, {phi.edge(e) for e in es})
    # an edge left connected must not share its image with a disconnected one
    for e in phi.dom.edges():
        if e not in es and phi.edge(e) in target.fresh_nodes:
            raise InvalidHom(
                f"edge {e} is kept but its image {phi.edge(e)} is disconnected; "
                "the map is not injective enough on labeled nodes for this edge set"
            )
    mapping = dict(phi.map)
    for e in es:
        image = phi.edge(e)
        if image not in target.fresh_nodes:
            raise InvalidHom(f"target disconnection does not contain the image {image} of {e}")
        mapping[source.fresh_nodes[e]] = target.fresh_nodes[image]
    return check_homomorphism(source.disconnected, target.disconnected, mapping)


def fresh_node_id(g: Graph, base: str = "mr") -> NodeId:
    if base not in g.nodes:
        return base
    k = 1
    while f"{base}_{k}" in g.nodes:
        k += 1
    return f"{base}_{k}"


def disconnect_node(g: Graph, o: NodeId) -> NodeDisconnectionResult:
    if o not in g.nodes:
        raise NoSuchNode(f"{o!r} is not a node")
    mr = fresh_node_id(g)
    succ = {n: tuple(mr if t == o else t for t in s) for n, s in g.successors.items()}
    d = Graph(g.nodes | {mr}, g.labels, succ, g.signature)
    delta = {n: n for n in g.nodes}
    delta[mr] = o
    return NodeDisconnectionResult(d, mr, check_homomorphism(d, g, delta))

