"""Ordered, partially labeled graphs.

A graph has a set of nodes, some of which carry an operation symbol.  A
labeled node has exactly ``arity(symbol)`` ordered successors; unlabeled
nodes have none and behave as placeholders.  Successor positions are
1-based at every public interface.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from types import MappingProxyType
from typing import NamedTuple, Optional, Sequence

from .errors import (
    ArityMismatch,
    DuplicateNode,
    InconsistentArity,
    NoSuchEdge,
    NoSuchNode,
    UnknownNode,
)

NodeId = str


class Signature(Mapping):
    """Immutable map from operation symbol to arity."""

    __slots__ = ("_arities",)

    def __init__(self, arities: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        table: dict[str, int] = {}
        items = arities.items() if isinstance(arities, Mapping) else arities
        for sym, ar in items:
            if not isinstance(ar, int) or ar < 0:
                raise InconsistentArity(f"arity of {sym!r} must be a non-negative integer, got {ar!r}")
            if table.get(sym, ar) != ar:
                raise InconsistentArity(f"{sym!r} declared with arities {table[sym]} and {ar}")
            table[sym] = ar
        self._arities = table

    def __getitem__(self, sym: str) -> int:
        return self._arities[sym]

    def __iter__(self):
        return iter(self._arities)

    def __len__(self) -> int:
        return len(self._arities)

    def __hash__(self) -> int:
        return hash(frozenset(self._arities.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{s}/{a}" for s, a in sorted(self._arities.items()))
        return f"Signature({body})"

    def extend(self, sym: str, arity: int) -> "Signature":
        if sym in self._arities:
            if self._arities[sym] != arity:
                raise InconsistentArity(f"{sym!r} has arity {self._arities[sym]}, not {arity}")
            return self
        return Signature({**self._arities, sym: arity})

    def merge(self, other: Mapping[str, int]) -> "Signature":
        return Signature(list(self.items()) + list(other.items()))


class Edge(NamedTuple):
    """Argument position ``index`` (1-based) of the labeled node ``source``."""

    source: NodeId
    index: int

    def __str__(self) -> str:
        return f"({self.source},{self.index})"


class Graph:
    """An immutable ordered, partially labeled graph.

    Equality and hashing look at nodes, labels and successor strings only;
    the attached signature is bookkeeping.
    """

    __slots__ = ("_nodes", "_labels", "_succ", "_signature", "_hash")

    def __init__(
        self,
        nodes: Iterable[NodeId],
        labels: Mapping[NodeId, str] | None = None,
        successors: Mapping[NodeId, Sequence[NodeId]] | None = None,
        signature: Mapping[str, int] | None = None,
    ):
        self._nodes = frozenset(nodes)
        labels = dict(labels or {})
        successors = {n: tuple(s) for n, s in (successors or {}).items()}
        sig = signature if isinstance(signature, Signature) else Signature(signature or {})

        for n in labels:
            if n not in self._nodes:
                raise UnknownNode(f"labeled node {n!r} is not a node of the graph")
        for n, succ in successors.items():
            if n not in labels:
                if n in self._nodes:
                    raise ArityMismatch(f"unlabeled node {n!r} cannot have successors")
                raise UnknownNode(f"node {n!r} is not a node of the graph")
            for t in succ:
                if t not in self._nodes:
                    raise UnknownNode(f"successor {t!r} of {n!r} is not a node of the graph")
        for n, sym in labels.items():
            succ = successors.setdefault(n, ())
            if sym in sig:
                if sig[sym] != len(succ):
                    raise ArityMismatch(
                        f"node {n!r}: {sym} has arity {sig[sym]} but {len(succ)} successors were given"
                    )
            else:
                sig = sig.extend(sym, len(succ))

        self._labels = MappingProxyType(labels)
        self._succ = MappingProxyType(successors)
        self._signature = sig
        self._hash = None

    # -- accessors ---------------------------------------------------------

    @property
    def nodes(self) -> frozenset[NodeId]:
        return self._nodes

    @property
    def labeled(self) -> frozenset[NodeId]:
        return frozenset(self._labels)

    @property
    def unlabeled(self) -> frozenset[NodeId]:
        return self._nodes - self._labels.keys()

    @property
    def labels(self) -> Mapping[NodeId, str]:
        return self._labels

    @property
    def successors(self) -> Mapping[NodeId, tuple[NodeId, ...]]:
        return self._succ

    @property
    def signature(self) -> Signature:
        return self._signature

    def is_labeled(self, n: NodeId) -> bool:
        return n in self._labels

    def label(self, n: NodeId) -> Optional[str]:
        self._require(n)
        return self._labels.get(n)

    def succ(self, n: NodeId) -> tuple[NodeId, ...]:
        """Successor string of ``n``; empty for unlabeled nodes."""
        self._require(n)
        return self._succ.get(n, ())

    def arity(self, n: NodeId) -> int:
        return len(self.succ(n))

    def target(self, edge: Edge) -> NodeId:
        n, i = edge
        succ = self._succ.get(n)
        if succ is None or not 1 <= i <= len(succ):
            raise NoSuchEdge(f"{Edge(n, i)} is not an edge")
        return succ[i - 1]

    def edges(self) -> list[Edge]:
        """All edges, sorted by source id then position."""
        return [Edge(n, i) for n in sorted(self._succ) for i in range(1, len(self._succ[n]) + 1)]

    def sorted_nodes(self) -> list[NodeId]:
        return sorted(self._nodes)

    def _require(self, n: NodeId) -> None:
        if n not in self._nodes:
            raise NoSuchNode(f"{n!r} is not a node")

    # -- value semantics ---------------------------------------------------

    def _key(self):
        return (self._nodes, frozenset(self._labels.items()), frozenset(self._succ.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self is other or self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __len__(self) -> int:
        return len(self._nodes)

    def __contains__(self, n: object) -> bool:
        return n in self._nodes

    def __repr__(self) -> str:
        parts = []
        for n in self.sorted_nodes():
            if n in self._labels:
                parts.append(f"{n}:{self._labels[n]}({','.join(self._succ[n])})")
            else:
                parts.append(f"{n}:.")
        return "Graph{" + " ".join(parts) + "}"

    def with_signature(self, signature: Mapping[str, int]) -> "Graph":
        return Graph(self._nodes, self._labels, self._succ, self._signature.merge(signature))


def build_graph(
    declarations: Iterable[tuple[NodeId, Optional[str], Optional[Sequence[NodeId]]]],
    signature: Mapping[str, int] | None = None,
) -> Graph:
    """Build a graph from ``(id, symbol, successors)`` declarations.

    ``symbol`` is None for unlabeled nodes.  Arities missing from
    ``signature`` are inferred from first use.
    """
    nodes: list[NodeId] = []
    seen: set[NodeId] = set()
    labels: dict[NodeId, str] = {}
    succ: dict[NodeId, tuple[NodeId, ...]] = {}
    sig = signature if isinstance(signature, Signature) else Signature(signature or {})
    for node, sym, args in declarations:
        if node in seen:
            raise DuplicateNode(f"node {node!r} declared twice")
        seen.add(node)
        nodes.append(node)
        if sym is None:
            if args:
                raise ArityMismatch(f"unlabeled node {node!r} cannot have successors")
            continue
        args = tuple(args or ())
        if sym in sig and sig[sym] != len(args):
            raise ArityMismatch(f"node {node!r}: {sym} has arity {sig[sym]} but {len(args)} successors were given")
        sig = sig.extend(sym, len(args))
        labels[node] = sym
        succ[node] = args
    return Graph(nodes, labels, succ, sig)


def edges(g: Graph) -> list[Edge]:
    return g.edges()


def is_disconnected_edge(g: Graph, e: Edge) -> bool:
    """True iff the target of ``e`` is unlabeled."""
    return not g.is_labeled(g.target(Edge(*e)))
