"""Rewrite rules, matching, rewrite steps and a normalization driver.

An LRR rule (local redirection and replacement) is a span
``L <- D(L,E) -> R``: the left leg reconnects the disconnected edges ``E``
and ``rho`` decides where each disconnected edge points after the step.  A
step against an Omega-injective match ``mu: L -> U`` is a double pushout:
the left square is the edge disconnection of ``U`` along ``mu(E)`` and the
right square glues ``R`` onto it.

A GR step (global redirection) sends every edge targeting ``a`` to ``b``.
It is the double pushout of the fixed span ``P <- SW -> P``.

Node naming in step results: nodes of ``U`` keep their ids, nodes created
by ``R`` keep theirs (suffixed ``_k`` on clashes), and fresh disconnection
nodes never survive.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Optional

from .disconnect import DisconnectionResult, disconnect_edges, disconnect_hom, disconnect_node
from .errors import (
    BadRedirectTarget,
    DuplicateRule,
    FuelExhausted,
    HomomorphismError,
    MatchInvalid,
    NoSuchNode,
    RhoNotHom,
    UnknownRule,
    UnlabeledMappedToLabeled,
    UnlabeledMergedByRho,
)
from .graph import Edge, Graph, NodeId, Signature
from .morphism import Homomorphism, check_homomorphism, is_omega_injective, iter_homomorphisms
from .pushout import PushoutResult, Span, pushout, verify_pushout


@dataclass(frozen=True, eq=False)
class LrrRule:
    name: str
    lhs: Graph
    disconnect_set: frozenset[Edge]
    rhs: Graph
    rho: Homomorphism
    redirects: tuple[tuple[NodeId, NodeId], ...] = ()
    disconnection: DisconnectionResult = field(repr=False, default=None)

    @property
    def interface(self) -> Graph:
        """``D(L,E)``, the common source of both legs."""
        return self.rho.dom

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LrrRule):
            return NotImplemented
        return (
            self.name == other.name
            and self.lhs == other.lhs
            and self.disconnect_set == other.disconnect_set
            and self.rhs == other.rhs
            and self.rho.map == other.rho.map
            and self.redirects == other.redirects
        )

    def __hash__(self) -> int:
        return hash((self.name, self.lhs, self.rhs, self.disconnect_set))


def make_lrr_rule(
    lhs: Graph,
    disconnect_set: Iterable[Edge],
    rhs: Graph,
    rho: Mapping[NodeId, NodeId],
    redirects: Iterable[tuple[NodeId, NodeId]] = (),
    name: str = "rule",
) -> LrrRule:
    """Validate and assemble an LRR rule.

    ``rho`` maps nodes of ``D(L,E)`` to nodes of ``rhs``; nodes of ``lhs``
    missing from it map to the node of ``rhs`` with the same id.
    """
    es = frozenset(Edge(*e) for e in disconnect_set)
    dl = disconnect_edges(lhs, es)
    mapping = dict(rho)
    for n in lhs.nodes:
        mapping.setdefault(n, n)
    for n in sorted(dl.disconnected.nodes):
        if n not in mapping:
            raise RhoNotHom(f"rule {name}: rho has no image for {n!r}")
        if mapping[n] not in rhs.nodes:
            raise RhoNotHom(f"rule {name}: image {mapping[n]!r} of {n!r} is not a node of the right-hand side")

    seen: dict[NodeId, NodeId] = {}
    for x in sorted(lhs.unlabeled):
        y = mapping[x]
        if rhs.is_labeled(y):
            raise UnlabeledMappedToLabeled(f"rule {name}: unlabeled {x!r} is mapped to labeled {y!r}")
        if y in seen:
            raise UnlabeledMergedByRho(f"rule {name}: unlabeled {seen[y]!r} and {x!r} are both mapped to {y!r}")
        seen[y] = x

    try:
        rho_hom = check_homomorphism(dl.disconnected, rhs, mapping)
    except HomomorphismError as exc:
        raise RhoNotHom(f"rule {name}: {exc}") from exc

    pairs = tuple((a, b) for a, b in redirects)
    for a, b in pairs:
        for x in (a, b):
            if x not in rhs.nodes:
                raise BadRedirectTarget(f"rule {name}: redirect ({a},{b}) names {x!r}, not a node of the right-hand side")
    return LrrRule(name, lhs, es, rhs, rho_hom, pairs, dl)


@dataclass(frozen=True)
class Match:
    rule: object
    mu: Homomorphism


def find_lrr_matches(rule: LrrRule, u: Graph) -> list[Match]:
    """All Omega-injective homomorphisms from the rule's left-hand side into ``u``."""
    return [Match(rule, mu) for mu in iter_homomorphisms(rule.lhs, u, omega_injective=True)]


@dataclass(frozen=True)
class Square:
    """A span plus the two legs closing it."""

    span: Span
    psi1: Homomorphism
    psi2: Homomorphism

    def verify(self, **kw) -> bool:
        return verify_pushout(self.span, self.psi1, self.psi2, **kw)


@dataclass(frozen=True)
class StepResult:
    """Outcome of one rewrite step.

    ``nu`` and ``rho_prime`` are the legs of the right pushout and land in
    ``pushout.result``.  For rules carrying redirect pairs, ``result`` is the
    graph after the follow-up global redirections listed in ``redirects``.
    """

    result: Graph
    nu: Homomorphism
    rho_prime: Homomorphism
    left: Square
    right: Square
    pushout: PushoutResult = field(repr=False)
    source: Graph = field(repr=False)
    redirects: tuple["StepResult", ...] = ()
    redirect_pairs: tuple[tuple[NodeId, NodeId], ...] = ()

    def follow(self, u: NodeId) -> NodeId:
        """Where an external pointer to node ``u`` of the source points afterwards."""
        n = self.rho_prime(u)
        for a, b in self.redirect_pairs:
            if n == a:
                n = b
        return n


def _rewrite_name_key(u: Graph):
    # surviving nodes of U first, then right-hand side nodes, then fresh ones
    def key(x):
        side, n = x
        if side == 1:
            return (0 if n in u.nodes else 2, n)
        return (1, n)

    return key


def lrr_step(rule: LrrRule, match: Match | Homomorphism, *, require_omega_injective: bool = True) -> StepResult:
    """Apply ``rule`` at ``match``.

    With ``require_omega_injective=False`` a non-injective match is pushed
    through the construction; the right pushout then may not exist and
    :class:`NotStronglyLabeled` is raised.
    """
    mu = match.mu if isinstance(match, Match) else match
    if mu.dom != rule.lhs:
        raise MatchInvalid(f"match does not start at the left-hand side of rule {rule.name}")
    if require_omega_injective and not is_omega_injective(mu):
        raise MatchInvalid(f"match for rule {rule.name} is not injective on labeled nodes")
    u = mu.cod
    dl = rule.disconnection
    du = disconnect_edges(u, {mu.edge(e) for e in rule.disconnect_set})
    d_mu = disconnect_hom(mu, rule.disconnect_set, source=dl, target=du)

    right_span = Span(dl.disconnected, d_mu, rule.rho)
    po = pushout(right_span, name_key=_rewrite_name_key(u))
    left = Square(Span(dl.disconnected, dl.connection, d_mu), mu, du.connection)
    right = Square(right_span, po.left_leg, po.right_leg)
    if __debug__:
        assert right.verify(), "right square of an LRR step is not a pushout"

    result = po.result
    gr_steps = []
    pairs = []
    for x, y in rule.redirects:
        a, b = po.right_leg(x), po.right_leg(y)
        step = gr_step(result, a, b)
        gr_steps.append(step)
        pairs.append((a, b))
        result = step.result
    return StepResult(
        result, po.right_leg, po.left_leg, left, right, po, u, tuple(gr_steps), tuple(pairs)
    )


# -- global redirection -------------------------------------------------------

AR, PR, MR = "ar", "pr", "mr"


@dataclass(frozen=True)
class GrRule:
    """The fixed span ``P <- SW -> P`` of a global redirection."""

    p: Graph
    sw: Graph
    lam: Homomorphism
    rho: Homomorphism


def _gr_rule() -> GrRule:
    p = Graph({AR, PR})
    sw = Graph({AR, PR, MR})
    lam = check_homomorphism(sw, p, {AR: AR, MR: AR, PR: PR})
    rho = check_homomorphism(sw, p, {AR: AR, PR: PR, MR: PR})
    return GrRule(p, sw, lam, rho)


GR_RULE = _gr_rule()


def gr_step(u: Graph, a: NodeId, b: NodeId) -> StepResult:
    """Redirect every edge of ``u`` that targets ``a`` towards ``b``."""
    for x in (a, b):
        if x not in u.nodes:
            raise NoSuchNode(f"{x!r} is not a node")
    r = GR_RULE
    mu = check_homomorphism(r.p, u, {AR: a, PR: b})
    dbar = disconnect_node(u, a)
    dbar_mu = check_homomorphism(r.sw, dbar.disconnected, {AR: a, PR: b, MR: dbar.mr})

    right_span = Span(r.sw, dbar_mu, r.rho)
    po = pushout(right_span, name_key=_rewrite_name_key(u))
    left = Square(Span(r.sw, r.lam, dbar_mu), mu, dbar.connection)
    right = Square(right_span, po.left_leg, po.right_leg)
    if __debug__:
        assert right.verify(), "right square of a GR step is not a pushout"
    return StepResult(po.result, po.right_leg, po.left_leg, left, right, po, u)


# -- systems and normalization ------------------------------------------------


@dataclass(frozen=True)
class RewriteSystem:
    rules: tuple[LrrRule, ...] = ()
    signature: Signature = field(default_factory=Signature)
    fuel: int = 100
    trim_roots: Optional[tuple[NodeId, ...]] = None

    def __post_init__(self):
        names = [r.name for r in self.rules]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise DuplicateRule(f"duplicate rule names: {', '.join(dupes)}")

    def rule(self, name: str) -> LrrRule:
        for r in self.rules:
            if r.name == name:
                return r
        raise UnknownRule(f"no rule named {name!r}")


def apply_once(system: RewriteSystem, u: Graph) -> Optional[StepResult]:
    """Fire the first match of the first rule that has one."""
    for rule in system.rules:
        for mu in iter_homomorphisms(rule.lhs, u, omega_injective=True):
            return lrr_step(rule, mu)
    return None


@dataclass(frozen=True)
class Normalization:
    graph: Graph
    steps: tuple[StepResult, ...]
    roots: Optional[tuple[NodeId, ...]]


def normalize_trace(
    system: RewriteSystem,
    u: Graph,
    *,
    fuel: Optional[int] = None,
    roots: Optional[Sequence[NodeId]] = None,
) -> Normalization:
    """Rewrite until no rule matches.

    When roots are given (or the system has ``trim_roots``) the graph is
    trimmed to what is reachable from them after every step; roots follow
    the redirections performed by each step.  Raises
    :class:`FuelExhausted` if a rule still matches after ``fuel`` steps.
    """
    fuel = system.fuel if fuel is None else fuel
    if fuel < 0:
        raise ValueError("fuel must be non-negative")
    if roots is None and system.trim_roots is not None:
        roots = system.trim_roots
    roots = tuple(roots) if roots is not None else None
    g = trim(u, roots) if roots is not None else u
    steps: list[StepResult] = []
    while True:
        step = apply_once(system, g)
        if step is None:
            return Normalization(g, tuple(steps), roots)
        if len(steps) == fuel:
            raise FuelExhausted(g, len(steps))
        steps.append(step)
        g = step.result
        if roots is not None:
            roots = tuple(step.follow(r) for r in roots)
            g = trim(g, roots)


def normalize(system: RewriteSystem, u: Graph, **kw) -> Graph:
    return normalize_trace(system, u, **kw).graph


def reachable(g: Graph, roots: Iterable[NodeId]) -> set[NodeId]:
    seen: set[NodeId] = set()
    queue = deque()
    for r in roots:
        if r not in g.nodes:
            raise NoSuchNode(f"{r!r} is not a node")
        queue.append(r)
    while queue:
        n = queue.popleft()
        if n in seen:
            continue
        seen.add(n)
        queue.extend(g.succ(n))
    return seen


def trim(g: Graph, roots: Iterable[NodeId]) -> Graph:
    """The subgraph reachable from ``roots`` along successor edges."""
    keep = reachable(g, roots)
    return Graph(
        keep,
        {n: s for n, s in g.labels.items() if n in keep},
        {n: s for n, s in g.successors.items() if n in keep},
        g.signature,
    )
