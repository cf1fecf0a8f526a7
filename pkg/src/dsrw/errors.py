"""Exception hierarchy.

Every error raised by the library derives from :class:`DsrwError`; the CLI
prints ``type(exc).__name__`` as the machine-readable error name.
"""

from __future__ import annotations


class DsrwError(Exception):
    """Base class. ``line``/``col`` are filled in when the error comes from a parsed file."""

    line: int | None = None
    col: int | None = None

    def at(self, line: int, col: int) -> "DsrwError":
        self.line, self.col = line, col
        return self

    def __str__(self) -> str:
        msg = super().__str__()
        if self.line is not None:
            return f"{self.line}:{self.col}: {msg}"
        return msg


# graph construction


class GraphError(DsrwError):
    pass


class ArityMismatch(GraphError):
    pass


class InconsistentArity(GraphError):
    pass


class UnknownNode(GraphError):
    pass


class DuplicateNode(GraphError):
    pass


class NoSuchNode(GraphError):
    pass


class NoSuchEdge(GraphError):
    pass


class FreshIdCollision(GraphError):
    pass


# homomorphisms


class HomomorphismError(DsrwError):
    pass


class NotTotal(HomomorphismError):
    pass


class LabelNotPreserved(HomomorphismError):
    pass


class SuccessorNotPreserved(HomomorphismError):
    pass


class UnlabeledImageOfLabeled(HomomorphismError):
    pass


class DomainMismatch(HomomorphismError):
    pass


class InvalidHom(HomomorphismError):
    pass


# pushouts


class InvalidSquare(DsrwError):
    pass


class NotStronglyLabeled(DsrwError):
    def __init__(self, diagnostic):
        self.diagnostic = diagnostic
        a, b, reason = diagnostic.conflict
        super().__init__(f"{reason} between {a} and {b} in class {sorted(diagnostic.offending_class)}")


# rules and rewriting


class RuleError(DsrwError):
    pass


class RhoNotHom(RuleError):
    pass


class UnlabeledMappedToLabeled(RuleError):
    pass


class UnlabeledMergedByRho(RuleError):
    pass


class BadRedirectTarget(RuleError):
    pass


class DuplicateRule(RuleError):
    pass


class UnknownRule(RuleError):
    pass


class MatchInvalid(DsrwError):
    pass


class FuelExhausted(DsrwError):
    def __init__(self, graph, steps):
        self.graph = graph
        self.steps = steps
        super().__init__(f"fuel exhausted after {steps} steps")


class ParseError(DsrwError):
    pass


class NoMatch(DsrwError):
    pass
