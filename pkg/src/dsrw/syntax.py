"""Text formats for graphs and rule systems.

Graph documents::

    graph G {
      m: f(n, o)
      n: .
    }

``.`` (or ``•``) declares an unlabeled node; constants are written ``c()``.
Rule files hold ``rule`` blocks plus optional ``fuel N`` and
``trim a, b`` directives::

    rule add1 {
      lhs { n: add(o, m)  m: cons(p, m)  o: .  p: . }
      disconnect { (m,2) }
      rhs { ... }
      rho { m[2] -> q }
      redirect { (m,q) }
    }

Omitted ``rho`` entries map a node to the right-hand-side node with the same
id; every fresh node ``n[i]`` needs an explicit entry.  ``//`` starts a
comment.  Arities are inferred on first use and shared by all graphs of one
file.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .disconnect import fresh_edge_id
from . import errors
from .errors import DsrwError, ParseError
from .graph import Edge, Graph, NodeId, Signature, build_graph
from .rewrite import LrrRule, RewriteSystem, make_lrr_rule

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|//[^\n]*)
  | (?P<arrow>->)
  | (?P<ident>[A-Za-z0-9_#'$+*]+(?:\[\d+\])*)
  | (?P<punct>[{}():,.•])
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}").at(line, pos - line_start + 1)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        if "\n" in chunk:
            line += chunk.count("\n")
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    out.append(Token("eof", "", line, pos - line_start + 1))
    return out


@dataclass
class Declaration:
    node: NodeId
    symbol: Optional[str]
    args: tuple[NodeId, ...]
    line: int
    col: int


@dataclass
class GraphDocument:
    name: str
    declarations: list[Declaration]
    graph: Graph = field(repr=False)


class _Parser:
    def __init__(self, text: str, signature: Signature | None = None):
        self.toks = tokenize(text)
        self.i = 0
        self.signature = signature or Signature()

    # -- token helpers --

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None) -> ParseError:
        t = tok or self.tok
        return ParseError(msg).at(t.line, t.col)

    def take(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind == "eof":
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.take()

    def ident(self, what: str = "identifier") -> Token:
        if self.tok.kind != "ident":
            found = self.tok.text or "end of input"
            raise self.error(f"expected {what}, found {found!r}")
        return self.take()

    def integer(self) -> int:
        t = self.ident("integer")
        if not t.text.isdigit():
            raise self.error(f"expected integer, found {t.text!r}", t)
        return int(t.text)

    def skip_comma(self) -> None:
        if self.tok.text == ",":
            self.take()

    # -- graphs --

    def declarations(self) -> list[Declaration]:
        decls = []
        while self.tok.kind == "ident":
            node = self.take()
            self.expect(":")
            if self.tok.text in (".", "•"):
                self.take()
                decls.append(Declaration(node.text, None, (), node.line, node.col))
                continue
            sym = self.ident("symbol or '.'")
            if "[" in sym.text:
                raise self.error(f"symbol {sym.text!r} may not contain brackets", sym)
            self.expect("(")
            args = []
            if self.tok.text != ")":
                args.append(self.ident("node").text)
                while self.tok.text == ",":
                    self.take()
                    args.append(self.ident("node").text)
            self.expect(")")
            decls.append(Declaration(node.text, sym.text, tuple(args), node.line, node.col))
        return decls

    def build(self, decls: list[Declaration]) -> Graph:
        seen = set()
        for d in decls:
            if d.node in seen:
                raise self._located(f"node {d.node!r} declared twice", d, "DuplicateNode")
            seen.add(d.node)
        for d in decls:
            for a in d.args:
                if a not in seen:
                    raise self._located(f"successor {a!r} of {d.node!r} is not declared", d, "UnknownNode")
        sig = self.signature
        for d in decls:
            if d.symbol is None:
                continue
            try:
                sig = sig.extend(d.symbol, len(d.args))
            except DsrwError as exc:
                raise self._located(
                    f"node {d.node!r}: {d.symbol} has arity {sig[d.symbol]}, not {len(d.args)}", d, "ArityMismatch"
                ) from exc
        self.signature = sig
        return build_graph(((d.node, d.symbol, d.args) for d in decls), sig)

    @staticmethod
    def _located(msg: str, d: Declaration, kind: str) -> DsrwError:
        return getattr(errors, kind)(msg).at(d.line, d.col)

    def graph_block(self) -> Graph:
        self.expect("{")
        decls = self.declarations()
        self.expect("}")
        return self.build(decls)

    def graph_document(self) -> GraphDocument:
        self.expect("graph")
        name = self.ident("graph name").text
        self.expect("{")
        decls = self.declarations()
        self.expect("}")
        g = self.build(decls)
        return GraphDocument(name, decls, g)

    # -- rules --

    def rule(self) -> LrrRule:
        start = self.expect("rule")
        name = self.ident("rule name").text
        self.expect("{")
        parts: dict[str, object] = {}
        while self.tok.text != "}":
            key = self.ident("section name")
            if key.text in parts:
                raise self.error(f"duplicate section {key.text!r} in rule {name}", key)
            if key.text in ("lhs", "rhs"):
                parts[key.text] = self.graph_block()
            elif key.text == "disconnect":
                parts[key.text] = self.pairs(second_int=True)
            elif key.text == "redirect":
                parts[key.text] = self.pairs(second_int=False)
            elif key.text == "rho":
                parts[key.text] = self.rho_block()
            else:
                raise self.error(f"unknown section {key.text!r}", key)
        self.expect("}")
        for required in ("lhs", "rhs"):
            if required not in parts:
                raise self.error(f"rule {name} has no {required} block", start)
        edges = [Edge(*p) for p in parts.get("disconnect", [])]
        rho, rho_pos = parts.get("rho", ({}, {}))
        lhs = parts["lhs"]
        for e in edges:
            fresh = fresh_edge_id(e)
            if fresh not in rho:
                raise self.error(f"rule {name}: rho must give an explicit image for fresh node {fresh}", start)
        for src, (line, col) in rho_pos.items():
            if src not in lhs.nodes and src not in {fresh_edge_id(e) for e in edges}:
                raise ParseError(f"rule {name}: rho maps {src!r}, which is not a node of D(lhs)").at(line, col)
        try:
            return make_lrr_rule(lhs, edges, parts["rhs"], rho, parts.get("redirect", []), name=name)
        except DsrwError as exc:
            if exc.line is None:
                exc.at(start.line, start.col)
            raise

    def pairs(self, second_int: bool) -> list[tuple]:
        self.expect("{")
        out = []
        while self.tok.text == "(":
            self.take()
            a = self.ident("node").text
            self.expect(",")
            b = self.integer() if second_int else self.ident("node").text
            self.expect(")")
            out.append((a, b))
            self.skip_comma()
        self.expect("}")
        return out

    def rho_block(self):
        self.expect("{")
        rho: dict[str, str] = {}
        pos: dict[str, tuple[int, int]] = {}
        while self.tok.kind == "ident":
            src = self.take()
            self.expect("->")
            dst = self.ident("node")
            if src.text in rho:
                raise self.error(f"rho maps {src.text!r} twice", src)
            rho[src.text] = dst.text
            pos[src.text] = (src.line, src.col)
            self.skip_comma()
        self.expect("}")
        return rho, pos

    def system(self) -> RewriteSystem:
        rules = []
        fuel = None
        trim = None
        while self.tok.kind != "eof":
            t = self.tok
            if t.text == "rule":
                rules.append(self.rule())
            elif t.text == "fuel":
                self.take()
                fuel = self.integer()
            elif t.text == "trim":
                self.take()
                trim = [self.ident("node").text]
                while self.tok.text == ",":
                    self.take()
                    trim.append(self.ident("node").text)
            else:
                raise self.error(f"expected 'rule', 'fuel' or 'trim', found {t.text!r}")
        kw = {} if fuel is None else {"fuel": fuel}
        try:
            return RewriteSystem(tuple(rules), self.signature, trim_roots=tuple(trim) if trim else None, **kw)
        except DsrwError as exc:
            raise exc.at(self.tok.line, self.tok.col)


def parse_graph_document(text: str, signature: Signature | None = None) -> GraphDocument:
    p = _Parser(text, signature)
    doc = p.graph_document()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r} after graph")
    return doc


def parse_graph(text: str, signature: Signature | None = None) -> Graph:
    return parse_graph_document(text, signature).graph


def parse_rules(text: str, signature: Signature | None = None) -> RewriteSystem:
    return _Parser(text, signature).system()


# -- serialization ------------------------------------------------------------


def _decl(g: Graph, n: NodeId) -> str:
    if g.is_labeled(n):
        return f"{n}: {g.labels[n]}({', '.join(g.successors[n])})"
    return f"{n}: ."


def _block(g: Graph, indent: str) -> list[str]:
    return [indent + _decl(g, n) for n in g.sorted_nodes()]


def serialize_graph(g: Graph, name: str = "G") -> str:
    return "\n".join([f"graph {name} {{", *_block(g, "  "), "}"]) + "\n"


def serialize_rule(rule: LrrRule) -> str:
    lines = [f"rule {rule.name} {{", "  lhs {", *_block(rule.lhs, "    "), "  }"]
    if rule.disconnect_set:
        lines.append("  disconnect { " + " ".join(f"({n},{i})" for n, i in sorted(rule.disconnect_set)) + " }")
    lines += ["  rhs {", *_block(rule.rhs, "    "), "  }"]
    fresh = {fresh_edge_id(e) for e in rule.disconnect_set}
    entries = [f"{a} -> {b}" for a, b in sorted(rule.rho.map.items()) if a != b or a in fresh]
    if entries:
        lines.append("  rho { " + ", ".join(entries) + " }")
    if rule.redirects:
        lines.append("  redirect { " + " ".join(f"({a},{b})" for a, b in rule.redirects) + " }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def serialize_rules(system: RewriteSystem) -> str:
    head = [f"fuel {system.fuel}"]
    if system.trim_roots:
        head.append("trim " + ", ".join(system.trim_roots))
    return "\n".join(head) + "\n\n" + "\n".join(serialize_rule(r) for r in system.rules)
