"""Parsing of polynomial expressions and ordering specifications."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .core import QQ, Polynomial, render_rational
from .orderings import (LinearForm, NewtonOrdering, OrderingError, SemigroupOrdering,
                        weighted_global, weighted_local)


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line, self.column = line, col


@dataclass
class Token:
    kind: str  # num, name, op, end
    text: str
    pos: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def tokenize(text: str) -> list[Token]:
    text = text.replace("−", "-")
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text[pos:]) - len(text[pos:].lstrip()) + pos
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        start = m.start(m.lastindex)
        kind = ("num", "name", "op")[m.lastindex - 1]
        value = m.group(m.lastindex)
        tokens.append(Token(kind, "^" if value == "**" else value, start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _PolyParser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text.replace("−", "-")
        self.names = {v: i for i, v in enumerate(names)}
        self.n = len(names)
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok.pos)

    def parse(self) -> Polynomial:
        if self.peek().kind == "end":
            self.error("empty expression")
        p = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            if tok.kind in ("num", "name") or tok.text == "(":
                self.error(f"expected an operator before {tok.text!r} (use '*' to multiply)")
            self.error(f"unexpected {tok.text!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            op = self.take().text
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek().kind == "op" and self.peek().text in ("*", "/"):
            op = self.take()
            q = self.unary()
            if op.text == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    self.error("division is only allowed by nonzero constants", op)
                p = p.scale(1 / q.coefficient((0,) * self.n))
        return p

    def unary(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "op" and tok.text in ("+", "-"):
            self.take()
            p = self.unary()
            return -p if tok.text == "-" else p
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            tok = self.peek()
            if tok.kind == "op" and tok.text == "-":
                self.error("negative exponent", tok)
            if tok.kind == "op" and tok.text == "(":
                e = self.atom()
                if not e.is_constant() or e.coefficient((0,) * self.n).denominator != 1:
                    self.error("exponent must be a nonnegative integer", tok)
                k = int(e.coefficient((0,) * self.n))
                if k < 0:
                    self.error("negative exponent", tok)
            elif tok.kind == "num":
                self.take()
                k = int(tok.text)
            else:
                self.error("exponent must be a nonnegative integer", tok)
            if self.peek().kind == "op" and self.peek().text == "^":
                self.error("chained exponents are ambiguous; use parentheses")
            return base ** k
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        if tok.kind == "num":
            return Polynomial.constant(self.n, int(tok.text))
        if tok.kind == "name":
            if tok.text not in self.names:
                self.error(f"unknown variable {tok.text!r}", tok)
            return Polynomial.variable(self.n, self.names[tok.text])
        if tok.kind == "op" and tok.text == "(":
            p = self.expr()
            close = self.take()
            if close.text != ")":
                self.error("expected ')'", close)
            return p
        if tok.kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected {tok.text!r}", tok)


def parse_polynomial(text: str, names: Sequence[str]) -> Polynomial:
    """Parse an infix expression with explicit ``*`` over the given variables."""
    return _PolyParser(text, list(names)).parse()


def infer_variables(texts: Sequence[str]) -> list[str]:
    """Identifiers in order of first appearance."""
    seen: list[str] = []
    for t in texts:
        for tok in tokenize(t):
            if tok.kind == "name" and tok.text not in seen:
                seen.append(tok.text)
    return seen


# -- orderings -----------------------------------------------------------------

def _rationals(text: str, spec: str) -> list:
    items = [s.strip() for s in text.split(",") if s.strip()]
    try:
        return [QQ(s) for s in items]
    except ValueError as exc:
        raise ParseError(f"bad number in ordering {spec!r}", spec, 0) from exc


def _nested_vectors(text: str, spec: str) -> list[list]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError("forms must look like [[a,b],[c,d]]", spec, 0)
    inner = text[1:-1].strip()
    vecs = re.findall(r"\[([^\[\]]*)\]", inner)
    if not vecs or re.sub(r"\[[^\[\]]*\]", "", inner).strip(" ,"):
        raise ParseError("forms must look like [[a,b],[c,d]]", spec, 0)
    return [_rationals(v, spec) for v in vecs]


def parse_ordering(spec: str, nvars: int):
    """Parse ``ds``, ``dp``, ``lp``, ``ws(..)``, ``wp(..)``, ``weighted(..;tie=..)``
    or ``newton:forms=[[..],..];delta=[..];tie=..``."""
    s = spec.strip()
    try:
        if s in ("ds", "dp"):
            return SemigroupOrdering(s, nvars)
        if s in ("lp", "lex"):
            return SemigroupOrdering("lex", nvars)
        m = re.fullmatch(r"(ws|wp)\(([^()]*)\)", s)
        if m:
            w = _rationals(m.group(2), spec)
            if len(w) != nvars or any(x <= 0 for x in w):
                raise ParseError(f"{m.group(1)} needs {nvars} positive weights", spec, 0)
            return weighted_local(w) if m.group(1) == "ws" else weighted_global(w)
        m = re.fullmatch(r"weighted\(([^;()]*);tie=(.*)\)", s)
        if m:
            w = _rationals(m.group(1), spec)
            if len(w) != nvars:
                raise ParseError(f"weighted ordering needs {nvars} weights", spec, 0)
            return SemigroupOrdering("weighted", nvars, tuple(w), parse_ordering(m.group(2), nvars))
        if s.startswith("newton:"):
            fields = {}
            for part in s[len("newton:"):].split(";"):
                if not part.strip():
                    continue
                if "=" not in part:
                    raise ParseError(f"expected key=value in {part!r}", spec, s.find(part))
                k, v = part.split("=", 1)
                fields[k.strip()] = v.strip()
            unknown = set(fields) - {"forms", "delta", "tie"}
            if unknown or "forms" not in fields:
                raise ParseError("newton ordering needs forms=... (and optionally delta, tie)",
                                 spec, 0)
            forms = _nested_vectors(fields["forms"], spec)
            if any(len(f) != nvars for f in forms):
                raise ParseError(f"each form needs {nvars} coefficients", spec, 0)
            if "delta" in fields:
                d = fields["delta"].strip()
                if not (d.startswith("[") and d.endswith("]")):
                    raise ParseError("delta must look like [a,b]", spec, 0)
                delta = _rationals(d[1:-1], spec)
            else:
                delta = [QQ(0)] * nvars
            if len(delta) != nvars:
                raise ParseError(f"delta needs {nvars} entries", spec, 0)
            tie = parse_ordering(fields["tie"], nvars) if "tie" in fields else None
            return NewtonOrdering(tuple(LinearForm(tuple(f)) for f in forms), tuple(delta), tie)
    except OrderingError as exc:
        raise ParseError(str(exc), spec, 0) from exc
    raise ParseError(f"unknown ordering {spec!r}", spec, 0)


def render_ordering(o) -> str:
    if isinstance(o, SemigroupOrdering) and o.kind == "weighted":
        tb = o.tiebreak
        if all(w < 0 for w in o.weights) and tb == SemigroupOrdering("ds", o.nvars):
            return "ws(" + ",".join(render_rational(-w) for w in o.weights) + ")"
        if all(w > 0 for w in o.weights) and tb == SemigroupOrdering("dp", o.nvars):
            return "wp(" + ",".join(render_rational(w) for w in o.weights) + ")"
    if isinstance(o, NewtonOrdering):
        forms = ",".join(l.render() for l in o.forms)
        delta = ",".join(render_rational(x) for x in o.shift)
        return f"newton:forms=[{forms}];delta=[{delta}];tie={render_ordering(o.tiebreak)}"
    if isinstance(o, SemigroupOrdering) and o.kind == "weighted":
        w = ",".join(render_rational(x) for x in o.weights)
        return f"weighted({w};tie={render_ordering(o.tiebreak)})"
    return o.render()
