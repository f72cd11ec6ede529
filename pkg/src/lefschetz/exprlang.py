"""Text expression language for the variety catalog.

Grammar, with '+' for disjoint union and '*' for product, '*' binding
tighter, both left-associative::

    expr  := term ('+' term)*
    term  := atom ('*' atom)*
    atom  := '(' expr ')' | constructor
    constructor :=
        'point'
      | 'P' '(' INT ')'                      projective space
      | 'Q' '(' INT ')'                      smooth quadric
      | 'Gr' '(' INT ',' INT ')'             Grassmannian
      | 'toric' '[' INT (',' INT)* ']'       cone counts by dimension
      | 'blowup' '(' expr ';' expr ';' INT ')'
      | 'projbundle' '(' expr ';' INT ')'
      | 'M0' '(' INT ')'                     genus-zero moduli
      | 'fano' '(' INT ';' flag ')'
    flag  := ('odd_trivial' '=')? ('true' | 'false')

Syntax problems raise ParseError carrying the byte offset; out-of-range
parameters raise SemanticError carrying the node path (like ``$.right.center``)
so a caller can point at the offending subexpression.  ``render_expr`` is the
inverse of ``parse_expr`` up to whitespace.
"""

from __future__ import annotations

from dataclasses import dataclass

from .varieties import (
    Blowup,
    DisjointUnion,
    Fano3fold,
    Grassmannian,
    InvalidParameterError,
    ModuliM0,
    Point,
    Product,
    ProjBundle,
    Projective,
    Quadric,
    Toric,
    VarietyExpr,
)


class ParseError(ValueError):
    """Syntax error; ``offset`` is the byte position in the input."""

    def __init__(self, message: str, offset: int):
        super().__init__("syntax error at byte %d: %s" % (offset, message))
        self.offset = offset


class SemanticError(ValueError):
    """Parameter out of range; ``path`` points at the node, root is ``$``."""

    def __init__(self, message: str, path: str):
        super().__init__("semantic error at %s: %s" % (path, message))
        self.path = path


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


_PUNCT = set("()[],;*+=")


def _tokenize(text: str) -> list[Token]:
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("num", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(Token("name", text[i:j], i))
            i = j
            continue
        if ch in _PUNCT:
            toks.append(Token(ch, ch, i))
            i += 1
            continue
        raise ParseError("unexpected character %r" % ch, i)
    toks.append(Token("eof", "", n))
    return toks


class _Parser:
    """Recursive descent into a raw tuple tree; typing happens afterwards."""

    def __init__(self, toks: list[Token]):
        self.toks = toks
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def advance(self) -> Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            got = repr(tok.text) if tok.kind != "eof" else "end of input"
            raise ParseError("expected %s, got %s" % (what, got), tok.offset)
        return self.advance()

    def integer(self) -> int:
        return int(self.expect("num", "an integer").text)

    def expr(self):
        out = self.term()
        while self.peek().kind == "+":
            self.advance()
            out = ("+", out, self.term())
        return out

    def term(self):
        out = self.atom()
        while self.peek().kind == "*":
            self.advance()
            out = ("*", out, self.atom())
        return out

    def atom(self):
        tok = self.peek()
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")", "')'")
            return inner
        if tok.kind != "name":
            got = repr(tok.text) if tok.kind != "eof" else "end of input"
            raise ParseError("expected an expression, got %s" % got, tok.offset)
        self.advance()
        name = tok.text
        if name == "point":
            return ("point",)
        if name in ("P", "Q", "M0"):
            self.expect("(", "'('")
            value = self.integer()
            self.expect(")", "')'")
            return (name, value)
        if name == "Gr":
            self.expect("(", "'('")
            k = self.integer()
            self.expect(",", "','")
            n = self.integer()
            self.expect(")", "')'")
            return ("Gr", k, n)
        if name == "toric":
            self.expect("[", "'['")
            counts = [self.integer()]
            while self.peek().kind == ",":
                self.advance()
                counts.append(self.integer())
            self.expect("]", "']'")
            return ("toric", counts)
        if name == "blowup":
            self.expect("(", "'('")
            base = self.expr()
            self.expect(";", "';'")
            center = self.expr()
            self.expect(";", "';'")
            codim = self.integer()
            self.expect(")", "')'")
            return ("blowup", base, center, codim)
        if name == "projbundle":
            self.expect("(", "'('")
            base = self.expr()
            self.expect(";", "';'")
            rank = self.integer()
            self.expect(")", "')'")
            return ("projbundle", base, rank)
        if name == "fano":
            self.expect("(", "'('")
            b = self.integer()
            self.expect(";", "';'")
            flag_tok = self.expect("name", "'odd_trivial' or a boolean")
            if flag_tok.text == "odd_trivial":
                self.expect("=", "'='")
                flag_tok = self.expect("name", "'true' or 'false'")
            if flag_tok.text not in ("true", "false"):
                raise ParseError(
                    "expected 'true' or 'false', got %r" % flag_tok.text,
                    flag_tok.offset,
                )
            self.expect(")", "')'")
            return ("fano", b, flag_tok.text == "true")
        raise ParseError("unknown constructor %r" % name, tok.offset)


def _build(raw, path: str) -> VarietyExpr:
    head = raw[0]
    try:
        if head == "+":
            return DisjointUnion(
                _build(raw[1], path + ".left"), _build(raw[2], path + ".right")
            )
        if head == "*":
            return Product(
                _build(raw[1], path + ".left"), _build(raw[2], path + ".right")
            )
        if head == "point":
            return Point()
        if head == "P":
            return Projective(raw[1])
        if head == "Q":
            return Quadric(raw[1])
        if head == "Gr":
            return Grassmannian(raw[1], raw[2])
        if head == "toric":
            return Toric(tuple(raw[1]))
        if head == "blowup":
            return Blowup(
                _build(raw[1], path + ".base"),
                _build(raw[2], path + ".center"),
                raw[3],
            )
        if head == "projbundle":
            return ProjBundle(_build(raw[1], path + ".base"), raw[2])
        if head == "M0":
            return ModuliM0(raw[1])
        if head == "fano":
            return Fano3fold(raw[1], raw[2])
    except InvalidParameterError as exc:
        raise SemanticError(str(exc), path) from exc
    raise AssertionError("unreachable raw node %r" % (head,))


def parse_expr(text: str) -> VarietyExpr:
    """Parse a catalog expression; see the module docstring for the grammar."""
    parser = _Parser(_tokenize(text))
    raw = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "eof":
        raise ParseError(
            "unexpected trailing input %r" % trailing.text, trailing.offset
        )
    return _build(raw, "$")


def render_expr(e: VarietyExpr) -> str:
    """Canonical text for an expression; ``parse_expr`` inverts it exactly."""
    if isinstance(e, Point):
        return "point"
    if isinstance(e, Projective):
        return "P(%d)" % e.n
    if isinstance(e, Quadric):
        return "Q(%d)" % e.d
    if isinstance(e, Grassmannian):
        return "Gr(%d,%d)" % (e.k, e.n)
    if isinstance(e, Toric):
        return "toric[%s]" % ",".join(str(c) for c in e.cone_counts)
    if isinstance(e, Blowup):
        return "blowup(%s; %s; %d)" % (
            render_expr(e.base),
            render_expr(e.center),
            e.codim,
        )
    if isinstance(e, ProjBundle):
        return "projbundle(%s; %d)" % (render_expr(e.base), e.fiber_rank)
    if isinstance(e, ModuliM0):
        return "M0(%d)" % e.n
    if isinstance(e, Fano3fold):
        return "fano(%d; odd_trivial=%s)" % (
            e.b,
            "true" if e.odd_trivial else "false",
        )
    if isinstance(e, Product):
        left = render_expr(e.left)
        right = render_expr(e.right)
        if isinstance(e.left, DisjointUnion):
            left = "(%s)" % left
        if isinstance(e.right, (DisjointUnion, Product)):
            right = "(%s)" % right
        return "%s * %s" % (left, right)
    if isinstance(e, DisjointUnion):
        left = render_expr(e.left)
        right = render_expr(e.right)
        if isinstance(e.right, DisjointUnion):
            right = "(%s)" % right
        return "%s + %s" % (left, right)
    raise TypeError("unknown expression node %r" % type(e).__name__)
