"""Text syntax for X-forms.

Grammar, loosest to tightest binding::

    xform := next
    next  := or  ( "->" or  )*
    or    := and ( "+"  and )*
    and   := unary ( "." unary )*
    unary := "!" unary | atom
    atom  := BITS | "(" xform ")"
    BITS  := "#" [01]+

Binary operators associate to the left. ``#!`` starts a comment that runs to
the end of the line, so ``.xf`` files can be parsed directly. Error offsets are
byte offsets into the UTF-8 encoding of the source.
"""

import re

from .errors import DimensionMismatch, FormSyntaxError, KindError, WidthError
from .expr import And, Leaf, Next, Not, Or
from .pattern import BasePattern

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#![^\n]*)
  | (?P<bits>\#[01]+)
  | (?P<arrow>->)
  | (?P<op>[+.!()])
    """,
    re.VERBOSE,
)

MAX_NESTING = 100

_PREC = {Next: 1, Or: 2, And: 3, Not: 4, Leaf: 5}
_GLYPH = {Next: " -> ", Or: " + ", And: " . "}


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos


def _tokenize(src):
    tokens = []
    pos = 0
    n = len(src)
    while pos < n:
        m = _TOKEN.match(src, pos)
        if m is None:
            if src[pos] == "#":
                raise FormSyntaxError("'#' must be followed by binary digits", pos)
            raise FormSyntaxError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup
        if kind == "bits":
            tokens.append(_Token("bits", m.group(), pos))
        elif kind in ("arrow", "op"):
            tokens.append(_Token(m.group(), m.group(), pos))
        pos = m.end()
    tokens.append(_Token("eof", "", n))
    return tokens


class _Parser:
    def __init__(self, src, expected_dim):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0
        self.dim = expected_dim
        self.nesting = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind):
        if self.tok.kind != kind:
            raise FormSyntaxError(f"expected {kind!r}, found {self._describe(self.tok)}", self.tok.pos)
        return self.advance()

    @staticmethod
    def _describe(tok):
        return "end of input" if tok.kind == "eof" else repr(tok.text)

    def parse(self):
        if self.tok.kind == "eof":
            raise FormSyntaxError("empty form", self.tok.pos)
        e = self.parse_next()
        if self.tok.kind != "eof":
            raise FormSyntaxError(f"unexpected {self._describe(self.tok)}", self.tok.pos)
        return e

    def _build(self, cls, pos, *args):
        try:
            return cls(*args)
        except KindError as exc:
            raise KindError(exc.message, pos) from None
        except DimensionMismatch as exc:
            raise WidthError(str(exc), pos) from None

    def parse_next(self):
        e = self.parse_or()
        while self.tok.kind == "->":
            pos = self.advance().pos
            e = self._build(Next, pos, e, self.parse_or())
        return e

    def parse_or(self):
        e = self.parse_and()
        while self.tok.kind == "+":
            pos = self.advance().pos
            e = self._build(Or, pos, e, self.parse_and())
        return e

    def parse_and(self):
        e = self.parse_unary()
        while self.tok.kind == ".":
            pos = self.advance().pos
            e = self._build(And, pos, e, self.parse_unary())
        return e

    def _enter(self, pos):
        self.nesting += 1
        if self.nesting > MAX_NESTING:
            raise FormSyntaxError(f"nesting deeper than {MAX_NESTING}", pos)

    def parse_unary(self):
        if self.tok.kind == "!":
            pos = self.advance().pos
            self._enter(pos)
            e = self._build(Not, pos, self.parse_unary())
            self.nesting -= 1
            return e
        return self.parse_atom()

    def parse_atom(self):
        tok = self.tok
        if tok.kind == "bits":
            self.advance()
            width = len(tok.text) - 1
            if self.dim is None:
                self.dim = width
            elif width != self.dim:
                raise WidthError(f"literal {tok.text} has width {width}, expected {self.dim}", tok.pos)
            return Leaf(BasePattern.parse(tok.text))
        if tok.kind == "(":
            self.advance()
            self._enter(tok.pos)
            e = self.parse_next()
            self.expect(")")
            self.nesting -= 1
            return e
        raise FormSyntaxError(f"expected a literal or '(', found {self._describe(tok)}", tok.pos)


def _byte_offset(src, index):
    return len(src[:index].encode("utf-8"))


def parse(src, expected_dim=None):
    """Parse X-form text into a tree.

    ``src`` may be ``str`` or ``bytes``; bytes are decoded as Latin-1 so that
    every byte maps to one character. The dimension is taken from the first
    literal unless ``expected_dim`` is given.
    """
    is_bytes = isinstance(src, (bytes, bytearray))
    text = bytes(src).decode("latin-1") if is_bytes else src
    try:
        return _Parser(text, expected_dim).parse()
    except (FormSyntaxError, WidthError, KindError) as exc:
        d = exc.diagnostic
        if d is not None and not is_bytes:
            exc.diagnostic = type(d)(_byte_offset(text, d.byte_offset), d.message, d.kind)
        raise


def load_form(path, expected_dim=None):
    with open(path, "rb") as fh:
        return parse(fh.read(), expected_dim)


def to_text(e):
    """Render with the fewest parentheses that still parse back to ``e``."""
    return _render(e)


def _render(e):
    if isinstance(e, Leaf):
        return f"#{e.base}"
    prec = _PREC[type(e)]
    if isinstance(e, Not):
        inner = _render(e.child)
        if _PREC[type(e.child)] < prec:
            inner = f"({inner})"
        return "!" + inner
    left = _render(e.left)
    right = _render(e.right)
    if _PREC[type(e.left)] < prec:
        left = f"({left})"
    # Left associativity: a same-precedence right operand needs parentheses.
    if _PREC[type(e.right)] <= prec:
        right = f"({right})"
    return left + _GLYPH[type(e)] + right
