"""X-form syntax trees, their kinds, footings and denotations.

Trees are immutable and checked on construction: every leaf shares one
dimension, and NOT/AND only accept spatial operands. ``Or``, ``And`` and
``Next`` are binary; longer chains nest to the left.
"""

import enum
from dataclasses import dataclass, field
from functools import reduce

from .errors import DimensionMismatch, KindError
from .pattern import (
    DEFAULT_CAP,
    BasePattern,
    ObjectivePattern,
    SequenceInstance,
    _check_space,
)


class Kind(enum.Enum):
    SPATIAL = "spatial"
    GENERAL = "general"


class Interpretation(enum.Enum):
    """What a bare leaf ``b`` denotes.

    ``SINGLETON``: just ``{[b]}``. ``MASK``: every base pattern whose 1-bits
    include the 1-bits of ``b``.
    """

    SINGLETON = "singleton"
    MASK = "mask"

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown interpretation {value!r}; use 'singleton' or 'mask'") from None


SINGLETON = Interpretation.SINGLETON
MASK = Interpretation.MASK


class XForm:
    """Common base of the five node types."""

    __slots__ = ()

    @property
    def is_spatial(self):
        return self.kind is Kind.SPATIAL

    def __add__(self, other):
        return Or(self, other)

    def __mul__(self, other):
        return And(self, other)

    def __invert__(self):
        return Not(self)

    def __rshift__(self, other):
        return Next(self, other)

    def __str__(self):
        from .parser import to_text

        return to_text(self)


@dataclass(frozen=True, repr=False)
class Leaf(XForm):
    base: BasePattern
    dim: int = field(init=False, compare=False)
    kind: Kind = field(init=False, compare=False, default=Kind.SPATIAL)

    def __post_init__(self):
        if isinstance(self.base, str):
            object.__setattr__(self, "base", BasePattern.parse(self.base))
        object.__setattr__(self, "dim", self.base.dim)

    def __repr__(self):
        return f"Leaf(#{self.base})"


def _require_spatial(op, child):
    if child.kind is not Kind.SPATIAL:
        raise KindError(f"{op} needs a spatial operand; got a general form")


def _join_dim(left, right):
    if left.dim != right.dim:
        raise DimensionMismatch(f"operands have dimensions {left.dim} and {right.dim}")
    return left.dim


@dataclass(frozen=True, repr=False)
class Not(XForm):
    child: XForm
    dim: int = field(init=False, compare=False)
    kind: Kind = field(init=False, compare=False, default=Kind.SPATIAL)

    def __post_init__(self):
        _require_spatial("NOT", self.child)
        object.__setattr__(self, "dim", self.child.dim)

    def __repr__(self):
        return f"Not({self.child!r})"


@dataclass(frozen=True, repr=False)
class _Binary(XForm):
    left: XForm
    right: XForm
    dim: int = field(init=False, compare=False)
    kind: Kind = field(init=False, compare=False, default=Kind.GENERAL)

    def __post_init__(self):
        raise TypeError("use And, Or or Next")

    def __repr__(self):
        return f"{type(self).__name__}({self.left!r}, {self.right!r})"


class And(_Binary):
    def __post_init__(self):
        _require_spatial("AND", self.left)
        _require_spatial("AND", self.right)
        object.__setattr__(self, "dim", _join_dim(self.left, self.right))
        object.__setattr__(self, "kind", Kind.SPATIAL)


class Or(_Binary):
    def __post_init__(self):
        object.__setattr__(self, "dim", _join_dim(self.left, self.right))
        if self.left.kind is Kind.SPATIAL and self.right.kind is Kind.SPATIAL:
            object.__setattr__(self, "kind", Kind.SPATIAL)
        else:
            object.__setattr__(self, "kind", Kind.GENERAL)


class Next(_Binary):
    def __post_init__(self):
        object.__setattr__(self, "dim", _join_dim(self.left, self.right))


def leaf(text):
    return Leaf(BasePattern.parse(text))


def or_all(forms):
    """Left-nested ``Or`` over a nonempty iterable."""
    return reduce(Or, forms)


def and_all(forms):
    return reduce(And, forms)


def next_all(forms):
    return reduce(Next, forms)


def kind_of(e):
    return e.kind


def children(e):
    if isinstance(e, Leaf):
        return ()
    if isinstance(e, Not):
        return (e.child,)
    return (e.left, e.right)


def walk(e):
    """Pre-order traversal."""
    stack = [e]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def size(e):
    """Node count."""
    return sum(1 for _ in walk(e))


def depth(e):
    kids = children(e)
    return 1 + (max(depth(k) for k in kids) if kids else 0)


def footing_of(e):
    """The distinct base patterns used as leaves."""
    return frozenset(n.base for n in walk(e) if isinstance(n, Leaf))


def is_sx(e):
    return not any(isinstance(n, Next) for n in walk(e))


def next_operands(e):
    """Flatten a ``Next`` chain regardless of how it is parenthesized."""
    if not isinstance(e, Next):
        return [e]
    return next_operands(e.left) + next_operands(e.right)


def is_tx(e):
    if not isinstance(e, Next):
        return False
    return all(is_sx(part) for part in next_operands(e))


# --- denotation ---------------------------------------------------------------


def _leaf_codes(base, interp, cap):
    if interp is SINGLETON:
        return frozenset((base.code,))
    _check_space(base.dim, cap)
    b = base.code
    return frozenset(x for x in range(1 << base.dim) if x & b == b)


def spatial_codes(e, interp=SINGLETON, cap=DEFAULT_CAP):
    """Denotation of a spatial form as a frozenset of base pattern codes."""
    interp = Interpretation.coerce(interp)
    if e.kind is not Kind.SPATIAL:
        raise KindError("spatial_codes() needs a spatial form")
    return _codes(e, interp, cap)


def _codes(e, interp, cap):
    if isinstance(e, Leaf):
        return _leaf_codes(e.base, interp, cap)
    if isinstance(e, Not):
        _check_space(e.dim, cap)
        inner = _codes(e.child, interp, cap)
        return frozenset(x for x in range(1 << e.dim) if x not in inner)
    if isinstance(e, And):
        return _codes(e.left, interp, cap) & _codes(e.right, interp, cap)
    return _codes(e.left, interp, cap) | _codes(e.right, interp, cap)


def _seqs(e, interp, max_len, cap):
    # Returns a set of code tuples.
    if e.kind is Kind.SPATIAL:
        return {(c,) for c in _codes(e, interp, cap)}
    if isinstance(e, Or):
        return _seqs(e.left, interp, max_len, cap) | _seqs(e.right, interp, max_len, cap)
    left = _seqs(e.left, interp, max_len, cap)
    if not left:
        return set()
    right = _seqs(e.right, interp, max_len, cap)
    if max_len is None:
        return {a + b for a in left for b in right}
    return {a + b for a in left for b in right if len(a) + len(b) <= max_len}


def evaluate(e, interp=SINGLETON, *, max_len=None, cap=DEFAULT_CAP):
    """The objective pattern a form denotes.

    ``max_len`` truncates the result to sequences of at most that length; the
    truncation is applied while evaluating, so deeply nested ``Next`` chains
    stay cheap.
    """
    interp = Interpretation.coerce(interp)
    dim = e.dim
    return ObjectivePattern._raw(
        dim, (SequenceInstance(dim, t) for t in _seqs(e, interp, max_len, cap))
    )
