"""Base patterns, sequences and objective patterns.

A base pattern is an ``n``-bit binary vector. Internally it is packed into an
integer ``code`` with the leftmost component ``i_1`` as the most significant
bit, so ``BasePattern.parse("10").code == 2``. The textual form ``10`` always
lists ``i_1`` first.

Objective patterns are immutable finite sets of sequences. The four set
operators (union, intersection, complement, concatenation) are plain
functions returning new patterns.
"""

from dataclasses import dataclass
from itertools import product

from .errors import (
    BoundTooSmall,
    DimensionMismatch,
    EnumerationGuard,
    NotSpatial,
    PatternFormatError,
)

#: Largest dimension for which the base pattern space may be enumerated.
MAX_ENUM_DIM = 24
#: Default cap on the number of instances a bounded enumeration may produce.
DEFAULT_CAP = 2 ** 24


def check_dim(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")
    return n


@dataclass(frozen=True, slots=True)
class BasePattern:
    dim: int
    code: int

    def __post_init__(self):
        check_dim(self.dim)
        if not 0 <= self.code < (1 << self.dim):
            raise ValueError(f"code {self.code} out of range for dim {self.dim}")

    @classmethod
    def parse(cls, text):
        """Build from a bitstring such as ``"0110"`` (a leading ``#`` is allowed)."""
        bits = text[1:] if text.startswith("#") else text
        if not bits or any(c not in "01" for c in bits):
            raise ValueError(f"not a bitstring: {text!r}")
        return cls(len(bits), int(bits, 2))

    @classmethod
    def from_bits(cls, bits):
        bits = tuple(int(b) for b in bits)
        if not bits or any(b not in (0, 1) for b in bits):
            raise ValueError(f"not a binary vector: {bits!r}")
        return cls(len(bits), int("".join(map(str, bits)), 2))

    @classmethod
    def unit(cls, dim, i):
        """The unit pattern with a single 1 at component ``i`` (1-based, leftmost is 1)."""
        if not 1 <= i <= dim:
            raise ValueError(f"component {i} out of range 1..{dim}")
        return cls(dim, 1 << (dim - i))

    @property
    def bits(self):
        return tuple((self.code >> (self.dim - 1 - k)) & 1 for k in range(self.dim))

    def __str__(self):
        return format(self.code, f"0{self.dim}b")

    def __repr__(self):
        return f"BasePattern(#{self})"


@dataclass(frozen=True, slots=True)
class SequenceInstance:
    """A nonempty sequence of base patterns, stored as packed codes."""

    dim: int
    codes: tuple

    def __post_init__(self):
        check_dim(self.dim)
        if not self.codes:
            raise ValueError("a sequence needs at least one step")
        top = 1 << self.dim
        for c in self.codes:
            if not 0 <= c < top:
                raise ValueError(f"code {c} out of range for dim {self.dim}")

    @classmethod
    def of(cls, *steps):
        """Build from base patterns or bitstrings: ``SequenceInstance.of("01", "10")``."""
        if not steps:
            raise ValueError("a sequence needs at least one step")
        bases = [s if isinstance(s, BasePattern) else BasePattern.parse(s) for s in steps]
        dims = {b.dim for b in bases}
        if len(dims) != 1:
            raise DimensionMismatch(f"steps have mixed dimensions {sorted(dims)}")
        return cls(bases[0].dim, tuple(b.code for b in bases))

    @classmethod
    def parse(cls, text):
        """Parse whitespace-separated bitstrings, e.g. ``"01 10 00"``."""
        return cls.of(*text.split())

    @property
    def steps(self):
        return tuple(BasePattern(self.dim, c) for c in self.codes)

    def __len__(self):
        return len(self.codes)

    def __add__(self, other):
        if other.dim != self.dim:
            raise DimensionMismatch(f"cannot concatenate dims {self.dim} and {other.dim}")
        return SequenceInstance(self.dim, self.codes + other.codes)

    def sort_key(self):
        return (len(self.codes), self.codes)

    def to_text(self):
        return " ".join(format(c, f"0{self.dim}b") for c in self.codes)

    def __str__(self):
        return "[" + "->".join("#" + format(c, f"0{self.dim}b") for c in self.codes) + "]"

    __repr__ = __str__


class ObjectivePattern:
    """A finite set of sequences over one dimension.

    Duplicates collapse silently. The empty pattern is allowed and counts as
    spatial.
    """

    __slots__ = ("dim", "instances")

    def __init__(self, dim, instances=()):
        check_dim(dim)
        inst = frozenset(instances)
        for s in inst:
            if not isinstance(s, SequenceInstance):
                raise TypeError(f"expected SequenceInstance, got {type(s).__name__}")
            if s.dim != dim:
                raise DimensionMismatch(f"instance {s} has dim {s.dim}, pattern has {dim}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "instances", inst)

    def __setattr__(self, name, value):
        raise AttributeError("ObjectivePattern is immutable")

    @classmethod
    def _raw(cls, dim, instances):
        # Trusted constructor: skips per-instance validation.
        self = object.__new__(cls)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "instances", frozenset(instances))
        return self

    @classmethod
    def of(cls, dim, *texts):
        """``ObjectivePattern.of(2, "00 01", "10")`` -- one string per sequence."""
        return cls(dim, (SequenceInstance.parse(t) for t in texts))

    @classmethod
    def spatial(cls, dim, codes):
        return cls._raw(dim, (SequenceInstance(dim, (c,)) for c in codes))

    def __len__(self):
        return len(self.instances)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, s):
        return s in self.instances

    def __eq__(self, other):
        if not isinstance(other, ObjectivePattern):
            return NotImplemented
        return self.dim == other.dim and self.instances == other.instances

    def __hash__(self):
        return hash((self.dim, self.instances))

    def __le__(self, other):
        _same_dim(self, other)
        return self.instances <= other.instances

    def __ge__(self, other):
        _same_dim(self, other)
        return self.instances >= other.instances

    def __lt__(self, other):
        _same_dim(self, other)
        return self.instances < other.instances

    def __gt__(self, other):
        _same_dim(self, other)
        return self.instances > other.instances

    def sorted(self):
        """Instances ordered by (length, lexicographic bits)."""
        return sorted(self.instances, key=SequenceInstance.sort_key)

    def spatial_codes(self):
        """Codes of a spatial pattern's members, as a frozenset of ints."""
        if not is_spatial(self):
            raise NotSpatial("pattern has instances longer than 1")
        return frozenset(s.codes[0] for s in self.instances)

    def lengths(self):
        return sorted(len(s) for s in self.instances)

    def by_length(self):
        groups = {}
        for s in self.instances:
            groups.setdefault(len(s), set()).add(s)
        return {k: ObjectivePattern._raw(self.dim, v) for k, v in sorted(groups.items())}

    def __repr__(self):
        body = ",".join(str(s) for s in self.sorted())
        return f"ObjectivePattern(n={self.dim}, {{{body}}})"

    def __or__(self, other):
        return or_union(self, other)

    def __and__(self, other):
        return and_intersect(self, other)

    def __rshift__(self, other):
        return next_concat(self, other)


def _same_dim(p1, p2):
    if p1.dim != p2.dim:
        raise DimensionMismatch(f"dimension {p1.dim} != {p2.dim}")


def _check_space(n, cap):
    if n > MAX_ENUM_DIM or (1 << n) > cap:
        raise EnumerationGuard(
            f"base pattern space of dimension {n} exceeds the enumeration limit"
        )


def universe_size(n, l_max):
    """Number of sequences of length 1..l_max over dimension ``n``."""
    m = 1 << n
    return sum(m ** k for k in range(1, l_max + 1))


def check_universe(n, l_max, cap=DEFAULT_CAP):
    """Raise ``EnumerationGuard`` if the length-bounded universe is too large."""
    if l_max < 1:
        raise ValueError(f"l_max must be >= 1, got {l_max}")
    if n > MAX_ENUM_DIM or universe_size(n, l_max) > cap:
        raise EnumerationGuard(
            f"universe of sequences with n={n}, length <= {l_max} exceeds cap {cap}"
        )


def or_union(p1, p2):
    _same_dim(p1, p2)
    return ObjectivePattern._raw(p1.dim, p1.instances | p2.instances)


def and_intersect(p1, p2):
    _same_dim(p1, p2)
    return ObjectivePattern._raw(p1.dim, p1.instances & p2.instances)


def not_spatial(p, cap=DEFAULT_CAP):
    """Complement of a spatial pattern inside the base pattern space."""
    codes = p.spatial_codes()
    _check_space(p.dim, cap)
    return ObjectivePattern.spatial(p.dim, (c for c in range(1 << p.dim) if c not in codes))


def not_bounded(p, l_max, cap=DEFAULT_CAP):
    """Complement inside the universe of sequences of length at most ``l_max``."""
    longest = max((len(s) for s in p.instances), default=0)
    if longest > l_max:
        raise BoundTooSmall(f"pattern has an instance of length {longest} > {l_max}")
    universe = enumerate_universe(p.dim, l_max, cap)
    return ObjectivePattern._raw(p.dim, universe.instances - p.instances)


def next_concat(p1, p2):
    """Every sequence ``s1`` from ``p1`` followed by every ``s2`` from ``p2``."""
    _same_dim(p1, p2)
    dim = p1.dim
    return ObjectivePattern._raw(
        dim,
        (SequenceInstance(dim, a.codes + b.codes) for a in p1.instances for b in p2.instances),
    )


def enumerate_universe(dim, l_max, cap=DEFAULT_CAP):
    check_dim(dim)
    check_universe(dim, l_max, cap)
    space = range(1 << dim)
    return ObjectivePattern._raw(
        dim,
        (
            SequenceInstance(dim, codes)
            for k in range(1, l_max + 1)
            for codes in product(space, repeat=k)
        ),
    )


def iter_universe(dim, l_max, cap=DEFAULT_CAP):
    """Yield the bounded universe in (length, lexicographic) order without materializing it."""
    check_dim(dim)
    check_universe(dim, l_max, cap)
    space = range(1 << dim)
    for k in range(1, l_max + 1):
        for codes in product(space, repeat=k):
            yield SequenceInstance(dim, codes)


def base_space(dim, cap=DEFAULT_CAP):
    """The whole base pattern space as a spatial pattern."""
    check_dim(dim)
    _check_space(dim, cap)
    return ObjectivePattern.spatial(dim, range(1 << dim))


def is_spatial(p):
    return all(len(s.codes) == 1 for s in p.instances)


# --- .pat text format -------------------------------------------------------


def _strip_comment(line):
    i = line.find("#")
    return line if i < 0 else line[:i]


def loads_pattern(text):
    """Parse ``.pat`` text: an ``N=<n>`` header, then one sequence per line."""
    dim = None
    instances = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if dim is None:
            key, sep, value = line.partition("=")
            if not sep or key.strip() != "N":
                raise PatternFormatError(f"line {lineno}: expected header 'N=<n>', got {raw!r}")
            try:
                dim = int(value.strip())
            except ValueError:
                raise PatternFormatError(f"line {lineno}: bad dimension {value.strip()!r}") from None
            if dim < 1:
                raise PatternFormatError(f"line {lineno}: dimension must be positive")
            continue
        words = line.split()
        for w in words:
            if len(w) != dim or any(c not in "01" for c in w):
                raise PatternFormatError(
                    f"line {lineno}: {w!r} is not a bitstring of length {dim}"
                )
        instances.append(SequenceInstance(dim, tuple(int(w, 2) for w in words)))
    if dim is None:
        raise PatternFormatError("missing 'N=<n>' header")
    return ObjectivePattern._raw(dim, instances)


def dumps_pattern(p):
    """Render ``p`` as ``.pat`` text, instances sorted by (length, bits)."""
    lines = [f"N={p.dim}"]
    lines.extend(s.to_text() for s in p.sorted())
    return "\n".join(lines) + "\n"


def load_pattern(path):
    with open(path, encoding="ascii") as fh:
        return loads_pattern(fh.read())
