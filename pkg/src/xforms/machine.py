"""Perception machines: X-forms compiled into guarded sequence recognizers.

Every spatial subexpression of a form becomes a :class:`SpatialBit`, a
predicate on a single base pattern backed by its supporting set. Every
``Next`` node adds a :class:`TemporalBit` and every ``Or`` over general operands
adds a :class:`ChoiceBit`, so applying an operator always registers one new
bit.

The sequence structure is an epsilon-free nondeterministic automaton whose
transitions are guarded by spatial bits. A maximal spatial subtree is one
transition; ``Next`` glues the accepting states of its left part onto the
start of its right part; ``Or`` shares one start state between both parts.
Fragment start states never have incoming transitions, which is what makes
both gluing steps sound.

A run consumes the whole sequence and accepts iff some accepting state is
active at the end. :func:`run_stream` instead restarts the machine at every
step and reports, per step, whether some suffix read so far is accepted.
"""

from dataclasses import dataclass
from itertools import count

from .errors import DimensionMismatch
from .expr import Interpretation, Kind, Next, Or, children, spatial_codes
from .pattern import DEFAULT_CAP, BasePattern, ObjectivePattern, iter_universe


@dataclass(frozen=True)
class SpatialBit:
    """Fires on a single base pattern iff it is in the supporting set."""

    id: str
    form: object
    codes: frozenset

    def fires(self, base):
        code = base.code if isinstance(base, BasePattern) else base
        return code in self.codes

    def support(self, dim):
        return ObjectivePattern.spatial(dim, self.codes)


@dataclass(frozen=True)
class TemporalBit:
    """Reflects that its operands were perceived consecutively, in ``chain`` order.

    It fires at the step that consumes the last element of the perceived
    sequence. When both operands are spatial the chain is the pair of sensing
    bits.
    """

    id: str
    form: object
    chain: tuple


@dataclass(frozen=True)
class ChoiceBit:
    """Reflects that either of its operands was perceived."""

    id: str
    form: object
    options: tuple


@dataclass(frozen=True)
class Transition:
    source: int
    guard: str
    target: int


@dataclass(frozen=True)
class StepRecord:
    input: BasePattern
    fired: tuple
    states: tuple


@dataclass(frozen=True)
class RunTrace:
    steps: tuple
    accepted: bool

    def __len__(self):
        return len(self.steps)

    def to_text(self):
        lines = []
        for t, rec in enumerate(self.steps, 1):
            lines.append(
                f"t={t} in={rec.input} fired={','.join(rec.fired)} "
                f"states={','.join(map(str, rec.states))}"
            )
        lines.append(f"accepted={'true' if self.accepted else 'false'}")
        return "\n".join(lines) + "\n"


class PerceptionMachine:
    """A compiled recognizer. Immutable; safe to share between runners."""

    def __init__(self, dim, bits, states, initial, accepting, transitions, top_bit):
        self.dim = dim
        self.bits = dict(bits)
        self.states = tuple(states)
        self.initial = initial
        self.accepting = frozenset(accepting)
        self.transitions = tuple(transitions)
        self.top_bit = top_bit
        self._spatial = [b for b in self.bits.values() if isinstance(b, SpatialBit)]
        out = {}
        for tr in self.transitions:
            out.setdefault(tr.source, []).append(tr)
        self._out = out

    @property
    def spatial_bits(self):
        return list(self._spatial)

    @property
    def temporal_bits(self):
        return [b for b in self.bits.values() if isinstance(b, TemporalBit)]

    def stats(self):
        return {
            "bits": len(self.bits),
            "spatial_bits": len(self._spatial),
            "temporal_bits": len(self.temporal_bits),
            "choice_bits": sum(isinstance(b, ChoiceBit) for b in self.bits.values()),
            "states": len(self.states),
            "transitions": len(self.transitions),
            "accepting": len(self.accepting),
        }

    def fired(self, code):
        return tuple(b.id for b in self._spatial if code in b.codes)

    def step(self, active, code):
        """Active states after reading one base pattern (given as a code)."""
        nxt = set()
        for q in active:
            for tr in self._out.get(q, ()):
                if code in self.bits[tr.guard].codes:
                    nxt.add(tr.target)
        return nxt

    def accepts(self, seq):
        _check_dim(self, seq)
        active = {self.initial}
        for code in seq.codes:
            active = self.step(active, code)
            if not active:
                return False
        return bool(active & self.accepting)

    def __repr__(self):
        s = self.stats()
        return (
            f"PerceptionMachine(n={self.dim}, bits={s['bits']}, states={s['states']}, "
            f"transitions={s['transitions']}, top={self.top_bit})"
        )


def _check_dim(m, seq):
    if seq.dim != m.dim:
        raise DimensionMismatch(f"sequence has dim {seq.dim}, machine expects {m.dim}")


class _Fragment:
    __slots__ = ("start", "accepting", "transitions", "states")

    def __init__(self, start, accepting, transitions, states):
        self.start = start
        self.accepting = accepting
        self.transitions = transitions
        self.states = states


class _Compiler:
    def __init__(self, interp, cap):
        self.interp = interp
        self.cap = cap
        self.bits = {}
        self._state_ids = count()
        self._counters = {"s": count(1), "t": count(1), "c": count(1)}

    def _new_id(self, prefix):
        return f"{prefix}{next(self._counters[prefix])}"

    def _register_spatial(self, e):
        # Post-order, so every spatial subexpression gets its own bit.
        for child in children(e):
            self._register_spatial(child)
        bit = SpatialBit(self._new_id("s"), e, spatial_codes(e, self.interp, self.cap))
        self.bits[bit.id] = bit
        return bit.id

    def build(self, e):
        if e.kind is Kind.SPATIAL:
            guard = self._register_spatial(e)
            start, end = next(self._state_ids), next(self._state_ids)
            frag = _Fragment(start, {end}, [Transition(start, guard, end)], {start, end})
            return guard, frag
        left_bit, a = self.build(e.left)
        right_bit, b = self.build(e.right)
        if isinstance(e, Next):
            glued = [
                Transition(f, tr.guard, tr.target)
                for f in sorted(a.accepting)
                for tr in b.transitions
                if tr.source == b.start
            ]
            rest = [tr for tr in b.transitions if tr.source != b.start]
            frag = _Fragment(
                a.start,
                set(b.accepting),
                a.transitions + glued + rest,
                a.states | (b.states - {b.start}),
            )
            bit = TemporalBit(self._new_id("t"), e, (left_bit, right_bit))
        else:
            assert isinstance(e, Or)
            moved = [
                Transition(a.start if tr.source == b.start else tr.source, tr.guard, tr.target)
                for tr in b.transitions
            ]
            frag = _Fragment(
                a.start,
                a.accepting | b.accepting,
                a.transitions + moved,
                a.states | (b.states - {b.start}),
            )
            bit = ChoiceBit(self._new_id("c"), e, (left_bit, right_bit))
        self.bits[bit.id] = bit
        return bit.id, frag


def compile_form(e, interp="singleton", *, cap=DEFAULT_CAP):
    """Compile a form into a :class:`PerceptionMachine` under the given leaf interpretation."""
    interp = Interpretation.coerce(interp)
    comp = _Compiler(interp, cap)
    top, frag = comp.build(e)
    # Renumber states densely, start state first.
    order = [frag.start] + sorted(frag.states - {frag.start})
    rename = {q: i for i, q in enumerate(order)}
    transitions = sorted(
        {Transition(rename[t.source], t.guard, rename[t.target]) for t in frag.transitions},
        key=lambda t: (t.source, t.target, t.guard),
    )
    return PerceptionMachine(
        e.dim,
        comp.bits,
        range(len(order)),
        0,
        {rename[q] for q in frag.accepting},
        transitions,
        top,
    )


def run(m, seq):
    """Feed a whole sequence through ``m`` and record every step."""
    _check_dim(m, seq)
    active = {m.initial}
    records = []
    for code in seq.codes:
        active = m.step(active, code)
        records.append(StepRecord(BasePattern(m.dim, code), m.fired(code), tuple(sorted(active))))
    return RunTrace(tuple(records), bool(active & m.accepting))


def run_stream(m, seq):
    """Per step ``t``: is some suffix of the first ``t`` inputs accepted?"""
    _check_dim(m, seq)
    active = set()
    out = []
    for code in seq.codes:
        active = m.step(active | {m.initial}, code)
        out.append(bool(active & m.accepting))
    return out


def find_perception_bit(m, l_max, *, cap=DEFAULT_CAP):
    """Return ``m.top_bit`` if the machine is non-constant on the bounded universe.

    A machine that accepts everything or nothing up to ``l_max`` has no
    nonempty proper supporting set there, so ``None`` is returned.
    """
    seen_accept = seen_reject = False
    for seq in iter_universe(m.dim, l_max, cap):
        if m.accepts(seq):
            seen_accept = True
        else:
            seen_reject = True
        if seen_accept and seen_reject:
            return m.top_bit
    return None


def find_temporal_bit(m):
    """The outermost temporal bit, or ``None`` for a machine compiled from a ``Next``-free form."""
    top = m.bits[m.top_bit]
    if isinstance(top, TemporalBit):
        return top.id
    temporal = m.temporal_bits
    return temporal[-1].id if temporal else None


def supporting_set(m, l_max, *, cap=DEFAULT_CAP):
    """Every sequence of length at most ``l_max`` that ``m`` accepts."""
    return ObjectivePattern._raw(m.dim, (s for s in iter_universe(m.dim, l_max, cap) if m.accepts(s)))


__all__ = [
    "ChoiceBit",
    "PerceptionMachine",
    "RunTrace",
    "SpatialBit",
    "StepRecord",
    "TemporalBit",
    "Transition",
    "compile_form",
    "find_perception_bit",
    "find_temporal_bit",
    "run",
    "run_stream",
    "supporting_set",
]
