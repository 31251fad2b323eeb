"""Build X-forms that denote a given objective pattern.

Three constructions, one per pattern shape:

* spatial patterns: a minterm DNF over the ``n`` unit generators, exact under
  the mask interpretation (:func:`synth_sx_mask`), or a plain union of leaves
  under the singleton interpretation (:func:`synth_sx_singleton`);
* same-length patterns: a ``Next`` chain of per-position projections
  (:func:`synth_tx_projection`). This is only exact when the pattern is the
  full product of its projections; the result reports whether it is;
* arbitrary patterns: one sub-form per length class, joined by ``Or``
  (:func:`synth_x`), always exact.

Every result is checked against the target by evaluation before it is
returned.
"""

from dataclasses import dataclass

from .errors import EmptyTarget, MixedLengths, NotSpatial
from .expr import (
    MASK,
    SINGLETON,
    And,
    Interpretation,
    Kind,
    Leaf,
    Next,
    Not,
    Or,
    XForm,
    evaluate,
    footing_of,
    next_all,
    or_all,
    size,
    spatial_codes,
)
from .pattern import DEFAULT_CAP, BasePattern, is_spatial


@dataclass(frozen=True)
class SynthResult:
    form: XForm
    interp: Interpretation
    exact: bool
    footing_size: int

    def __str__(self):
        return str(self.form)


def unit_generators(dim):
    """Leaves ``u_1 .. u_n``; under MASK, ``u_i`` denotes every pattern with bit ``i`` set."""
    return [Leaf(BasePattern.unit(dim, i)) for i in range(1, dim + 1)]


def _result(form, interp, target, cap, *, require_exact):
    got = evaluate(form, interp, cap=cap)
    exact = got == target
    if require_exact and not exact:
        raise AssertionError(f"synthesized {form} does not denote the target")
    return SynthResult(form, interp, exact, len(footing_of(form)))


def _spatial_target(target):
    if not is_spatial(target):
        raise NotSpatial("target has instances longer than 1")
    return target.spatial_codes()


def minterm(dim, code):
    """The conjunction of unit literals that, under MASK, denotes exactly ``code``."""
    units = unit_generators(dim)
    lits = []
    for i, u in enumerate(units):
        bit = (code >> (dim - 1 - i)) & 1
        lits.append(u if bit else Not(u))
    form = lits[0]
    for lit in lits[1:]:
        form = And(form, lit)
    return form


def _sx_mask_form(dim, codes):
    return or_all(minterm(dim, c) for c in sorted(codes))


def _contradiction(dim):
    u = Leaf(BasePattern.unit(dim, 1))
    return And(u, Not(u))


def synth_sx_mask(target, *, allow_empty=False, reduce=False, cap=DEFAULT_CAP):
    """Minterm DNF over unit generators; exact under MASK with footing at most ``n``.

    With ``reduce=True`` the DNF is passed through :func:`simplify`, which
    merges minterms and may drop generators that turn out to be don't-cares.
    """
    codes = _spatial_target(target)
    dim = target.dim
    if not codes:
        if not allow_empty:
            raise EmptyTarget("no sX-form denotes the empty pattern without a contradiction term")
        form = _contradiction(dim)
    else:
        form = _sx_mask_form(dim, codes)
        if reduce:
            form = simplify(form, MASK, cap=cap)
    return _result(form, MASK, target, cap, require_exact=True)


def synth_sx_singleton(target, *, cap=DEFAULT_CAP):
    """Union of one leaf per member; exact under SINGLETON, footing ``|target|``."""
    codes = _spatial_target(target)
    if not codes:
        raise EmptyTarget("cannot synthesize the empty pattern")
    dim = target.dim
    form = or_all(Leaf(BasePattern(dim, c)) for c in sorted(codes))
    return _result(form, SINGLETON, target, cap, require_exact=True)


def _sx_form(dim, codes, interp):
    if interp is MASK:
        return _sx_mask_form(dim, codes)
    return or_all(Leaf(BasePattern(dim, c)) for c in sorted(codes))


def projections(target):
    """Per-position sets of base pattern codes of a same-length pattern."""
    lengths = {len(s) for s in target.instances}
    if not lengths:
        raise EmptyTarget("cannot project the empty pattern")
    if len(lengths) > 1:
        raise MixedLengths(f"instances have lengths {sorted(lengths)}")
    (k,) = lengths
    return [frozenset(s.codes[i] for s in target.instances) for i in range(k)]


def synth_tx_projection(target, interp=SINGLETON, *, cap=DEFAULT_CAP):
    """``P_1 -> P_2 -> ... -> P_k`` where ``P_i`` collects every step-``i`` element.

    The denotation always contains ``target``. It equals ``target`` only when
    the target is the full product of its projections; ``exact`` says which.
    """
    interp = Interpretation.coerce(interp)
    proj = projections(target)
    form = next_all(_sx_form(target.dim, p, interp) for p in proj)
    return _result(form, interp, target, cap, require_exact=False)


def _instance_chain(s, interp):
    if interp is MASK:
        return next_all(minterm(s.dim, c) for c in s.codes)
    return next_all(Leaf(BasePattern(s.dim, c)) for c in s.codes)


def synth_x(target, interp=SINGLETON, *, cap=DEFAULT_CAP):
    """Exact X-form for any nonempty finite pattern.

    Instances are grouped by length. Each group first tries the projection
    chain; a group that is not a product of its projections falls back to a
    union of one chain per instance.
    """
    interp = Interpretation.coerce(interp)
    if not target.instances:
        raise EmptyTarget("cannot synthesize the empty pattern")
    parts = []
    for group in target.by_length().values():
        attempt = synth_tx_projection(group, interp, cap=cap)
        if attempt.exact:
            parts.append(attempt.form)
        else:
            parts.append(or_all(_instance_chain(s, interp) for s in group.sorted()))
    return _result(or_all(parts), interp, target, cap, require_exact=True)


def synthesize(target, mode="x", interp=SINGLETON, *, cap=DEFAULT_CAP):
    """Dispatch on ``mode``: ``"sx"``, ``"tx"`` or ``"x"``."""
    interp = Interpretation.coerce(interp)
    if mode == "sx":
        if interp is MASK:
            return synth_sx_mask(target, cap=cap)
        return synth_sx_singleton(target, cap=cap)
    if mode == "tx":
        return synth_tx_projection(target, interp, cap=cap)
    if mode == "x":
        return synth_x(target, interp, cap=cap)
    raise ValueError(f"mode must be 'sx', 'tx' or 'x', got {mode!r}")


# --- simplification -----------------------------------------------------------


def simplify(e, interp=SINGLETON, *, cap=DEFAULT_CAP):
    """Apply size-reducing rewrites that keep the denotation unchanged.

    Rewrites: ``!!a -> a``; ``a + a -> a`` and ``a . a -> a``; absorption
    ``a + a.b -> a`` and ``a . (a + b) -> a``; dropping operands that are
    provably empty or full; merging DNF cubes that differ in the sign of one
    literal (``x.u + x.!u -> x``), which is what drops don't-care generators.
    Not a minimizer.
    """
    interp = Interpretation.coerce(interp)
    simp = _Simplifier(interp, cap)
    while True:
        out = simp.run(e)
        if out == e:
            return out
        e = out


class _Simplifier:
    def __init__(self, interp, cap):
        self.interp = interp
        self.cap = cap
        self._memo = {}

    def run(self, e):
        if e in self._memo:
            return self._memo[e]
        out = self._rewrite(e)
        if size(out) > size(e):
            out = e
        self._memo[e] = out
        return out

    def _empty(self, e):
        if e.kind is Kind.SPATIAL:
            return not spatial_codes(e, self.interp, self.cap)
        if isinstance(e, Or):
            return self._empty(e.left) and self._empty(e.right)
        return self._empty(e.left) or self._empty(e.right)

    def _full(self, e):
        if e.kind is not Kind.SPATIAL:
            return False
        return len(spatial_codes(e, self.interp, self.cap)) == 1 << e.dim

    def _rewrite(self, e):
        if isinstance(e, Leaf):
            return e
        if isinstance(e, Not):
            child = self.run(e.child)
            if isinstance(child, Not):
                return child.child
            return Not(child)
        left, right = self.run(e.left), self.run(e.right)
        if isinstance(e, Next):
            if self._empty(left):
                return left
            if self._empty(right):
                return right
            return Next(left, right)
        if isinstance(e, And):
            return self._and(left, right)
        return self._or(left, right)

    def _and(self, a, b):
        if a == b:
            return a
        if isinstance(b, Or) and a in _or_operands(b):
            return a
        if isinstance(a, Or) and b in _or_operands(a):
            return b
        if self._empty(a):
            return a
        if self._empty(b):
            return b
        if self._full(a):
            return b
        if self._full(b):
            return a
        return And(a, b)

    def _or(self, a, b):
        if a == b:
            return a
        if isinstance(b, And) and a in _and_operands(b):
            return a
        if isinstance(a, And) and b in _and_operands(a):
            return b
        if self._empty(a):
            return b
        if self._empty(b):
            return a
        if a.kind is Kind.SPATIAL and b.kind is Kind.SPATIAL:
            if self._full(a):
                return a
            if self._full(b):
                return b
        merged = _merge_cubes(Or(a, b))
        return merged if merged is not None else Or(a, b)


def _and_operands(e):
    if isinstance(e, And):
        return _and_operands(e.left) + _and_operands(e.right)
    return [e]


def _or_operands(e):
    if isinstance(e, Or):
        return _or_operands(e.left) + _or_operands(e.right)
    return [e]


def _literal(e):
    if isinstance(e, Leaf):
        return (e, True)
    if isinstance(e, Not) and isinstance(e.child, Leaf):
        return (e.child, False)
    return None


def _cube(e):
    # An And-chain of literals as a tuple of (leaf, sign); None if e is not one.
    lits = []
    for part in _and_operands(e):
        lit = _literal(part)
        if lit is None:
            return None
        lits.append(lit)
    return tuple(lits)


def _cube_form(cube):
    parts = [leaf if sign else Not(leaf) for leaf, sign in cube]
    form = parts[0]
    for part in parts[1:]:
        form = And(form, part)
    return form


def _merge_cubes(e):
    """Merge cubes pairwise where they differ only in one literal's sign.

    Returns None when ``e`` is not a union of cubes or nothing merges. A merge
    that would leave an empty cube (a tautology with no leaves) is skipped.
    """
    cubes = []
    for part in _or_operands(e):
        c = _cube(part)
        if c is None:
            return None
        cubes.append(c)
    merged_any = False
    while True:
        hit = _find_merge(cubes)
        if hit is None:
            break
        i, j, merged = hit
        cubes[i] = merged
        del cubes[j]
        merged_any = True
    # Absorption: a cube whose literals include another cube's is redundant.
    kept = []
    for c in cubes:
        lits = set(c)
        if any(set(d) <= lits for d in kept):
            continue
        kept = [d for d in kept if not lits <= set(d)]
        kept.append(c)
    if not merged_any and len(kept) == len(cubes):
        return None
    return or_all(_cube_form(c) for c in kept)


def _find_merge(cubes):
    for i, a in enumerate(cubes):
        sa = set(a)
        for j in range(i + 1, len(cubes)):
            b = cubes[j]
            if len(a) != len(b) or len(a) < 2:
                continue
            only_a = sa - set(b)
            only_b = set(b) - sa
            if len(only_a) != 1 or len(only_b) != 1:
                continue
            (la, sign_a), = only_a
            (lb, sign_b), = only_b
            if la == lb and sign_a != sign_b:
                return i, j, tuple(lit for lit in a if lit != (la, sign_a))
    return None


def verify(result, target, cap=DEFAULT_CAP):
    """Recheck a result's ``exact`` flag against ``target``."""
    return (evaluate(result.form, result.interp, cap=cap) == target) == result.exact


__all__ = [
    "SynthResult",
    "minterm",
    "projections",
    "simplify",
    "synth_sx_mask",
    "synth_sx_singleton",
    "synth_tx_projection",
    "synth_x",
    "synthesize",
    "unit_generators",
    "verify",
]
