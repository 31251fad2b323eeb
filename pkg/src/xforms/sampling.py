"""Seeded random generators for forms and patterns, used by the test corpus."""

import random

from .expr import And, Leaf, Next, Not, Or
from .pattern import BasePattern, ObjectivePattern, SequenceInstance


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_leaf(rng, dim):
    return Leaf(BasePattern(dim, rng.randrange(1 << dim)))


def random_form(seed, dim, max_depth, *, general=True, leaf_prob=0.3):
    """A kind-correct random form with ``depth(form) <= max_depth`` (a leaf has depth 1).

    With ``general=False`` the result is an sX-form.
    """
    rng = _rng(seed)
    return _form(rng, dim, max_depth, general, leaf_prob)


def _form(rng, dim, depth, general, leaf_prob):
    if depth <= 1 or rng.random() < leaf_prob:
        return random_leaf(rng, dim)
    d = depth - 1
    ops = ["not", "and", "or"] + (["or_g", "next", "next"] if general else [])
    op = rng.choice(ops)
    if op == "not":
        return Not(_form(rng, dim, d, False, leaf_prob))
    if op == "and":
        return And(_form(rng, dim, d, False, leaf_prob), _form(rng, dim, d, False, leaf_prob))
    if op == "or":
        return Or(_form(rng, dim, d, False, leaf_prob), _form(rng, dim, d, False, leaf_prob))
    if op == "or_g":
        return Or(_form(rng, dim, d, True, leaf_prob), _form(rng, dim, d, True, leaf_prob))
    return Next(_form(rng, dim, d, True, leaf_prob), _form(rng, dim, d, True, leaf_prob))


def random_sequence(seed, dim, length):
    rng = _rng(seed)
    return SequenceInstance(dim, tuple(rng.randrange(1 << dim) for _ in range(length)))


def random_pattern(seed, dim, *, max_len=3, max_instances=12, min_instances=1, length=None):
    """A random pattern with ``min_instances..max_instances`` draws (duplicates collapse).

    ``length`` fixes every instance to that length; otherwise lengths are
    drawn from ``1..max_len``.
    """
    rng = _rng(seed)
    k = rng.randint(min_instances, max_instances)
    instances = []
    for _ in range(k):
        n = length if length is not None else rng.randint(1, max_len)
        instances.append(random_sequence(rng, dim, n))
    return ObjectivePattern(dim, instances)


def random_spatial_pattern(seed, dim, *, nonempty=True):
    rng = _rng(seed)
    while True:
        codes = [c for c in range(1 << dim) if rng.random() < 0.5]
        if codes or not nonempty:
            return ObjectivePattern.spatial(dim, codes)
