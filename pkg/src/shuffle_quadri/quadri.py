"""The four quadri-algebra products on words and the dendriform sums built from them.

Every product is given two ways.  :func:`quadri` follows the recursion on the
lengths of both words; :func:`quadri_oracle` keeps those interleavings whose
first and last letters come from prescribed sides:

===========  ===============  ==============
operation    first letter of  last letter of
===========  ===============  ==============
``NE``       v                u
``SE``       v                v
``SW``       u                v
``NW``       u                u
===========  ===============  ==============

Values involving the empty word come from :data:`UNIT_TABLE` only.
"""
from __future__ import annotations

import enum
from functools import lru_cache, partial

from .core import (Combination, Word, as_combination, bilinear_extend)
from .errors import EmptyWordInOracle, UndefinedOnUnitPair
from .hopf import interleave, interleavings, shuffle, splits


class QuadriOp(enum.Enum):
    NE = "ne"
    SE = "se"
    SW = "sw"
    NW = "nw"

    @property
    def symbol(self):
        return {"ne": "↗", "se": "↘", "sw": "↙", "nw": "↖"}[self.value]


class DerivedOp(enum.Enum):
    SUCC = "succ"
    PREC = "prec"
    VEE = "vee"
    WEDGE = "wedge"
    STAR = "star"

    @property
    def symbol(self):
        return {"succ": "≻", "prec": "≺", "vee": "∨", "wedge": "∧", "star": "⋆"}[self.value]


NE, SE, SW, NW = QuadriOp.NE, QuadriOp.SE, QuadriOp.SW, QuadriOp.NW

DERIVED_PARTS = {
    DerivedOp.SUCC: (NE, SE),
    DerivedOp.PREC: (NW, SW),
    DerivedOp.VEE: (SE, SW),
    DerivedOp.WEDGE: (NE, NW),
    DerivedOp.STAR: (NE, SE, SW, NW),
}

# (op, side of the unit) -> True if the product returns the other factor, else 0.
# "left" means 1 op v, "right" means v op 1.  1 op 1 is undefined.
UNIT_TABLE = {
    (NE, "left"): False, (NE, "right"): False,
    (SE, "left"): True, (SE, "right"): False,
    (SW, "left"): False, (SW, "right"): False,
    (NW, "left"): False, (NW, "right"): True,
}

# (first letter from v?, last letter from v?) for the constrained-shuffle form
_PROVENANCE = {
    NE: (True, False),
    SE: (True, True),
    SW: (False, True),
    NW: (False, False),
}

# NE(u, v) = SW(v, u) and SE(u, v) = NW(v, u)
_MIRROR = {NE: SW, SW: NE, SE: NW, NW: SE}


def quadri(tag: QuadriOp, u: Word, v: Word) -> Combination:
    """The quadri product ``u tag v`` for ``u (x) v`` in ``H+ (x)bar H+``."""
    if not u and not v:
        raise UndefinedOnUnitPair(tag.value)
    if not u:
        return Combination.word(v) if UNIT_TABLE[(tag, "left")] else Combination.zero()
    if not v:
        return Combination.word(u) if UNIT_TABLE[(tag, "right")] else Combination.zero()
    return _quadri_nonempty(tag, u, v)


@lru_cache(maxsize=None)
def _quadri_nonempty(tag, u, v):
    p, q = len(u), len(v)
    if p >= 2 and q == 1:
        return _quadri_nonempty(_MIRROR[tag], v, u)
    if p == 1:
        # u is a letter; v = c theta d when q >= 2
        if tag is NE:
            return Combination.word(v + u)
        if tag is SW:
            return Combination.word(u + v)
        if tag is NW or q == 1:
            return Combination.zero()
        return shuffle(u, v[1:-1]).wrapped(v[:1], v[-1:])
    # u = a w b, v = c theta d
    a, w, b = u[:1], u[1:-1], u[-1:]
    c, theta, d = v[:1], v[1:-1], v[-1:]
    if tag is NE:
        return shuffle(a + w, theta + d).wrapped(c, b)
    if tag is SE:
        return shuffle(u, theta).wrapped(c, d)
    if tag is SW:
        return shuffle(w + b, c + theta).wrapped(a, d)
    return shuffle(w, v).wrapped(a, b)


def quadri_oracle(tag: QuadriOp, u: Word, v: Word) -> Combination:
    """``u tag v`` as the sum of interleavings with constrained end letters."""
    if not u or not v:
        raise EmptyWordInOracle(tag.value)
    first_from_v, last_from_v = _PROVENANCE[tag]
    n = len(u) + len(v)
    acc: dict = {}
    for positions in interleavings(len(u), len(v)):
        if (positions[0] != 0) != first_from_v:
            continue
        if (positions[-1] != n - 1) != last_from_v:
            continue
        w = interleave(u, v, positions)
        acc[w] = acc.get(w, 0) + 1
    return Combination._raw(acc)


def derived(tag: DerivedOp, u: Word, v: Word) -> Combination:
    """A sum of quadri products: ``succ = ne + se``, ``vee = se + sw``, ..."""
    acc: dict = {}
    for part in DERIVED_PARTS[tag]:
        for w, c in quadri(part, u, v)._terms.items():
            acc[w] = acc.get(w, 0) + c
    return Combination._raw(acc)


def operation(name: str):
    """Word-level function for an operation name such as ``"ne"`` or ``"vee"``."""
    try:
        return partial(quadri, QuadriOp(name))
    except ValueError:
        return partial(derived, DerivedOp(name))


def _lift(word_op, name):
    def op(x, y) -> Combination:
        return bilinear_extend(word_op, as_combination(x), as_combination(y))
    op.__name__ = op.__qualname__ = name
    op.__doc__ = f"``{name}`` extended bilinearly; arguments are words or Combinations."
    return op


ne = _lift(partial(quadri, NE), "ne")
se = _lift(partial(quadri, SE), "se")
sw = _lift(partial(quadri, SW), "sw")
nw = _lift(partial(quadri, NW), "nw")
succ = _lift(partial(derived, DerivedOp.SUCC), "succ")
prec = _lift(partial(derived, DerivedOp.PREC), "prec")
vee = _lift(partial(derived, DerivedOp.VEE), "vee")
wedge = _lift(partial(derived, DerivedOp.WEDGE), "wedge")
star = _lift(partial(derived, DerivedOp.STAR), "star")


def sweedler_sum(op_left, op_right, u: Word, v, w) -> Combination:
    """``sum over u = u1 u2 of op_left(u1, v) . op_right(u2, w)``.

    ``op_left`` and ``op_right`` take a word and a word or Combination (the
    lifted operations such as :func:`se` or :func:`~shuffle_quadri.hopf.sh`);
    the two factors are multiplied by concatenation.  Both end splits
    ``u1 = 1`` and ``u2 = 1`` are included.
    """
    total = Combination.zero()
    for u1, u2 in splits(u):
        total = total + op_left(u1, v) * op_right(u2, w)
    return total


def clear_caches():
    _quadri_nonempty.cache_clear()
