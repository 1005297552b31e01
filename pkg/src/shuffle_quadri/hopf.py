"""Concatenation, shuffle product and the deconcatenation coproducts on T(V)."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .core import (Combination, TensorCombination, Word, as_combination,
                   bilinear_extend, linear_extend)
from .errors import UnitNotInHPlus


def concat(u: Word, v: Word) -> Word:
    return u + v


@lru_cache(maxsize=None)
def shuffle(u: Word, v: Word) -> Combination:
    """Shuffle product of two words, by the left recursion

    ``au sh bv = a(u sh bv) + b(au sh v)``,  ``1 sh v = v sh 1 = v``.
    """
    if not u:
        return Combination.word(v)
    if not v:
        return Combination.word(u)
    acc: dict = {}
    for head, rest in ((u[:1], shuffle(u[1:], v)), (v[:1], shuffle(u, v[1:]))):
        for w, c in rest._terms.items():
            w = head + w
            acc[w] = acc.get(w, 0) + c
    return Combination._raw(acc)


def interleavings(p: int, q: int):
    """Positions occupied by the first word in each (p, q)-interleaving.

    Each tuple is the image of ``1..p`` under one shuffle permutation of
    ``Sh(p, q)``, so the ``C(p+q, p)`` tuples are in bijection with ``Sh(p, q)``.
    """
    return combinations(range(p + q), p)


def interleave(u: Word, v: Word, positions) -> Word:
    out = [None] * (len(u) + len(v))
    chosen = set(positions)
    iu = iter(u)
    iv = iter(v)
    for i in range(len(out)):
        out[i] = next(iu) if i in chosen else next(iv)
    return tuple(out)


def shuffle_enumerated(u: Word, v: Word) -> Combination:
    """Shuffle product by direct enumeration of interleaving masks (oracle)."""
    acc: dict = {}
    for positions in interleavings(len(u), len(v)):
        w = interleave(u, v, positions)
        acc[w] = acc.get(w, 0) + 1
    return Combination._raw(acc)


def deconcat(u: Word) -> TensorCombination:
    """All ``len(u) + 1`` splits ``u = u1 u2`` as ``sum u1 (x) u2``."""
    return TensorCombination._raw({(u[:i], u[i:]): 1 for i in range(len(u) + 1)})


def deconcat_prime(u: Word) -> TensorCombination:
    """Deconcatenation without the ``u (x) 1`` term; defined on H+ only."""
    if not u:
        raise UnitNotInHPlus("deconcat_prime")
    return TensorCombination._raw({(u[:i], u[i:]): 1 for i in range(len(u))},
                                  reduced=True)


def deconcat_second(u: Word) -> TensorCombination:
    """Deconcatenation without the ``1 (x) u`` term; defined on H+ only."""
    if not u:
        raise UnitNotInHPlus("deconcat_second")
    return TensorCombination._raw({(u[:i], u[i:]): 1 for i in range(1, len(u) + 1)},
                                  reduced=True)


def splits(u: Word):
    """``(u1, u2)`` for every cut ``u = u1 u2``, from ``(1, u)`` to ``(u, 1)``."""
    return [(u[:i], u[i:]) for i in range(len(u) + 1)]


# Linear extensions to Combinations.  Arguments may be words or Combinations.

def sh(x, y) -> Combination:
    return bilinear_extend(shuffle, as_combination(x), as_combination(y))


def conc(x, y) -> Combination:
    return as_combination(x) * as_combination(y)


def delta(x) -> TensorCombination:
    return linear_extend(deconcat, as_combination(x)) or TensorCombination.zero()


def delta_prime(x) -> TensorCombination:
    out = linear_extend(deconcat_prime, as_combination(x)) or TensorCombination.zero()
    out.reduced = True
    return out


def delta_second(x) -> TensorCombination:
    out = linear_extend(deconcat_second, as_combination(x)) or TensorCombination.zero()
    out.reduced = True
    return out


def clear_caches():
    shuffle.cache_clear()
