"""Brute-force reference implementations used only by the tests.

These follow the permutation definitions literally: a shuffle is a
permutation sigma of S_{p+q} increasing on 1..p and on p+1..p+q, and the
shuffled word reads the concatenation u v in the order sigma^{-1}(1), ...,
sigma^{-1}(p+q).  Nothing here shares code with the package.
"""
from collections import Counter
from itertools import permutations


def shuffle_permutations(p, q):
    n = p + q
    for sigma in permutations(range(n)):
        if all(sigma[i] < sigma[i + 1] for i in range(p - 1)) and \
           all(sigma[i] < sigma[i + 1] for i in range(p, n - 1)):
            yield sigma


def _inverse(sigma):
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return inv


def sigma_shuffle(u, v, keep=None):
    """Counter word -> multiplicity; ``keep(inv, p, q)`` filters permutations."""
    x = tuple(u) + tuple(v)
    out = Counter()
    for sigma in shuffle_permutations(len(u), len(v)):
        inv = _inverse(sigma)
        if keep is None or keep(inv, len(u), len(v)):
            out[tuple(x[j] for j in inv)] += 1
    return out


# 0-based versions of the sigma^{-1}(1) / sigma^{-1}(p+q) constraints
CONSTRAINTS = {
    "se": lambda inv, p, q: inv[0] == p and inv[-1] == p + q - 1,
    "ne": lambda inv, p, q: inv[0] == p and inv[-1] == p - 1,
    "nw": lambda inv, p, q: inv[0] == 0 and inv[-1] == p - 1,
    "sw": lambda inv, p, q: inv[0] == 0 and inv[-1] == p + q - 1,
}


def sigma_quadri(tag, u, v):
    return sigma_shuffle(u, v, CONSTRAINTS[tag])


def to_counter(combination):
    return Counter(dict(combination.items()))


def letters(text):
    """'abc' -> (0, 1, 2) without going through the package's Alphabet."""
    return tuple(ord(c) - ord("a") for c in text)


def names(counter):
    return {"".join(chr(ord("a") + i) for i in w): c for w, c in counter.items()}
