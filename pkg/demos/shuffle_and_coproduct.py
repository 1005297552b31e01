"""
Shuffles and deconcatenation
============================

Words are tuples of letter indices; ``word_of_string`` reads them from text.
"""
from math import comb

from shuffle_quadri import deconcat, deconcat_prime, delta, sh, shuffle, word_of_string

ab, cd = word_of_string("ab"), word_of_string("cd")

# the six interleavings of ab and cd
print("ab ⧢ cd =", shuffle(ab, cd))

# repeated letters merge terms, but the coefficients still add up to C(4, 2)
s = shuffle(ab, ab)
print("ab ⧢ ab =", s, "  coefficient sum", s.coefficient_sum(), "=", comb(4, 2))

# deconcatenation cuts a word in every possible place
print("Δ(abc)  =", deconcat(word_of_string("abc")))
print("Δ'(abc) =", deconcat_prime(word_of_string("abc")))

# Δ is a morphism for the shuffle: Δ(a ⧢ b) splits into pieces shuffled pairwise
print("Δ(a ⧢ b) =", delta(sh(word_of_string("a"), word_of_string("b"))))
