from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from shuffle_quadri import (Combination, TensorCombination, UnitNotInHPlus, deconcat,
                            deconcat_prime, deconcat_second, delta, sh, shuffle,
                            shuffle_enumerated, tensor, word_of_string)
from shuffle_quadri.core import EMPTY

from oracles import letters, names, sigma_shuffle, to_counter

words = st.lists(st.integers(0, 1), max_size=4).map(tuple)
nonempty = st.lists(st.integers(0, 1), min_size=1, max_size=4).map(tuple)


def W(text):
    return Combination.word(word_of_string(text))


def right_shuffle(u, v):
    """ua ⧢ vb = (u ⧢ vb) a + (ua ⧢ v) b, independent of the package's recursion."""
    if not u:
        return Combination.word(v)
    if not v:
        return Combination.word(u)
    return right_shuffle(u[:-1], v) * Combination.word(u[-1:]) + \
        right_shuffle(u, v[:-1]) * Combination.word(v[-1:])


def all_words(k, n):
    return [w for m in range(n + 1) for w in product(range(k), repeat=m)]


def test_shuffle_ab_cd():
    expected = {"abcd": 1, "acbd": 1, "acdb": 1, "cabd": 1, "cadb": 1, "cdab": 1}
    assert names(to_counter(shuffle(letters("ab"), letters("cd")))) == expected


def test_shuffle_repeated_letters():
    assert shuffle(letters("ab"), letters("ab")) == W("aabb").scale(4) + W("abab").scale(2)
    assert shuffle(letters("aa"), letters("aa")) == W("aaaa").scale(6)


def test_shuffle_unit():
    assert shuffle(EMPTY, letters("ab")) == W("ab")
    assert shuffle(letters("ab"), EMPTY) == W("ab")
    assert shuffle(EMPTY, EMPTY) == Combination.one()


@pytest.mark.parametrize("u, v", [(u, v) for u in all_words(2, 3) for v in all_words(2, 3)
                                  if len(u) + len(v) <= 5])
def test_shuffle_matches_permutation_oracle(u, v):
    assert to_counter(shuffle(u, v)) == sigma_shuffle(u, v)
    assert shuffle_enumerated(u, v) == shuffle(u, v)


@given(words, words)
def test_left_and_right_recursions_agree(u, v):
    assert shuffle(u, v) == right_shuffle(u, v)


@given(words, words)
def test_shuffle_commutative(u, v):
    assert shuffle(u, v) == shuffle(v, u)


@given(words, words, words)
def test_shuffle_associative(u, v, w):
    assert sh(shuffle(u, v), w) == sh(u, shuffle(v, w))


def test_shuffle_grading_and_count():
    for u in all_words(3, 3):
        for v in all_words(3, 3):
            s = shuffle(u, v)
            assert s.degrees() <= {len(u) + len(v)}
            assert s.coefficient_sum() == comb(len(u) + len(v), len(u))


def test_deconcat_example():
    ab = letters("ab")
    assert deconcat(ab) == TensorCombination({((), ab): 1, ((0,), (1,)): 1, (ab, ()): 1})
    assert deconcat(EMPTY) == TensorCombination.pure(EMPTY, EMPTY)


def test_reduced_coproducts():
    ab = letters("ab")
    assert deconcat_prime(ab) == TensorCombination({((), ab): 1, ((0,), (1,)): 1})
    assert deconcat_second(ab) == TensorCombination({((0,), (1,)): 1, (ab, ()): 1})
    assert deconcat_prime(ab).reduced and deconcat_second(ab).reduced
    assert deconcat_prime((0,)) == TensorCombination.pure((), (0,))
    for f in (deconcat_prime, deconcat_second):
        with pytest.raises(UnitNotInHPlus):
            f(EMPTY)


def test_delta_is_linear():
    x = W("ab") - W("c").scale(2)
    assert delta(x) == deconcat(letters("ab")) - deconcat(letters("c")).scale(2)
    assert delta(Combination.zero()).is_zero()


def _delta3(u):
    return TensorCombination({(u[:i], u[i:j], u[j:]): 1
                              for i in range(len(u) + 1) for j in range(i, len(u) + 1)})


@pytest.mark.parametrize("u", all_words(2, 5))
def test_coassociativity(u):
    left = deconcat(u).expand(0, deconcat)
    right = deconcat(u).expand(1, deconcat)
    assert left == right == _delta3(u)


@given(words, words)
def test_hopf_compatibility(u, v):
    expected = TensorCombination.zero()
    for (u1, u2), a in deconcat(u).items():
        for (v1, v2), b in deconcat(v).items():
            expected = expected + tensor(shuffle(u1, v1), shuffle(u2, v2)).scale(a * b)
    assert delta(shuffle(u, v)) == expected


@given(words, words)
def test_infinitesimal_relation(u, v):
    one = Combination.one()
    lhs = deconcat(u + v)
    rhs = deconcat(u) * tensor(one, Combination.word(v)) - TensorCombination.pure(u, v) + \
        tensor(Combination.word(u), one) * deconcat(v)
    assert lhs == rhs
