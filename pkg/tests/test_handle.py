"""Dehornoy handle reduction: the braid word problem."""

import random

import pytest

from quasibraid import (
    BraidWord,
    BudgetExceededError,
    braid_equal,
    handle_reduce,
    is_trivial_braid,
)


def test_braid_relations_are_trivial():
    # sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2
    w = BraidWord.make(3, [1, 2, 1, -2, -1, -2])
    assert is_trivial_braid(w)
    # far commutation
    far = BraidWord.make(4, [1, 3, -1, -3])
    assert is_trivial_braid(far)


def test_nontrivial_words():
    assert not is_trivial_braid(BraidWord.make(2, [1]))
    assert not is_trivial_braid(BraidWord.make(3, [1, 2]))
    assert not is_trivial_braid(BraidWord.make(3, [1, -2]))


def test_reduced_word_is_handle_free():
    w = BraidWord.make(3, [1, 2, -1, -2, 1, 2])
    r = handle_reduce(w)
    # A handle-free word is either empty or has a main generator appearing
    # with only one sign; check triviality agrees with exponent sum here.
    assert is_trivial_braid(w) == (len(r) == 0)


def test_random_trivial_words():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(2, 5)
        u = BraidWord.make(
            n,
            [
                rng.choice([1, -1]) * rng.randint(1, n - 1)
                for _ in range(rng.randint(0, 8))
            ],
        )
        assert is_trivial_braid(u * u.inverse())
        # conjugates of the identity are the identity
        g = BraidWord.make(n, (rng.randint(1, n - 1),))
        assert braid_equal(u.conjugate(g).conjugate(g), u.conjugate(g * g))


def test_braid_equal_separates():
    assert braid_equal(
        BraidWord.make(3, [1, 2, 1]), BraidWord.make(3, [2, 1, 2])
    )
    assert not braid_equal(
        BraidWord.make(3, [1, 2]), BraidWord.make(3, [2, 1])
    )


def test_budget_exceeded():
    w = BraidWord.make(3, [1, 2, 1, -2, -1, -2])
    with pytest.raises(BudgetExceededError):
        handle_reduce(w, budget=0)
