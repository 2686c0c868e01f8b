"""Braid words, permutations, closures, Markov moves, strand deletion."""

import random

import pytest

from quasibraid import (
    BraidWord,
    WordSyntaxError,
    band_generator_letters,
    format_word,
    parse_word,
)


class TestWordAlgebra:
    def test_inverse_and_free_reduce(self):
        w = BraidWord.make(3, [1, 2, -1])
        assert (w * w.inverse()).free_reduce() == BraidWord.identity(3)
        assert BraidWord.make(2, [1, -1, 1]).free_reduce().letters == (1,)

    def test_power(self):
        w = BraidWord.make(2, [1])
        assert w.power(3).letters == (1, 1, 1)
        assert w.power(-2).letters == (-1, -1)
        assert w.power(0) == BraidWord.identity(2)

    def test_strand_range_checked(self):
        with pytest.raises(ValueError):
            BraidWord.make(2, [2])
        with pytest.raises(ValueError):
            BraidWord.make(2, [0])


class TestPermutation:
    def test_generator_permutation(self):
        p = BraidWord.make(3, [1]).permutation()
        assert p(1) == 2 and p(2) == 1 and p(3) == 3

    def test_left_to_right_composition(self):
        rng = random.Random(4)
        for _ in range(100):
            n = rng.randint(2, 5)
            a = BraidWord.make(n, [rng.choice([1, -1]) * rng.randint(1, n - 1)
                                   for _ in range(5)])
            b = BraidWord.make(n, [rng.choice([1, -1]) * rng.randint(1, n - 1)
                                   for _ in range(5)])
            assert (a * b).permutation() == a.permutation().then(
                b.permutation()
            )

    def test_cycle_type(self):
        w = BraidWord.make(3, [1, 1, 1, 2])
        assert w.permutation().cycle_type() == (3,)
        assert BraidWord.make(3, [1, 1, 1]).permutation().cycle_type() == (
            1,
            2,
        )


class TestClosure:
    def test_components_and_self_linking(self):
        s = BraidWord.make(2, [1, 1, 1]).closure_summary()
        assert s.components == 1
        assert s.exponent_sum == 3
        assert s.self_linking == 1
        unknot = BraidWord.make(2, [1]).closure_summary()
        assert unknot.components == 1 and unknot.self_linking == -1

    def test_markov_moves_preserve_components(self):
        rng = random.Random(5)
        for _ in range(100):
            n = rng.randint(2, 5)
            w = BraidWord.make(
                n,
                [
                    rng.choice([1, -1]) * rng.randint(1, n - 1)
                    for _ in range(rng.randint(0, 10))
                ],
            )
            k = len(w.components())
            g = BraidWord.make(n, (rng.randint(1, n - 1),))
            assert len(w.conjugate(g).components()) == k
            assert len(w.stabilize(rng.choice([1, -1])).components()) == k


class TestDeletion:
    def test_delete_split_unknot(self):
        # closure of sigma_1^3 in B_3 is a trefoil plus a split unknot.
        w = BraidWord.make(3, [1, 1, 1])
        assert w.components() == [(1, 2), (3,)]
        kept = w.delete_components([3])
        assert kept.strands == 2 and kept.letters == (1, 1, 1)
        only_unknot = w.delete_components([1])
        assert only_unknot.strands == 1 and only_unknot.letters == ()

    def test_delete_reindexes(self):
        # sigma_2^3 in B_3: unknot on strand 1, trefoil on strands 2,3.
        w = BraidWord.make(3, [2, 2, 2])
        kept = w.delete_components([1])
        assert kept.strands == 2 and kept.letters == (1, 1, 1)

    def test_split_union_random(self):
        rng = random.Random(6)
        for _ in range(50):
            a = BraidWord.make(
                2, [rng.choice([1, -1]) for _ in range(rng.randint(1, 6))]
            )
            # Place a on strands 3,4 of B_4, leaving 1,2 as split strands.
            shifted = BraidWord.make(4, [g + 2 * (1 if g > 0 else -1)
                                         for g in a.letters])
            if len(shifted.components()) != 3:
                continue
            kept = shifted.delete_components([1, 2])
            assert kept.strands == 2 and kept.letters == a.letters


class TestGrammarAndBands:
    def test_band_generator(self):
        assert band_generator_letters(1, 3, 3) == (1, 2, -1)
        assert band_generator_letters(2, 3, 3) == (2,)

    def test_parse_plain_and_band(self):
        w = parse_word("1 -2 B(1,3) B(1,3)^-1 1^3", 3)
        assert w.letters == (1, -2, 1, 2, -1, 1, -2, -1, 1, 1, 1)

    def test_parse_errors_carry_position(self):
        with pytest.raises(WordSyntaxError) as err:
            parse_word("1 oops", 3)
        assert err.value.position == 1
        with pytest.raises(WordSyntaxError):
            parse_word("3", 3)

    def test_format_roundtrip(self):
        w = BraidWord.make(4, [1, -3, 2])
        assert parse_word(format_word(w), 4) == w

    def test_json_roundtrip(self):
        w = BraidWord.make(4, [1, -3, 2])
        assert BraidWord.from_json(w.to_json()) == w
