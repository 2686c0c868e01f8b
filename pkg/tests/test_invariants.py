"""Alexander and Jones invariants against frozen table values and
independent brute-force oracles."""

import random
from fractions import Fraction

import pytest

from quasibraid import (
    BraidWord,
    LaurentPoly,
    QPBandWord,
    alexander_genus_bound,
    alexander_polynomial,
    jones_polynomial,
    kauffman_bracket,
    parse_laurent,
    reduced_burau,
)
from quasibraid.invariants import (
    QuarterGridError,
    StrandBoundExceededError,
    burau_alexander_numerator,
    normalize_alexander,
)
from quasibraid.verify import brute_force_bracket


def closure(strands, letters):
    return BraidWord.make(strands, letters)


TABLE = [
    # (strands, word, Delta)
    (2, [1], "1"),  # unknot
    (2, [1, 1, 1], "t^-1 - 1 + t"),  # trefoil
    (3, [1, -2, 1, -2], "-t^-1 + 3 - t"),  # figure eight
    (2, [1, 1, 1, 1, 1], "t^-2 - t^-1 + 1 - t + t^2"),  # cinquefoil
    (2, [1] * 7, "t^-3 - t^-2 + t^-1 - 1 + t - t^2 + t^3"),  # 7_1
]


class TestAlexander:
    @pytest.mark.parametrize("strands,letters,expected", TABLE)
    def test_table_values(self, strands, letters, expected):
        delta = alexander_polynomial(closure(strands, letters))
        assert delta == parse_laurent(expected)

    def test_m8_20(self):
        beta = QPBandWord.make(3, [([2, 1, 1], 2), ([1], 2)]).to_braid_word()
        assert alexander_polynomial(beta) == parse_laurent(
            "t^-2 - 2t^-1 + 3 - 2t + t^2"
        )
        assert alexander_genus_bound(alexander_polynomial(beta)) == Fraction(2)

    def test_split_link_vanishes(self):
        assert alexander_polynomial(closure(3, [1, 1])).is_zero()

    def test_burau_is_representation(self):
        rng = random.Random(8)
        for _ in range(40):
            n = rng.randint(2, 4)
            a = closure(n, [rng.choice([1, -1]) * rng.randint(1, n - 1)
                            for _ in range(4)])
            b = closure(n, [rng.choice([1, -1]) * rng.randint(1, n - 1)
                            for _ in range(4)])
            left = reduced_burau(a * b)
            right = reduced_burau(a) @ reduced_burau(b)
            assert left == right
        w = closure(3, [1, -1])
        assert burau_alexander_numerator(w).is_zero()

    def test_normalize_rejects_bad_knot_polynomial(self):
        with pytest.raises(ArithmeticError):
            normalize_alexander(LaurentPoly.from_pairs([(0, 2)]), 1)


class TestJones:
    def test_unknot_and_trefoils(self):
        assert jones_polynomial(closure(2, [1])).is_one()
        right = jones_polynomial(closure(2, [1, 1, 1])).in_t()
        assert right == parse_laurent("-t^-4 + t^-3 + t^-1")
        left = jones_polynomial(closure(2, [-1, -1, -1])).in_t()
        assert left == parse_laurent("t + t^3 - t^4")

    def test_figure_eight_amphichiral(self):
        v = jones_polynomial(closure(3, [1, -2, 1, -2])).in_t()
        assert v == parse_laurent("t^-2 - t^-1 + 1 - t + t^2")
        assert v == v.reverse()

    def test_hopf_link_quarter_grid(self):
        v = jones_polynomial(closure(2, [1, 1]))
        with pytest.raises(QuarterGridError):
            v.in_t()
        assert "t^(" in str(v)

    def test_strand_bound(self):
        with pytest.raises(StrandBoundExceededError):
            jones_polynomial(BraidWord.identity(11))
        assert jones_polynomial(BraidWord.identity(11), 12) is not None

    def test_bracket_matches_brute_force(self):
        rng = random.Random(9)
        for _ in range(30):
            n = rng.randint(2, 4)
            w = closure(
                n,
                [
                    rng.choice([1, -1]) * rng.randint(1, n - 1)
                    for _ in range(rng.randint(0, 10))
                ],
            )
            assert kauffman_bracket(w) == brute_force_bracket(w)


class TestMarkovInvariance:
    def test_moves_preserve_invariants(self):
        rng = random.Random(10)
        for _ in range(60):
            n = rng.randint(2, 4)
            w = closure(
                n,
                [
                    rng.choice([1, -1]) * rng.randint(1, n - 1)
                    for _ in range(rng.randint(1, 12))
                ],
            )
            g = BraidWord.make(n, (rng.choice([1, -1]) * rng.randint(1, n - 1),))
            moved = w.conjugate(g).stabilize(rng.choice([1, -1]))
            assert alexander_polynomial(moved) == alexander_polynomial(w)
            assert jones_polynomial(moved).quarter == (
                jones_polynomial(w).quarter
            )
