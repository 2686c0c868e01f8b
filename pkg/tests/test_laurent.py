"""Exact Laurent arithmetic, parsing/formatting, and determinants."""

import random

import pytest

from quasibraid import (
    InexactDivisionError,
    LaurentMatrix,
    LaurentPoly,
    format_laurent,
    parse_laurent,
)


def poly(*pairs):
    return LaurentPoly.from_pairs(pairs)


class TestArithmetic:
    def test_constructors_normalize(self):
        assert LaurentPoly.make(0, [0, 0]) == LaurentPoly.zero()
        assert LaurentPoly.make(-2, [0, 1, 0]) == LaurentPoly.t(-1)
        assert LaurentPoly.one() == LaurentPoly.constant(1)

    def test_ring_identities_random(self):
        rng = random.Random(1)

        def rand():
            return LaurentPoly.from_pairs(
                [
                    (rng.randint(-4, 4), rng.randint(-5, 5))
                    for _ in range(rng.randint(0, 5))
                ]
            )

        for _ in range(200):
            a, b, c = rand(), rand(), rand()
            assert a + b == b + a
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert a - a == LaurentPoly.zero()
            assert a * LaurentPoly.one() == a

    def test_shift_pow_evaluate(self):
        p = poly((-1, 1), (0, -1), (1, 1))  # t^-1 - 1 + t
        assert p.shift(2) == poly((1, 1), (2, -1), (3, 1))
        assert p ** 2 == p * p
        assert p ** 0 == LaurentPoly.one()
        assert p.evaluate(1) == 1
        assert p.evaluate(2) == 1.5

    def test_reverse_and_breadth(self):
        p = poly((-2, 1), (1, 3))
        assert p.reverse() == poly((-1, 3), (2, 1))
        assert p.breadth == 3
        assert LaurentPoly.zero().breadth == 0

    def test_exact_divide(self):
        num = poly((0, -1), (3, 1))  # t^3 - 1
        den = poly((0, -1), (1, 1))  # t - 1
        assert num.exact_divide(den) == poly((0, 1), (1, 1), (2, 1))
        with pytest.raises(InexactDivisionError):
            poly((0, 1), (1, 1)).exact_divide(poly((0, 2)))
        with pytest.raises(InexactDivisionError):
            poly((0, 1)).exact_divide(den)

    def test_divide_roundtrip_random(self):
        rng = random.Random(2)
        for _ in range(100):
            a = LaurentPoly.from_pairs(
                [(rng.randint(-3, 3), rng.randint(-4, 4)) for _ in range(4)]
            )
            b = LaurentPoly.from_pairs(
                [(rng.randint(-3, 3), rng.randint(-4, 4)) for _ in range(3)]
            )
            if a.is_zero() or b.is_zero():
                continue
            assert (a * b).exact_divide(b) == a


class TestFormat:
    def test_format(self):
        assert format_laurent(poly((-1, 1), (0, -1), (1, 1))) == "t^-1 - 1 + t"
        assert format_laurent(LaurentPoly.zero()) == "0"
        assert format_laurent(poly((2, -3))) == "-3t^2"

    def test_parse_roundtrip(self):
        for text in ["t^-1 - 1 + t", "1", "0", "-3t^2", "t^-2 - 2t^-1 + 3"]:
            assert format_laurent(parse_laurent(text)) == text

    def test_json_roundtrip(self):
        p = poly((-2, 1), (0, 3), (5, -7))
        assert LaurentPoly.from_json(p.to_json()) == p


class TestMatrix:
    def test_determinant_2x2(self):
        t = LaurentPoly.t
        m = LaurentMatrix.from_lists([[t(1), t(0)], [t(-1), t(2)]])
        assert m.determinant() == poly((3, 1), (-1, -1))

    def test_determinant_multiplicative(self):
        rng = random.Random(3)

        def rand_matrix(n):
            return LaurentMatrix.from_lists(
                [
                    [
                        LaurentPoly.from_pairs(
                            [(rng.randint(-2, 2), rng.randint(-3, 3))]
                        )
                        for _ in range(n)
                    ]
                    for _ in range(n)
                ]
            )

        for _ in range(25):
            a, b = rand_matrix(3), rand_matrix(3)
            assert (a @ b).determinant() == a.determinant() * b.determinant()

    def test_identity(self):
        m = LaurentMatrix.identity(4)
        assert m.determinant() == LaurentPoly.one()
