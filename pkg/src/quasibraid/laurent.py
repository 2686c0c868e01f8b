"""Exact integer Laurent polynomials in one variable, and matrices over them.

Coefficients are Python ints, so there is no overflow: Alexander-polynomial
determinants for words of length ~40 routinely exceed 64 bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class InexactDivisionError(ArithmeticError):
    """Raised when exact_divide is asked for a quotient that does not exist."""


@dataclass(frozen=True)
class LaurentPoly:
    """An integer Laurent polynomial  c_0 t^m + c_1 t^(m+1) + ...

    Stored as the minimum exponent ``min_exp`` together with the coefficient
    sequence in ascending order.  Invariant: the first and last stored
    coefficients are nonzero, except for the zero polynomial which is
    ``LaurentPoly(0, ())``.
    """

    min_exp: int
    coeffs: tuple[int, ...]

    # -- construction -----------------------------------------------------

    @classmethod
    def make(cls, min_exp: int, coeffs: Iterable[int]) -> "LaurentPoly":
        """Build a polynomial, trimming zero coefficients at both ends."""
        c = list(coeffs)
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        hi = len(c)
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            return cls(0, ())
        return cls(min_exp + lo, tuple(c[lo:hi]))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(0, ())

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.make(0, [c])

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.constant(1)

    @classmethod
    def t(cls, exp: int = 1, coeff: int = 1) -> "LaurentPoly":
        """The monomial ``coeff * t^exp``."""
        return cls.make(exp, [coeff])

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "LaurentPoly":
        """Build from (exponent, coefficient) pairs; repeats accumulate."""
        d: dict[int, int] = {}
        for e, c in pairs:
            d[e] = d.get(e, 0) + c
        if not d:
            return cls.zero()
        lo = min(d)
        hi = max(d)
        return cls.make(lo, [d.get(e, 0) for e in range(lo, hi + 1)])

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no degree")
        return self.min_exp + len(self.coeffs) - 1

    @property
    def breadth(self) -> int:
        """Top exponent minus bottom exponent (0 for monomials and zero)."""
        if self.is_zero():
            return 0
        return len(self.coeffs) - 1

    def coeff(self, exp: int) -> int:
        i = exp - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def evaluate(self, x: int) -> int | float:
        """Evaluate at a nonzero number (negative exponents need x != 0)."""
        return sum(c * x**e for e, c in self.items())

    def items(self) -> list[tuple[int, int]]:
        return [
            (self.min_exp + i, c) for i, c in enumerate(self.coeffs) if c != 0
        ]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        c = [self.coeff(e) + other.coeff(e) for e in range(lo, hi + 1)]
        return LaurentPoly.make(lo, c)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.min_exp, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LaurentPoly.make(self.min_exp + other.min_exp, out)

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly.make(self.min_exp, [c * a for a in self.coeffs])

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return LaurentPoly(self.min_exp + k, self.coeffs)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers only for monomials; use shift")
        out = LaurentPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def exact_divide(self, q: "LaurentPoly") -> "LaurentPoly":
        """Return p/q when q divides p in the Laurent ring, else raise.

        Since every t^k is a unit, q | p iff the ordinary-polynomial part of q
        (nonzero constant term) divides that of p over the integers.
        """
        if q.is_zero():
            raise InexactDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        rem = list(self.coeffs)
        div = q.coeffs
        if len(rem) < len(div):
            raise InexactDivisionError(f"{self} is not divisible by {q}")
        quot = [0] * (len(rem) - len(div) + 1)
        lead = div[-1]
        for i in range(len(quot) - 1, -1, -1):
            top = rem[i + len(div) - 1]
            if top % lead != 0:
                raise InexactDivisionError(f"{self} is not divisible by {q}")
            quot[i] = top // lead
            if quot[i]:
                for j, d in enumerate(div):
                    rem[i + j] -= quot[i] * d
        if any(rem):
            raise InexactDivisionError(f"{self} is not divisible by {q}")
        return LaurentPoly.make(self.min_exp - q.min_exp, quot)

    def reverse(self) -> "LaurentPoly":
        """Substitute t -> 1/t."""
        if self.is_zero():
            return self
        return LaurentPoly(-self.max_exp, tuple(reversed(self.coeffs)))

    # -- presentation -----------------------------------------------------

    def __str__(self) -> str:
        return format_laurent(self)

    def to_json(self) -> dict:
        return {"min_exp": self.min_exp, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        return cls.make(int(data["min_exp"]), [int(c) for c in data["coeffs"]])


def format_laurent(p: LaurentPoly, var: str = "t") -> str:
    """Human form, ascending exponents: ``t^-1 - 1 + t``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for e, c in p.items():
        if e == 0:
            term = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}"
            power = var if e == 1 else f"{var}^{e}"
            term = f"{mag}{power}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def parse_laurent(text: str, var: str = "t") -> LaurentPoly:
    """Parse the human form produced by :func:`format_laurent`."""
    cleaned = text.replace("-", " - ").replace("+", " + ")
    # Protect exponents like t^ - 3 that the line above just broke apart.
    tokens = cleaned.split()
    pairs: list[tuple[int, int]] = []
    sign = 1
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok == "+":
            sign = 1
            i += 1
            continue
        if tok == "-":
            sign = -1
            i += 1
            continue
        coeff = 1
        body = tok
        if var in body:
            head, _, tail = body.partition(var)
            coeff = int(head) if head else 1
            if tail.startswith("^"):
                exp_text = tail[1:]
                if not exp_text and i + 2 < len(tokens) and tokens[i + 1] == "-":
                    exp = -int(tokens[i + 2])
                    i += 2
                elif not exp_text and i + 1 < len(tokens):
                    exp = int(tokens[i + 1])
                    i += 1
                else:
                    exp = int(exp_text)
            else:
                exp = 1
        else:
            coeff = int(body)
            exp = 0
        pairs.append((exp, sign * coeff))
        sign = 1
        i += 1
    return LaurentPoly.from_pairs(pairs)


# -- matrices -------------------------------------------------------------


@dataclass(frozen=True)
class LaurentMatrix:
    """A square matrix of Laurent polynomials."""

    rows: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[LaurentPoly]]) -> "LaurentMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        one, zero = LaurentPoly.one(), LaurentPoly.zero()
        return cls.from_lists(
            [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    @property
    def size(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        n = self.size
        if other.size != n:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = LaurentPoly.zero()
                for k in range(n):
                    a = self.rows[i][k]
                    b = other.rows[k][j]
                    if not (a.is_zero() or b.is_zero()):
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix.from_lists(out)

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        n = self.size
        if other.size != n:
            raise ValueError("dimension mismatch")
        return LaurentMatrix.from_lists(
            [
                [self.rows[i][j] - other.rows[i][j] for j in range(n)]
                for i in range(n)
            ]
        )

    def determinant(self) -> LaurentPoly:
        """Fraction-free (Bareiss) determinant over the Laurent ring.

        Entries are shifted to ordinary polynomials first so that every
        intermediate division is an exact division of integer polynomials.
        """
        n = self.size
        if n == 0:
            return LaurentPoly.one()
        # Clear denominators: multiply row i by t^(-m_i), remember total shift.
        shift = 0
        a: list[list[LaurentPoly]] = []
        for row in self.rows:
            m = min((p.min_exp for p in row if not p.is_zero()), default=0)
            if m < 0:
                shift += m
                a.append([p.shift(-m) for p in row])
            else:
                a.append(list(row))
        sign = 1
        prev = LaurentPoly.one()
        for k in range(n - 1):
            if a[k][k].is_zero():
                pivot_row = next(
                    (i for i in range(k + 1, n) if not a[i][k].is_zero()), None
                )
                if pivot_row is None:
                    return LaurentPoly.zero()
                a[k], a[pivot_row] = a[pivot_row], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                    a[i][j] = num.exact_divide(prev)
                a[i][k] = LaurentPoly.zero()
            prev = a[k][k]
        det = a[n - 1][n - 1]
        if sign < 0:
            det = -det
        return det.shift(shift)
