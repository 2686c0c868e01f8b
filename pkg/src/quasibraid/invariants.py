"""Link invariants of braid closures.

Alexander polynomials come from the reduced Burau representation: working in
the quotient of the unreduced Burau module by its fixed vector, with
Delta(t) = det(rho(w) - I) * (t-1) / (t^n - 1) up to units, then normalized
to be symmetric with Delta(1) = 1 for knots.

Jones polynomials come from the Kauffman bracket, computed by transfer
through the Temperley-Lieb algebra: a braid word maps to a sparse linear
combination of planar diagrams with coefficients in Z[A, A^-1], and the trace
closure turns loops into factors of delta = -A^2 - A^-2.  The final variable
change t = A^-4 lands on the t^(1/4) exponent grid, integral in t for knots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braidword import BraidWord
from .laurent import LaurentMatrix, LaurentPoly, format_laurent


def _unreduced_burau_entries(n: int, letter: int) -> list[list[LaurentPoly]]:
    zero, one = LaurentPoly.zero(), LaurentPoly.one()
    m = [[one if r == c else zero for c in range(n)] for r in range(n)]
    i = abs(letter) - 1
    if letter > 0:
        # rows i, i+1 -> [[1-t, t], [1, 0]]
        m[i][i] = LaurentPoly.from_pairs([(0, 1), (1, -1)])
        m[i][i + 1] = LaurentPoly.t(1)
        m[i + 1][i] = one
        m[i + 1][i + 1] = zero
    else:
        # inverse block [[0, 1], [t^-1, 1 - t^-1]]
        m[i][i] = zero
        m[i][i + 1] = one
        m[i + 1][i] = LaurentPoly.t(-1)
        m[i + 1][i + 1] = LaurentPoly.from_pairs([(0, 1), (-1, -1)])
    return m


def _quotient(m: list[list[LaurentPoly]]) -> LaurentMatrix:
    """Action on C^n / <(1,...,1)> in the basis of images of e_1..e_{n-1}."""
    n = len(m)
    return LaurentMatrix.from_lists(
        [[m[r][c] - m[n - 1][c] for c in range(n - 1)] for r in range(n - 1)]
    )


def reduced_burau(w: BraidWord) -> LaurentMatrix:
    """The (n-1)x(n-1) reduced Burau matrix of a word in B_n, n >= 2."""
    n = w.strands
    if n < 2:
        raise ValueError("reduced Burau needs at least 2 strands")
    out = LaurentMatrix.identity(n - 1)
    for g in w.letters:
        out = out @ _quotient(_unreduced_burau_entries(n, g))
    return out


def burau_alexander_numerator(w: BraidWord) -> LaurentPoly:
    """det(reduced_burau(w) - I), the unnormalized Alexander determinant."""
    n = w.strands
    return (reduced_burau(w) - LaurentMatrix.identity(n - 1)).determinant()


def normalize_alexander(p: LaurentPoly, components: int) -> LaurentPoly:
    """Center and sign-fix an Alexander polynomial computed up to units.

    Knots (components == 1) get the symmetric normalization with
    Delta(1) = 1.  Links may have odd breadth or vanish identically; they are
    centered as symmetrically as the integer exponent grid allows, with
    positive leading coefficient, and Delta(1) = 0 is expected, not an error.
    """
    if p.is_zero():
        return p
    centered = p.shift(-(p.breadth // 2) - p.min_exp)
    if components == 1:
        at_one = centered.evaluate(1)
        if at_one not in (1, -1):
            raise ArithmeticError(
                f"knot Alexander polynomial has Delta(1) = {at_one}"
            )
        return centered if at_one == 1 else -centered
    return centered if centered.coeffs[-1] > 0 else -centered


def alexander_polynomial(w: BraidWord) -> LaurentPoly:
    """Normalized Alexander polynomial of the closure of ``w``."""
    n = w.strands
    if n == 1:
        return LaurentPoly.one()
    det = burau_alexander_numerator(w)
    if det.is_zero():
        return det
    t_minus_1 = LaurentPoly.from_pairs([(1, 1), (0, -1)])
    t_n_minus_1 = LaurentPoly.from_pairs([(n, 1), (0, -1)])
    raw = (det * t_minus_1).exact_divide(t_n_minus_1)
    return normalize_alexander(raw, len(w.components()))


def alexander_genus_bound(delta: LaurentPoly) -> Fraction:
    """The Seifert-genus lower bound breadth(Delta)/2."""
    return Fraction(delta.breadth, 2)


# -- Kauffman bracket / Jones ---------------------------------------------


class StrandBoundExceededError(ValueError):
    """Jones computation refused: Temperley-Lieb dimension would be too big."""


class QuarterGridError(ValueError):
    """A Jones polynomial with fractional t-exponents was asked for in t."""


DEFAULT_JONES_MAX_STRANDS = 10

_DELTA = LaurentPoly.from_pairs([(2, -1), (-2, -1)])  # -A^2 - A^-2


def _identity_diagram(n: int) -> tuple[int, ...]:
    # Points 0..n-1 on the bottom, n..2n-1 on the top; entry = partner point.
    return tuple(range(n, 2 * n)) + tuple(range(n))


def _apply_cupcap(
    diagram: tuple[int, ...], n: int, i: int
) -> tuple[tuple[int, ...], int]:
    """Stack the Temperley-Lieb element e_i on top; return (diagram, loops)."""
    a, b = n + i - 1, n + i
    d = list(diagram)
    p, q = d[a], d[b]
    if p == b:
        # The existing arc joins the two glued points: a loop closes off.
        d[a], d[b] = b, a
        return tuple(d), 1
    d[p], d[q] = q, p
    d[a], d[b] = b, a
    return tuple(d), 0


def kauffman_bracket(
    w: BraidWord, max_strands: int = DEFAULT_JONES_MAX_STRANDS
) -> LaurentPoly:
    """Kauffman bracket of the closure of ``w``, in the variable A,
    normalized so the bracket of an unknot is 1.
    """
    n = w.strands
    if n > max_strands:
        raise StrandBoundExceededError(
            f"{n} strands exceeds the bound {max_strands}"
        )
    a_pos = LaurentPoly.t(1)
    a_neg = LaurentPoly.t(-1)
    states: dict[tuple[int, ...], LaurentPoly] = {
        _identity_diagram(n): LaurentPoly.one()
    }
    for g in w.letters:
        smooth_id, smooth_cup = (a_pos, a_neg) if g > 0 else (a_neg, a_pos)
        new: dict[tuple[int, ...], LaurentPoly] = {}
        for diagram, coeff in states.items():
            c_id = coeff * smooth_id
            new[diagram] = new.get(diagram, LaurentPoly.zero()) + c_id
            cup_diagram, loops = _apply_cupcap(diagram, n, abs(g))
            c_cup = coeff * smooth_cup
            if loops:
                c_cup = c_cup * _DELTA
            new[cup_diagram] = (
                new.get(cup_diagram, LaurentPoly.zero()) + c_cup
            )
        states = {d: c for d, c in new.items() if not c.is_zero()}
    total = LaurentPoly.zero()
    for diagram, coeff in states.items():
        total = total + coeff * _DELTA ** (_closure_loops(diagram, n) - 1)
    return total


def _closure_loops(diagram: tuple[int, ...], n: int) -> int:
    parent = list(range(2 * n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    for x in range(2 * n):
        union(x, diagram[x])
    for i in range(n):
        union(i, n + i)
    return len({find(x) for x in range(2 * n)})


@dataclass(frozen=True)
class JonesPolynomial:
    """A Jones polynomial on the t^(1/4) exponent grid.

    ``quarter`` has integer exponents measured in units of t^(1/4); knots
    land on integer t-exponents, links with an even number of components on
    half-integer ones.
    """

    quarter: LaurentPoly

    def is_one(self) -> bool:
        return self.quarter == LaurentPoly.one()

    def in_t(self) -> LaurentPoly:
        """Reinterpret on the integer t-grid; raises off-grid."""
        if any(e % 4 for e, _ in self.quarter.items()):
            raise QuarterGridError(
                "exponents are not integral in t; inspect .quarter instead"
            )
        return LaurentPoly.from_pairs(
            [(e // 4, c) for e, c in self.quarter.items()]
        )

    def __str__(self) -> str:
        try:
            return format_laurent(self.in_t())
        except QuarterGridError:
            parts = []
            for e, c in self.quarter.items():
                frac = Fraction(e, 4)
                mag = "" if abs(c) == 1 else str(abs(c))
                term = f"{mag}t^({frac})" if frac != 0 else str(abs(c))
                parts.append(
                    ("- " if c < 0 else "+ ") + term
                    if parts
                    else (f"-{term}" if c < 0 else term)
                )
            return " ".join(parts)

    def to_json(self) -> dict:
        return {"quarter_grid": self.quarter.to_json()}


def bracket_to_jones(bracket: LaurentPoly, exponent_sum: int) -> JonesPolynomial:
    """Writhe-correct a bracket polynomial and substitute t = A^-4."""
    corrected = bracket.shift(-3 * exponent_sum)
    if exponent_sum % 2:
        corrected = -corrected
    # Exponent grid convention: positive braids get negative t-exponents
    # (V of the closure of sigma_1^3 is -t^-4 + t^-3 + t^-1).
    return JonesPolynomial(
        LaurentPoly.from_pairs([(e, c) for e, c in corrected.items()])
    )


def jones_polynomial(
    w: BraidWord, max_strands: int = DEFAULT_JONES_MAX_STRANDS
) -> JonesPolynomial:
    """Jones polynomial of the closure of ``w``; V(unknot) = 1."""
    return bracket_to_jones(kauffman_bracket(w, max_strands), w.exponent_sum)
