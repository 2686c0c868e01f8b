"""Embedded bandwords (Bennequin surfaces) and quasipositive bandwords
(ribbon surfaces), with Euler-characteristic and genus bookkeeping.

An embedded bandword is a word in the Birman-Ko-Lee band generators
sigma_{i,j}^(+-1); its Bennequin surface has n disks and one band per letter,
so chi = n - |w|.  A quasipositive bandword is a product of conjugates
w sigma_k w^-1 of positive Artin generators; its ribbon surface in the
four-ball has chi = n - c for c bands, and for a knot closure realizes the
sharp slice-Bennequin value g_* = (c - n + 1)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .braidword import BraidWord, band_generator_letters


def expand_band_generator(i: int, j: int, n: int) -> BraidWord:
    """The embedded band sigma_{i,j} as an Artin word in B_n."""
    return BraidWord.make(n, band_generator_letters(i, j, n))


@dataclass(frozen=True)
class BandLetter:
    """One letter sigma_{i,j}^sign of an embedded bandword."""

    i: int
    j: int
    sign: int

    def __post_init__(self) -> None:
        if not 1 <= self.i < self.j:
            raise ValueError(f"need 1 <= i < j, got ({self.i},{self.j})")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def inverse(self) -> "BandLetter":
        return BandLetter(self.i, self.j, -self.sign)


@dataclass(frozen=True)
class EmbeddedBandWord:
    strands: int
    letters: tuple[BandLetter, ...]

    def __post_init__(self) -> None:
        for let in self.letters:
            if let.j > self.strands:
                raise ValueError(
                    f"band ({let.i},{let.j}) out of range for {self.strands} strands"
                )

    @classmethod
    def make(
        cls, strands: int, letters: Iterable[tuple[int, int, int]]
    ) -> "EmbeddedBandWord":
        return cls(strands, tuple(BandLetter(i, j, s) for i, j, s in letters))

    def __len__(self) -> int:
        return len(self.letters)

    def is_positive(self) -> bool:
        """True for strongly quasipositive words (all bands positive)."""
        return all(let.sign > 0 for let in self.letters)

    def to_braid_word(self, reduce: bool = False) -> BraidWord:
        out: list[int] = []
        for let in self.letters:
            band = band_generator_letters(let.i, let.j, self.strands)
            if let.sign < 0:
                band = tuple(-g for g in reversed(band))
            out.extend(band)
        w = BraidWord.make(self.strands, out)
        return w.free_reduce() if reduce else w

    def summary(self) -> "SurfaceSummary":
        return bennequin_summary(self)

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "letters": [[l.i, l.j, l.sign] for l in self.letters],
        }

    @classmethod
    def from_json(cls, data: dict) -> "EmbeddedBandWord":
        return cls.make(
            int(data["strands"]),
            [(int(i), int(j), int(s)) for i, j, s in data["letters"]],
        )


@dataclass(frozen=True)
class QPBand:
    """One positive band: conjugator * sigma_index * conjugator^-1."""

    conjugator: BraidWord
    index: int

    def __post_init__(self) -> None:
        n = self.conjugator.strands
        if not 1 <= self.index <= n - 1:
            raise ValueError(f"band core {self.index} out of range for {n} strands")

    def to_braid_word(self) -> BraidWord:
        core = BraidWord.make(self.conjugator.strands, (self.index,))
        return self.conjugator * core * self.conjugator.inverse()


@dataclass(frozen=True)
class QPBandWord:
    """A quasipositive braid word: a product of positive bands.

    Negative bands are unrepresentable by construction, so quasipositivity is
    structural and the sharp slice-Bennequin bookkeeping below is honest.
    """

    strands: int
    bands: tuple[QPBand, ...]

    def __post_init__(self) -> None:
        for b in self.bands:
            if b.conjugator.strands != self.strands:
                raise ValueError("band strand count mismatch")

    @classmethod
    def make(
        cls, strands: int, bands: Iterable[tuple[Iterable[int], int]]
    ) -> "QPBandWord":
        return cls(
            strands,
            tuple(
                QPBand(BraidWord.make(strands, conj), k) for conj, k in bands
            ),
        )

    @property
    def band_count(self) -> int:
        return len(self.bands)

    def to_braid_word(self, reduce: bool = False) -> BraidWord:
        w = BraidWord.identity(self.strands)
        for b in self.bands:
            w = w * b.to_braid_word()
        return w.free_reduce() if reduce else w

    def summary(self) -> "SurfaceSummary":
        return qp_ribbon_summary(self)

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "bands": [
                {"conjugator": list(b.conjugator.letters), "index": b.index}
                for b in self.bands
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QPBandWord":
        return cls.make(
            int(data["strands"]),
            [
                ([int(g) for g in b["conjugator"]], int(b["index"]))
                for b in data["bands"]
            ],
        )


@dataclass(frozen=True)
class SurfaceSummary:
    """chi/genus bookkeeping for a surface built from disks and bands.

    ``genus`` is None for multi-component quasipositive closures, where a
    single genus number is not reported.
    """

    strands: int
    bands: int
    components: int
    chi: int
    genus: Optional[Fraction]


def bennequin_summary(w: EmbeddedBandWord) -> SurfaceSummary:
    """Summary of the Bennequin surface of an embedded bandword."""
    chi = w.strands - len(w)
    k = len(w.to_braid_word().components())
    genus = Fraction(2 - k - chi, 2)
    if genus < 0:
        raise ArithmeticError(
            f"negative genus {genus} from chi={chi}, k={k}: inconsistent word"
        )
    return SurfaceSummary(
        strands=w.strands, bands=len(w), components=k, chi=chi, genus=genus
    )


def qp_ribbon_summary(w: QPBandWord) -> SurfaceSummary:
    """Summary of the ribbon surface of a quasipositive bandword.

    For a knot closure the genus field is the slice genus
    g_* = (c - n + 1)/2, which is sharp by slice-Bennequin.
    """
    c = w.band_count
    chi = w.strands - c
    k = len(w.to_braid_word().components())
    genus = Fraction(c - w.strands + 1, 2) if k == 1 else None
    if genus is not None and genus < 0:
        raise ArithmeticError(
            f"negative slice genus {genus}: inconsistent quasipositive word"
        )
    return SurfaceSummary(
        strands=w.strands, bands=c, components=k, chi=chi, genus=genus
    )
