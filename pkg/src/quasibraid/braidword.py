"""Braid words on n strands: algebra, closure bookkeeping, Markov moves,
and strand deletion.

A word is a sequence of nonzero integers: letter ``g > 0`` is the Artin
generator sigma_g, ``g < 0`` its inverse.  Letters act on strand *positions*
left to right, so the underlying permutation of a word is the composition of
the transpositions (i, i+1) in reading order.  All values are immutable and
every operation is a pure function.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class WordSyntaxError(ValueError):
    """Malformed braid-word text; carries the offending token position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (token {position})")
        self.position = position


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("strand count must be positive")
        for g in self.letters:
            if g == 0 or not 1 <= abs(g) <= self.strands - 1:
                raise ValueError(
                    f"letter {g} out of range for {self.strands} strands"
                )

    @classmethod
    def make(cls, strands: int, letters: Iterable[int]) -> "BraidWord":
        return cls(strands, tuple(letters))

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def exponent_sum(self) -> int:
        """The writhe of the closed diagram: sum of letter signs."""
        return sum(1 if g > 0 else -1 for g in self.letters)

    # -- word algebra -----------------------------------------------------

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    def concat(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("strand-count mismatch")
        return BraidWord(self.strands, self.letters + other.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return self.concat(other)

    def conjugate(self, by: "BraidWord") -> "BraidWord":
        """u * w * u^-1 for w = self, u = by."""
        return by * self * by.inverse()

    def free_reduce(self) -> "BraidWord":
        """Cancel adjacent g, -g pairs until none remain."""
        stack: list[int] = []
        for g in self.letters:
            if stack and stack[-1] == -g:
                stack.pop()
            else:
                stack.append(g)
        return BraidWord(self.strands, tuple(stack))

    def power(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        out = BraidWord.identity(self.strands)
        for _ in range(abs(k)):
            out = out * base
        return out

    # -- closure ----------------------------------------------------------

    def permutation(self) -> "Permutation":
        img = list(range(1, self.strands + 1))
        for g in self.letters:
            i = abs(g) - 1
            img[i], img[i + 1] = img[i + 1], img[i]
        # img[p-1] is the strand (start position) ending at position p; the
        # permutation maps start position -> end position, so invert.
        out = [0] * self.strands
        for pos, strand in enumerate(img, start=1):
            out[strand - 1] = pos
        return Permutation(tuple(out))

    def components(self) -> list[tuple[int, ...]]:
        """Cycles of the closure permutation, one per link component.

        Each component is identified by its sorted tuple of start positions;
        the minimum entry serves as the component id.
        """
        return self.permutation().cycles()

    def closure_summary(self) -> "ClosureSummary":
        e = self.exponent_sum
        return ClosureSummary(
            components=len(self.components()),
            exponent_sum=e,
            self_linking=e - self.strands,
        )

    # -- Markov moves -----------------------------------------------------

    def stabilize(self, sign: int = 1) -> "BraidWord":
        """Append sigma_n^(+-1) on one more strand; closure is unchanged."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        n = self.strands + 1
        return BraidWord(n, self.letters + (sign * (n - 1),))

    def conjugate_closure(self, by: "BraidWord") -> "BraidWord":
        return self.conjugate(by)

    # -- strand deletion --------------------------------------------------

    def delete_components(self, component_ids: Iterable[int]) -> "BraidWord":
        """Delete whole closure components, keeping the rest of the braid.

        ``component_ids`` are minimal start positions of cycles of the closure
        permutation.  Crossings touching a deleted strand are discarded;
        surviving strands keep their relative order and crossing signs.
        """
        cycles = {min(c): c for c in self.components()}
        doomed: set[int] = set()
        for cid in set(component_ids):
            if cid not in cycles:
                raise ValueError(f"no closure component with id {cid}")
            doomed.update(cycles[cid])
        keep = [s for s in range(1, self.strands + 1) if s not in doomed]
        if not keep:
            raise ValueError("cannot delete every component")
        pos = list(range(1, self.strands + 1))  # pos[p-1] = strand at position p
        out: list[int] = []
        for g in self.letters:
            i = abs(g)
            a, b = pos[i - 1], pos[i]
            if a not in doomed and b not in doomed:
                surviving_below = sum(
                    1 for s in pos[: i - 1] if s not in doomed
                )
                new_index = surviving_below + 1
                out.append(new_index if g > 0 else -new_index)
            pos[i - 1], pos[i] = b, a
        return BraidWord(len(keep), tuple(out))

    # -- text form --------------------------------------------------------

    def __str__(self) -> str:
        return format_word(self)

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, data: dict) -> "BraidWord":
        return cls.make(int(data["strands"]), [int(g) for g in data["letters"]])


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n}, stored as the image tuple."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError("image is not a bijection on 1..n")

    @property
    def size(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """self followed by other (left-to-right composition)."""
        if other.size != self.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(other(self(i)) for i in range(1, self.size + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out: list[tuple[int, ...]] = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(sorted(cyc)))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))


@dataclass(frozen=True)
class ClosureSummary:
    """Component count, writhe, and self-linking number of a braid closure."""

    components: int
    exponent_sum: int
    self_linking: int


# -- text grammar ----------------------------------------------------------
#
# Whitespace-separated tokens:  signed nonzero integers ("1 -2 1 -2"),
# band tokens "B(i,j)" / "B(i,j)^-1", and an optional "^k" repetition suffix
# on any token (k a nonzero integer).

_BAND_RE = re.compile(r"^B\((\d+),(\d+)\)(?:\^(-?\d+))?$")
_INT_RE = re.compile(r"^(-?\d+)(?:\^(-?\d+))?$")


def band_generator_letters(i: int, j: int, n: int) -> tuple[int, ...]:
    """Artin letters of the positive embedded band sigma_{i,j} in B_n:
    (sigma_i ... sigma_{j-2}) sigma_{j-1} (sigma_i ... sigma_{j-2})^-1.
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"band indices ({i},{j}) out of range for {n} strands")
    prefix = list(range(i, j - 1))
    return tuple(prefix + [j - 1] + [-g for g in reversed(prefix)])


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse the braid-word grammar into a word on ``strands`` strands."""
    if strands < 1:
        raise ValueError("strand count must be positive")
    letters: list[int] = []
    for pos, tok in enumerate(text.split()):
        m = _BAND_RE.match(tok)
        if m:
            i, j = int(m.group(1)), int(m.group(2))
            rep = int(m.group(3)) if m.group(3) else 1
            if rep == 0:
                raise WordSyntaxError("zero repetition", pos)
            try:
                band = band_generator_letters(i, j, strands)
            except ValueError as exc:
                raise WordSyntaxError(str(exc), pos) from exc
            block = band if rep > 0 else tuple(-g for g in reversed(band))
            letters.extend(block * abs(rep))
            continue
        m = _INT_RE.match(tok)
        if m:
            g = int(m.group(1))
            rep = int(m.group(2)) if m.group(2) else 1
            if g == 0 or rep == 0:
                raise WordSyntaxError(f"bad token {tok!r}", pos)
            if not abs(g) <= strands - 1:
                raise WordSyntaxError(
                    f"letter {g} out of range for {strands} strands", pos
                )
            letters.extend([g if rep > 0 else -g] * abs(rep))
            continue
        raise WordSyntaxError(f"bad token {tok!r}", pos)
    return BraidWord.make(strands, letters)


def format_word(w: BraidWord) -> str:
    """Serialize to plain signed integers; parse_word round-trips this."""
    return " ".join(str(g) for g in w.letters)
