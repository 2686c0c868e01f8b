"""Braid word problem via Dehornoy handle reduction.

A sigma_i-handle is a factor sigma_i^e v sigma_i^-e whose interior v contains
no letters of index i or i-1.  Reducing it deletes the two outer letters and
rewrites each interior sigma_{i+1}^d as sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e
(letters of index >= i+2 or <= i-2 commute past sigma_i and are untouched).
Handle reduction terminates, and a freely reduced word with no handles is
either empty or sigma-positive/negative, hence represents the identity only
if it is empty.

We always reduce the handle whose closing letter comes first in the word;
that handle contains no nested handle.
"""

from __future__ import annotations

from .braidword import BraidWord

DEFAULT_BUDGET = 10**6


class BudgetExceededError(RuntimeError):
    """The reduction step budget ran out (pathological input, not a verdict)."""


def _find_leftmost_handle(letters: list[int]) -> tuple[int, int] | None:
    """Return (open, close) indices of the handle closing earliest, if any."""
    last: dict[int, int] = {}  # index of generator -> position of last letter
    for pos, g in enumerate(letters):
        i = abs(g)
        prev = last.get(i)
        if prev is not None and (letters[prev] > 0) != (g > 0):
            below = last.get(i - 1)
            if below is None or below < prev:
                return prev, pos
        last[i] = pos
    return None


def _reduce_handle(letters: list[int], open_: int, close: int) -> list[int]:
    i = abs(letters[open_])
    e = 1 if letters[open_] > 0 else -1
    body: list[int] = []
    for g in letters[open_ + 1 : close]:
        if abs(g) == i + 1:
            body.extend([-e * (i + 1), (i if g > 0 else -i), e * (i + 1)])
        else:
            body.append(g)
    return letters[:open_] + body + letters[close + 1 :]


def handle_reduce(w: BraidWord, budget: int = DEFAULT_BUDGET) -> BraidWord:
    """Fully handle-reduce ``w`` to an equivalent word with no handles."""
    letters = list(w.free_reduce().letters)
    steps = 0
    while True:
        found = _find_leftmost_handle(letters)
        if found is None:
            return BraidWord.make(w.strands, letters)
        steps += 1
        if steps > budget:
            raise BudgetExceededError(
                f"handle reduction exceeded {budget} steps"
            )
        letters = _reduce_handle(letters, *found)
        letters = list(BraidWord.make(w.strands, letters).free_reduce().letters)


def is_trivial_braid(w: BraidWord, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff ``w`` represents the identity of B_n."""
    return len(handle_reduce(w, budget)) == 0


def braid_equal(u: BraidWord, v: BraidWord, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff u and v represent the same element of B_n."""
    if u.strands != v.strands:
        raise ValueError("strand-count mismatch")
    return is_trivial_braid(u * v.inverse(), budget)
