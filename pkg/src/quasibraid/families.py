"""The genus-non-monotone braid families and their band-surgery relation.

For each n >= 0 the 4-braids

    beta_n  = s(1,4) s2 (s1^n s(1,3)^-1 s1^-n) s(2,4) (s1^n s(1,3) s1^-n)
    gamma_n = s(1,4) s2 s(2,4) s1^n s(1,3) s2^(n+1)

are quasipositive (beta_n regroups into exactly three positive bands) and
strongly quasipositive respectively, with Bennequin genera 2n+1 and n+1.
gamma_n is obtained from beta_n by adding 2n+2 positive bands, which is what
makes the pair a genus-monotonicity counterexample.  beta_n arises from
beta_{n-1} by four Hopf plumbings along the s1-runs.
"""

from __future__ import annotations

from .bandwords import BandLetter, EmbeddedBandWord, QPBandWord
from .braidword import BraidWord, band_generator_letters
from .handle import DEFAULT_BUDGET, braid_equal


def make_beta_n(n: int) -> EmbeddedBandWord:
    """The embedded bandword beta_n on 4 strands, 5 + 4n letters."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    pos = [(1, 2, 1)] * n
    neg = [(1, 2, -1)] * n
    letters = (
        [(1, 4, 1), (2, 3, 1)]
        + pos + [(1, 3, -1)] + neg
        + [(2, 4, 1)]
        + pos + [(1, 3, 1)] + neg
    )
    return EmbeddedBandWord.make(4, letters)


def make_beta_n_qp(n: int) -> QPBandWord:
    """beta_n regrouped as three positive bands:
    s(1,4) * s2 * (u^-1 s(2,4) u) with u = s1^n s(1,3) s1^-n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    u = (
        [1] * n
        + list(band_generator_letters(1, 3, 4))
        + [-1] * n
    )
    u_inv = [-g for g in reversed(u)]
    # s(1,4) = (s1 s2) s3 (s1 s2)^-1; s(2,4) = s2 s3 s2^-1.
    return QPBandWord.make(
        4,
        [
            ([1, 2], 3),
            ([], 2),
            (u_inv + [2], 3),
        ],
    )


def make_gamma_n(n: int) -> EmbeddedBandWord:
    """The strongly quasipositive gamma_n on 4 strands, 2n + 5 letters."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    letters = (
        [(1, 4, 1), (2, 3, 1), (2, 4, 1)]
        + [(1, 2, 1)] * n
        + [(1, 3, 1)]
        + [(2, 3, 1)] * (n + 1)
    )
    return EmbeddedBandWord.make(4, letters)


def band_surgery_word(n: int) -> tuple[EmbeddedBandWord, int]:
    """beta_n with the 2n+2 positive band insertions that produce gamma_n.

    Returns the surgered embedded bandword together with the number of
    inserted bands: one s(1,3) in the middle of the s1^n s(1,3)^-1 s1^-n
    term, s1^n appended, then s2^(n+1) appended.
    """
    beta = list(make_beta_n(n).letters)
    # Index of the s(1,3)^-1 letter: 2 leading letters plus n s1's.
    mid = 2 + n + 1
    surgered = (
        beta[:mid]
        + [BandLetter(1, 3, 1)]
        + beta[mid:]
        + [BandLetter(1, 2, 1)] * n
        + [BandLetter(2, 3, 1)] * (n + 1)
    )
    return EmbeddedBandWord(4, tuple(surgered)), 2 * n + 2


def verify_band_surgery_sequence(n: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Certify that the 2n+2 band insertions turn beta_n into gamma_n in B_4."""
    surgered, inserted = band_surgery_word(n)
    if inserted != 2 * n + 2:
        return False
    return braid_equal(
        surgered.to_braid_word(),
        make_gamma_n(n).to_braid_word(),
        budget,
    )


def hopf_plumb_rewrite(
    w: EmbeddedBandWord, position: int, sign: int
) -> EmbeddedBandWord:
    """Plumb a Hopf band of the given sign across an s1-crossing of w.

    Inserts the letter s1^sign at ``position``.  The plumbing must be of like
    sign: the neighboring letter on one side has to carry an s1-crossing of
    the same sign where the new band attaches — either an adjacent
    (1,2,sign) letter (the rewrite s1^(+-1) -> s1^(+-2)), or an adjacent
    (1,j) letter whose expansion starts (right neighbor) or ends (left
    neighbor) with s1^sign.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not 0 <= position <= len(w.letters):
        raise ValueError(f"position {position} out of range")

    def first_s1_sign(let: BandLetter) -> int | None:
        # Expansion of (1,j,s) starts with s1 for j > 2 (any s), s1^s for j=2.
        if let.i != 1:
            return None
        return let.sign if let.j == 2 else 1

    def last_s1_sign(let: BandLetter) -> int | None:
        if let.i != 1:
            return None
        return let.sign if let.j == 2 else -1

    right = w.letters[position] if position < len(w.letters) else None
    left = w.letters[position - 1] if position > 0 else None
    if not (
        (right is not None and first_s1_sign(right) == sign)
        or (left is not None and last_s1_sign(left) == sign)
    ):
        raise ValueError(
            f"no like-sign s1-crossing adjacent to position {position}"
        )
    letters = (
        w.letters[:position] + (BandLetter(1, 2, sign),) + w.letters[position:]
    )
    return EmbeddedBandWord(w.strands, letters)


def hopf_plumb_sites(n: int) -> list[tuple[int, int]]:
    """The four (position, sign) plumbing sites taking beta_{n-1} to beta_n.

    Positions refer to the successive intermediate words: apply them in order
    with :func:`hopf_plumb_rewrite`.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    m = n - 1
    # beta_m layout: [s(1,4), s2] s1^m [s(1,3)^-1] s1^-m [s(2,4)] s1^m [s(1,3)] s1^-m
    # Grow each run by one letter, adjusting for earlier insertions.
    return [
        (2, 1),                      # front of the first s1^m run
        (2 + m + 2, -1),             # behind s(1,3)^-1, end of the s1^-m run
        (2 + 2 * m + 4, 1),          # front of the second s1^m run
        (2 + 3 * m + 6, -1),         # behind s(1,3), end of the last s1^-m run
    ]
