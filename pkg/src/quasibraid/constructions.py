"""The braid transformation behind unknotted ribbon disk cross-sections.

Starting from a quasipositive bandword beta in B_n together with m marked
pierce sites (ribbon singularities of its immersed Bennequin surface), the
rewrite produces a quasipositive beta' in B_{n+m} whose closure is beta's
closure together with m unknots, one per site, each clasping the pierced
band; adding one positive generator per site then yields a braid gamma whose
closure is an unknot with self-linking number -1.  The chain
beta -> beta' -> gamma certifies that beta's closure is a cross-section of
an unknotted ribbon disk.

Pinned convention (the rewrite is only determined up to braid isotopy):

* Site sign +1 marks the outbound occurrence of the pierce pattern inside
  the band's conjugator; sign -1 marks the return occurrence in the
  conjugator's inverse.  Both refer to the same two conjugator letters.
* New strands are appended above the existing ones, in site order sorted by
  (band, pos, outbound-first).
* An outbound gadget parks its new strand at position k+1 (descending under
  every strand in between), half-clasps across the band edge with sign
  opposite to the pattern, lets the two pattern letters pass unchanged,
  half-clasps back, and ascends.
* A return clasp slides along the band to just before the band's core: the
  gadget descends to position K+1 (K the core index), double-crosses the
  band edge with sign opposite to the pattern, and ascends.  It is appended
  at the end of the rewritten conjugator.
* gamma inserts sigma_{k+1} between the two pattern letters of each
  outbound site (the rewrite sigma_k^2 -> sigma_k sigma_{k+1} sigma_k) and
  sigma_K between the two clasp letters of each return site, always in the
  left (conjugator) half of the band, never in the mirrored half.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .bandwords import QPBandWord
from .braidword import BraidWord
from .invariants import (
    JonesPolynomial,
    StrandBoundExceededError,
    alexander_polynomial,
    jones_polynomial,
)
from .laurent import LaurentPoly, format_laurent


class SiteError(ValueError):
    """A transform site fails validation against its bandword."""


@dataclass(frozen=True)
class TransformSite:
    """One ribbon-singularity pattern inside a QP bandword conjugator.

    ``band`` indexes the bandword's bands, ``pos`` the first of two equal
    conjugator letters of index ``k`` (the pierce pattern sigma_k^{+-2}),
    and ``sign`` selects the outbound (+1, in the conjugator) or return
    (-1, in its inverse) passage of the band through the pierced disk.
    """

    band: int
    pos: int
    k: int
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise SiteError("site sign must be +1 or -1")
        if self.band < 0 or self.pos < 0 or self.k < 1:
            raise SiteError(f"malformed site {self}")

    def to_json(self) -> dict:
        return {
            "band": self.band,
            "pos": self.pos,
            "k": self.k,
            "sign": self.sign,
        }

    @classmethod
    def from_json(cls, data: dict) -> "TransformSite":
        return cls(
            int(data["band"]), int(data["pos"]), int(data["k"]), int(data["sign"])
        )


def sites_from_json(data: dict) -> list[TransformSite]:
    return [TransformSite.from_json(s) for s in data["sites"]]


def sites_to_json(sites: Iterable[TransformSite]) -> dict:
    return {"sites": [s.to_json() for s in sites]}


def _validate_sites(beta: QPBandWord, sites: list[TransformSite]) -> None:
    seen: set[tuple[int, int, int]] = set()
    out_positions: dict[int, list[int]] = {}
    for s in sites:
        if not 0 <= s.band < beta.band_count:
            raise SiteError(f"band index {s.band} out of range")
        u = beta.bands[s.band].conjugator.letters
        if s.pos + 1 >= len(u):
            raise SiteError(f"position {s.pos} out of range in band {s.band}")
        a, b = u[s.pos], u[s.pos + 1]
        if a != b or abs(a) != s.k:
            raise SiteError(
                f"conjugator letters ({a},{b}) at {s.pos} do not match the "
                f"pierce pattern sigma_{s.k}^(+-2)"
            )
        key = (s.band, s.pos, s.sign)
        if key in seen:
            raise SiteError(f"duplicate site {s}")
        seen.add(key)
        if s.sign > 0:
            out_positions.setdefault(s.band, []).append(s.pos)
    for band, positions in out_positions.items():
        positions.sort()
        for p, q in zip(positions, positions[1:]):
            if q < p + 2:
                raise SiteError(
                    f"overlapping outbound sites at {p} and {q} in band {band}"
                )


def _descender(new_strand: int, park: int) -> list[int]:
    """Bring the new strand from position ``new_strand`` down to ``park``,
    crossing under every strand on the way."""
    return list(range(new_strand - 1, park - 1, -1))


@dataclass(frozen=True)
class _Plan:
    strands: int
    letters: tuple[int, ...]
    gamma_insertions: tuple[tuple[int, int], ...]  # (offset, positive letter)
    added_strands: tuple[int, ...]


def _plan(beta: QPBandWord, sites: list[TransformSite]) -> _Plan:
    _validate_sites(beta, sites)
    n, m = beta.strands, len(sites)
    total = n + m
    ordered = sorted(sites, key=lambda s: (s.band, s.pos, -s.sign))
    strand_of = {id(s): n + 1 + i for i, s in enumerate(ordered)}

    word: list[int] = []
    gamma: list[tuple[int, int]] = []
    for b, band in enumerate(beta.bands):
        u = list(band.conjugator.letters)
        core = band.index
        outs = sorted(
            (s for s in ordered if s.band == b and s.sign > 0),
            key=lambda s: s.pos,
            reverse=True,
        )
        rets = [s for s in ordered if s.band == b and s.sign < 0]
        # (conjugator letters, per-letter gamma insertion or 0)
        annotated: list[tuple[int, int]] = [(g, 0) for g in u]
        for s in outs:
            nu = strand_of[id(s)]
            pattern_sign = 1 if u[s.pos] > 0 else -1
            rail = _descender(nu, s.k + 1)
            half = -pattern_sign * (s.k + 1)
            block = (
                [(g, 0) for g in rail]
                + [(half, 0)]
                + [(u[s.pos], s.k + 1), (u[s.pos + 1], 0)]
                + [(half, 0)]
                + [(-g, 0) for g in reversed(rail)]
            )
            annotated[s.pos : s.pos + 2] = block
        for s in rets:
            nu = strand_of[id(s)]
            pattern_sign = 1 if u[s.pos] > 0 else -1
            rail = _descender(nu, core + 1)
            clasp = -pattern_sign * core
            annotated += (
                [(g, 0) for g in rail]
                + [(clasp, core), (clasp, 0)]
                + [(-g, 0) for g in reversed(rail)]
            )
        conj = [g for g, _ in annotated]
        base = len(word)
        for offset, (g, inserted) in enumerate(annotated):
            if inserted:
                gamma.append((base + offset, inserted))
        word += conj + [core] + [-g for g in reversed(conj)]
    return _Plan(
        strands=total,
        letters=tuple(word),
        gamma_insertions=tuple(gamma),
        added_strands=tuple(n + 1 + i for i in range(m)),
    )


def thmA_embed(beta: QPBandWord, sites: list[TransformSite]) -> BraidWord:
    """The quasipositive braid beta' in B_{n+m} containing beta as a sublink.

    One new strand per site; each forms an unknotted closure component
    passing under every other strand except at its two clasp points.  The
    band count is preserved, and deleting the new components recovers
    beta's expansion.
    """
    plan = _plan(beta, sites)
    return BraidWord.make(plan.strands, plan.letters)


def thmA_unknotify(
    beta_prime: BraidWord,
    sites: list[TransformSite],
    source: QPBandWord,
) -> BraidWord:
    """gamma: beta' with one positive generator inserted per site.

    ``beta_prime`` must be the output of :func:`thmA_embed` on ``source``
    with the same sites; this is checked, since the insertion spots are
    meaningful only relative to that word.
    """
    plan = _plan(source, sites)
    if (
        beta_prime.strands != plan.strands
        or beta_prime.letters != plan.letters
    ):
        raise SiteError(
            "beta_prime was not produced by thmA_embed with these sites"
        )
    letters = list(plan.letters)
    for offset, g in sorted(plan.gamma_insertions, reverse=True):
        letters.insert(offset + 1, g)
    return BraidWord.make(plan.strands, letters)


@dataclass(frozen=True)
class TheoremAOutput:
    """The full beta -> beta' -> gamma run with its invariant certificate."""

    beta_prime: BraidWord
    gamma: BraidWord
    added_strands: tuple[int, ...]
    components_beta_prime: int
    sublink_matches: bool
    components_gamma: int
    self_linking_gamma: int
    delta_gamma: LaurentPoly
    jones_gamma: Optional[JonesPolynomial]
    exponent_relation_holds: bool

    @property
    def certificate_ok(self) -> bool:
        return (
            self.sublink_matches
            and self.components_gamma == 1
            and self.self_linking_gamma == -1
            and self.delta_gamma == LaurentPoly.one()
            and (self.jones_gamma is None or self.jones_gamma.is_one())
            and self.exponent_relation_holds
        )

    def to_json(self) -> dict:
        return {
            "beta_prime": self.beta_prime.to_json(),
            "gamma": self.gamma.to_json(),
            "added_strands": list(self.added_strands),
            "certificate": {
                "components_beta_prime": self.components_beta_prime,
                "sublink_matches": self.sublink_matches,
                "components_gamma": self.components_gamma,
                "self_linking_gamma": self.self_linking_gamma,
                "delta_gamma": format_laurent(self.delta_gamma),
                "jones_gamma": (
                    None if self.jones_gamma is None else str(self.jones_gamma)
                ),
                "exponent_relation_holds": self.exponent_relation_holds,
                "ok": self.certificate_ok,
            },
        }


def theorem_a(
    beta: QPBandWord,
    sites: list[TransformSite],
    compute_jones: bool = True,
    jones_max_strands: Optional[int] = None,
) -> TheoremAOutput:
    """Run the full rewrite and compute the unknot certificate for gamma."""
    beta_prime = thmA_embed(beta, sites)
    gamma = thmA_unknotify(beta_prime, sites, beta)
    singles = list(range(beta.strands + 1, beta.strands + len(sites) + 1))
    sublink = beta_prime.delete_components(singles)
    sublink_matches = (
        sublink.free_reduce().letters
        == beta.to_braid_word().free_reduce().letters
    )
    summary = gamma.closure_summary()
    jones: Optional[JonesPolynomial] = None
    if compute_jones:
        if jones_max_strands is None:
            jones = jones_polynomial(gamma)
        else:
            jones = jones_polynomial(gamma, jones_max_strands)
    return TheoremAOutput(
        beta_prime=beta_prime,
        gamma=gamma,
        added_strands=tuple(singles),
        components_beta_prime=len(beta_prime.components()),
        sublink_matches=sublink_matches,
        components_gamma=summary.components,
        self_linking_gamma=summary.self_linking,
        delta_gamma=alexander_polynomial(gamma),
        jones_gamma=jones,
        exponent_relation_holds=(
            gamma.exponent_sum == beta_prime.exponent_sum + len(sites)
        ),
    )


def example_m8_20() -> tuple[QPBandWord, list[TransformSite]]:
    """The two-band presentation of m(8_20) with its two pierce sites.

    beta = sigma_2 sigma_1^2 sigma_2 sigma_1^-2 sigma_2^-1 * sigma_{1,3}
    as two positive bands; the band passes through the pierced disk going
    out (site sign +1) and coming back (site sign -1) across the same
    sigma_1^2 pattern.
    """
    beta = QPBandWord.make(3, [([2, 1, 1], 2), ([1], 2)])
    sites = [
        TransformSite(band=0, pos=1, k=1, sign=1),
        TransformSite(band=0, pos=1, k=1, sign=-1),
    ]
    return beta, sites
