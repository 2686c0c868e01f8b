"""Braid-group toolkit for quasipositive links, Bennequin/ribbon surface
combinatorics, and the braid constructions behind cross-sections of
unknotted ribbon disks.
"""

from .braidword import (
    BraidWord,
    ClosureSummary,
    Permutation,
    WordSyntaxError,
    band_generator_letters,
    format_word,
    parse_word,
)
from .bandwords import (
    BandLetter,
    EmbeddedBandWord,
    QPBand,
    QPBandWord,
    SurfaceSummary,
    bennequin_summary,
    expand_band_generator,
    qp_ribbon_summary,
)
from .handle import (
    BudgetExceededError,
    braid_equal,
    handle_reduce,
    is_trivial_braid,
)
from .invariants import (
    JonesPolynomial,
    alexander_genus_bound,
    alexander_polynomial,
    jones_polynomial,
    kauffman_bracket,
    reduced_burau,
)
from .laurent import (
    InexactDivisionError,
    LaurentMatrix,
    LaurentPoly,
    format_laurent,
    parse_laurent,
)
from .families import (
    band_surgery_word,
    hopf_plumb_rewrite,
    hopf_plumb_sites,
    make_beta_n,
    make_beta_n_qp,
    make_gamma_n,
    verify_band_surgery_sequence,
)
from .constructions import (
    SiteError,
    TheoremAOutput,
    TransformSite,
    example_m8_20,
    sites_from_json,
    sites_to_json,
    theorem_a,
    thmA_embed,
    thmA_unknotify,
)

__all__ = [
    "BandLetter",
    "BraidWord",
    "BudgetExceededError",
    "ClosureSummary",
    "EmbeddedBandWord",
    "InexactDivisionError",
    "JonesPolynomial",
    "LaurentMatrix",
    "LaurentPoly",
    "Permutation",
    "QPBand",
    "QPBandWord",
    "SurfaceSummary",
    "SiteError",
    "TheoremAOutput",
    "TransformSite",
    "WordSyntaxError",
    "alexander_genus_bound",
    "alexander_polynomial",
    "band_generator_letters",
    "band_surgery_word",
    "bennequin_summary",
    "braid_equal",
    "example_m8_20",
    "expand_band_generator",
    "format_laurent",
    "format_word",
    "handle_reduce",
    "hopf_plumb_rewrite",
    "hopf_plumb_sites",
    "is_trivial_braid",
    "jones_polynomial",
    "kauffman_bracket",
    "make_beta_n",
    "make_beta_n_qp",
    "make_gamma_n",
    "parse_laurent",
    "parse_word",
    "qp_ribbon_summary",
    "reduced_burau",
    "sites_from_json",
    "sites_to_json",
    "theorem_a",
    "thmA_embed",
    "thmA_unknotify",
    "verify_band_surgery_sequence",
]

__version__ = "0.1.0"
