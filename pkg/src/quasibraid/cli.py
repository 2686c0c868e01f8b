"""Command-line front end.

Subcommands:

* ``invariants`` -- closure invariants of a braid word or a family member.
* ``family`` -- emit a beta_n / gamma_n word with its surface summary.
* ``unknotify`` -- run the beta -> beta' -> gamma rewrite from JSON files.
* ``verify-paper`` -- run the full verification checklist.

Exit codes: 0 success, 1 certificate or verification failure, 2 usage or
parse errors.  ``--json`` output is byte-deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .bandwords import (
    EmbeddedBandWord,
    QPBandWord,
    SurfaceSummary,
    bennequin_summary,
    qp_ribbon_summary,
)
from .braidword import BraidWord, WordSyntaxError, format_word, parse_word
from .constructions import SiteError, sites_from_json, theorem_a
from .families import make_beta_n, make_beta_n_qp, make_gamma_n
from .handle import DEFAULT_BUDGET
from .invariants import (
    DEFAULT_JONES_MAX_STRANDS,
    JonesPolynomial,
    StrandBoundExceededError,
    alexander_genus_bound,
    alexander_polynomial,
    jones_polynomial,
)
from .laurent import LaurentPoly, format_laurent
from .verify import reference_example_report, run_all

USAGE_ERROR, CERTIFICATE_ERROR = 2, 1


def _emit_json(data: dict) -> None:
    print(json.dumps(data, sort_keys=True, indent=2))


@dataclass(frozen=True)
class InvariantReport:
    """Closure invariants of one braid word."""

    word: BraidWord
    alexander: LaurentPoly
    jones: Optional[JonesPolynomial]
    surface: Optional[SurfaceSummary]

    def to_json(self) -> dict:
        summary = self.word.closure_summary()
        data = {
            "word": self.word.to_json(),
            "strands": self.word.strands,
            "components": summary.components,
            "exponent_sum": summary.exponent_sum,
            "self_linking": summary.self_linking,
            "alexander": {
                "poly": format_laurent(self.alexander),
                "breadth": self.alexander.breadth,
                "genus_bound": str(alexander_genus_bound(self.alexander)),
            },
            "jones": None if self.jones is None else str(self.jones),
        }
        if self.surface is not None:
            data["surface"] = {
                "bands": self.surface.bands,
                "chi": self.surface.chi,
                "genus": (
                    None
                    if self.surface.genus is None
                    else str(self.surface.genus)
                ),
            }
        return data

    def lines(self) -> list[str]:
        summary = self.word.closure_summary()
        out = [
            f"word          {format_word(self.word)}",
            f"strands       {self.word.strands}",
            f"components    {summary.components}",
            f"exponent sum  {summary.exponent_sum}",
            f"self-linking  {summary.self_linking}",
            f"Alexander     {format_laurent(self.alexander)}"
            f"   (breadth {self.alexander.breadth},"
            f" genus bound {alexander_genus_bound(self.alexander)})",
        ]
        if self.jones is not None:
            out.append(f"Jones         {self.jones}")
        if self.surface is not None:
            genus = self.surface.genus
            out.append(
                f"surface       {self.surface.bands} bands,"
                f" chi = {self.surface.chi}, genus ="
                f" {'-' if genus is None else genus}"
            )
        return out


def _report(
    word: BraidWord,
    surface: Optional[SurfaceSummary],
    args: argparse.Namespace,
) -> InvariantReport:
    jones = None
    if not args.no_jones:
        jones = jones_polynomial(word, args.max_strands)
    return InvariantReport(word, alexander_polynomial(word), jones, surface)


def _family_word(kind: str, n: int) -> tuple[BraidWord, SurfaceSummary]:
    maker = make_beta_n if kind == "beta" else make_gamma_n
    band_word = maker(n)
    return band_word.to_braid_word(), bennequin_summary(band_word)


def cmd_invariants(args: argparse.Namespace) -> int:
    if args.word is not None:
        word = parse_word(args.word, args.strands)
        surface = None
    else:
        word, surface = _family_word(args.family, args.n)
        if word.strands != args.strands:
            raise WordSyntaxError(
                f"family {args.family} lives in B_4, not B_{args.strands}"
            )
    report = _report(word, surface, args)
    if args.json:
        _emit_json(report.to_json())
    else:
        print("\n".join(report.lines()))
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    word, surface = _family_word(args.kind, args.n)
    report = _report(word, surface, args)
    if args.json:
        data = report.to_json()
        if args.kind == "beta":
            data["qp_bands"] = make_beta_n_qp(args.n).to_json()
        _emit_json(data)
    else:
        print("\n".join(report.lines()))
        if args.kind == "beta":
            slice_summary = qp_ribbon_summary(make_beta_n_qp(args.n))
            print(
                f"3-band form   chi = {slice_summary.chi},"
                f" slice genus = {slice_summary.genus}"
            )
    return 0


def cmd_unknotify(args: argparse.Namespace) -> int:
    with open(args.bandword, encoding="utf-8") as fh:
        beta = QPBandWord.from_json(json.load(fh))
    with open(args.sites, encoding="utf-8") as fh:
        sites = sites_from_json(json.load(fh))
    out = theorem_a(
        beta,
        sites,
        compute_jones=not args.no_jones,
        jones_max_strands=args.max_strands,
    )
    if args.json:
        _emit_json(out.to_json())
    else:
        cert = out.to_json()["certificate"]
        print(f"beta'  {format_word(out.beta_prime)}")
        print(f"gamma  {format_word(out.gamma)}")
        for key in sorted(cert):
            print(f"  {key}: {cert[key]}")
    return 0 if out.certificate_ok else CERTIFICATE_ERROR


def cmd_verify_paper(args: argparse.Namespace) -> int:
    results = run_all(compute_jones=not args.no_jones, budget=args.budget)
    if args.json:
        _emit_json(
            {
                "criteria": [
                    {
                        "number": r.number,
                        "title": r.title,
                        "ok": r.ok,
                        "detail": r.detail,
                    }
                    for r in results
                ],
                "reference_example": reference_example_report(
                    compute_jones=not args.no_jones
                ),
                "ok": all(r.ok for r in results),
            }
        )
    else:
        for r in results:
            print(r.line())
        print("reference-word report:")
        for line in reference_example_report(compute_jones=not args.no_jones):
            print(f"  {line}")
    return 0 if all(r.ok for r in results) else CERTIFICATE_ERROR


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument(
        "--no-jones", action="store_true", help="skip Jones polynomials"
    )
    parser.add_argument(
        "--max-strands",
        type=int,
        default=DEFAULT_JONES_MAX_STRANDS,
        help="refuse Jones computations beyond this strand count",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpbraid",
        description="braid closures, band surfaces, and unknotting rewrites",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="closure invariants of a word")
    p_inv.add_argument("--strands", type=int, required=True)
    group = p_inv.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help='braid word, e.g. "1 1 1" or "B(1,3)^-1"')
    group.add_argument("--family", choices=["beta", "gamma"])
    p_inv.add_argument("--n", type=int, default=0, help="family index")
    _add_common(p_inv)
    p_inv.set_defaults(fn=cmd_invariants)

    p_fam = sub.add_parser("family", help="emit a family member")
    p_fam.add_argument("kind", choices=["beta", "gamma"])
    p_fam.add_argument("n", type=int)
    _add_common(p_fam)
    p_fam.set_defaults(fn=cmd_family)

    p_unk = sub.add_parser("unknotify", help="run the unknotting rewrite")
    p_unk.add_argument("bandword", help="JSON file with the QP bandword")
    p_unk.add_argument("sites", help="JSON file with the transform sites")
    _add_common(p_unk)
    p_unk.set_defaults(fn=cmd_unknotify)

    p_ver = sub.add_parser("verify-paper", help="run the verification suite")
    _add_common(p_ver)
    p_ver.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="handle-reduction step budget",
    )
    p_ver.set_defaults(fn=cmd_verify_paper)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 0 if hasattr(args, "n") else False:
        parser.error("family index must be nonnegative")
    try:
        return args.fn(args)
    except (
        WordSyntaxError,
        SiteError,
        StrandBoundExceededError,
        ValueError,
        OSError,
        json.JSONDecodeError,
        KeyError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
