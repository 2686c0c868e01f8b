"""Walking the beta -> beta' -> gamma rewrite on the m(8_20) example.

Run:  python3 demos/unknotting_walkthrough.py
"""

from quasibraid import (
    alexander_polynomial,
    example_m8_20,
    format_laurent,
    format_word,
    jones_polynomial,
    qp_ribbon_summary,
    theorem_a,
)

# ---------------------------------------------------------------------------
# 1. A quasipositive slice knot, presented as two positive bands
# ---------------------------------------------------------------------------
beta, sites = example_m8_20()
expansion = beta.to_braid_word()
print("beta  =", format_word(expansion))
print("Delta =", format_laurent(alexander_polynomial(expansion)))
print("ribbon surface:", qp_ribbon_summary(beta))   # slice genus 0

# The band passes twice through a pierced disk -- once going out, once coming
# back -- across the same sigma_1^2 pattern in the first conjugator.  Those
# two ribbon singularities are the marked sites:
print("sites =", sites)

# ---------------------------------------------------------------------------
# 2. Embed: one new strand per site, clasping the band at the pierce
# ---------------------------------------------------------------------------
out = theorem_a(beta, sites)
print()
print("beta' =", format_word(out.beta_prime))
print("closure components:", out.components_beta_prime)  # knot + 2 unknots

# Deleting the two new unknot components recovers beta on the nose.
sublink = out.beta_prime.delete_components(list(out.added_strands))
assert sublink.free_reduce().letters == expansion.free_reduce().letters
print("sublink recovers beta:", True)

# ---------------------------------------------------------------------------
# 3. Unknotify: one positive generator per site
# ---------------------------------------------------------------------------
# Each insertion merges one clasped unknot into the main component; the
# result is certified to be a transverse unknot.
print()
print("gamma =", format_word(out.gamma))
print("components =", out.components_gamma)
print("self-linking =", out.self_linking_gamma)
print("Delta =", format_laurent(out.delta_gamma))
print("Jones =", out.jones_gamma)
print("e(gamma) = e(beta') + #sites:", out.exponent_relation_holds)
print("certificate ok:", out.certificate_ok)

# gamma bounds a disk; undoing the two insertions and the embedding exhibits
# the m(8_20) closure as a cross-section of that unknotted ribbon disk.
assert jones_polynomial(out.gamma).is_one()
