"""A guided tour of the invariant machinery.

Run:  python3 demos/invariants_tour.py
"""

from quasibraid import (
    BraidWord,
    alexander_genus_bound,
    alexander_polynomial,
    bennequin_summary,
    format_laurent,
    jones_polynomial,
    make_beta_n,
    make_gamma_n,
    parse_word,
)

# ---------------------------------------------------------------------------
# 1. Words and closures
# ---------------------------------------------------------------------------
# Braid letters are signed integers; B(i,j) is a band generator.  The closure
# of sigma_1^3 in B_2 is the right-handed trefoil.

trefoil = parse_word("1^3", 2)
summary = trefoil.closure_summary()
print("trefoil closure:", summary)

# ---------------------------------------------------------------------------
# 2. Alexander via reduced Burau
# ---------------------------------------------------------------------------
delta = alexander_polynomial(trefoil)
print("Delta(trefoil) =", format_laurent(delta))
print("genus bound    =", alexander_genus_bound(delta))

# The figure eight is amphichiral; its Alexander polynomial is symmetric and
# its Jones polynomial is its own mirror.
fig8 = BraidWord.make(3, [1, -2, 1, -2])
print("Delta(4_1) =", format_laurent(alexander_polynomial(fig8)))
print("V(4_1)     =", jones_polynomial(fig8))

# ---------------------------------------------------------------------------
# 3. Jones distinguishes mirrors where Alexander cannot
# ---------------------------------------------------------------------------
left = BraidWord.make(2, [-1, -1, -1])
print("V(right trefoil) =", jones_polynomial(trefoil))
print("V(left trefoil)  =", jones_polynomial(left))

# ---------------------------------------------------------------------------
# 4. The genus-non-monotone families
# ---------------------------------------------------------------------------
# gamma_n is strongly quasipositive with Bennequin genus n+1, yet it is
# obtained from beta_n (genus 2n+1) by *adding* 2n+2 positive bands: genus
# drops while the surface grows.
for n in range(3):
    beta, gamma = make_beta_n(n), make_gamma_n(n)
    print(
        f"n={n}:  g(beta_{n}) = {bennequin_summary(beta).genus}   "
        f"g(gamma_{n}) = {bennequin_summary(gamma).genus}"
    )
