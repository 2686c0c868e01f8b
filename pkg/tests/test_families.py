"""The beta_n / gamma_n families, band surgery, and Hopf plumbing."""

from fractions import Fraction

import pytest

from quasibraid import (
    band_surgery_word,
    bennequin_summary,
    braid_equal,
    hopf_plumb_rewrite,
    hopf_plumb_sites,
    make_beta_n,
    make_beta_n_qp,
    make_gamma_n,
    qp_ribbon_summary,
    verify_band_surgery_sequence,
)


class TestFamilies:
    def test_letter_counts(self):
        for n in range(4):
            assert len(make_beta_n(n)) == 5 + 4 * n
            assert len(make_gamma_n(n)) == 2 * n + 5
        # The full Artin expansion of beta_0 has 15 letters (5+1+3+3+3).
        assert len(make_beta_n(0).to_braid_word()) == 15

    def test_genera(self):
        for n in range(4):
            assert bennequin_summary(make_beta_n(n)).genus == 2 * n + 1
            assert bennequin_summary(make_gamma_n(n)).genus == n + 1

    def test_gamma_strongly_quasipositive(self):
        for n in range(4):
            assert make_gamma_n(n).is_positive()
            assert not make_beta_n(n).is_positive()

    def test_qp_form(self):
        for n in range(3):
            qp = make_beta_n_qp(n)
            assert qp.band_count == 3
            assert qp_ribbon_summary(qp).genus == Fraction(0)
            assert braid_equal(
                qp.to_braid_word(), make_beta_n(n).to_braid_word()
            )

    def test_negative_n_rejected(self):
        for fn in (make_beta_n, make_gamma_n, make_beta_n_qp):
            with pytest.raises(ValueError):
                fn(-1)


class TestBandSurgery:
    def test_insertion_count(self):
        for n in range(4):
            surgered, inserted = band_surgery_word(n)
            assert inserted == 2 * n + 2
            assert len(surgered) == len(make_beta_n(n)) + inserted

    def test_sequence_verifies(self):
        for n in range(4):
            assert verify_band_surgery_sequence(n)


class TestHopfPlumbing:
    def test_adjacent_sigma1_doubling(self):
        w = make_beta_n(1)
        # position 2 has a (1,2,+1) letter; doubling it is a valid plumbing.
        plumbed = hopf_plumb_rewrite(w, 2, 1)
        assert plumbed.letters[2].i == 1 and plumbed.letters[2].j == 2

    def test_rejects_sign_mismatch(self):
        w = make_beta_n(0)
        with pytest.raises(ValueError):
            hopf_plumb_rewrite(w, 0, -1)

    def test_four_plumbings_step_the_family(self):
        for n in range(1, 4):
            word = make_beta_n(n - 1)
            for position, sign in hopf_plumb_sites(n):
                word = hopf_plumb_rewrite(word, position, sign)
            assert word.letters == make_beta_n(n).letters
