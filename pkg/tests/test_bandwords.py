"""Embedded/quasipositive bandwords and surface bookkeeping."""

from fractions import Fraction

import pytest

from quasibraid import (
    BandLetter,
    EmbeddedBandWord,
    QPBandWord,
    bennequin_summary,
    expand_band_generator,
    qp_ribbon_summary,
)


class TestEmbedded:
    def test_expansion(self):
        w = EmbeddedBandWord.make(3, [(1, 3, 1), (1, 2, -1)])
        assert w.to_braid_word().letters == (1, 2, -1, -1)
        neg = EmbeddedBandWord.make(3, [(1, 3, -1)])
        assert neg.to_braid_word().letters == (1, -2, -1)

    def test_expand_band_generator(self):
        assert expand_band_generator(2, 4, 4).letters == (2, 3, -2)

    def test_is_positive(self):
        assert EmbeddedBandWord.make(3, [(1, 3, 1)]).is_positive()
        assert not EmbeddedBandWord.make(3, [(1, 3, -1)]).is_positive()

    def test_validation(self):
        with pytest.raises(ValueError):
            BandLetter(2, 2, 1)
        with pytest.raises(ValueError):
            EmbeddedBandWord.make(3, [(1, 4, 1)])

    def test_bennequin_summary(self):
        # trefoil as sigma_1^3 in B_2: chi = 2 - 3 = -1, genus 1.
        w = EmbeddedBandWord.make(2, [(1, 2, 1)] * 3)
        s = bennequin_summary(w)
        assert (s.chi, s.components, s.genus) == (-1, 1, Fraction(1))

    def test_json_roundtrip(self):
        w = EmbeddedBandWord.make(4, [(1, 4, 1), (2, 3, -1)])
        assert EmbeddedBandWord.from_json(w.to_json()) == w


class TestQuasipositive:
    def test_expansion(self):
        qp = QPBandWord.make(3, [([2, 1, 1], 2), ([1], 2)])
        assert qp.to_braid_word().letters == (
            2, 1, 1, 2, -1, -1, -2, 1, 2, -1,
        )
        assert qp.band_count == 2

    def test_ribbon_summary_m8_20(self):
        qp = QPBandWord.make(3, [([2, 1, 1], 2), ([1], 2)])
        s = qp_ribbon_summary(qp)
        assert (s.strands, s.bands, s.chi) == (3, 2, 1)
        assert s.components == 1 and s.genus == Fraction(0)

    def test_multi_component_genus_is_none(self):
        qp = QPBandWord.make(3, [([], 1)])  # closure has 2 components
        s = qp_ribbon_summary(qp)
        assert s.components == 2 and s.genus is None

    def test_core_range_checked(self):
        with pytest.raises(ValueError):
            QPBandWord.make(3, [([], 3)])

    def test_json_roundtrip(self):
        qp = QPBandWord.make(3, [([2, 1, 1], 2), ([1], 2)])
        assert QPBandWord.from_json(qp.to_json()) == qp
