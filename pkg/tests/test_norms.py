"""Quadratic extension classification, norm characters, conductors."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chatelet import (
    REAL_PLACE,
    ExtKind,
    QuadExtClass,
    chi,
    classify_extension,
    conductor_n,
    hilbert_symbol,
    norm_char_fn,
    norm_uniformizer,
    stability_modulus,
    valuation,
)

nonzero_rationals = st.fractions(
    min_value=-400, max_value=400, max_denominator=360
).filter(lambda r: r != 0)
nonsquare_d = st.sampled_from(
    [Fraction(v) for v in (-1, -5, 2, -2, 3, 5, 6, 7, 10, -30)]
    + [Fraction(-3, 20), Fraction(5, 8)]
)
places = st.sampled_from([REAL_PLACE, 2, 3, 5, 7, 11, 13])


class TestClassifyExtension:
    def test_finite_kinds(self):
        assert classify_extension(2, 5).kind is ExtKind.UNRAMIFIED
        assert classify_extension(5, 5).kind is ExtKind.RAMIFIED
        assert classify_extension(-1, 2).kind is ExtKind.RAMIFIED
        assert classify_extension(17, 2).kind is ExtKind.SPLIT
        assert classify_extension(4, 7).kind is ExtKind.SPLIT
        assert classify_extension(5, 2).kind is ExtKind.UNRAMIFIED  # 5 mod 8

    def test_real_kinds(self):
        assert classify_extension(3, REAL_PLACE).kind is ExtKind.SPLIT
        assert classify_extension(-3, REAL_PLACE) == QuadExtClass(
            ExtKind.RAMIFIED, conductor_n=0, stability_m=0
        )

    def test_dyadic_conductors(self):
        assert classify_extension(-1, 2) == QuadExtClass(ExtKind.RAMIFIED, 1, 2)
        assert classify_extension(2, 2) == QuadExtClass(ExtKind.RAMIFIED, 2, 3)
        assert classify_extension(-2, 2) == QuadExtClass(ExtKind.RAMIFIED, 2, 3)
        assert classify_extension(-5, 2) == QuadExtClass(ExtKind.RAMIFIED, 1, 2)

    def test_stability_moduli(self):
        assert stability_modulus(classify_extension(2, 5)) == 0
        assert stability_modulus(classify_extension(5, 5)) == 1
        assert stability_modulus(classify_extension(-1, 2)) == 2
        assert stability_modulus(classify_extension(2, 2)) == 3
        with pytest.raises(ValueError):
            stability_modulus(classify_extension(4, 7))

    def test_square_class_invariance(self):
        for d in (Fraction(-1), Fraction(5), Fraction(2)):
            for s in (Fraction(9), Fraction(1, 4), Fraction(49, 25)):
                for place in (REAL_PLACE, 2, 3, 5):
                    assert classify_extension(d * s, place) == classify_extension(
                        d, place
                    )

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            classify_extension(0, 5)


class TestChi:
    def test_frozen(self):
        assert chi(-1, 3, 2) == 1
        assert chi(-1, 2, 2) == 0
        assert chi(2, 5, 5) == 1
        assert chi(-1, -3, REAL_PLACE) == 1
        assert chi(-1, Fraction(-3, 20), 2) == 0

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            chi(-1, 0, 2)

    def test_matches_hilbert_symbol(self):
        values = (1, -1, 2, -2, 3, -6, Fraction(5, 8), Fraction(-7, 12))
        for d in (-1, 2, 5, Fraction(-3, 20)):
            for x in values:
                for place in (REAL_PLACE, 2, 3, 5, 7):
                    assert chi(d, x, place) == hilbert_symbol(d, x, place)

    @settings(max_examples=150, deadline=None)
    @given(nonsquare_d, nonzero_rationals, nonzero_rationals, places)
    def test_homomorphism(self, d, x, y, place):
        assert chi(d, x * y, place) == (chi(d, x, place) + chi(d, y, place)) % 2

    @settings(max_examples=150, deadline=None)
    @given(
        nonsquare_d,
        st.fractions(min_value=-30, max_value=30, max_denominator=12),
        st.fractions(min_value=-30, max_value=30, max_denominator=12),
        places,
    )
    def test_norm_form_values_are_norms(self, d, s, t, place):
        # s^2 - d t^2 is a norm from the quadratic extension by construction
        x = s * s - d * t * t
        if x != 0:
            assert chi(d, x, place) == 0

    def test_unramified_units_are_norms(self):
        for d, p in ((2, 5), (5, 2), (3, 7)):
            assert classify_extension(d, p).kind is ExtKind.UNRAMIFIED
            for u in range(1, p * p):
                if u % p:
                    assert chi(d, u, p) == 0
                    assert chi(d, -u, p) == 0

    def test_uniformizer_detects_unramified(self):
        # in the unramified case chi is exactly the valuation parity
        for d, p in ((2, 5), (3, 7)):
            for x in (p, 3 * p, p**2, Fraction(1, p)):
                assert chi(d, x, p) == valuation(x, p) % 2


class TestNormCharFn:
    @settings(max_examples=200, deadline=None)
    @given(nonsquare_d, nonzero_rationals, places)
    def test_closure_matches_chi(self, d, x, place):
        fn = norm_char_fn(Fraction(d), place)
        assert fn(Fraction(x)) == chi(d, x, place)

    @settings(max_examples=200, deadline=None)
    @given(nonsquare_d, st.integers(min_value=-10**6, max_value=10**6).filter(bool), places)
    def test_closure_accepts_plain_ints(self, d, n, place):
        fn = norm_char_fn(Fraction(d), place)
        assert fn(n) == chi(d, n, place)


class TestConductor:
    def test_frozen(self):
        assert conductor_n(-1) == 1
        assert conductor_n(2) == 2
        assert conductor_n(-2) == 2
        assert conductor_n(-5) == 1
        assert conductor_n(10) == 2
        assert conductor_n(-10) == 2

    def test_square_scaling_invariance(self):
        assert conductor_n(-9) == 1
        assert conductor_n(Fraction(-1, 4)) == 1
        assert conductor_n(Fraction(2, 9)) == 2
        assert conductor_n(8) == 2

    def test_against_brute_force_character(self):
        # chi must vanish on 1 + 2^(n+1) Z_2 and not on 1 + 2^n Z_2
        for d in (-1, -2, 2, -5, 10):
            n = conductor_n(d)
            above = [u for u in range(1, 512, 2) if (u - 1) % 2 ** (n + 1) == 0]
            at = [u for u in range(1, 512, 2) if (u - 1) % 2**n == 0]
            assert all(chi(d, u, 2) == 0 for u in above)
            assert any(chi(d, u, 2) == 1 for u in at)

    def test_split_or_unramified_rejected(self):
        with pytest.raises(ValueError):
            conductor_n(17)  # dyadic square
        with pytest.raises(ValueError):
            conductor_n(5)  # unramified at 2


class TestNormUniformizer:
    @pytest.mark.parametrize(
        "d,p,expected",
        [(-1, 2, 2), (2, 2, 2), (-2, 2, 2), (5, 5, 5), (-5, 5, 5), (3, 3, 6)],
    )
    def test_frozen(self, d, p, expected):
        assert norm_uniformizer(d, p) == expected

    def test_contract(self):
        for d, p in ((-1, 2), (2, 2), (-5, 5), (3, 3), (7, 7), (-21, 3)):
            pi = norm_uniformizer(d, p)
            assert valuation(pi, p) == 1
            assert chi(d, pi, p) == 0

    def test_unramified_rejected(self):
        # every uniformizer has chi = 1 when the extension is unramified
        with pytest.raises(ValueError):
            norm_uniformizer(2, 5)
