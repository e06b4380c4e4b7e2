"""Construction tests: literal sequences, zero-sum totals, and the claimed
avoidance properties re-checked through the scanners."""

import pytest

from zerosum import (
    ParameterError,
    Params,
    ap_scan,
    block_scan,
    build_ap_good_shift,
    build_ap_mod_k,
    build_ap_mod_k_plus1,
    build_ap_mod_k_product,
    build_ap_two_p,
    build_block_extremal,
    build_block_extremal_negated,
    exact_block_threshold,
)


class TestBlockExtremal:
    def test_literal_1_2_6(self):
        c = build_block_extremal(Params(1, 2, 6))
        assert c.length == 9
        assert c.seq.values() == (-1, -1, -1, 2, 2, 2, -1, -1, -1)
        assert c.seq.total_weight() == 0
        assert not c.degenerate

    def test_every_window_weight_is_r_plus_s(self):
        c = build_block_extremal(Params(1, 2, 6))
        weights = {c.seq.window_weight(i, 6) for i in range(c.length - 5)}
        assert weights == {3}

    def test_pm1_letters_are_feasible(self):
        # (1, 1, 6): shift t = 0, one full block plus a two-letter remainder.
        c = build_block_extremal(Params(1, 1, 6))
        assert c.length == 8
        assert c.seq.values() == (-1, -1, 1, 1, 1, 1, -1, -1)
        weights = {c.seq.window_weight(i, 6) for i in range(3)}
        assert weights == {2}

    def test_2_3_10(self):
        c = build_block_extremal(Params(2, 3, 10))
        assert c.length == 25
        assert c.seq.total_weight() == 0
        assert {c.seq.window_weight(i, 10) for i in range(16)} == {5}

    def test_degenerate_small_k(self):
        c = build_block_extremal(Params(1, 2, 3))
        assert c.length == 0
        assert c.degenerate

    @pytest.mark.parametrize(
        "r,s", [(1, 2), (2, 3), (1, 3), (3, 4), (2, 5), (1, 4)]
    )
    def test_extremality_grid(self, r, s):
        """Length is one below the exact threshold and no window is zero-sum."""
        for mult in (1, 2, 4, 7):
            params = Params(r, s, mult * (r + s))
            c = build_block_extremal(params)
            n_exact = exact_block_threshold(params).n_exact
            assert c.length == exact_block_threshold(params).m1 - 1
            assert c.length < n_exact
            assert c.seq.total_weight() == 0
            if c.length >= params.k:
                report = block_scan(c.seq, params.k)
                assert not report.found
                assert report.min_abs_weight == r + s

    def test_divisibility_required(self):
        with pytest.raises(ParameterError):
            build_block_extremal(Params(1, 2, 4))


class TestBlockExtremalNegated:
    def test_literal_2_1_6(self):
        c = build_block_extremal_negated(Params(2, 1, 6))
        assert c.seq.values() == (1, 1, 1, -2, -2, -2, 1, 1, 1)
        assert c.seq.total_weight() == 0

    def test_windows_are_negative_constant(self):
        c = build_block_extremal_negated(Params(2, 1, 6))
        weights = {c.seq.window_weight(i, 6) for i in range(4)}
        assert weights == {-3}
        assert not block_scan(c.seq, 6).found

    @pytest.mark.parametrize("r,s", [(2, 1), (3, 2), (3, 1), (5, 2)])
    def test_negation_grid(self, r, s):
        for mult in (2, 5):
            params = Params(r, s, mult * (r + s))
            c = build_block_extremal_negated(params)
            assert c.seq.total_weight() == 0
            if c.length >= params.k:
                assert not block_scan(c.seq, params.k).found


class TestApModK:
    def test_degenerate_k6(self):
        c = build_ap_mod_k(6)
        assert c.length == 0
        assert c.degenerate

    def test_literal_k10(self):
        c = build_ap_mod_k(10)
        assert c.length == 12
        assert c.seq.values() == (-1, -1, 1, 1, 1, -1, -1, 1, 1, 1, -1, -1)
        assert c.seq.total_weight() == 0
        report = ap_scan(c.seq, 10)
        assert not report.found

    def test_gcd_weight_bound_k10(self):
        """Every scanned AP weight is at least gcd(d, k) in absolute value."""
        import math

        c = build_ap_mod_k(10)
        report = ap_scan(c.seq, 10, collect_per_d=True)
        for d, min_abs in report.per_d_min_abs.items():
            assert min_abs >= math.gcd(d, 10)

    @pytest.mark.parametrize("k", [4, 8, 12, 16, 2])
    def test_rejects_wrong_congruence(self, k):
        with pytest.raises(ParameterError):
            build_ap_mod_k(k)


class TestApModKProduct:
    def test_counts_k30(self):
        fn = build_ap_mod_k_product(30, (3, 5))
        assert fn.count_plus() == 16
        assert fn.count_minus() == 14

    def test_single_factor_matches_period_pattern(self):
        fn = build_ap_mod_k_product(6, (3,))
        assert fn.values == (-1, 1, 1, -1, 1, 1)
        assert fn.count_plus() == 4 and fn.count_minus() == 2

    def test_full_progressions_nonzero(self):
        fn = build_ap_mod_k_product(30, (3, 5))
        for d in (1, 2, 3, 5, 6, 10, 15, 30):
            for start in range(d):
                assert fn.progression_weight(start, d, 30 // d) != 0

    def test_bad_factorizations(self):
        with pytest.raises(ParameterError):
            build_ap_mod_k_product(30, (3, 7))  # product mismatch
        with pytest.raises(ParameterError):
            build_ap_mod_k_product(12, (6,))  # even factor
        with pytest.raises(ParameterError):
            build_ap_mod_k_product(18, (3, 3))  # not coprime


class TestApModKPlus1:
    def test_literal_k8(self):
        c = build_ap_mod_k_plus1(8)
        assert c.length == 12
        assert c.seq.values() == (-1, -1, -1, 1, 1, 1, 1, 1, 1, -1, -1, -1)
        assert c.seq.total_weight() == 0
        assert not ap_scan(c.seq, 8).found

    def test_length_k14(self):
        c = build_ap_mod_k_plus1(14)
        assert c.length == 36
        assert c.length == (14 + 4) * ((14 - 2) // 6)

    def test_per_period_counts(self):
        c = build_ap_mod_k_plus1(14)
        a = 15
        period = c.seq.values()[:a]
        assert period.count(-1) == (a - 3) // 2
        assert period.count(1) == (a + 3) // 2

    def test_rejects_odd_k(self):
        with pytest.raises(ParameterError):
            build_ap_mod_k_plus1(7)


class TestApGoodShift:
    def test_1_2_12_shift1(self):
        c = build_ap_good_shift(Params(1, 2, 12), 1)
        assert c.length == 18
        assert c.seq.total_weight() == 0
        assert not ap_scan(c.seq, 12).found
        # per-period weight r + s + s*alpha = 5 on the first full period
        assert c.seq.window_weight(0, 13) == 5

    def test_reduces_to_plus1_at_pm1(self):
        via_shift = build_ap_good_shift(Params(1, 1, 8), 1)
        direct = build_ap_mod_k_plus1(8)
        assert via_shift.seq.values() == direct.seq.values()

    def test_rejects_bad_shift(self):
        with pytest.raises(ParameterError):
            build_ap_good_shift(Params(1, 2, 12), 2)


class TestApTwoP:
    def test_literal_p3(self):
        c = build_ap_two_p(3)
        assert c.length == 8
        assert c.seq.values() == (-1, -1, 1, 1, 1, 1, -1, -1)
        assert c.seq.total_weight() == 0
        assert not ap_scan(c.seq, 6).found

    @pytest.mark.parametrize("p", [5, 7])
    def test_scan_clean(self, p):
        c = build_ap_two_p(p)
        assert c.length == p * p - 1
        assert not ap_scan(c.seq, 2 * p).found

    @pytest.mark.parametrize("p", [2, 4, 9, 15])
    def test_rejects_non_odd_primes(self, p):
        with pytest.raises(ParameterError):
            build_ap_two_p(p)


def test_ap_constructions_desk_scale_grid():
    """Every AP construction scans clean for k up to 60."""
    for k in range(8, 61, 2):
        c = build_ap_mod_k_plus1(k)
        if c.length >= k:
            assert not ap_scan(c.seq, k).found, k
    for k in range(6, 59, 4):
        c = build_ap_mod_k(k)
        if c.length >= k:
            assert not ap_scan(c.seq, k).found, k
    for k in range(6, 61, 6):
        params = Params(1, 2, k)
        c = build_ap_good_shift(params, 1)
        if c.length >= k:
            assert not ap_scan(c.seq, k).found, k


def test_good_shift_length_matches_lower_bound_value():
    from zerosum import ap_lower_bound_value

    for params, alpha in [
        (Params(1, 2, 12), 1),
        (Params(1, 1, 14), 1),
        (Params(2, 3, 30), 1),  # a = 31 is prime and divides nothing in {-2, 3}
    ]:
        c = build_ap_good_shift(params, alpha)
        assert c.length == ap_lower_bound_value(params, alpha)


def test_all_constructions_zero_sum():
    built = [
        build_block_extremal(Params(1, 2, 6)),
        build_block_extremal_negated(Params(2, 1, 6)),
        build_ap_mod_k(14),
        build_ap_mod_k_plus1(10),
        build_ap_good_shift(Params(1, 2, 12), 1),
        build_ap_two_p(5),
    ]
    for c in built:
        assert c.seq.total_weight() == 0
        assert c.length == len(c.seq)
