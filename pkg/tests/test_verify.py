"""Tests for the enumeration oracles and Monte Carlo machinery."""

from fractions import Fraction

import pytest

from qauth import analytics
from qauth.adversary import (
    ABORT,
    RESEND_UNCORRECTED,
    NoMessageStrategy,
)
from qauth.bch import build_bch
from qauth.codes import make_hamming_7_4, make_repetition
from qauth.errors import UnsupportedSizeError
from qauth.gf2 import BitWord
from qauth.verify import (
    clopper_pearson,
    intercept_resend_success_given_difference,
    monte_carlo,
    oracle_intercept_resend,
    oracle_no_message_any_codeword,
    oracle_no_message_exact_codeword,
    oracle_p_dec,
)


@pytest.fixture(scope="module")
def rep3():
    return make_repetition(3)


@pytest.fixture(scope="module")
def rep5():
    return make_repetition(5)


@pytest.fixture(scope="module")
def ham():
    return make_hamming_7_4()


class TestNoMessageOracles:
    def test_rep3_exact_codeword(self, rep3):
        assert oracle_no_message_exact_codeword(rep3) == Fraction(27, 64)

    def test_hamming_exact_codeword(self, ham):
        assert oracle_no_message_exact_codeword(ham) == Fraction(3**7, 4**7)

    def test_matches_formula(self, rep3, rep5, ham):
        for code in (rep3, rep5, ham):
            assert oracle_no_message_exact_codeword(code) == (
                analytics.p_f_no_message(code.n)
            )

    def test_rep3_any_codeword(self, rep3):
        assert oracle_no_message_any_codeword(rep3) == Fraction(28, 64)

    def test_hamming_any_codeword(self, ham):
        expected = Fraction(3, 4) ** 7 * (
            1 + 7 * Fraction(1, 3) ** 3 + 7 * Fraction(1, 3) ** 4 + Fraction(1, 3) ** 7
        )
        assert oracle_no_message_any_codeword(ham) == expected

    def test_any_at_least_exact(self, rep3, rep5, ham):
        for code in (rep3, rep5, ham):
            assert oracle_no_message_any_codeword(code) >= (
                oracle_no_message_exact_codeword(code)
            )

    def test_size_bound(self):
        big = build_bch(6, 10)
        with pytest.raises(UnsupportedSizeError):
            oracle_no_message_exact_codeword(big)


class TestDecodeOracle:
    @pytest.mark.parametrize("maker", [
        lambda: make_repetition(3),
        lambda: make_repetition(5),
        make_hamming_7_4,
    ])
    def test_gap_is_zero(self, maker):
        report = oracle_p_dec(maker())
        assert report.equal
        assert report.gap == 0

    def test_rep3_value(self, rep3):
        assert oracle_p_dec(rep3).exact_value == Fraction(27, 32)

    def test_size_bound(self):
        with pytest.raises(UnsupportedSizeError):
            oracle_p_dec(make_repetition(13))


class TestInterceptResendOracle:
    def test_deterministic(self, rep3):
        a = oracle_intercept_resend(rep3)
        b = oracle_intercept_resend(rep3)
        assert a == b

    def test_matched_slice_is_certain(self, rep3, ham):
        for code in (rep3, ham):
            assert intercept_resend_success_given_difference(code, 0) == 1

    def test_gap_is_reported_signed(self, rep3, ham):
        for code in (rep3, ham):
            report = oracle_intercept_resend(code)
            assert report.gap == report.exact_value - report.formula_value
            assert report.gap != 0  # the closed form embeds a modeling assumption

    def test_abort_at_most_resend(self, rep3, ham):
        for code in (rep3, ham):
            abort = oracle_intercept_resend(code, ABORT).exact_value
            resend = oracle_intercept_resend(code, RESEND_UNCORRECTED).exact_value
            assert abort <= resend

    def test_policies_differ_on_imperfect_code(self):
        # BCH[7,4] is perfect; repetition is perfect; use a code whose
        # syndrome table has gaps so the failure branch matters
        code = build_bch(3, 1)  # perfect Hamming: identical values
        a = oracle_intercept_resend(code, ABORT).exact_value
        r = oracle_intercept_resend(code, RESEND_UNCORRECTED).exact_value
        assert a == r

    def test_size_bound(self, rep3):
        with pytest.raises(UnsupportedSizeError):
            oracle_intercept_resend(make_repetition(11))


class TestClopperPearson:
    def test_extremes(self):
        low, high = clopper_pearson(0, 100)
        assert low == 0.0 and 0 < high < 0.1
        low, high = clopper_pearson(100, 100)
        assert 0.9 < low < 1 and high == 1.0

    def test_half(self):
        low, high = clopper_pearson(500, 1000)
        assert low < 0.5 < high
        assert high - low < 0.1

    def test_interval_narrows(self):
        narrow = clopper_pearson(5000, 10000)
        wide = clopper_pearson(50, 100)
        assert narrow[1] - narrow[0] < wide[1] - wide[0]


class TestMonteCarlo:
    def test_reproducible(self, rep3):
        adversary = NoMessageStrategy(BitWord(1, 1))
        a = monte_carlo(rep3, 2000, 7, adversary=adversary)
        b = monte_carlo(rep3, 2000, 7, adversary=adversary)
        assert a == b

    def test_seed_changes_stream(self, rep3):
        adversary = NoMessageStrategy(BitWord(1, 1))
        a = monte_carlo(rep3, 2000, 7, adversary=adversary)
        b = monte_carlo(rep3, 2000, 8, adversary=adversary)
        assert a.successes != b.successes

    def test_honest_always_accepts(self, ham):
        stats = monte_carlo(ham, 500, 3)
        assert stats.successes == 500
        assert stats.estimate == 1

    def test_no_message_interval_covers_oracle(self, rep3):
        truth = oracle_no_message_any_codeword(rep3)  # 28/64
        stats = monte_carlo(
            rep3, 40000, 11, adversary=NoMessageStrategy(BitWord(1, 1))
        )
        assert stats.contains(truth)

    def test_coverage_meta(self, rep3):
        # the 99% interval should cover the truth in nearly all repeats
        truth = oracle_no_message_any_codeword(rep3)
        adversary = NoMessageStrategy(BitWord(1, 1))
        covered = sum(
            monte_carlo(rep3, 800, seed, adversary=adversary).contains(truth)
            for seed in range(40)
        )
        assert covered >= 38

    def test_json_fields(self, rep3):
        stats = monte_carlo(rep3, 50, 1)
        d = stats.to_json_dict()
        assert set(d) == {
            "trials", "successes", "estimate", "ci_low", "ci_high",
            "confidence", "seed",
        }
