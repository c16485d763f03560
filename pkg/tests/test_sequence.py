import numpy as np
import pytest

from lzwmetrics import (
    Alphabet,
    NumericSeries,
    SymbolSequence,
    binarize_median,
    digitize_quantiles,
    shuffle,
)


def seq(symbols, A=2):
    return SymbolSequence(Alphabet(A), np.array(symbols, dtype=np.int64))


class TestTypes:
    def test_alphabet_rejects_unary(self):
        with pytest.raises(ValueError):
            Alphabet(1)

    def test_sequence_rejects_empty(self):
        with pytest.raises(ValueError):
            seq([])

    def test_sequence_rejects_out_of_range_symbols(self):
        with pytest.raises(ValueError):
            seq([0, 2], A=2)
        with pytest.raises(ValueError):
            seq([-1, 0], A=2)

    def test_sequence_is_immutable(self):
        s = seq([0, 1, 0])
        with pytest.raises(ValueError):
            s.data[0] = 1

    def test_numeric_series_rejects_nan(self):
        with pytest.raises(ValueError):
            NumericSeries([1.0, float("nan"), 2.0])

    def test_numeric_series_rejects_empty(self):
        with pytest.raises(ValueError):
            NumericSeries([])


class TestBinarizeMedian:
    def test_distinct_samples(self):
        out = binarize_median(NumericSeries([1.0, 2.0, 3.0, 4.0]))
        assert out == seq([0, 0, 1, 1])

    def test_single_sample_maps_to_zero(self):
        assert binarize_median(NumericSeries([5.0])) == seq([0])

    def test_ties_map_to_lower_symbol(self):
        out = binarize_median(NumericSeries([7.0, 7.0, 7.0, 7.0]))
        assert out == seq([0, 0, 0, 0])

    def test_even_distinct_samples_split_exactly(self):
        # n distinct samples, n even: exactly n/2 land strictly above the
        # midpoint median, so the empirical entropy is exactly 1 bit.
        rng = np.random.default_rng(11)
        for _ in range(200):
            n = 2 * int(rng.integers(1, 200))
            samples = rng.permutation(rng.random(n))
            out = binarize_median(NumericSeries(samples))
            assert int(out.data.sum()) == n // 2

    def test_odd_distinct_samples_split_off_by_one(self):
        rng = np.random.default_rng(12)
        for _ in range(100):
            n = 2 * int(rng.integers(1, 200)) + 1
            out = binarize_median(NumericSeries(rng.random(n)))
            ones = int(out.data.sum())
            assert ones == (n - 1) // 2


class TestDigitizeQuantiles:
    def test_two_levels_match_median_rule(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            series = NumericSeries(rng.normal(size=int(rng.integers(1, 300))))
            assert digitize_quantiles(series, 2) == binarize_median(series)

    def test_quartiles_hand_example(self):
        series = NumericSeries([10, 20, 30, 40, 50, 60, 70, 80])
        assert digitize_quantiles(series, 4) == seq([0, 0, 1, 1, 2, 2, 3, 3], A=4)

    def test_constant_series_occupies_lowest_bin(self):
        out = digitize_quantiles(NumericSeries([1.0, 1.0, 1.0]), 3)
        assert out == seq([0, 0, 0], A=3)

    def test_rejects_fewer_than_two_levels(self):
        with pytest.raises(ValueError):
            digitize_quantiles(NumericSeries([1.0, 2.0]), 1)

    def test_symbols_stay_below_levels(self):
        rng = np.random.default_rng(14)
        for levels in (2, 3, 5, 9):
            series = NumericSeries(rng.normal(size=500))
            out = digitize_quantiles(series, levels)
            assert out.alphabet.size == levels
            assert int(out.data.max()) < levels

    def test_near_uniform_occupancy_on_distinct_samples(self):
        rng = np.random.default_rng(15)
        for levels in (2, 3, 4, 7):
            n = 997
            samples = rng.permutation(np.arange(n, dtype=np.float64))
            out = digitize_quantiles(NumericSeries(samples), levels)
            counts = np.bincount(out.data, minlength=levels)
            slack = np.ceil(n / levels) / n
            assert np.abs(counts / n - 1.0 / levels).max() <= slack + 1e-12


class TestShuffle:
    def test_constant_sequence_is_fixed_point(self):
        s = seq([0, 0, 0, 0])
        assert shuffle(s, 123) == s

    def test_histogram_preserved_exactly(self):
        rng = np.random.default_rng(16)
        for _ in range(100):
            A = int(rng.integers(2, 7))
            s = seq(rng.integers(0, A, int(rng.integers(1, 400))), A=A)
            t = shuffle(s, int(rng.integers(0, 2**32)))
            assert len(t) == len(s)
            assert np.array_equal(
                np.bincount(s.data, minlength=A), np.bincount(t.data, minlength=A)
            )

    def test_same_seed_same_permutation(self):
        s = seq(np.arange(100) % 2)
        assert shuffle(s, 42) == shuffle(s, 42)

    def test_different_seeds_differ(self):
        s = seq(np.arange(200) % 2)
        assert shuffle(s, 1) != shuffle(s, 2)
