"""
Tests for the truncated series type and its ring operations.
"""
import random
from fractions import Fraction

import pytest

from core.exceptions import IntegralityError, PreconditionError
from series.bivariate import (
    BivarSeries,
    mul,
    normalize,
    power,
    shift_down,
    shift_up,
)


def random_series(rng, nmax, max_m=4, zero_constant=False):
    slices = []
    for n in range(nmax + 1):
        row = {}
        for m in range(max_m + 1):
            if rng.random() < 0.5:
                row[m] = rng.randint(-5, 5)
        slices.append(row)
    if zero_constant:
        slices[0].pop(0, None)
    return BivarSeries(nmax, slices)


class TestBivarSeriesConstruction:
    """Test constructors, normalisation and accessors."""

    def test_zero_entries_are_dropped(self):
        """Test that zero coefficients are not stored."""
        s = BivarSeries(2, {1: {0: 0, 3: 4}})
        assert dict(s.slice(1)) == {3: 4}
        assert s.coefficient(1, 0) == 0

    def test_fractions_collapse_to_int(self):
        """Test that integral fractions are stored as int."""
        s = BivarSeries(0, {0: {0: Fraction(6, 3)}})
        assert isinstance(s.coefficient(0, 0), int)

    def test_floats_are_refused(self):
        """Test that float coefficients are refused."""
        with pytest.raises(PreconditionError):
            normalize(0.5)
        with pytest.raises(PreconditionError):
            BivarSeries(1, {0: {1: 1.0}})

    def test_negative_nmax_rejected(self):
        """Test that a negative order is refused."""
        with pytest.raises(PreconditionError):
            BivarSeries(-1)

    def test_monomial_beyond_nmax_is_zero(self):
        """Test that a monomial above the order vanishes."""
        assert BivarSeries.monomial(5, 10, 1, 4).is_zero()

    def test_k2_and_k5(self):
        """Test the K2 and K5 constants."""
        assert BivarSeries.k2(3).coefficient(2, 1) == 1
        assert BivarSeries.k5(5).coefficient(5, 10) == 1

    def test_from_counts_sums_repeated_keys_and_skips_high_n(self):
        """Test that repeated keys add up and records above nmax are dropped."""
        s = BivarSeries.from_counts(3, [(2, 1, 1), (2, 1, 2), (7, 1, 9)])
        assert s.coefficient(2, 1) == 3
        assert s.nmax == 3

    def test_from_slices_sets_nmax(self):
        """Test that the order is the number of slices minus one."""
        s = BivarSeries.from_slices([{1: 1}, {2: 1, 3: 1}])
        assert s.nmax == 1
        assert s.row_total(1) == 2

    def test_items_in_order(self):
        """Test that items come sorted by n, then m."""
        s = BivarSeries(2, {2: {5: 1, 4: 3}, 0: {1: 1}})
        assert list(s.items()) == [(0, 1, 1), (2, 4, 3), (2, 5, 1)]

    def test_valuation_and_degree(self):
        """Test the x valuation and the y degree."""
        s = BivarSeries(3, {2: {4: 1}, 3: {7: 2}})
        assert s.x_valuation() == 2
        assert s.y_degree() == 7
        assert BivarSeries.zero(3).x_valuation() is None

    def test_truncate_cannot_extend(self):
        """Test that truncating to a higher order is refused."""
        with pytest.raises(PreconditionError):
            BivarSeries.one(2).truncate(3)

    def test_equality_up_to_smaller_nmax(self):
        """Test that series compare up to the smaller order."""
        a = BivarSeries(2, {1: {0: 1}})
        b = BivarSeries(5, {1: {0: 1}, 4: {3: 9}})
        assert a == b
        assert a != BivarSeries(2, {1: {0: 2}})

    def test_assert_integral(self):
        """Test that fractional and negative counts raise IntegralityError."""
        BivarSeries(1, {1: {0: 3}}).assert_integral()
        with pytest.raises(IntegralityError):
            BivarSeries(1, {1: {0: Fraction(1, 2)}}).assert_integral("half")
        with pytest.raises(IntegralityError):
            BivarSeries(1, {1: {0: -1}}).assert_integral("negative")


class TestRingOperations:
    """Test add, mul, power and the x-shifts."""

    def test_additive_identity_and_inverse(self):
        """Test zero and negation."""
        rng = random.Random(1)
        f = random_series(rng, 4)
        assert f + BivarSeries.zero(4) == f
        assert (f + (-f)).is_zero()

    def test_y_plus_y(self):
        """Test a single coefficient of y + y."""
        y = BivarSeries.y_series(3)
        assert (y + y).coefficient(0, 1) == 2

    def test_sum_truncates_to_smaller_order(self):
        """Test that a sum keeps the smaller order."""
        assert (BivarSeries.one(2) + BivarSeries.one(5)).nmax == 2

    def test_single_vertex_squared(self):
        """Test that x * x labels two vertices in two ways."""
        x = BivarSeries.x_series(3)
        assert (x * x).coefficient(2, 0) == 2

    def test_k2_squared(self):
        """Test that two disjoint labelled edges on four vertices count 6."""
        k2 = BivarSeries.k2(4)
        assert (k2 * k2).coefficient(4, 2) == 6

    def test_multiplicative_identity(self):
        """Test multiplication by one."""
        f = random_series(random.Random(2), 4)
        assert f * BivarSeries.one(4) == f

    def test_mul_commutative_and_associative(self):
        """Test commutativity and associativity on random series."""
        rng = random.Random(3)
        for _ in range(10):
            f, g, h = (random_series(rng, 4) for _ in range(3))
            assert mul(f, g) == mul(g, f)
            assert mul(mul(f, g), h) == mul(f, mul(g, h))

    def test_power_matches_repeated_product(self):
        """Test power against repeated products and refuse negative exponents."""
        f = random_series(random.Random(4), 3)
        assert power(f, 0) == BivarSeries.one(3)
        assert power(f, 5) == f * f * f * f * f
        with pytest.raises(PreconditionError):
            power(f, -1)

    def test_shift_up_labels_new_vertices(self):
        """Test that shift_up raises the order with the vertex count."""
        shifted = shift_up(BivarSeries.x_series(2), 1)
        assert shifted.nmax == 3
        assert shifted.coefficient(2, 0) == 2

    def test_shift_down_inverts_shift_up(self):
        """Test that shift_down undoes shift_up."""
        f = random_series(random.Random(5), 4)
        assert shift_down(shift_up(f, 3), 3) == f

    def test_shift_down_needs_empty_low_slices(self):
        """Test that shift_down refuses nonzero low slices."""
        with pytest.raises(PreconditionError):
            shift_down(BivarSeries.one(3), 1)
