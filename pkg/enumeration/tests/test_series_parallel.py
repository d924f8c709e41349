"""
Tests for the series-parallel networks and graphs.
"""
import pytest

from core.exceptions import PreconditionError
from basis.networks import network_series_from_class
from enumeration.series_parallel import (
    SPSystem,
    compute_Gsp,
    compute_R,
    gsp_series_by_division,
    r_step,
    series_parallel_system,
    split_series_parallel,
)
from series.bivariate import BivarSeries


class TestR:
    """Test the fixed point for R."""

    def test_first_slices(self):
        """Test the single edge, then the path and the triangle with the edge kept."""
        r = compute_R(3)
        assert dict(r.slice(0)) == {1: 1}
        assert dict(r.slice(1)) == {2: 1, 3: 1}

    def test_stable_under_truncation(self):
        """Test that a larger order does not change the smaller slices."""
        assert compute_R(6).truncate(4) == compute_R(4)

    def test_one_more_pass_changes_nothing(self):
        """Test that R is stable under one extra iteration."""
        r = compute_R(8)
        assert r_step(r) == r

    def test_integral(self):
        """Test that every coefficient is a non-negative integer."""
        r = compute_R(7)
        assert r.is_integral()
        assert all(c > 0 for _, _, c in r.items())

    def test_negative_order(self):
        """Test that a negative order is refused."""
        with pytest.raises(PreconditionError):
            compute_R(-1)


class TestSplit:
    """Test the split into series and parallel networks."""

    def test_sum_is_r(self):
        """Test that S + Ppar = R."""
        r = compute_R(6)
        s, ppar = split_series_parallel(r)
        assert s + ppar == r

    def test_small_slices(self):
        """Test that the single edge is parallel and the path is series."""
        s, ppar = split_series_parallel(compute_R(3))
        assert dict(s.slice(0)) == {}
        assert dict(ppar.slice(0)) == {1: 1}
        assert dict(s.slice(1)) == {2: 1}
        assert dict(ppar.slice(1)) == {3: 1}


class TestGsp:
    """Test the 2-connected series-parallel graphs."""

    def test_small_orders(self):
        """Test K2, the triangle, and the 4-vertex counts."""
        gsp = compute_Gsp(4)
        assert dict(gsp.slice(2)) == {1: 1}
        assert dict(gsp.slice(3)) == {3: 1}
        assert dict(gsp.slice(4)) == {4: 3, 5: 6}

    def test_below_two(self):
        """Test that orders below 2 give the zero series."""
        assert compute_Gsp(1).is_zero()

    def test_division_form_agrees(self):
        """Test the literal integrand against the rewritten one."""
        r = compute_R(5)
        assert gsp_series_by_division(r) == compute_Gsp(7, r)

    def test_networks_of_gsp_are_r(self):
        """Test that the networks of Gsp are exactly R."""
        gsp = compute_Gsp(8)
        assert network_series_from_class(gsp, includes_K2=True) == compute_R(6)

    def test_short_r(self):
        """Test that R must reach nmax - 2."""
        with pytest.raises(PreconditionError):
            compute_Gsp(7, compute_R(3))


class TestSystem:
    """Test SPSystem."""

    def test_system(self):
        """Test that the system checks out and stays integral."""
        system = series_parallel_system(6)
        assert system.nmax == 6
        assert system.Gsp.coefficient(4, 5) == 6

    def test_wrong_start(self):
        """Test that R must start with the single edge."""
        bad = BivarSeries.y_series(3) + BivarSeries.y_series(3)
        s, ppar = split_series_parallel(bad)
        with pytest.raises(PreconditionError):
            SPSystem(R=bad, S=s, Ppar=ppar, Gsp=compute_Gsp(3), nmax=3)
