"""
Tests for EnumerationPipeline.
"""
import pytest

from core.constants import (
    CLASS_CF,
    CLASS_F,
    CLASS_GSP,
    CLASS_HF,
    CLASS_HP,
    CLASS_NETWORKS_PLANAR,
    CLASS_PLANAR,
    CLASS_R,
    KIND_TOTALS,
    PROVENANCE_COMPUTED,
)
from core.exceptions import InsufficientBasisError, PreconditionError
from enumeration.pipeline import EnumerationPipeline, required_basis_order


class TestRequiredOrder:
    """Test required_basis_order."""

    def test_orders(self):
        """Test the basis order each class needs."""
        assert required_basis_order(CLASS_F, 10) == 7
        assert required_basis_order(CLASS_HF, 8) == 5
        assert required_basis_order(CLASS_HP, 7) == 7
        assert required_basis_order(CLASS_CF, 6) == 6
        assert required_basis_order(CLASS_NETWORKS_PLANAR, 3) == 5
        assert required_basis_order(CLASS_F, 3) == 2
        assert required_basis_order(CLASS_GSP, 12) is None


class TestPipeline:
    """Test the classes computed from one basis."""

    @pytest.fixture(scope='class')
    def pipeline(self, planar_basis_5):
        return EnumerationPipeline(planar_basis_5, 8)

    def test_reachable_orders(self, pipeline):
        """Test the orders each class reaches from P to n = 5."""
        assert pipeline.reachable_order(CLASS_F) == 8
        assert pipeline.reachable_order(CLASS_HF) == 8
        assert pipeline.reachable_order(CLASS_HP) == 5
        assert pipeline.reachable_order(CLASS_CF) == 5
        assert pipeline.reachable_order(CLASS_NETWORKS_PLANAR) == 3
        assert pipeline.reachable_order(CLASS_R) == 8

    def test_series_orders(self, pipeline):
        """Test that each series is truncated to its reachable order."""
        assert pipeline.P.nmax == 5
        assert pipeline.NP.nmax == 3
        assert pipeline.F.nmax == 8
        assert pipeline.HF.nmax == 8
        assert pipeline.HF_legs.nmax == 8
        assert pipeline.Gsp.nmax == 8

    def test_require(self, pipeline):
        """Test that a class beyond its reachable order names the basis it needs."""
        pipeline.require(CLASS_F)
        with pytest.raises(InsufficientBasisError) as exc_info:
            pipeline.require(CLASS_HP)
        assert exc_info.value.required_n == 8
        assert exc_info.value.available_n == 5

    def test_series_by_name(self, pipeline):
        """Test lookup by class name."""
        assert pipeline.series(CLASS_PLANAR) is pipeline.P
        assert pipeline.series(CLASS_HF).coefficient(8, 16) == 13440
        with pytest.raises(PreconditionError):
            pipeline.series("K7")

    def test_table(self, pipeline):
        """Test the computed F table."""
        table = pipeline.table(CLASS_F)
        assert table.provenance == PROVENANCE_COMPUTED
        assert table.nmax == 8
        assert table.records[:3] == ((5, 10, 1), (6, 11, 60), (6, 12, 60))

    def test_totals_table(self, pipeline):
        """Test the HF totals, including the empty n = 6."""
        table = pipeline.table(CLASS_HF, totals=True)
        assert table.kind == KIND_TOTALS
        assert table.records == ((5, 1), (6, 0), (7, 420), (8, 36960))


class TestWithoutBasis:
    """Test the pipeline with no planar basis."""

    def test_series_parallel_classes(self):
        """Test that R and Gsp need no basis."""
        pipeline = EnumerationPipeline(None, 6)
        assert pipeline.Gsp.coefficient(4, 5) == 6
        assert pipeline.S + pipeline.Ppar == pipeline.R

    def test_basis_classes(self):
        """Test that F without a basis raises InsufficientBasisError."""
        pipeline = EnumerationPipeline(None, 6)
        with pytest.raises(InsufficientBasisError):
            pipeline.require(CLASS_F)

    def test_negative_order(self):
        """Test that a negative order is refused."""
        with pytest.raises(PreconditionError):
            EnumerationPipeline(None, -1)
