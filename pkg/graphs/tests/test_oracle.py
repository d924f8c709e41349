"""
Tests for the exhaustive graph classification.
"""
import networkx as nx
import pytest

from core.constants import (
    CLASS_F,
    CLASS_GSP,
    CLASS_HF,
    CLASS_HP,
    CLASS_PLANAR,
    ORACLE_CLASSES,
    STRATEGY_ATLAS,
    STRATEGY_EXTENSION,
    STRATEGY_SUBSETS,
)
from core.exceptions import PreconditionError, SizeLimitError
from basis.derive import derive_planar_table
from enumeration.reference import reference_table
from graphs.oracle import (
    FILTER_PLANARITY_FIRST,
    default_strategy,
    default_workers,
    edge_range,
    oracle_count,
    oracle_series,
    planar_by_degrees,
    two_connected_masks,
)
from graphs.planarity import is_planar, is_two_connected
from graphs.structure import Graph


class TestHelpers:
    """Test edge ranges and bitmask connectivity."""

    def test_edge_ranges(self):
        """Test the per-class edge count windows."""
        assert list(edge_range(CLASS_PLANAR, 2)) == [1]
        assert list(edge_range(CLASS_PLANAR, 4)) == [4, 5, 6]
        assert list(edge_range(CLASS_GSP, 4)) == [4, 5]
        assert list(edge_range(CLASS_HP, 5)) == [8, 9]
        assert list(edge_range(CLASS_F, 5)) == [10]
        assert list(edge_range(CLASS_F, 4)) == []
        assert list(edge_range(CLASS_HF, 6)) == [9, 10, 11, 12]
        assert list(edge_range(CLASS_PLANAR, 1)) == []

    def test_two_connected_masks(self):
        """Test the bitmask 2-connectivity check on a triangle, a path and a square."""
        triangle = [0b110, 0b101, 0b011]
        path = [0b010, 0b101, 0b010]
        square = [0b1010, 0b0101, 0b1010, 0b0101]
        assert two_connected_masks(3, triangle)
        assert not two_connected_masks(3, path)
        assert two_connected_masks(4, square)

    def test_planar_by_degrees(self):
        """Test the edge and degree shortcut: sparse graphs are planar, K5 and K3,3 stay undecided."""
        def masks(graph):
            return [sum(1 << u for u in graph.neighbors(v)) for v in range(graph.n)]

        k5 = Graph.complete(5)
        k33 = Graph.from_networkx(nx.complete_bipartite_graph(3, 3))
        book = Graph.from_networkx(nx.complete_bipartite_graph(2, 5))
        assert planar_by_degrees(masks(Graph.from_networkx(nx.cycle_graph(8))), 8)
        assert planar_by_degrees(masks(book), book.edge_count)
        assert not planar_by_degrees(masks(k5), k5.edge_count)
        assert not planar_by_degrees(masks(k33), k33.edge_count)

    def test_default_strategy(self):
        """Test atlas up to seven vertices, extension at eight and subsets beyond."""
        assert default_strategy(7) == STRATEGY_ATLAS
        assert default_strategy(8) == STRATEGY_EXTENSION
        assert default_strategy(9) == STRATEGY_SUBSETS
        assert default_strategy(5, FILTER_PLANARITY_FIRST) == STRATEGY_SUBSETS

    def test_default_workers(self, settings, monkeypatch):
        """Test that unset workers mean one process up to the atlas order and every CPU beyond."""
        settings.K33LAB = {**settings.K33LAB, 'WORKERS': None}
        monkeypatch.setattr('graphs.oracle.os.cpu_count', lambda: 6)
        assert default_workers(7) == 1
        assert default_workers(8) == 6
        settings.K33LAB = {**settings.K33LAB, 'WORKERS': 3}
        assert default_workers(8) == 3


class TestOracleCounts:
    """Test exact counts against hand-checked and published values."""

    def test_planar_n4(self):
        """Test the 2-connected planar graphs on four labelled vertices."""
        assert oracle_count(CLASS_PLANAR, 4) == {4: 3, 5: 6, 6: 1}
        assert oracle_count(CLASS_PLANAR, 4, strategy=STRATEGY_SUBSETS) == {4: 3, 5: 6, 6: 1}

    def test_small_orders(self):
        """Test the trivial orders."""
        assert oracle_count(CLASS_PLANAR, 0) == {}
        assert oracle_count(CLASS_PLANAR, 1) == {}
        assert oracle_count(CLASS_PLANAR, 2) == {1: 1}
        assert oracle_count(CLASS_PLANAR, 3) == {3: 1}
        assert oracle_count(CLASS_HP, 2) == {}

    def test_f_n5_and_n6(self):
        """Test K5 alone at n = 5 and the 120 graphs at n = 6."""
        assert oracle_count(CLASS_F, 5) == {10: 1}
        assert oracle_count(CLASS_F, 6) == {11: 60, 12: 60}

    def test_f_n7(self):
        """Test the 10920 graphs of F at n = 7."""
        counts = oracle_count(CLASS_F, 7)
        assert counts == {12: 2310, 13: 5250, 14: 3150, 15: 210}
        assert sum(counts.values()) == 10920

    def test_irreducible_planar(self):
        """Test H_P for n = 4, 5, 6."""
        assert oracle_count(CLASS_HP, 4) == {6: 1}
        assert oracle_count(CLASS_HP, 5) == {8: 15, 9: 10}
        assert oracle_count(CLASS_HP, 6) == {9: 60, 10: 477, 11: 585, 12: 195}

    def test_irreducible_projective(self):
        """Test H_F, which is empty at n = 6."""
        assert oracle_count(CLASS_HF, 5) == {10: 1}
        assert oracle_count(CLASS_HF, 6) == {}
        assert oracle_count(CLASS_HF, 7) == {14: 210, 15: 210}

    def test_series_parallel(self):
        """Test the 2-connected series-parallel graphs for n = 3, 4."""
        assert oracle_count(CLASS_GSP, 3) == {3: 1}
        assert oracle_count(CLASS_GSP, 4) == {4: 3, 5: 6}

    def test_maximal_planar_graphs_agree(self):
        """Test that triangulations have minimum degree three, so H_P and P agree at m = 3n - 6."""
        for n in range(4, 8):
            m = 3 * n - 6
            assert oracle_count(CLASS_HP, n)[m] == oracle_count(CLASS_PLANAR, n)[m]
        for g in nx.graph_atlas_g():
            if g.number_of_nodes() == 7 and g.number_of_edges() == 15:
                graph = Graph.from_networkx(g)
                if is_two_connected(graph) and is_planar(graph):
                    assert graph.min_degree() >= 3

    def test_series(self):
        """Test the series assembled from the oracle."""
        series = oracle_series(CLASS_PLANAR, 4)
        assert series.coefficient(2, 1) == 1
        assert series.coefficient(3, 3) == 1
        assert series.coefficient(4, 5) == 6
        assert series.row_total(4) == 10


class TestStrategiesAgree:
    """Test that every strategy and both filter orders give the same counts."""

    @pytest.mark.parametrize('class_name', ORACLE_CLASSES)
    def test_atlas_matches_subsets_at_n5(self, class_name):
        """Test atlas against subsets at n = 5 for every class."""
        atlas = oracle_count(class_name, 5, strategy=STRATEGY_ATLAS)
        subsets = oracle_count(class_name, 5, strategy=STRATEGY_SUBSETS)
        assert atlas == subsets

    def test_filter_order_invariance(self):
        """Test that testing planarity before 2-connectivity changes nothing."""
        for n in (4, 5):
            first = oracle_count(CLASS_PLANAR, n, strategy=STRATEGY_SUBSETS)
            second = oracle_count(CLASS_PLANAR, n, filter_order=FILTER_PLANARITY_FIRST)
            assert first == second

    def test_worker_count_does_not_change_counts(self):
        """Test a pool of two workers against the serial run."""
        serial = oracle_count(CLASS_PLANAR, 5, strategy=STRATEGY_SUBSETS)
        pooled = oracle_count(CLASS_PLANAR, 5, strategy=STRATEGY_SUBSETS, workers=2)
        assert serial == pooled

    @pytest.mark.parametrize('class_name', ORACLE_CLASSES)
    def test_extension_matches_atlas(self, class_name):
        """Test the one-vertex extension of the atlas against the atlas itself at n = 6."""
        assert oracle_count(class_name, 6, strategy=STRATEGY_EXTENSION) == oracle_count(
            class_name, 6, strategy=STRATEGY_ATLAS
        )

    def test_extension_small_orders(self):
        """Test that extending the atlas graphs on one and two vertices finds K2 and the triangle."""
        assert oracle_count(CLASS_PLANAR, 2, strategy=STRATEGY_EXTENSION) == {1: 1}
        assert oracle_count(CLASS_PLANAR, 3, strategy=STRATEGY_EXTENSION) == {3: 1}
        assert oracle_count(CLASS_PLANAR, 4, strategy=STRATEGY_EXTENSION, workers=2) == {4: 3, 5: 6, 6: 1}

    def test_extension_f_n7(self):
        """Test F at n = 7 through the extension of six-vertex atlas graphs."""
        assert oracle_count(CLASS_F, 7, strategy=STRATEGY_EXTENSION) == {12: 2310, 13: 5250, 14: 3150, 15: 210}

    def test_extension_limit(self):
        """Test that the extension stops one vertex past the atlas."""
        with pytest.raises(SizeLimitError):
            oracle_count(CLASS_PLANAR, 9, strategy=STRATEGY_EXTENSION)

    @pytest.mark.slow
    def test_planar_n8_matches_derived_basis(self):
        """Test the default oracle at n = 8 against P recomputed from the H_P reference table."""
        derived = derive_planar_table(reference_table(CLASS_HP), 8)
        expected = {m: count for n, m, count in derived.records if n == 8}
        assert oracle_count(CLASS_PLANAR, 8, workers=2) == expected

    @pytest.mark.slow
    def test_f_n6_by_subsets(self):
        """Test F at n = 6 through all labelled edge subsets."""
        assert oracle_count(CLASS_F, 6, strategy=STRATEGY_SUBSETS, workers=2) == {11: 60, 12: 60}

    @pytest.mark.slow
    def test_planar_n6_by_both_strategies(self):
        """Test P at n = 6 through both strategies."""
        atlas = oracle_count(CLASS_PLANAR, 6, strategy=STRATEGY_ATLAS)
        subsets = oracle_count(CLASS_PLANAR, 6, strategy=STRATEGY_SUBSETS, workers=2)
        assert atlas == subsets


class TestLimits:
    """Test refusals."""

    def test_order_limit(self, settings):
        """Test that orders above the limit are refused."""
        settings.K33LAB = {**settings.K33LAB, 'ORACLE_MAX_N': 6}
        with pytest.raises(SizeLimitError):
            oracle_count(CLASS_PLANAR, 7)

    def test_atlas_limit(self):
        """Test that the atlas stops at seven vertices."""
        with pytest.raises(SizeLimitError):
            oracle_count(CLASS_PLANAR, 8, strategy=STRATEGY_ATLAS)

    def test_bad_options(self):
        """Test unknown classes, strategies and filter orders."""
        with pytest.raises(PreconditionError):
            oracle_count("K7", 4)
        with pytest.raises(PreconditionError):
            oracle_count(CLASS_PLANAR, 4, strategy="guess")
        with pytest.raises(PreconditionError):
            oracle_count(CLASS_F, 5, filter_order=FILTER_PLANARITY_FIRST)
        with pytest.raises(PreconditionError):
            oracle_count(CLASS_PLANAR, 4, filter_order="random")
