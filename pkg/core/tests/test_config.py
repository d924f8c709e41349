"""
Tests for run configuration and limits.
"""
import pytest

from core.config import RunConfig, get_limit
from core.exceptions import ConfigurationError


class TestGetLimit:
    """Test get_limit."""

    def test_setting_overrides_default(self, settings):
        """Test that the K33LAB settings dict wins over the built-in default."""
        settings.K33LAB = {**settings.K33LAB, 'ORACLE_MAX_N': 6}
        assert get_limit('ORACLE_MAX_N') == 6

    def test_missing_key_falls_back(self, settings):
        """Test that a key absent from settings takes the built-in default."""
        settings.K33LAB = {}
        assert get_limit('ATLAS_MAX_N') == 7
        assert get_limit('WORKERS') is None


class TestRunConfig:
    """Test RunConfig.from_options."""

    def test_workers_from_options(self):
        """Test that an explicit worker count is kept."""
        assert RunConfig.from_options('oracle', {'workers': 3}).workers == 3

    def test_workers_from_settings(self, settings):
        """Test that a missing worker count comes from K33LAB_WORKERS."""
        settings.K33LAB = {**settings.K33LAB, 'WORKERS': 4}
        assert RunConfig.from_options('oracle', {'workers': None}).workers == 4

    def test_workers_left_automatic(self, settings):
        """Test that an unset K33LAB_WORKERS leaves the choice to the oracle."""
        settings.K33LAB = {**settings.K33LAB, 'WORKERS': None}
        assert RunConfig.from_options('oracle', {}).workers is None

    @pytest.mark.parametrize('workers', [0, -2])
    def test_non_positive_workers_refused(self, workers):
        """Test that zero or negative workers are refused, not replaced by the default."""
        with pytest.raises(ConfigurationError):
            RunConfig.from_options('oracle', {'workers': workers})

    def test_negative_nmax_refused(self):
        """Test the nmax invariant."""
        with pytest.raises(ConfigurationError):
            RunConfig.from_options('tables', {'nmax': -1})

    def test_unknown_format_refused(self):
        """Test the output format invariant."""
        with pytest.raises(ConfigurationError):
            RunConfig.from_options('tables', {'format': 'xml'})
