"""
Tests for the tables and verify management commands.
"""
import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from core.constants import CLASS_HP, CLASS_PLANAR, EXIT_IO, PROVENANCE_ORACLE, EXIT_LIMIT, EXIT_MISMATCH
from basis.table_format import CoefficientTable, parse_table, save_table
from enumeration.reference import reference_table
from enumeration.tests.test_verification import corrupted


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


@pytest.mark.django_db
class TestTablesCommand:
    """Test manage.py tables."""

    def test_f_csv(self):
        """Test the F rows from the oracle basis."""
        lines = run('tables', '--class', 'F', '--nmax', '8', '--format', 'csv').splitlines()
        assert lines[0] == "n,m,count"
        assert "5,10,1" in lines
        assert "7,15,210" in lines
        assert "8,13,73920" in lines

    def test_hf_from_basis_file(self, planar_basis_5, tmp_path):
        """Test HF with an explicit basis file."""
        path = save_table(planar_basis_5, tmp_path / "p5.tbl")
        output = run('tables', '--class', 'HF', '--nmax', '8', '--basis', str(path))
        assert "8,16,13440" in output.splitlines()

    def test_cf_totals(self):
        """Test the connected totals to n = 6."""
        lines = run('tables', '--class', 'CF', '--nmax', '6', '--totals').splitlines()
        assert lines == ["n,count", "5,1", "6,150"]

    def test_json(self):
        """Test the JSON document."""
        document = json.loads(run('tables', '--class', 'Gsp', '--nmax', '4', '--format', 'json'))
        assert document['class'] == 'Gsp'
        assert document['provenance'] == 'computed'
        assert document['records'] == [[2, 1, 1], [3, 3, 1], [4, 4, 3], [4, 5, 6]]

    def test_table_text(self):
        """Test that the table-text output parses as a table."""
        table = parse_table(run('tables', '--class', 'HP', '--nmax', '5', '--format', 'table-text'))
        assert table.class_name == 'HP'
        assert table.records == ((4, 6, 1), (5, 8, 15), (5, 9, 10))

    def test_basis_from_hp(self, tmp_path):
        """Test F computed from a basis derived from the HP table."""
        path = save_table(reference_table(CLASS_HP).restricted(6), tmp_path / "hp.tbl")
        lines = run('tables', '--class', 'F', '--nmax', '9', '--basis-from-hp', str(path)).splitlines()
        assert lines[-1].startswith("9,")

    def test_deterministic_output(self):
        """Test that repeated runs print the same bytes."""
        first = run('tables', '--class', 'HF', '--nmax', '7')
        assert run('tables', '--class', 'HF', '--nmax', '7', '--workers', '2') == first

    def test_insufficient_basis(self, planar_basis_5, tmp_path):
        """Test that a short basis exits with the limit code and names the order."""
        path = save_table(planar_basis_5, tmp_path / "p5.tbl")
        with pytest.raises(CommandError) as exc_info:
            run('tables', '--class', 'F', '--nmax', '12', '--basis', str(path))
        assert exc_info.value.returncode == EXIT_LIMIT
        assert "n <= 9" in str(exc_info.value)

    def test_basis_files_with_a_gap(self, planar_basis_5, tmp_path):
        """Test that merged basis files missing n = 5 exit with the limit code instead of printing counts."""
        low = save_table(planar_basis_5.restricted(4), tmp_path / "p4.tbl")
        far = save_table(
            CoefficientTable(CLASS_PLANAR, 6, ((2, 1, 1), (6, 6, 60)), PROVENANCE_ORACLE), tmp_path / "p6.tbl"
        )
        with pytest.raises(CommandError) as exc_info:
            run('tables', '--class', 'F', '--nmax', '9', '--basis', str(low), '--basis', str(far))
        assert exc_info.value.returncode == EXIT_LIMIT
        assert "first missing n = 5" in str(exc_info.value)

    def test_beyond_the_oracle(self):
        """Test that no basis source reaches n = 9."""
        with pytest.raises(CommandError) as exc_info:
            run('tables', '--class', 'HP', '--nmax', '9')
        assert exc_info.value.returncode == EXIT_LIMIT

    def test_missing_basis_file(self, tmp_path):
        """Test that an unreadable basis exits with the I/O code."""
        with pytest.raises(CommandError) as exc_info:
            run('tables', '--class', 'F', '--nmax', '8', '--basis', str(tmp_path / "absent.tbl"))
        assert exc_info.value.returncode == EXIT_IO


class TestVerifyCommand:
    """Test manage.py verify."""

    def test_basis_file_passes(self, planar_basis_5, tmp_path):
        """Test that P to n = 5 verifies."""
        path = save_table(planar_basis_5, tmp_path / "p5.tbl")
        output = run('verify', '--basis', str(path))
        assert output.splitlines()[-1].startswith("ok: ")

    def test_corrupted_basis(self, planar_basis_5, tmp_path):
        """Test that a wrong count exits with the mismatch code at its order."""
        path = save_table(corrupted(planar_basis_5, 5, 7), tmp_path / "bad.tbl")
        with pytest.raises(CommandError) as exc_info:
            run('verify', '--basis', str(path))
        assert exc_info.value.returncode == EXIT_MISMATCH
        assert "first (" in str(exc_info.value)
        assert ", 5, " in str(exc_info.value).split("first ")[1]

    @pytest.mark.slow
    def test_fast_suite(self):
        """Test the default run on the oracle basis to n = 7."""
        output = run('verify')
        assert "basis: P2planar to n=7 (oracle)" in output
        assert output.splitlines()[-1].startswith("ok: ")
