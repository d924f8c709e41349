"""
Tests for the read-only table endpoints.
"""
from django.test import TestCase
from rest_framework import status
from rest_framework.test import APIClient

from core.constants import CLASS_CF, CLASS_PLANAR, KIND_TOTALS, PROVENANCE_ORACLE
from basis.services import table_to_model
from basis.table_format import CoefficientTable


class TestTableEndpoints(TestCase):
    """Test /api/tables/."""

    def setUp(self):
        """Set up a P table and a CF totals table."""
        self.client = APIClient()
        self.planar = table_to_model(CoefficientTable(
            CLASS_PLANAR, 4, ((2, 1, 1), (3, 3, 1), (4, 4, 3), (4, 5, 6), (4, 6, 1)), PROVENANCE_ORACLE
        ))
        self.totals = table_to_model(CoefficientTable(
            CLASS_CF, 8, ((5, 1), (6, 150), (7, 16800), (8, 1809360)), kind=KIND_TOTALS
        ))

    def test_list(self):
        """Test that both tables are listed with their record counts."""
        response = self.client.get('/api/tables/')

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['count'], 2)
        by_class = {row['class_name']: row for row in response.data['results']}
        self.assertEqual(by_class[CLASS_PLANAR]['record_count'], 5)
        self.assertEqual(by_class[CLASS_CF]['kind'], KIND_TOTALS)

    def test_filter_by_class_and_kind(self):
        """Test the class and kind filters."""
        response = self.client.get('/api/tables/', {'class_name': 'p2planar'})
        self.assertEqual([row['id'] for row in response.data['results']], [self.planar.id])

        response = self.client.get('/api/tables/', {'kind': KIND_TOTALS})
        self.assertEqual([row['id'] for row in response.data['results']], [self.totals.id])

    def test_retrieve(self):
        """Test the header of a single table."""
        response = self.client.get(f'/api/tables/{self.planar.id}/')

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['nmax'], 4)
        self.assertEqual(response.data['provenance'], PROVENANCE_ORACLE)

    def test_records(self):
        """Test the records of a table with the n filter."""
        response = self.client.get(f'/api/tables/{self.planar.id}/records/', {'n': 4})

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(
            [(r['n'], r['m'], r['count']) for r in response.data['results']],
            [(4, 4, '3'), (4, 5, '6'), (4, 6, '1')],
        )

    def test_records_range(self):
        """Test the min_n and max_n filters on a totals table."""
        response = self.client.get(f'/api/tables/{self.totals.id}/records/', {'min_n': 6, 'max_n': 7})

        rows = response.data['results']
        self.assertEqual([(r['n'], r['m'], r['count']) for r in rows], [(6, None, '150'), (7, None, '16800')])

    def test_read_only(self):
        """Test that tables cannot be created through the API."""
        response = self.client.post('/api/tables/', {'class_name': 'F', 'nmax': 5}, format='json')
        self.assertEqual(response.status_code, status.HTTP_405_METHOD_NOT_ALLOWED)

    def test_missing_table(self):
        """Test that an unknown id gives 404."""
        response = self.client.get('/api/tables/999999/')
        self.assertEqual(response.status_code, status.HTTP_404_NOT_FOUND)

    def test_records_bad_filter(self):
        """Test that a non-numeric filter value gives 400."""
        response = self.client.get(f'/api/tables/{self.planar.id}/records/', {'n': 'four'})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
