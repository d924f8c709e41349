"""
Tests for the decomposition endpoint.
"""
from itertools import combinations

from django.test import TestCase, override_settings
from rest_framework import status
from rest_framework.test import APIClient

from core.constants import REJECT_K33, REJECT_PLANAR


def complete_edges(n):
    return [list(e) for e in combinations(range(n), 2)]


class TestDecomposeEndpoint(TestCase):
    """Test POST /api/graphs/decompose/."""

    def setUp(self):
        """Set up the client."""
        self.client = APIClient()
        self.url = '/api/graphs/decompose/'

    def test_k5_is_accepted(self):
        """Test that K5 comes back with ten components."""
        response = self.client.post(self.url, {'n': 5, 'edges': complete_edges(5)}, format='json')

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertTrue(response.data['accepted'])
        self.assertEqual(response.data['corners'], [0, 1, 2, 3, 4])
        self.assertEqual(len(response.data['components']), 10)
        self.assertTrue(response.data['edge_bound'])

    def test_rejections(self):
        """Test the rejection reasons of K6 and K4."""
        response = self.client.post(self.url, {'n': 6, 'edges': complete_edges(6)}, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertFalse(response.data['accepted'])
        self.assertEqual(response.data['reason'], REJECT_K33)

        response = self.client.post(self.url, {'n': 4, 'edges': complete_edges(4)}, format='json')
        self.assertEqual(response.data['reason'], REJECT_PLANAR)

    def test_invalid_edges(self):
        """Test loops, out-of-range labels and repeated edges."""
        for edges in ([[0, 0]], [[0, 5]], [[0, 1], [1, 0]], [[0, 1, 2]]):
            response = self.client.post(self.url, {'n': 3, 'edges': edges}, format='json')
            self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST, edges)

    @override_settings(K33LAB={'API_MAX_DECOMPOSE_VERTICES': 5})
    def test_size_guard(self):
        """Test that graphs above the vertex limit are refused."""
        response = self.client.post(self.url, {'n': 6, 'edges': complete_edges(6)}, format='json')

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('n', response.data)

    def test_get_not_allowed(self):
        """Test that the endpoint only accepts POST."""
        response = self.client.get(self.url)
        self.assertEqual(response.status_code, status.HTTP_405_METHOD_NOT_ALLOWED)
