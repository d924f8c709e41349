from django_filters.rest_framework import DjangoFilterBackend
from drf_spectacular.utils import OpenApiParameter, extend_schema, extend_schema_view
from rest_framework import filters, viewsets
from rest_framework.decorators import action
from rest_framework.exceptions import ValidationError
from rest_framework.permissions import AllowAny
from rest_framework.response import Response

from .filters import CoefficientRecordFilter, CoefficientTableFilter
from .models import CoefficientTable
from .serializers import CoefficientRecordSerializer, CoefficientTableSerializer


@extend_schema_view(
    list=extend_schema(
        summary="List stored coefficient tables",
        description="List stored tables of every graph class. Filter by class, kind (coefficients or totals), provenance (oracle, imported, computed) and smallest order.",
        tags=["tables"]
    ),
    retrieve=extend_schema(
        summary="Retrieve a coefficient table",
        description="Retrieve the header of one stored table by ID.",
        tags=["tables"]
    ),
)
class CoefficientTableViewSet(viewsets.ReadOnlyModelViewSet):
    """
    Read-only access to stored tables and their records.
    """
    queryset = CoefficientTable.objects.all()
    serializer_class = CoefficientTableSerializer
    permission_classes = [AllowAny]
    filter_backends = [DjangoFilterBackend, filters.OrderingFilter]
    filterset_class = CoefficientTableFilter
    ordering_fields = ['class_name', 'nmax', 'created_at']
    ordering = ['class_name', '-nmax']

    @extend_schema(
        summary="List the records of a table",
        description="The (n, m, count) records of a stored table, or (n, count) with m null for totals tables. Counts are decimal strings.",
        parameters=[
            OpenApiParameter('n', int, description='Exact vertex count'),
            OpenApiParameter('min_n', int, description='Smallest vertex count'),
            OpenApiParameter('max_n', int, description='Largest vertex count'),
            OpenApiParameter('m', int, description='Exact edge count'),
        ],
        responses={200: CoefficientRecordSerializer(many=True)},
        tags=["tables"]
    )
    @action(detail=True, methods=['get'])
    def records(self, request, pk=None):
        table = self.get_object()
        filterset = CoefficientRecordFilter(request.query_params, queryset=table.records.all())
        if not filterset.is_valid():
            raise ValidationError(filterset.errors)
        records = filterset.qs
        page = self.paginate_queryset(records)
        if page is not None:
            return self.get_paginated_response(CoefficientRecordSerializer(page, many=True).data)
        return Response(CoefficientRecordSerializer(records, many=True).data)
