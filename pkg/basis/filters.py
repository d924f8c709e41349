from django_filters import rest_framework as filters

from core.constants import KIND_CHOICES, PROVENANCE_CHOICES

from .models import CoefficientRecord, CoefficientTable


class CoefficientTableFilter(filters.FilterSet):
    """
    FilterSet for stored tables by class, kind, provenance and order.
    """
    class_name = filters.CharFilter(lookup_expr='iexact')
    kind = filters.ChoiceFilter(choices=KIND_CHOICES)
    provenance = filters.ChoiceFilter(choices=PROVENANCE_CHOICES)
    min_nmax = filters.NumberFilter(field_name='nmax', lookup_expr='gte')

    class Meta:
        model = CoefficientTable
        fields = ['class_name', 'kind', 'provenance']


class CoefficientRecordFilter(filters.FilterSet):
    """
    FilterSet for the records of one table.
    """
    n = filters.NumberFilter()
    min_n = filters.NumberFilter(field_name='n', lookup_expr='gte', help_text='Smallest vertex count')
    max_n = filters.NumberFilter(field_name='n', lookup_expr='lte', help_text='Largest vertex count')
    m = filters.NumberFilter()

    class Meta:
        model = CoefficientRecord
        fields = ['n', 'm']
