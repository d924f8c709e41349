from rest_framework import serializers

from .models import CoefficientRecord, CoefficientTable


class CoefficientTableSerializer(serializers.ModelSerializer):
    """
    A stored table without its records.
    """
    record_count = serializers.IntegerField(source='records.count', read_only=True)

    class Meta:
        model = CoefficientTable
        fields = ['id', 'class_name', 'slug', 'kind', 'nmax', 'provenance', 'source',
                  'record_count', 'created_at', 'updated_at']
        read_only_fields = ['id', 'class_name', 'slug', 'kind', 'nmax', 'provenance', 'source',
                            'created_at', 'updated_at']


class CoefficientRecordSerializer(serializers.ModelSerializer):
    """
    One count. The value is a decimal string: counts outgrow JSON numbers.
    """

    class Meta:
        model = CoefficientRecord
        fields = ['n', 'm', 'count']
        read_only_fields = fields
