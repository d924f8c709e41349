from rest_framework import serializers

from core.config import get_limit
from core.exceptions import PreconditionError

from .structure import Graph


class GraphInputSerializer(serializers.Serializer):
    """
    A labelled graph on 0..n-1 given as an edge list.
    """
    n = serializers.IntegerField(min_value=0)
    edges = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=2, max_length=2),
        allow_empty=True,
    )

    def validate_n(self, value):
        """Refuse graphs above the API size guard."""
        limit = get_limit('API_MAX_DECOMPOSE_VERTICES')
        if value > limit:
            raise serializers.ValidationError(f"Graphs are limited to {limit} vertices.")
        return value

    def validate(self, data):
        """
        Build the graph; loops, out-of-range labels and repeated edges are errors.
        """
        seen = set()
        for u, v in data['edges']:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise serializers.ValidationError({'edges': f"Edge {list(key)} is listed twice."})
            seen.add(key)
            if max(u, v) >= data['n']:
                raise serializers.ValidationError({'edges': f"Edge {[u, v]} uses a label outside 0..{data['n'] - 1}."})
        try:
            data['graph'] = Graph.from_edges(data['n'], data['edges'])
        except PreconditionError as exc:
            raise serializers.ValidationError({'edges': str(exc)})
        return data


class NetworkSerializer(serializers.Serializer):
    pair = serializers.ListField(child=serializers.IntegerField())
    poles = serializers.ListField(child=serializers.IntegerField())
    internal = serializers.ListField(child=serializers.IntegerField())
    edges = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    pole_map = serializers.DictField(child=serializers.IntegerField())


class DecompositionResponseSerializer(serializers.Serializer):
    """Schema of the decomposition document."""
    accepted = serializers.BooleanField()
    reason = serializers.CharField(allow_null=True)
    n = serializers.IntegerField()
    m = serializers.IntegerField()
    corners = serializers.ListField(child=serializers.IntegerField(), required=False)
    components = NetworkSerializer(many=True, required=False)
    edge_bound = serializers.BooleanField(required=False)
