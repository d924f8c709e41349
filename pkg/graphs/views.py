import logging

from drf_spectacular.utils import extend_schema
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import APIView
from rest_framework.exceptions import ValidationError

from core.exceptions import K33LabError

from .decomposition import decompose
from .serializers import DecompositionResponseSerializer, GraphInputSerializer

logger = logging.getLogger(__name__)


class DecomposeView(APIView):
    """
    Membership test for F with the side-component decomposition.
    """
    permission_classes = [AllowAny]

    @extend_schema(
        summary="Decompose a graph",
        description="Test whether a labelled graph is a 2-connected non-planar projective-planar graph without a K3,3 subdivision. Accepted graphs come back with their five corners and ten strongly planar side networks; rejected graphs with the reason (not-2-connected, planar, K33, not-projective-planar).",
        request=GraphInputSerializer,
        responses={200: DecompositionResponseSerializer},
        tags=["graphs"]
    )
    def post(self, request):
        serializer = GraphInputSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        graph = serializer.validated_data['graph']
        try:
            result = decompose(graph)
        except K33LabError as exc:
            # size guards of the exhaustive searches
            raise ValidationError({'detail': str(exc)})
        logger.info(f"Decomposed n={graph.n}, m={graph.edge_count}: {result.reason or 'accepted'}")
        return Response(result.to_dict())
