"""
Exhaustive counts of labelled 2-connected planar graphs.
"""
import logging

from core.constants import CLASS_PLANAR, PROVENANCE_ORACLE
from core.exceptions import PreconditionError

from graphs.oracle import FILTER_CONNECTIVITY_FIRST, oracle_count

from .table_format import CoefficientTable

logger = logging.getLogger(__name__)


def enumerate_two_connected_planar(n, strategy=None, workers=None, filter_order=FILTER_CONNECTIVITY_FIRST):
    """
    Map m -> number of labelled 2-connected planar graphs on {0..n-1} with m
    edges. K2 counts as 2-connected, so n = 2 gives {1: 1}.
    """
    if n < 0:
        raise PreconditionError(f"vertex count must be >= 0, got {n}")
    return oracle_count(CLASS_PLANAR, n, strategy=strategy, workers=workers, filter_order=filter_order)


def planar_oracle_table(nmax, strategy=None, workers=None):
    """
    The P2planar table for n <= nmax from the oracle.
    """
    records = []
    for n in range(2, nmax + 1):
        counts = enumerate_two_connected_planar(n, strategy=strategy, workers=workers)
        records.extend((n, m, count) for m, count in counts.items())
    logger.info(f"Oracle basis built to n={nmax} ({len(records)} records)")
    return CoefficientTable(CLASS_PLANAR, nmax, tuple(records), PROVENANCE_ORACLE)
