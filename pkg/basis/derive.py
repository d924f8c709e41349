"""
The planar basis recomputed from an H_P table.

Every 2-connected planar graph is either series-parallel or obtained from a
unique homeomorphically irreducible core by replacing each edge with a
series-parallel network: P = Gsp + H_P(x, R).
"""
import logging

from core.constants import CLASS_HP, CLASS_PLANAR, PROVENANCE_COMPUTED
from core.exceptions import InsufficientBasisError, PreconditionError

from enumeration.reference import hp_without_k2
from enumeration.series_parallel import compute_Gsp, compute_R
from series.bivariate import BivarSeries
from series.calculus import compose_y

from .table_format import CoefficientTable

logger = logging.getLogger(__name__)


def derive_planar_table(hp_table: CoefficientTable, nmax: int | None = None) -> CoefficientTable:
    """
    P to order nmax (default: the order of the H_P table) as a computed
    P2planar table.
    """
    if hp_table.class_name != CLASS_HP or hp_table.is_totals:
        raise PreconditionError(f"expected an {CLASS_HP} coefficient table, got {hp_table.class_name} ({hp_table.kind})")
    if nmax is None:
        nmax = hp_table.nmax
    if nmax > hp_table.nmax:
        raise InsufficientBasisError(nmax, hp_table.nmax, what="the H_P table")
    h_p = BivarSeries.from_table(hp_without_k2(hp_table), nmax)
    r = compute_R(nmax)
    p = compute_Gsp(nmax, r) + compose_y(h_p, r)
    logger.info(f"Derived P to n={nmax} from an H_P table ({hp_table.provenance})")
    return CoefficientTable.from_series(CLASS_PLANAR, p, PROVENANCE_COMPUTED, nmin=2)
