"""
Series of a 2-connected class and of the networks it induces.
"""
import logging

from core.constants import CLASS_PLANAR
from core.exceptions import InsufficientBasisError, PreconditionError

from series.bivariate import BivarSeries, poly_times_series, shift_down, sub
from series.calculus import deriv_y

from .table_format import CoefficientTable, first_missing_order

logger = logging.getLogger(__name__)


def planar_series(table: CoefficientTable, nmax: int) -> BivarSeries:
    """
    P(x, y) to order nmax from a P2planar coefficient table, K2 included.

    Raises InsufficientBasisError naming the first missing order when the
    table stops short of nmax.
    """
    if table.class_name != CLASS_PLANAR:
        raise PreconditionError(f"expected a {CLASS_PLANAR} table, got {table.class_name}")
    if table.is_totals:
        raise PreconditionError("a totals table cannot serve as the planar basis")
    if nmax > table.nmax:
        raise InsufficientBasisError(nmax, table.nmax)
    gap = first_missing_order(table)
    if gap is not None and gap <= nmax:
        raise InsufficientBasisError(nmax, gap - 1)
    return BivarSeries.from_table(table, nmax)


def network_series_from_class(b: BivarSeries, includes_K2: bool = True) -> BivarSeries:
    """
    N_B = (1 + y) (2 / x^2) dB/dy, minus 1 when B contains K2.

    A network of B is a member with its edge 01 marked and then removed or
    kept; K2 itself would leave the empty network, hence the -1. The two
    poles lose their labels, so the result is known to order B.nmax - 2.
    """
    if b.nmax < 2:
        raise PreconditionError(f"network series need B to order >= 2, got {b.nmax}")
    if includes_K2 and b.coefficient(2, 1) != 1:
        raise PreconditionError("includes_K2 is set but B does not count K2 once at (2, 1)")
    networks = poly_times_series({0: 1, 1: 1}, shift_down(deriv_y(b), 2))
    if includes_K2:
        networks = sub(networks, BivarSeries.one(networks.nmax))
    return networks
