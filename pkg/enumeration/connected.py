"""
Connected members of F through vertex-rooted connected planar graphs.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from core.exceptions import InsufficientBasisError, PreconditionError

from series.bivariate import BivarSeries, shift_up
from series.calculus import compose_x, deriv_x, exp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootedFixpoint:
    """
    C_P^bullet = x exp(P'(C_P^bullet, y)) and the P' it was built from.
    """
    Cdot: BivarSeries
    Pprime: BivarSeries
    nmax: int

    def __post_init__(self):
        if self.Cdot.slice(0):
            raise PreconditionError("rooted connected graphs have no empty member")
        if self.nmax >= 1 and self.Cdot.coefficient(1, 0) != 1:
            raise PreconditionError("the single rooted vertex must be counted once")


def rooted_step(p_prime: BivarSeries, cdot: BivarSeries, nmax: int) -> BivarSeries:
    """One pass of C <- x exp(P'(C, y)) to order nmax."""
    blocks = compose_x(p_prime, cdot.truncate(nmax - 1))
    return shift_up(exp(blocks), 1)


def rooted_fixpoint(p: BivarSeries, nmax: int | None = None) -> RootedFixpoint:
    """
    Iterate C <- x exp(P'(C, y)) from C = x; pass k fixes the x^k slice.
    Needs P to order nmax.
    """
    if nmax is None:
        nmax = p.nmax
    if p.nmax < nmax:
        raise InsufficientBasisError(nmax, p.nmax, what="P for rooted connected graphs")
    if nmax < 1:
        return RootedFixpoint(BivarSeries.zero(max(nmax, 0)), BivarSeries.zero(0), max(nmax, 0))
    p_prime = deriv_x(p.truncate(nmax))
    cdot = BivarSeries.x_series(nmax)
    for step in range(nmax + 1):
        cdot = rooted_step(p_prime, cdot, nmax)
        logger.debug(f"C_P iteration {step + 1}/{nmax + 1}: {cdot!r}")
    return RootedFixpoint(cdot.assert_integral("Cdot"), p_prime, nmax)


def rooted_connected_planar(p: BivarSeries, nmax: int | None = None) -> BivarSeries:
    """The series of vertex-rooted connected planar graphs to order nmax."""
    return rooted_fixpoint(p, nmax).Cdot


def CF_series(f: BivarSeries, cdot: BivarSeries, nmax: int | None = None) -> BivarSeries:
    """C_F = F(C_P^bullet, y): each vertex of a member of F carries a rooted connected planar graph."""
    if nmax is None:
        nmax = min(f.nmax, cdot.nmax)
    return compose_x(f.truncate(nmax), cdot.truncate(nmax)).assert_integral("CF")


def connected_counts(cf: BivarSeries) -> dict[int, int]:
    """|C_F[n]| for every n from the first nonempty order on."""
    start = cf.x_valuation()
    if start is None:
        return {}
    return {n: cf.row_total(n) for n in range(start, cf.nmax + 1)}
