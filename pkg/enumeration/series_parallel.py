"""
Series-parallel networks and graphs.

R is the smallest network class containing the single edge and closed under
series and parallel composition. It splits into essentially series networks
S and essentially parallel networks Ppar, and the 2-connected series-parallel
graphs Gsp are the graphs whose networks are exactly R.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from core.exceptions import IntegralityError, PreconditionError

from series.bivariate import BivarSeries, mul, poly_times_series, shift_up, sub
from series.calculus import divide, exp, integrate_y

logger = logging.getLogger(__name__)

ONE_PLUS_Y = {0: 1, 1: 1}


def x_times(f: BivarSeries) -> BivarSeries:
    """x f(x, y) at the truncation order of f."""
    return shift_up(f, 1).truncate(f.nmax)


def _parallel_exponent(r: BivarSeries) -> BivarSeries:
    # x R^2 / (1 + x R): the set of essentially series networks
    xr = x_times(r)
    return divide(x_times(mul(r, r)), BivarSeries.one(r.nmax) + xr)


def r_step(r: BivarSeries) -> BivarSeries:
    """One pass of R <- (1 + y) exp(x R^2 / (1 + x R)) - 1 at the order of r."""
    return sub(poly_times_series(ONE_PLUS_Y, exp(_parallel_exponent(r))), BivarSeries.one(r.nmax))


def compute_R(nmax: int) -> BivarSeries:
    """
    The fixed point of R = (1 + y) exp(x R^2 / (1 + x R)) - 1 to order nmax.

    Starts from R = y; pass k fixes the x^k slice.
    """
    if nmax < 0:
        raise PreconditionError(f"nmax must be >= 0, got {nmax}")
    r = BivarSeries.y_series(nmax)
    for step in range(nmax + 1):
        r = r_step(r)
        logger.debug(f"R iteration {step + 1}/{nmax + 1}: {r!r}")
    return r


def split_series_parallel(r: BivarSeries) -> tuple[BivarSeries, BivarSeries]:
    """
    (S, Ppar) with Ppar = R / (1 + x R) and S = Ppar x R.
    """
    xr = x_times(r)
    ppar = divide(r, BivarSeries.one(r.nmax) + xr)
    s = mul(ppar, xr)
    return s, ppar


def compute_Gsp(nmax: int, r: BivarSeries | None = None) -> BivarSeries:
    """
    Gsp = (x^2 / 2) integral_0^y exp(x R^2 / (1 + x R)) dt.

    The integrand is (R + 1) / (1 + t) rewritten with the fixed-point equation,
    so it has integer coefficients. Needs R to order nmax - 2.
    """
    if nmax < 2:
        return BivarSeries.zero(max(nmax, 0))
    if r is None:
        r = compute_R(nmax - 2)
    elif r.nmax < nmax - 2:
        raise PreconditionError(f"Gsp to order {nmax} needs R to order {nmax - 2}, got {r.nmax}")
    else:
        r = r.truncate(nmax - 2)
    return shift_up(integrate_y(exp(_parallel_exponent(r))), 2)


def gsp_series_by_division(r: BivarSeries) -> BivarSeries:
    """
    Gsp to order r.nmax + 2 from the literal integrand (R + 1) / (1 + t).

    Each slice of the quotient is a polynomial of y-degree below that of R, so
    dividing with ycap = deg R is exact.
    """
    ycap = max(r.y_degree(), 1)
    one = BivarSeries.one(r.nmax)
    quotient = divide(r + one, BivarSeries.constant_in_x(ONE_PLUS_Y, r.nmax), ycap=ycap)
    return shift_up(integrate_y(quotient), 2)


@dataclass(frozen=True)
class SPSystem:
    """
    R, its split into S and Ppar, and Gsp, all to order nmax.
    """
    R: BivarSeries
    S: BivarSeries
    Ppar: BivarSeries
    Gsp: BivarSeries
    nmax: int

    def __post_init__(self):
        if dict(self.R.slice(0)) != {1: 1}:
            raise PreconditionError("the n=0 slice of R must be exactly y")
        if self.S + self.Ppar != self.R:
            raise IntegralityError("R differs from S + Ppar")
        for name in ('R', 'S', 'Ppar', 'Gsp'):
            getattr(self, name).assert_integral(name)


def series_parallel_system(nmax: int) -> SPSystem:
    r = compute_R(nmax)
    s, ppar = split_series_parallel(r)
    gsp = compute_Gsp(nmax, r)
    return SPSystem(R=r, S=s, Ppar=ppar, Gsp=gsp, nmax=nmax)
