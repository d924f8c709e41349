"""
K3,3-free projective-planar classes.

F is K5 with each edge replaced by a strongly planar network, so
F = x^5 N_P^10 / 5!. Its homeomorphically irreducible part H_F, like H_P for
the planar graphs, comes out of the substitution B = H(x, R) by the
alternating Delta_R sum, and independently from H_P through networks with
legs.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from basis.networks import network_series_from_class
from core.exceptions import InsufficientBasisError, PreconditionError

from series.bivariate import BivarSeries, add, mul, poly_times_series, power, shift_up, sub
from series.calculus import PowerCache, compose_y, divide

logger = logging.getLogger(__name__)


def F_series(n_p: BivarSeries, nmax: int | None = None) -> BivarSeries:
    """
    x^5 N_P^10 / 5! to order nmax (default: the order N_P allows, n_p.nmax + 5).
    """
    if nmax is None:
        nmax = n_p.nmax + 5
    if nmax < 5:
        return BivarSeries.zero(max(nmax, 0))
    if n_p.nmax < nmax - 5:
        raise InsufficientBasisError(nmax - 3, n_p.nmax + 2)
    return shift_up(power(n_p.truncate(nmax - 5), 10), 5).assert_integral("F")


def delta(f: BivarSeries, r: BivarSeries, powers: PowerCache | None = None) -> BivarSeries:
    """Delta_R f = f(x, R(x, y)) - f(x, y)."""
    return sub(compose_y(f, r, powers), f)


@dataclass(frozen=True)
class InversionProblem:
    """
    Find H with B(x, y) = H(x, R(x, y)) to order nmax.

    R - y must have x-valuation >= 1, so each Delta_R raises the x-valuation.
    """
    B: BivarSeries
    R: BivarSeries
    nmax: int

    def __post_init__(self):
        if dict(self.R.slice(0)) != {1: 1}:
            raise PreconditionError("the inner series must have n=0 slice exactly y")
        if self.nmax > min(self.B.nmax, self.R.nmax):
            raise PreconditionError(
                f"order {self.nmax} exceeds the inputs (B to {self.B.nmax}, R to {self.R.nmax})"
            )

    @classmethod
    def of(cls, b: BivarSeries, r: BivarSeries) -> InversionProblem:
        return cls(b, r, min(b.nmax, r.nmax))


def invert_substitution(problem: InversionProblem) -> BivarSeries:
    """
    H = sum_i (-1)^i Delta_R^i B, which has at most nmax + 1 nonzero terms.
    """
    r = problem.R.truncate(problem.nmax)
    powers = PowerCache(r)
    term = problem.B.truncate(problem.nmax)
    result = term
    for i in range(1, problem.nmax + 2):
        term = delta(term, r, powers)
        if term.is_zero():
            break
        result = sub(result, term) if i % 2 else add(result, term)
    logger.debug(f"Inversion to order {problem.nmax} used {i} Delta_R steps")
    return result


def HP_series(p: BivarSeries, gsp: BivarSeries, r: BivarSeries, nmax: int | None = None) -> BivarSeries:
    """
    H_P from P = Gsp + H_P(x, R). K2 cancels between P and Gsp, so H_P has
    no (2, 1) term.
    """
    if nmax is None:
        nmax = min(p.nmax, gsp.nmax, r.nmax)
    problem = InversionProblem(sub(p.truncate(nmax), gsp.truncate(nmax)), r, nmax)
    return invert_substitution(problem).assert_integral("HP")


def HF_series_inversion(f: BivarSeries, r: BivarSeries, nmax: int | None = None) -> BivarSeries:
    """H_F from F = H_F(x, R); no series-parallel graph is in F."""
    if nmax is None:
        nmax = min(f.nmax, r.nmax)
    return invert_substitution(InversionProblem(f, r, nmax)).assert_integral("HF")


def leg_series(nmax: int) -> BivarSeries:
    """Leg(x, y) = 2 y x + y^2 x^2: one or two pendant pole edges."""
    return BivarSeries.from_counts(nmax, [(1, 1, 2), (2, 2, 2)])


def legs_networks(h_p: BivarSeries) -> BivarSeries:
    """
    N_l = ((1 + Leg) / (1 - y Leg)) N_{H_P}, to order h_p.nmax - 2.

    N_{H_P} has no constant: H_P does not contain K2.
    """
    if h_p.coefficient(2, 1):
        raise PreconditionError("H_P must not count K2; drop the (2, 1) term first")
    n_hp = network_series_from_class(h_p, includes_K2=False)
    nmax = n_hp.nmax
    one = BivarSeries.one(nmax)
    leg = leg_series(nmax)
    factor = divide(one + leg, one - poly_times_series({1: 1}, leg))
    return mul(factor, n_hp)


def HF_series_legs(h_p: BivarSeries, nmax: int | None = None) -> BivarSeries:
    """
    H_F = x^5 (N_l + y)^10 / 5!, to order nmax <= h_p.nmax + 3.
    """
    if nmax is None:
        nmax = h_p.nmax + 3
    if nmax < 5:
        return BivarSeries.zero(max(nmax, 0))
    if h_p.nmax < nmax - 3:
        raise InsufficientBasisError(nmax - 3, h_p.nmax, what="H_P")
    n_l = legs_networks(h_p.truncate(nmax - 3))
    edge = BivarSeries.y_series(n_l.nmax)
    return shift_up(power(n_l + edge, 10), 5).assert_integral("HF")
