"""
Calculus, exponential, division and substitution on truncated series.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from math import comb, factorial

from core.exceptions import PreconditionError

from .bivariate import (
    BivarSeries,
    Coefficient,
    Poly,
    mul,
    poly_add,
    poly_mul,
    poly_scale,
    poly_times_series,
    poly_truncate,
)

logger = logging.getLogger(__name__)


def deriv_y(f: BivarSeries) -> BivarSeries:
    """d/dy: g_{n,m} y^m -> m g_{n,m} y^(m-1)."""
    return BivarSeries(
        f.nmax,
        [{m - 1: m * c for m, c in f.slice(n).items() if m > 0} for n in range(f.nmax + 1)],
    )


def integrate_y(f: BivarSeries) -> BivarSeries:
    """Integral from 0 to y: g_{n,m} y^m -> g_{n,m} y^(m+1) / (m+1)."""
    return BivarSeries(
        f.nmax,
        [{m + 1: Fraction(c) / (m + 1) for m, c in f.slice(n).items()} for n in range(f.nmax + 1)],
    )


def deriv_x(f: BivarSeries) -> BivarSeries:
    """
    d/dx in the EGF sense: the count at n becomes g_{n+1}.
    """
    if f.nmax < 1:
        raise PreconditionError("deriv_x needs a series known to n >= 1")
    return BivarSeries(f.nmax - 1, [f.slice(n + 1) for n in range(f.nmax)])


def _poly_exp(p: Poly, ycap: int | None) -> dict[int, Coefficient]:
    # e = exp(p) with p(0) = 0 solves e' = p' e, coefficientwise in y.
    if not p:
        return {0: 1}
    top = ycap
    coeffs = [Fraction(1)]
    for j in range(1, top + 1):
        acc = Fraction(0)
        for i, c in p.items():
            if 1 <= i <= j:
                acc += i * c * coeffs[j - i]
        coeffs.append(acc / j)
    return {j: c for j, c in enumerate(coeffs) if c}


def _poly_inverse(p: Poly, ycap: int | None) -> dict[int, Coefficient]:
    c0 = p.get(0, 0)
    if len(p) == 1:
        return {0: Fraction(1) / c0}
    inv0 = Fraction(1) / c0
    coeffs = [inv0]
    for j in range(1, ycap + 1):
        acc = Fraction(0)
        for i, c in p.items():
            if 1 <= i <= j:
                acc += c * coeffs[j - i]
        coeffs.append(-acc * inv0)
    return {j: c for j, c in enumerate(coeffs) if c}


def exp(f: BivarSeries, ycap: int | None = None) -> BivarSeries:
    """
    sum_k f^k / k!, the set construction E(f).

    The constant term f_{0,0} must vanish. If the x^0 slice carries powers of
    y, exp(f) has infinitely many terms at x^0, so an explicit ``ycap`` is then
    required and every slice is truncated to y-degree <= ycap.
    """
    f0 = f.slice(0)
    if f0.get(0, 0):
        raise PreconditionError("exp needs a series with zero constant term")
    if f0 and ycap is None:
        raise PreconditionError("exp of a series with y-terms at x^0 needs an explicit ycap")
    slices = [_poly_exp(poly_truncate(f0, ycap), ycap)]
    # (exp f)' = f' exp f in x, i.e. h_{n+1} = sum_k C(n,k) f_{k+1} h_{n-k}
    for n in range(f.nmax):
        acc: dict[int, Coefficient] = {}
        for k in range(n + 1):
            fk = f.slice(k + 1)
            if not fk:
                continue
            acc = poly_add(acc, poly_scale(poly_mul(fk, slices[n - k], ycap), comb(n, k)))
        slices.append(acc)
    return BivarSeries(f.nmax, slices)


def divide(f: BivarSeries, g: BivarSeries, ycap: int | None = None) -> BivarSeries:
    """
    The series h with h g = f to the common truncation order.

    g must be a unit (nonzero constant term). A divisor whose x^0 slice is not
    constant has an infinite inverse at x^0 and needs an explicit ``ycap``.
    """
    nmax = min(f.nmax, g.nmax)
    g0 = g.slice(0)
    if not g0.get(0, 0):
        raise PreconditionError("divisor is not a unit: its constant term is zero")
    if len(g0) > 1 and ycap is None:
        raise PreconditionError("divisor with y-terms at x^0 needs an explicit ycap")
    inv0 = _poly_inverse(g0, ycap)
    slices: list[dict[int, Coefficient]] = []
    for n in range(nmax + 1):
        rest = poly_truncate(f.slice(n), ycap)
        for k in range(n):
            gk = g.slice(n - k)
            if gk and slices[k]:
                rest = poly_add(rest, poly_scale(poly_mul(slices[k], gk, ycap), comb(n, k)), -1)
        slices.append(poly_mul(rest, inv0, ycap))
    return BivarSeries(nmax, slices)


class PowerCache:
    """
    Successive powers g^0, g^1, ... of a fixed series, computed on demand.

    Repeated substitutions into the same inner series (the Delta_R iteration)
    share one cache.
    """

    def __init__(self, g: BivarSeries):
        self.g = g
        self._powers = [BivarSeries.one(g.nmax)]

    def __getitem__(self, k: int) -> BivarSeries:
        while len(self._powers) <= k:
            self._powers.append(mul(self._powers[-1], self.g))
        return self._powers[k]


def _x_part(f: BivarSeries, m: int, nmax: int) -> BivarSeries:
    """The coefficient series of y^m in f, as a series in x alone."""
    return BivarSeries(nmax, {n: {0: f.slice(n)[m]} for n in range(nmax + 1) if m in f.slice(n)})


def compose_y(f: BivarSeries, g: BivarSeries, powers: PowerCache | None = None) -> BivarSeries:
    """
    Substitute g for the edge variable: f(x, g(x, y)).

    g must have no constant term, so every y^m of f contributes a series with
    g^m's support and the sum over m is finite at each n.
    """
    if g.slice(0).get(0, 0):
        raise PreconditionError("compose_y needs an inner series with zero constant term")
    if powers is None or powers.g is not g:
        powers = PowerCache(g)
    nmax = min(f.nmax, g.nmax)
    result = BivarSeries.zero(nmax)
    for m in range(f.truncate(nmax).y_degree() + 1):
        part = _x_part(f, m, nmax)
        if part.is_zero():
            continue
        result = result + mul(part, powers[m])
    return result


def compose_x(f: BivarSeries, g: BivarSeries) -> BivarSeries:
    """
    Substitute g for the vertex variable: f(g(x, y), y).

    With f = sum_k f_k(y) x^k / k!, the result is sum_k (f_k(y) / k!) g^k.
    g must have an empty x^0 slice so g^k starts at x^k.
    """
    if g.slice(0):
        raise PreconditionError("compose_x needs an inner series with empty x^0 slice")
    nmax = min(f.nmax, g.nmax)
    result = BivarSeries.zero(nmax)
    current = BivarSeries.one(nmax)
    for k in range(nmax + 1):
        fk = f.slice(k)
        if fk:
            weight = poly_scale(fk, Fraction(1, factorial(k)))
            result = result + poly_times_series(weight, current)
        if k < nmax:
            current = mul(current, g)
    return result
