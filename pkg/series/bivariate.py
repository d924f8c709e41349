"""
Truncated mixed exponential generating functions.

A ``BivarSeries`` stores the counts g_{n,m} of

    G(x, y) = sum_{n <= nmax} sum_m g_{n,m} y^m x^n / n!

exponential in the vertex variable x and ordinary in the edge variable y.
Counts are exact: ``int`` when integral, ``Fraction`` otherwise. The n!
denominators never enter storage; they only appear in the binomial
convolution of ``mul``.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from math import comb
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from core.exceptions import IntegralityError, PreconditionError

logger = logging.getLogger(__name__)

Coefficient = int | Fraction
Poly = Mapping[int, Coefficient]


def normalize(value) -> Coefficient:
    """
    Return value as an int when it is integral, else as a Fraction.

    Floats are refused so that nothing inexact ever reaches a series.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise PreconditionError(f"series coefficients must be exact, got {value!r}")
    if isinstance(value, int):
        return value
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return value


# -- y-polynomial helpers ---------------------------------------------------
# A slice is a dict m -> coefficient without zero entries.

def poly_add(a: Poly, b: Poly, sign: int = 1) -> dict[int, Coefficient]:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + sign * c
        if v:
            out[m] = normalize(v)
        else:
            out.pop(m, None)
    return out


def poly_scale(a: Poly, factor) -> dict[int, Coefficient]:
    if not factor:
        return {}
    return {m: normalize(c * factor) for m, c in a.items()}


def poly_mul(a: Poly, b: Poly, ycap: int | None = None) -> dict[int, Coefficient]:
    if not a or not b:
        return {}
    out: dict[int, Coefficient] = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = ma + mb
            if ycap is not None and m > ycap:
                continue
            out[m] = out.get(m, 0) + ca * cb
    return {m: normalize(c) for m, c in out.items() if c}


def poly_truncate(a: Poly, ycap: int | None) -> dict[int, Coefficient]:
    if ycap is None:
        return dict(a)
    return {m: c for m, c in a.items() if m <= ycap}


def poly_eval_one(a: Poly) -> Coefficient:
    return normalize(sum(a.values(), 0))


class BivarSeries:
    """
    Immutable truncated bivariate series.

    Slices n = 0..nmax are sparse maps from edge count m to g_{n,m}; absent
    keys are zero. Equality is coefficientwise up to the smaller nmax.
    """

    __slots__ = ('_nmax', '_slices')

    def __init__(self, nmax: int, slices: Mapping[int, Poly] | Iterable[Poly] | None = None):
        if nmax < 0:
            raise PreconditionError(f"nmax must be >= 0, got {nmax}")
        if slices is None:
            source = {}
        elif isinstance(slices, Mapping):
            source = dict(slices)
        else:
            source = dict(enumerate(slices))
        built = []
        for n in range(nmax + 1):
            raw = source.get(n) or {}
            clean = {}
            for m, c in raw.items():
                if m < 0:
                    raise PreconditionError(f"negative edge exponent {m} at n={n}")
                c = normalize(c)
                if c:
                    clean[int(m)] = c
            built.append(MappingProxyType(clean))
        self._nmax = nmax
        self._slices = tuple(built)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nmax: int) -> BivarSeries:
        return cls(nmax)

    @classmethod
    def one(cls, nmax: int) -> BivarSeries:
        return cls(nmax, {0: {0: 1}})

    @classmethod
    def x_series(cls, nmax: int) -> BivarSeries:
        """The single-vertex class X, X(x, y) = x."""
        return cls(nmax, {1: {0: 1}})

    @classmethod
    def y_series(cls, nmax: int) -> BivarSeries:
        """The one-edge network on no internal vertex, y."""
        return cls(nmax, {0: {1: 1}})

    @classmethod
    def monomial(cls, n: int, m: int, count, nmax: int) -> BivarSeries:
        """The series with the single count g_{n,m} = count (zero when n > nmax)."""
        if n > nmax:
            return cls(nmax)
        return cls(nmax, {n: {m: count}})

    @classmethod
    def k2(cls, nmax: int) -> BivarSeries:
        """K2(x, y) = y x^2 / 2!."""
        return cls.monomial(2, 1, 1, nmax)

    @classmethod
    def k5(cls, nmax: int) -> BivarSeries:
        """K5(x, y) = x^5 y^10 / 5!."""
        return cls.monomial(5, 10, 1, nmax)

    @classmethod
    def from_counts(cls, nmax: int, records: Iterable[tuple[int, int, Coefficient]]) -> BivarSeries:
        """
        Build a series from (n, m, count) records, ignoring records above nmax.
        """
        slices: dict[int, dict[int, Coefficient]] = {}
        for n, m, count in records:
            if n > nmax:
                continue
            row = slices.setdefault(n, {})
            row[m] = row.get(m, 0) + count
        return cls(nmax, slices)

    @classmethod
    def from_slices(cls, slices: Iterable[Poly]) -> BivarSeries:
        """A series whose nmax is the index of the last given slice."""
        slices = list(slices)
        if not slices:
            raise PreconditionError("from_slices needs at least the n=0 slice")
        return cls(len(slices) - 1, slices)

    @classmethod
    def from_table(cls, table, nmax: int | None = None) -> BivarSeries:
        """
        Build a series from a coefficient table (anything with ``nmax`` and
        ``records`` of (n, m, count)).
        """
        top = table.nmax if nmax is None else nmax
        return cls.from_counts(top, table.records)

    @classmethod
    def constant_in_x(cls, poly: Poly, nmax: int) -> BivarSeries:
        """A y-polynomial viewed as a series concentrated at n = 0."""
        return cls(nmax, {0: poly})

    # -- access -------------------------------------------------------------

    @property
    def nmax(self) -> int:
        return self._nmax

    def slice(self, n: int) -> Mapping[int, Coefficient]:
        """The map m -> g_{n,m}; empty beyond nmax."""
        if 0 <= n <= self._nmax:
            return self._slices[n]
        return MappingProxyType({})

    def coefficient(self, n: int, m: int) -> Coefficient:
        return self.slice(n).get(m, 0)

    def row_total(self, n: int) -> Coefficient:
        """g_n(1) = sum over m of g_{n,m}."""
        return poly_eval_one(self.slice(n))

    def items(self) -> Iterator[tuple[int, int, Coefficient]]:
        """Nonzero (n, m, count) triples in (n, m) order."""
        for n, row in enumerate(self._slices):
            for m in sorted(row):
                yield n, m, row[m]

    def to_records(self) -> list[tuple[int, int, Coefficient]]:
        return list(self.items())

    def row_totals(self) -> dict[int, Coefficient]:
        return {n: self.row_total(n) for n in range(self._nmax + 1)}

    def y_degree(self) -> int:
        """Largest m with a nonzero coefficient, -1 for the zero series."""
        return max((max(row) for row in self._slices if row), default=-1)

    def x_valuation(self) -> int | None:
        """Smallest n with a nonzero slice, None for the zero series."""
        for n, row in enumerate(self._slices):
            if row:
                return n
        return None

    def is_zero(self) -> bool:
        return self.x_valuation() is None

    def truncate(self, nmax: int) -> BivarSeries:
        if nmax > self._nmax:
            raise PreconditionError(f"cannot extend a series known to n={self._nmax} up to n={nmax}")
        return BivarSeries(nmax, self._slices[:nmax + 1])

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for row in self._slices for c in row.values())

    def assert_integral(self, name: str = "series") -> BivarSeries:
        """
        Check that every coefficient is a non-negative integer and return self.
        """
        for n, m, c in self.items():
            if not isinstance(c, int):
                raise IntegralityError(f"{name}: non-integral count {c} at (n={n}, m={m})")
            if c < 0:
                raise IntegralityError(f"{name}: negative count {c} at (n={n}, m={m})")
        return self

    # -- arithmetic operators -----------------------------------------------

    def __add__(self, other: BivarSeries) -> BivarSeries:
        return add(self, other)

    def __sub__(self, other: BivarSeries) -> BivarSeries:
        return sub(self, other)

    def __neg__(self) -> BivarSeries:
        return scale(self, -1)

    def __mul__(self, other: BivarSeries) -> BivarSeries:
        return mul(self, other)

    def __pow__(self, k: int) -> BivarSeries:
        return power(self, k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivarSeries):
            return NotImplemented
        top = min(self._nmax, other._nmax)
        return all(dict(self._slices[n]) == dict(other._slices[n]) for n in range(top + 1))

    __hash__ = None

    def __repr__(self):
        terms = sum(len(row) for row in self._slices)
        return f"BivarSeries(nmax={self._nmax}, terms={terms})"


def _check_series(*series: BivarSeries) -> None:
    for s in series:
        if not isinstance(s, BivarSeries):
            raise PreconditionError(f"expected a BivarSeries, got {type(s).__name__}")


def add(f: BivarSeries, g: BivarSeries) -> BivarSeries:
    """Coefficientwise sum, truncated to the smaller nmax."""
    _check_series(f, g)
    nmax = min(f.nmax, g.nmax)
    return BivarSeries(nmax, [poly_add(f.slice(n), g.slice(n)) for n in range(nmax + 1)])


def sub(f: BivarSeries, g: BivarSeries) -> BivarSeries:
    _check_series(f, g)
    nmax = min(f.nmax, g.nmax)
    return BivarSeries(nmax, [poly_add(f.slice(n), g.slice(n), -1) for n in range(nmax + 1)])


def scale(f: BivarSeries, factor) -> BivarSeries:
    _check_series(f)
    factor = normalize(factor)
    return BivarSeries(f.nmax, [poly_scale(f.slice(n), factor) for n in range(f.nmax + 1)])


def mul(f: BivarSeries, g: BivarSeries, ycap: int | None = None) -> BivarSeries:
    """
    EGF product: binomial convolution in n, ordinary convolution in m.

    (f g)_{n,m} = sum_{k,j} C(n,k) f_{k,j} g_{n-k,m-j}
    """
    _check_series(f, g)
    nmax = min(f.nmax, g.nmax)
    slices = []
    for n in range(nmax + 1):
        acc: dict[int, Coefficient] = {}
        for k in range(n + 1):
            a = f.slice(k)
            if not a:
                continue
            b = g.slice(n - k)
            if not b:
                continue
            acc = poly_add(acc, poly_scale(poly_mul(a, b, ycap), comb(n, k)))
        slices.append(acc)
    return BivarSeries(nmax, slices)


def poly_times_series(poly: Poly, f: BivarSeries) -> BivarSeries:
    """Multiply every slice by a y-polynomial (a series concentrated at n = 0)."""
    return BivarSeries(f.nmax, [poly_mul(poly, f.slice(n)) for n in range(f.nmax + 1)])


def power(f: BivarSeries, k: int) -> BivarSeries:
    """f^k by balanced (square-and-multiply) exponentiation."""
    _check_series(f)
    if k < 0:
        raise PreconditionError(f"negative power {k}")
    result = BivarSeries.one(f.nmax)
    base = f
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def shift_up(f: BivarSeries, k: int) -> BivarSeries:
    """
    Multiply by x^k / k!, raising the truncation order by k.

    The count at n + k is C(n + k, k) f_n: the k new vertices are labelled.
    """
    _check_series(f)
    if k < 0:
        raise PreconditionError(f"negative shift {k}")
    nmax = f.nmax + k
    slices = {n + k: poly_scale(f.slice(n), comb(n + k, k)) for n in range(f.nmax + 1)}
    return BivarSeries(nmax, slices)


def shift_down(f: BivarSeries, k: int) -> BivarSeries:
    """
    Divide by x^k / k!, lowering the truncation order by k.

    Requires the slices below k to vanish: k labelled vertices are forgotten.
    """
    _check_series(f)
    if k < 0:
        raise PreconditionError(f"negative shift {k}")
    if f.nmax < k:
        raise PreconditionError(f"series known to n={f.nmax} cannot be divided by x^{k}")
    for n in range(k):
        if f.slice(n):
            raise PreconditionError(f"slice n={n} is nonzero; cannot divide by x^{k}/{k}!")
    nmax = f.nmax - k
    slices = [poly_scale(f.slice(n + k), Fraction(1, comb(n + k, k))) for n in range(nmax + 1)]
    return BivarSeries(nmax, slices)
