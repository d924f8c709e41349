"""
All series derived from one planar basis.
"""
from __future__ import annotations

import logging
from functools import cached_property

from core.constants import (
    CLASS_CDOT,
    CLASS_CF,
    CLASS_F,
    CLASS_GSP,
    CLASS_HF,
    CLASS_HP,
    CLASS_NETWORKS_PLANAR,
    CLASS_PLANAR,
    CLASS_PPAR,
    CLASS_R,
    CLASS_S,
    PROVENANCE_COMPUTED,
    SERIES_CLASSES,
)
from core.exceptions import InsufficientBasisError, PreconditionError

from basis.networks import network_series_from_class, planar_series
from basis.table_format import CoefficientTable
from series.bivariate import BivarSeries

from .connected import CF_series, rooted_connected_planar
from .projective import F_series, HF_series_inversion, HF_series_legs, HP_series
from .series_parallel import compute_Gsp, compute_R, split_series_parallel

logger = logging.getLogger(__name__)

# Order reached by each class relative to the order of the P basis; None
# for the series-parallel classes, which need no basis.
BASIS_OFFSETS = {
    CLASS_PLANAR: 0,
    CLASS_NETWORKS_PLANAR: -2,
    CLASS_R: None,
    CLASS_S: None,
    CLASS_PPAR: None,
    CLASS_GSP: None,
    CLASS_F: 3,
    CLASS_HP: 0,
    CLASS_HF: 3,
    CLASS_CDOT: 0,
    CLASS_CF: 0,
}

# Smallest n with a member, used when writing tables.
FIRST_ORDER = {
    CLASS_PLANAR: 2,
    CLASS_NETWORKS_PLANAR: 0,
    CLASS_R: 0,
    CLASS_S: 1,
    CLASS_PPAR: 0,
    CLASS_GSP: 2,
    CLASS_F: 5,
    CLASS_HP: 4,
    CLASS_HF: 5,
    CLASS_CDOT: 1,
    CLASS_CF: 5,
}


def required_basis_order(class_name: str, nmax: int) -> int | None:
    """The order of P needed for the class to order nmax, None if P is not needed."""
    offset = BASIS_OFFSETS[class_name]
    if offset is None:
        return None
    return max(nmax - offset, 2)


class EnumerationPipeline:
    """
    Computes every class once, truncated to ``nmax`` or to the order the
    basis allows, whichever is smaller.

    ``HF`` is the inversion route; ``HF_legs`` is the independent legs
    construction kept for comparison.
    """

    def __init__(self, basis: CoefficientTable | None, nmax: int):
        if nmax < 0:
            raise PreconditionError(f"nmax must be >= 0, got {nmax}")
        if basis is not None and basis.nmax < 2:
            raise InsufficientBasisError(2, basis.nmax)
        self.basis = basis
        self.nmax = nmax

    @property
    def basis_order(self) -> int | None:
        return None if self.basis is None else self.basis.nmax

    def reachable_order(self, class_name: str) -> int:
        if class_name not in BASIS_OFFSETS:
            raise PreconditionError(f"unknown class {class_name!r}; choose from {SERIES_CLASSES}")
        offset = BASIS_OFFSETS[class_name]
        if offset is None:
            return self.nmax
        if self.basis is None:
            raise InsufficientBasisError(required_basis_order(class_name, self.nmax), None)
        return min(self.nmax, self.basis.nmax + offset)

    def require(self, class_name: str, nmax: int | None = None) -> None:
        """Raise InsufficientBasisError unless the class reaches nmax."""
        nmax = self.nmax if nmax is None else nmax
        if self.reachable_order(class_name) < nmax:
            raise InsufficientBasisError(required_basis_order(class_name, nmax), self.basis_order)

    # -- basis-free classes -------------------------------------------------

    @cached_property
    def R(self) -> BivarSeries:
        return compute_R(self.nmax)

    @cached_property
    def _split(self):
        return split_series_parallel(self.R)

    @property
    def S(self) -> BivarSeries:
        return self._split[0]

    @property
    def Ppar(self) -> BivarSeries:
        return self._split[1]

    @cached_property
    def Gsp(self) -> BivarSeries:
        return compute_Gsp(self.nmax, self.R)

    # -- classes built on P -------------------------------------------------

    @cached_property
    def _full_P(self) -> BivarSeries:
        return planar_series(self._basis(), self._basis().nmax)

    def _basis(self) -> CoefficientTable:
        if self.basis is None:
            raise InsufficientBasisError(2, None)
        return self.basis

    @cached_property
    def P(self) -> BivarSeries:
        return self._full_P.truncate(self.reachable_order(CLASS_PLANAR))

    @cached_property
    def _full_NP(self) -> BivarSeries:
        return network_series_from_class(self._full_P, includes_K2=True)

    @cached_property
    def NP(self) -> BivarSeries:
        return self._full_NP.truncate(max(self.reachable_order(CLASS_NETWORKS_PLANAR), 0))

    @cached_property
    def F(self) -> BivarSeries:
        return F_series(self._full_NP, self.reachable_order(CLASS_F))

    @cached_property
    def HP(self) -> BivarSeries:
        order = self.reachable_order(CLASS_HP)
        return HP_series(self.P, self.Gsp, self.R, order)

    @cached_property
    def HF(self) -> BivarSeries:
        return HF_series_inversion(self.F, self.R, self.reachable_order(CLASS_HF))

    @cached_property
    def HF_legs(self) -> BivarSeries:
        return HF_series_legs(self.HP, self.reachable_order(CLASS_HF))

    @cached_property
    def Cdot(self) -> BivarSeries:
        return rooted_connected_planar(self._full_P, self.reachable_order(CLASS_CDOT))

    @cached_property
    def CF(self) -> BivarSeries:
        return CF_series(self.F, self.Cdot, self.reachable_order(CLASS_CF))

    # -- access by name -----------------------------------------------------

    def series(self, class_name: str) -> BivarSeries:
        attribute = {
            CLASS_PLANAR: 'P',
            CLASS_NETWORKS_PLANAR: 'NP',
        }.get(class_name, class_name)
        if class_name not in BASIS_OFFSETS:
            raise PreconditionError(f"unknown class {class_name!r}; choose from {SERIES_CLASSES}")
        logger.debug(f"Computing {class_name} to n={self.reachable_order(class_name)}")
        return getattr(self, attribute)

    def table(self, class_name: str, totals: bool = False) -> CoefficientTable:
        """The class as a computed coefficient or totals table."""
        series = self.series(class_name)
        nmin = FIRST_ORDER[class_name]
        if totals:
            return CoefficientTable.totals_from_series(class_name, series, PROVENANCE_COMPUTED, nmin)
        return CoefficientTable.from_series(class_name, series, PROVENANCE_COMPUTED, nmin)
