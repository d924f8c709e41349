"""
Checks of computed series against the shipped reference tables, the
exhaustive oracle, and each other.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field

from core.config import get_limit
from core.constants import (
    CLASS_CF,
    CLASS_F,
    CLASS_GSP,
    CLASS_HF,
    CLASS_HP,
    CLASS_PLANAR,
    KIND_COEFFICIENTS,
    KIND_TOTALS,
)
from basis.networks import network_series_from_class
from basis.table_format import CoefficientTable
from graphs.decomposition import decompose, random_member
from graphs.oracle import oracle_count
from series.bivariate import BivarSeries, Coefficient
from series.calculus import PowerCache, compose_y, deriv_x

from .connected import rooted_step
from .pipeline import EnumerationPipeline
from .reference import HP_K2_RECORD, reference_table
from .series_parallel import gsp_series_by_division, r_step

logger = logging.getLogger(__name__)

FAST_ORACLE_MAX_N = 6
STRUCTURE_ROUNDS = 50
EXTENDED_STRUCTURE_ROUNDS = 200
STRUCTURE_SEED = 20240501


@dataclass(frozen=True)
class Mismatch:
    """One differing count; m is None for totals."""
    class_name: str
    n: int
    m: int | None
    expected: Coefficient
    got: Coefficient

    def __str__(self):
        return f"({self.class_name}, {self.n}, {self.m}, {self.expected}, {self.got})"


@dataclass
class VerificationReport:
    checks: list[str] = field(default_factory=list)
    mismatches: list[Mismatch] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def record(self, check: str, mismatches: list[Mismatch]) -> None:
        self.checks.append(check)
        self.mismatches.extend(mismatches)
        if mismatches:
            logger.warning(f"{check}: {len(mismatches)} mismatches, first {mismatches[0]}")
        else:
            logger.info(f"{check}: ok")

    def first_mismatch(self) -> Mismatch | None:
        return min(self.mismatches, key=lambda mm: (mm.n, mm.m if mm.m is not None else -1), default=None)


def compare_with_table(class_name: str, table: CoefficientTable, series: BivarSeries,
                       skip: frozenset = frozenset()) -> list[Mismatch]:
    """
    Differences between a table and a series for n up to both orders; keys in
    ``skip`` are left out.
    """
    top = min(table.nmax, series.nmax)
    out = []
    if table.is_totals:
        expected = dict(table.records)
        for n in range(top + 1):
            got = series.row_total(n)
            if expected.get(n, 0) != got:
                out.append(Mismatch(class_name, n, None, expected.get(n, 0), got))
        return out
    expected = {(n, m): c for n, m, c in table.records if n <= top}
    keys = set(expected) | {(n, m) for n, m, _ in series.truncate(top).items()}
    for n, m in sorted(keys - set(skip)):
        got = series.coefficient(n, m)
        if expected.get((n, m), 0) != got:
            out.append(Mismatch(class_name, n, m, expected.get((n, m), 0), got))
    return out


def compare_series(label: str, expected: BivarSeries, got: BivarSeries) -> list[Mismatch]:
    top = min(expected.nmax, got.nmax)
    keys = {(n, m) for n, m, _ in expected.truncate(top).items()} | {(n, m) for n, m, _ in got.truncate(top).items()}
    return [
        Mismatch(label, n, m, expected.coefficient(n, m), got.coefficient(n, m))
        for n, m in sorted(keys)
        if expected.coefficient(n, m) != got.coefficient(n, m)
    ]


def check_reference_tables(pipeline: EnumerationPipeline, report: VerificationReport) -> None:
    for class_name in (CLASS_F, CLASS_HP, CLASS_HF):
        series = pipeline.series(class_name)
        skip = frozenset({HP_K2_RECORD}) if class_name == CLASS_HP else frozenset()
        if skip:
            report.notes.append("H_P excludes K2: the published (2, 1) record is not compared")
        table = reference_table(class_name, KIND_COEFFICIENTS)
        report.record(f"{class_name} coefficients to n={series.nmax}", compare_with_table(class_name, table, series, skip))
        totals = reference_table(class_name, KIND_TOTALS)
        report.record(f"{class_name} totals to n={series.nmax}", compare_with_table(class_name, totals, series))
    cf = pipeline.series(CLASS_CF)
    report.record(f"CF totals to n={cf.nmax}", compare_with_table(CLASS_CF, reference_table(CLASS_CF, KIND_TOTALS), cf))


def check_identities(pipeline: EnumerationPipeline, report: VerificationReport) -> None:
    """Cross-method identities between the computed series."""
    r, p, f = pipeline.R, pipeline.P, pipeline.F
    h_p, h_f = pipeline.HP, pipeline.HF
    powers = PowerCache(r)

    report.record("HF inversion = HF legs", compare_series("HF legs", h_f, pipeline.HF_legs))
    report.record("P = Gsp + HP(x, R)", compare_series(CLASS_PLANAR, p, pipeline.Gsp + compose_y(h_p, r, powers)))
    report.record("F = HF(x, R)", compare_series(CLASS_F, f, compose_y(h_f, r, powers)))
    if pipeline.Gsp.nmax >= 2:
        by_division = gsp_series_by_division(r.truncate(pipeline.Gsp.nmax - 2))
        report.record("Gsp exp form = Gsp by division", compare_series(CLASS_GSP, pipeline.Gsp, by_division))
        report.record("N_Gsp = R", compare_series(CLASS_GSP, r, network_series_from_class(pipeline.Gsp, includes_K2=True)))
    report.record("N_P = R for n <= 1", compare_series("NP", r.truncate(min(1, r.nmax)), pipeline.NP.truncate(min(1, pipeline.NP.nmax))))

    maximal = []
    for n in range(7, min(h_f.nmax, f.nmax) + 1):
        m = 3 * n - 6
        if h_f.coefficient(n, m) != f.coefficient(n, m):
            maximal.append(Mismatch("HF maximal", n, m, f.coefficient(n, m), h_f.coefficient(n, m)))
    for n in range(4, min(h_p.nmax, p.nmax) + 1):
        m = 3 * n - 6
        if h_p.coefficient(n, m) != p.coefficient(n, m):
            maximal.append(Mismatch("HP maximal", n, m, p.coefficient(n, m), h_p.coefficient(n, m)))
    report.record("maximal members: HF = F and HP = P at m = 3n - 6", maximal)

    dominated = [
        Mismatch("Gsp <= P", n, m, p.coefficient(n, m), c)
        for n, m, c in pipeline.Gsp.truncate(min(p.nmax, pipeline.Gsp.nmax)).items()
        if c > p.coefficient(n, m)
    ]
    report.record("Gsp <= P", dominated)

    cf = pipeline.CF
    dominated = [
        Mismatch("CF >= F", n, m, c, cf.coefficient(n, m))
        for n, m, c in f.truncate(min(f.nmax, cf.nmax)).items()
        if cf.coefficient(n, m) < c
    ]
    report.record("CF >= F", dominated)

    integrality = []
    for name in ('R', 'S', 'Ppar', 'Gsp', 'NP', 'F', 'HP', 'HF', 'HF_legs', 'Cdot', 'CF'):
        integrality.extend(
            Mismatch(name, n, m, "non-negative integer", c)
            for n, m, c in getattr(pipeline, name).items()
            if not isinstance(c, int) or c < 0
        )
    report.record("non-negative integer coefficients", integrality)


def check_fixed_points(pipeline: EnumerationPipeline, report: VerificationReport) -> None:
    """One more iteration of the R and C_P^bullet equations must change nothing."""
    r = pipeline.R
    report.record(f"R fixed point stable to n={r.nmax}", compare_series("R step", r, r_step(r)))
    cdot = pipeline.Cdot
    if cdot.nmax >= 1:
        p_prime = deriv_x(pipeline.P.truncate(cdot.nmax))
        again = rooted_step(p_prime, cdot, cdot.nmax)
        report.record(f"Cdot fixed point stable to n={cdot.nmax}", compare_series("Cdot step", cdot, again))


def check_structure(report: VerificationReport, rounds: int, max_vertices: int, seed: int = STRUCTURE_SEED) -> None:
    """
    decompose(compose_graph(...)) on random substitutions into K5 must give
    back the corners and the networks.
    """
    rng = random.Random(seed)
    mismatches = []
    for _ in range(rounds):
        graph, corners, nets = random_member(rng, max_vertices=max_vertices)
        result = decompose(graph)
        if not result.accepted:
            mismatches.append(Mismatch("decompose", graph.n, graph.edge_count, "accepted", result.reason))
        elif result.decomposition.corners != corners:
            mismatches.append(Mismatch("decompose", graph.n, graph.edge_count, corners, result.decomposition.corners))
        elif not all(result.decomposition.components[key].same_up_to_swap(net) for key, net in nets.items()):
            mismatches.append(Mismatch("decompose", graph.n, graph.edge_count, "same side networks", "different"))
    report.record(f"decompose(compose_graph) roundtrip on {rounds} graphs", mismatches)


def check_oracle(pipeline: EnumerationPipeline, report: VerificationReport, max_n: int, workers: int | None = None) -> None:
    """The exhaustive counts against the series for n <= max_n."""
    classes = {
        CLASS_PLANAR: pipeline.P,
        CLASS_GSP: pipeline.Gsp,
        CLASS_HP: pipeline.HP,
        CLASS_F: pipeline.F,
        CLASS_HF: pipeline.HF,
    }
    for class_name, series in classes.items():
        top = min(max_n, series.nmax)
        mismatches = []
        for n in range(2, top + 1):
            counts = oracle_count(class_name, n, workers=workers)
            keys = set(counts) | set(series.slice(n))
            mismatches.extend(
                Mismatch(class_name, n, m, counts.get(m, 0), series.coefficient(n, m))
                for m in sorted(keys)
                if counts.get(m, 0) != series.coefficient(n, m)
            )
        report.record(f"{class_name} oracle agreement to n={top}", mismatches)


def run_verification(pipeline: EnumerationPipeline, extended: bool = False, workers: int | None = None) -> VerificationReport:
    """
    All checks for the pipeline's basis. The extended run takes the oracle
    to the atlas limit instead of n = 6 and decomposes more and larger
    random members of F.
    """
    report = VerificationReport()
    check_reference_tables(pipeline, report)
    check_identities(pipeline, report)
    check_fixed_points(pipeline, report)
    if extended:
        check_structure(report, EXTENDED_STRUCTURE_ROUNDS, max_vertices=14)
    else:
        check_structure(report, STRUCTURE_ROUNDS, max_vertices=12)
    oracle_max = get_limit('ATLAS_MAX_N') if extended else FAST_ORACLE_MAX_N
    check_oracle(pipeline, report, oracle_max, workers)
    logger.info(f"Verification: {len(report.checks)} checks, {len(report.mismatches)} mismatches")
    return report
