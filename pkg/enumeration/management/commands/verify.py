import logging

from django.core.management.base import BaseCommand, CommandError

from core.command_errors import translate_errors
from core.config import RunConfig
from core.constants import EXIT_MISMATCH
from core.exceptions import IntegralityError

from basis.oracle import planar_oracle_table
from basis.services import resolve_planar_basis
from enumeration.pipeline import EnumerationPipeline
from enumeration.verification import run_verification

logger = logging.getLogger(__name__)

FAST_BASIS_ORDER = 7
EXTENDED_BASIS_ORDER = 8


class Command(BaseCommand):
    help = "Recompute every class from the P basis and compare with the reference tables, the oracle and each other."

    def add_arguments(self, parser):
        parser.add_argument('--basis', action='append', default=[], help="P2planar table file")
        parser.add_argument('--basis-from-hp', default=None, help="Derive the P basis from an HP coefficient table")
        parser.add_argument('--extended', action='store_true',
                            help=f"Oracle basis to n={EXTENDED_BASIS_ORDER} instead of n={FAST_BASIS_ORDER}")
        parser.add_argument('--workers', type=int, default=None)

    def handle(self, *args, **options):
        with translate_errors():
            cfg = RunConfig.from_options('verify', options)
            order = EXTENDED_BASIS_ORDER if cfg.extended else FAST_BASIS_ORDER
            if cfg.basis_paths or options['basis_from_hp']:
                basis = resolve_planar_basis(
                    paths=cfg.basis_paths, hp_path=options['basis_from_hp'], required_order=order
                )
            else:
                basis = planar_oracle_table(order, workers=cfg.workers)
            pipeline = EnumerationPipeline(basis, basis.nmax + 3)
            try:
                report = run_verification(pipeline, extended=cfg.extended, workers=cfg.workers)
            except IntegralityError as exc:
                raise CommandError(str(exc), returncode=EXIT_MISMATCH)

        self.stdout.write(f"basis: {basis.class_name} to n={basis.nmax} ({basis.provenance})")
        for note in report.notes:
            self.stdout.write(f"note: {note}")
        for mismatch in report.mismatches:
            self.stdout.write(str(mismatch))
        if not report.ok:
            raise CommandError(
                f"{len(report.mismatches)} mismatches in {len(report.checks)} checks; first {report.first_mismatch()}",
                returncode=EXIT_MISMATCH,
            )
        self.stdout.write(f"ok: {len(report.checks)} checks")
