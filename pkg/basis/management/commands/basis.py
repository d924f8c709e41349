import logging

from django.core.management.base import BaseCommand

from core.command_errors import translate_errors
from core.config import RunConfig
from core.constants import CLASS_PLANAR, KIND_CHOICES, KIND_COEFFICIENTS, ORACLE_STRATEGIES, SERIES_CLASSES

from basis.derive import derive_planar_table
from basis.oracle import planar_oracle_table
from basis.services import latest_table, table_to_model
from basis.table_format import CoefficientTable, load_table, render_table, save_table

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = "Compute, load, export or derive the planar basis table."

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='action', required=True)

        compute = subparsers.add_parser('compute', help="Build the P2planar table with the exhaustive oracle")
        compute.add_argument('--n', type=int, required=True)
        compute.add_argument('--out', default=None)
        compute.add_argument('--store', action='store_true')
        compute.add_argument('--strategy', choices=ORACLE_STRATEGIES, default=None)
        compute.add_argument('--workers', type=int, default=None)

        load = subparsers.add_parser('load', help="Check a table file and optionally store it")
        load.add_argument('file')
        load.add_argument('--store', action='store_true')

        export = subparsers.add_parser('export', help="Write the largest stored table of a class")
        export.add_argument('--class', dest='class_name', default=CLASS_PLANAR, choices=SERIES_CLASSES)
        export.add_argument('--kind', choices=[k for k, _ in KIND_CHOICES], default=KIND_COEFFICIENTS)
        export.add_argument('--out', default=None)

        derive = subparsers.add_parser('derive', help="Recompute P from an HP table")
        derive.add_argument('--hp-table', required=True)
        derive.add_argument('--nmax', type=int, default=None)
        derive.add_argument('--out', default=None)
        derive.add_argument('--store', action='store_true')

    def handle(self, *args, **options):
        action = options['action']
        with translate_errors():
            if action == 'compute':
                cfg = RunConfig.from_options('basis', options)
                table = planar_oracle_table(options['n'], strategy=options['strategy'], workers=cfg.workers)
                self._emit(table, options['out'], options['store'], source='oracle')
            elif action == 'load':
                table = load_table(options['file'])
                self.stdout.write(
                    f"{table.class_name} {table.kind} nmax={table.nmax} "
                    f"provenance={table.provenance} records={len(table.records)}"
                )
                if options['store']:
                    stored = table_to_model(table, source=str(options['file']))
                    self.stdout.write(f"stored as {stored.slug}")
            elif action == 'export':
                table = latest_table(options['class_name'], options['kind'])
                self._emit(table, options['out'], store=False)
            elif action == 'derive':
                hp_table = load_table(options['hp_table'])
                table = derive_planar_table(hp_table, options['nmax'])
                self._emit(table, options['out'], options['store'], source=str(options['hp_table']))

    def _emit(self, table: CoefficientTable, out, store, source=''):
        if out:
            save_table(table, out)
            self.stdout.write(f"wrote {table.class_name} to n={table.nmax} to {out}")
        else:
            self.stdout.write(render_table(table), ending='')
        if store:
            stored = table_to_model(table, source=source)
            self.stdout.write(f"stored as {stored.slug}")
