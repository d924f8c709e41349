import json
import logging

from django.core.management.base import BaseCommand

from core.command_errors import translate_errors
from core.config import RunConfig
from core.constants import FORMAT_CSV, FORMAT_JSON, OUTPUT_FORMATS, SERIES_CLASSES

from basis.services import resolve_planar_basis
from basis.table_format import CoefficientTable, render_table
from enumeration.pipeline import EnumerationPipeline, required_basis_order

logger = logging.getLogger(__name__)


def render_csv(table: CoefficientTable) -> str:
    header = "n,count" if table.is_totals else "n,m,count"
    rows = [",".join(str(v) for v in record) for record in table.records]
    return "\n".join([header] + rows) + "\n"


def render_json(table: CoefficientTable) -> str:
    document = {
        'class': table.class_name,
        'nmax': table.nmax,
        'provenance': table.provenance,
        'kind': table.kind,
        'records': [list(record) for record in table.records],
    }
    return json.dumps(document, indent=2) + "\n"


RENDERERS = {
    FORMAT_CSV: render_csv,
    FORMAT_JSON: render_json,
}


class Command(BaseCommand):
    help = "Compute the coefficient table of a graph class up to n = nmax."

    def add_arguments(self, parser):
        parser.add_argument('--class', dest='class_name', required=True, choices=SERIES_CLASSES)
        parser.add_argument('--nmax', type=int, required=True)
        parser.add_argument('--format', choices=OUTPUT_FORMATS, default=FORMAT_CSV)
        parser.add_argument('--basis', action='append', default=[],
                            help="P2planar table file; repeat to merge several")
        parser.add_argument('--basis-from-hp', default=None,
                            help="Derive the P basis from an HP coefficient table")
        parser.add_argument('--totals', action='store_true', help="Write per-n totals instead of (n, m) counts")
        parser.add_argument('--workers', type=int, default=None)

    def handle(self, *args, **options):
        with translate_errors():
            cfg = RunConfig.from_options('tables', options)
            required = required_basis_order(cfg.class_name, cfg.nmax)
            basis = None
            if required is not None:
                basis = resolve_planar_basis(
                    paths=cfg.basis_paths,
                    hp_path=options['basis_from_hp'],
                    required_order=required,
                    workers=cfg.workers,
                )
            pipeline = EnumerationPipeline(basis, cfg.nmax)
            pipeline.require(cfg.class_name)
            table = pipeline.table(cfg.class_name, totals=options['totals'])

        logger.info(f"Writing {cfg.class_name} to n={table.nmax} as {cfg.output_format}")
        render = RENDERERS.get(cfg.output_format, render_table)
        self.stdout.write(render(table), ending='')
