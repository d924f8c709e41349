import logging

from django.core.management.base import BaseCommand

from core.command_errors import translate_errors
from core.config import RunConfig
from core.constants import ORACLE_CLASSES, ORACLE_STRATEGIES

from graphs.oracle import FILTER_CONNECTIVITY_FIRST, FILTER_ORDERS, oracle_count

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = "Count the labelled members of a graph class on n vertices by exhaustive classification."

    def add_arguments(self, parser):
        parser.add_argument('--class', dest='class_name', required=True, choices=ORACLE_CLASSES)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--strategy', choices=ORACLE_STRATEGIES, default=None,
                            help="Default: atlas up to 7 vertices, extension at 8, subsets beyond")
        parser.add_argument('--workers', type=int, default=None,
                            help="Worker processes for the subsets and extension strategies (default K33LAB_WORKERS, else every CPU at n = 8)")
        parser.add_argument('--filter-order', choices=FILTER_ORDERS, default=FILTER_CONNECTIVITY_FIRST)

    def handle(self, *args, **options):
        n = options['n']
        with translate_errors():
            cfg = RunConfig.from_options('oracle', options)
            counts = oracle_count(
                cfg.class_name,
                n,
                strategy=options['strategy'],
                workers=cfg.workers,
                filter_order=options['filter_order'],
            )

        for m, count in counts.items():
            self.stdout.write(f"{n} {m} {count}")
        self.stdout.write(f"# total={sum(counts.values())}")
