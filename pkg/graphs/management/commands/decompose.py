import json
import logging

from django.core.management.base import BaseCommand

from core.command_errors import translate_errors

from graphs.decomposition import decompose
from graphs.graph_format import load_graph

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = "Test a graph file for membership in F and print its side-component decomposition as JSON."

    def add_arguments(self, parser):
        parser.add_argument('graph_file', help="Graph file: a line 'n <count>' then one 'u v' edge per line")

    def handle(self, *args, **options):
        with translate_errors():
            graph = load_graph(options['graph_file'])
            result = decompose(graph)

        if result.accepted:
            self.stdout.write("accepted")
        else:
            self.stdout.write(f"rejected: {result.reason}")
        self.stdout.write(json.dumps(result.to_dict(), indent=2, sort_keys=True))
