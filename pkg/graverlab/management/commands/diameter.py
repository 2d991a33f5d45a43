from ...instance import REAL
from ...lab import random_tu_instance
from ...verify import diameter_experiment
from ._base import GraverLabCommand


class Command(GraverLabCommand):
    help = "Circuit distances between all vertex pairs of a small polytope"
    cap_setting = 'VERTEX_CAP'

    def add_command_arguments(self, parser):
        parser.add_argument("--random-tu", type=int, nargs="?", const=4, metavar="NODES",
                            help="seeded random network polytope (default 4 nodes)")

    def run(self, **options):
        if options.get("random_tu"):
            inst = random_tu_instance(options["seed"], nodes=options["random_tu"])
        else:
            inst = self.load_instance(options, domain=REAL)
        report = diameter_experiment(inst)
        self.emit(report)
        report.raise_for_failures()
