from ...lab import brute_force_optimum, vertices
from ...reports import CSV, points_csv
from ...utils import format_rational
from ._base import GraverLabCommand


class Command(GraverLabCommand):
    help = "Brute-force optimum of a small instance (lattice points for ILP, vertices for LP)"

    def add_command_arguments(self, parser):
        parser.add_argument("--vertices", action="store_true",
                            help="also list every vertex of the polytope")

    def run(self, **options):
        inst = self.load_instance(options)
        optimum = brute_force_optimum(inst)
        listed = vertices(inst) if options["vertices"] else None
        if options["report_format"] == CSV:
            points = listed if listed is not None else [p for p in [optimum.point] if p is not None]
            return self.write(points_csv(points, inst.n))
        data = {
            "instance": inst.to_json(),
            "feasible": optimum.point is not None,
            "point": None if optimum.point is None else [format_rational(x) for x in optimum.point],
            "objective": None if optimum.point is None else format_rational(optimum.objective),
        }
        if listed is not None:
            data["vertices"] = [[format_rational(x) for x in v] for v in listed]
        self.emit(None, data=data)
