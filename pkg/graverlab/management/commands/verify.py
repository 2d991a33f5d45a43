from ...lab import SINK, SOURCE, maxflow_instance, network_from_json, random_flow_network
from ...verify import verify_instance
from ._base import GraverLabCommand, load_json, parse_point


class Command(GraverLabCommand):
    help = "Run every rule on an instance and check the augmentation bounds"

    def add_command_arguments(self, parser):
        parser.add_argument("--network", metavar="PATH",
                            help="max-flow network JSON instead of an instance")
        parser.add_argument("--random-network", type=int, nargs="?", const=5, metavar="NODES",
                            help="seeded random max-flow network (default 5 nodes)")
        parser.add_argument("--start", metavar="X",
                            help="start point as comma-separated exact values")

    def run(self, **options):
        network = None
        if options.get("network") or options.get("random_network"):
            if options.get("network"):
                graph, source, sink = network_from_json(load_json(options["network"]))
            else:
                graph = random_flow_network(options["seed"], nodes=options["random_network"])
                source, sink = SOURCE, SINK
            inst = maxflow_instance(graph, source, sink)
            network = (graph, source, sink)
        else:
            inst = self.load_instance(options)
        x0 = parse_point(options["start"], "start") if options.get("start") else None
        report = verify_instance(inst, x0, box_bound=options.get("box_bound"), network=network)
        self.emit(report)
        report.raise_for_failures()
