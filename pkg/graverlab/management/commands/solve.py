from ...engine import augment_to_optimality, feasible_start
from ...rules import RULE_NAMES
from ...utils import format_rational
from ._base import GraverLabCommand, parse_point


class Command(GraverLabCommand):
    help = "Solve an instance by augmentation and write the trace"
    cap_setting = 'STEP_CAP'

    def add_command_arguments(self, parser):
        parser.add_argument("--rule", choices=RULE_NAMES, default="steepest",
                            help="augmentation rule (default steepest)")
        parser.add_argument("--start", metavar="X",
                            help="start point as comma-separated exact values, e.g. 1,0,2")

    def run(self, **options):
        inst = self.load_instance(options)
        if options.get("start"):
            x0 = parse_point(options["start"], "start")
        else:
            x0 = inst.x0 if inst.x0 is not None else feasible_start(inst)
        x, trace = augment_to_optimality(inst, x0, options["rule"])
        summary = {
            "steps": len(trace.rule_steps),
            "cleanup_steps": len(trace.cleanup_steps),
            "optimum": format_rational(inst.objective(x)),
            "point": [format_rational(xi) for xi in x],
        }
        self.emit(trace, data={
            "instance": inst.to_json(),
            "rule": options["rule"],
            "summary": summary,
            "trace": trace.to_json(),
        })
        self.stderr.write("steps=%d optimum=%s" % (summary["steps"], summary["optimum"]))
