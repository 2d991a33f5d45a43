from ...exceptions import GraverLabInputError
from ...instance import INTEGER
from ...nfold import NFoldSpec, solve_nfold, transportation_nfold
from ...verify import verify_nfold
from ._base import GraverLabCommand


class Command(GraverLabCommand):
    help = "Solve an N-fold program by phase I and phase II steepest descent"
    cap_setting = 'NFOLD_CAP'
    input_help = "N-fold JSON file: {\"A\", \"B\", \"N\", \"b\", \"c\", \"u\", \"domain\"}"

    def add_command_arguments(self, parser):
        parser.add_argument("--verify", action="store_true",
                            help="check the result and Graver growth against brute force")
        parser.add_argument("--transportation", metavar="SUPPLIES:DEMANDS",
                            help="transportation problem, e.g. 2,1:1,1,1 (unit costs)")

    def run(self, **options):
        if options.get("transportation"):
            spec, b, c, u = transportation_nfold(*self.parse_transportation(options["transportation"]))
            domain = options.get("domain") or INTEGER
        else:
            data = self.require_input(options)
            spec = NFoldSpec.from_json(data)
            try:
                b, c, u = data["b"], data["c"], data["u"]
            except KeyError as err:
                raise GraverLabInputError("N-fold document needs \"b\", \"c\" and \"u\"") from err
            domain = options.get("domain") or data.get("domain", INTEGER)
        if options["verify"]:
            report = verify_nfold(spec, b, c, u, domain)
            self.emit(report)
            report.raise_for_failures()
        else:
            result = solve_nfold(spec, b, c, u, domain)
            # CSV carries the phase-II trace, or phase I when the program is infeasible
            trace = result.phase1_trace if result.phase2_trace is None else result.phase2_trace
            self.emit(trace, data=result.to_json())

    @staticmethod
    def parse_transportation(text):
        try:
            supplies, demands = text.split(":")
            return ([int(s) for s in supplies.split(",")],
                    [int(d) for d in demands.split(",")])
        except ValueError as err:
            raise GraverLabInputError("--transportation wants SUPPLIES:DEMANDS, got %r" % text) from err
