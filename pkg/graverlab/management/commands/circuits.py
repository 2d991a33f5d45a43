from ...testsets import circuits
from ._base import GraverLabCommand


class Command(GraverLabCommand):
    help = "Compute the circuits of an integer matrix"
    input_help = "matrix JSON file: a list of rows, or any document with an \"A\""

    def run(self, **options):
        self.emit(circuits(self.load_matrix(options)))
