from ...testsets import graver_basis
from ._base import GraverLabCommand


class Command(GraverLabCommand):
    help = "Compute the Graver basis of an integer matrix"
    cap_setting = 'GRAVER_CAP'
    input_help = "matrix JSON file: a list of rows, or any document with an \"A\""

    def run(self, **options):
        self.emit(graver_basis(self.load_matrix(options)))
