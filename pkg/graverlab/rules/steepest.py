from fractions import Fraction

from ..utils import norm1
from .base import AugmentationRule


class SteepestDescent(AugmentationRule):
    """
    Steepest descent: maximize (-c·z)/||z||_1 over applicable z, then take the maximal step.
    """

    rule_name = "steepest"

    def score(self, z, cz, alpha):
        return Fraction(-cz, norm1(z))
