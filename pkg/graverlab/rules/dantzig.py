from .base import AugmentationRule


class DantzigDescent(AugmentationRule):
    """
    Dantzig descent: maximize -c·z over applicable z, then take the maximal step.

    Real instances return to a vertex before the first step and after
    every step, which keeps the discrete rule from zig-zagging.
    """

    rule_name = "dantzig"

    def score(self, z, cz, alpha):
        return -cz

    def prepare(self, x, inst, T, trace):
        if not inst.is_integer:
            x = self.cleanup(x, inst, T, trace)
        return x

    def after_step(self, x, inst, T, trace):
        if not inst.is_integer:
            x = self.cleanup(x, inst, T, trace)
        return x
