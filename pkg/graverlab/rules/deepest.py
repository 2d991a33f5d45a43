from .base import AugmentationRule, progress_threshold


class DeepestDescent(AugmentationRule):
    """
    Deepest descent: maximize α·(-c·z) over applicable z, with α the maximal step.

    For real instances, once a step improves the objective by less than
    (1/δ)/(2n-2) the point is moved to a vertex, which is then optimal
    (augmentation simply continues if it somehow isn't).
    """

    rule_name = "deepest"

    def score(self, z, cz, alpha):
        return alpha * -cz

    def prepare(self, x, inst, T, trace):
        self.threshold = None if inst.is_integer else progress_threshold(inst)
        return x

    def after_step(self, x, inst, T, trace):
        if self.threshold is not None:
            before, after = trace.objectives()[-2:]
            if before - after < self.threshold:
                x = self.cleanup(x, inst, T, trace)
        return x
