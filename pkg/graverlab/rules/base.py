import logging
from fractions import Fraction

from ..exceptions import GraverLabResourceError, GraverLabStopAugmentation
from ..linalg import subdeterminant_lcm
from ..signals import post_augment, pre_augment, solve_finished
from ..steps import candidates, steepness, take_step, vertex_cleanup
from ..trace import AugmentationStep, AugmentationTrace
from ..utils import get_graverlab_setting, normalize_point

logger = logging.getLogger(__name__)


class AugmentationRule:
    """
    Base augmentation rule
    """

    def __init__(self, **kwargs):
        self.step_cap = get_graverlab_setting('step_cap', kwargs=kwargs)

    def score(self, z, cz, alpha):
        """Return how good direction z (with c·z == cz and maximal step alpha) is.

        Larger is better; ties go to the lexicographically smallest z.
        """
        raise NotImplementedError("%s.%s must implement score" %
                                  (self.__class__.__module__, self.__class__.__name__))

    def pick_direction(self, x, inst, T):
        """Return (z, alpha) for the best applicable improving z ∈ T, or None if x is optimal"""
        best = None
        for z, cz, alpha in candidates(x, inst, T):
            score = self.score(z, cz, alpha)
            if best is None or score > best[0]:
                best = (score, z, alpha)
        return None if best is None else best[1:]

    def augment(self, inst, x0, T):
        """Augment from x0 until no direction of T improves; returns (x*, trace).

        T must be G(A) for integer instances and C(A) for real ones. Real
        solves always end at a vertex.
        """
        inst.check_feasible(x0)
        x = normalize_point(x0)
        trace = AugmentationTrace(self.rule_name, inst.domain, x, inst.objective(x))
        x = self.prepare(x, inst, T, trace)

        while True:
            picked = self.pick_direction(x, inst, T)
            if picked is None:
                break
            z, alpha = picked
            if len(trace.rule_steps) >= self.step_cap:
                raise GraverLabResourceError(cap_name='STEP_CAP', cap=self.step_cap,
                                             observed=len(trace.rule_steps) + 1,
                                             instance=inst, rule=self.rule_name)
            if not self.run_pre_augment(x, z, inst):
                trace.stopped = True
                break
            x = self.record_step(x, z, alpha, inst, trace)
            x = self.after_step(x, inst, T, trace)

        if not inst.is_integer and not trace.stopped:
            x = self.cleanup(x, inst, T, trace)
        solve_finished.send(self.__class__, trace=trace, point=x, instance=inst,
                            rule_name=self.rule_name)
        return x, trace

    def prepare(self, x, inst, T, trace):
        """Hook run once before the first step; returns the point to start from"""
        return x

    def after_step(self, x, inst, T, trace):
        """Hook run after every rule step; returns the point to continue from"""
        return x

    def record_step(self, x, z, alpha, inst, trace):
        x = take_step(x, z, alpha)
        step = AugmentationStep(z, alpha, inst.objective(x), steepness(z, inst.c))
        trace.steps.append(step)
        logger.debug("%s step %d: z=%r alpha=%s objective=%s", self.rule_name,
                     len(trace.rule_steps), z, alpha, step.objective)
        self.run_post_augment(step, x, inst)
        return x

    def cleanup(self, x, inst, T, trace):
        """Move x to a vertex along circuits, recording cleanup steps"""
        vertex, steps = vertex_cleanup(x, inst, T)
        for step in steps:
            trace.steps.append(step)
            self.run_post_augment(step, vertex, inst)
        return vertex

    def run_pre_augment(self, point, direction, instance):
        """Send pre_augment signal, and return True if the solve should continue"""
        try:
            pre_augment.send(self.__class__, point=point, direction=direction,
                             instance=instance, rule_name=self.rule_name)
            return True
        except GraverLabStopAugmentation:
            return False  # stop without error

    def run_post_augment(self, step, point, instance):
        """Send post_augment signal to all receivers"""
        results = post_augment.send_robust(
            self.__class__, step=step, point=point, instance=instance, rule_name=self.rule_name)
        for (receiver, response) in results:
            if isinstance(response, Exception):
                raise response

    @property
    def rule_name(self):
        """
        Read-only name of the rule.

        Concrete rules must override with class attr. E.g.:
            rule_name = "steepest"
        """
        raise NotImplementedError("%s.%s must declare rule_name class attr" %
                                  (self.__class__.__module__, self.__class__.__name__))


def progress_threshold(inst):
    """(1/δ)/(2n-2): LP steps improving less than this hand over to vertex cleanup"""
    delta = 1 if inst.A.is_zero() else subdeterminant_lcm(inst.A)
    return Fraction(1, delta) / max(2 * inst.n - 2, 1)
