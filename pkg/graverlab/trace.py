from fractions import Fraction

from .utils import format_rational, normalize_point


class AugmentationStep:
    """One augmentation x -> x + alpha·direction.

    objective is c·x after the step; steepness is (-c·z)/||z||_1.
    cleanup is True for vertex-cleanup moves, which don't count
    as rule steps.
    """

    def __init__(self, direction, alpha, objective, steepness, cleanup=False):
        self.direction = tuple(direction)
        self.alpha = alpha
        self.objective = objective
        self.steepness = steepness
        self.cleanup = cleanup

    def to_json(self):
        return {
            "z": list(self.direction),
            "alpha": format_rational(self.alpha),
            "objective": format_rational(self.objective),
            "steepness": format_rational(self.steepness),
            "cleanup": self.cleanup,
        }

    def __repr__(self):
        return "AugmentationStep(z=%r, alpha=%s, objective=%s%s)" % (
            self.direction, format_rational(self.alpha), format_rational(self.objective),
            ", cleanup" if self.cleanup else "")


class AugmentationTrace:
    """Ordered record of a solve; immutable once returned to the caller"""

    def __init__(self, rule, domain, start, start_objective):
        self.rule = rule
        self.domain = domain
        self.start = normalize_point(start)
        self.start_objective = start_objective
        self.steps = []
        self.stopped = False  # a pre_augment receiver stopped the solve

    def __len__(self):
        return len(self.steps)

    @property
    def rule_steps(self):
        return [step for step in self.steps if not step.cleanup]

    @property
    def cleanup_steps(self):
        return [step for step in self.steps if step.cleanup]

    @property
    def directions(self):
        return [step.direction for step in self.rule_steps]

    @property
    def final_objective(self):
        return self.steps[-1].objective if self.steps else self.start_objective

    def objectives(self):
        """Objective before each step, followed by the final objective"""
        return [self.start_objective] + [step.objective for step in self.steps]

    def rule_improvements(self):
        """(objective before, objective after) for every rule step"""
        pairs = []
        previous = self.start_objective
        for step in self.steps:
            if not step.cleanup:
                pairs.append((Fraction(previous), Fraction(step.objective)))
            previous = step.objective
        return pairs

    def to_json(self):
        return {
            "rule": self.rule,
            "domain": self.domain,
            "start": [format_rational(x) for x in self.start],
            "start_objective": format_rational(self.start_objective),
            "stopped": self.stopped,
            "steps": [step.to_json() for step in self.steps],
        }

    def __repr__(self):
        return "<AugmentationTrace %s: %d rule steps, %d cleanup steps>" % (
            self.rule, len(self.rule_steps), len(self.cleanup_steps))
