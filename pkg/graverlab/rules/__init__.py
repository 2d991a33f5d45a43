from ..exceptions import GraverLabInputError
from .base import AugmentationRule  # NOQA: F401
from .dantzig import DantzigDescent
from .deepest import DeepestDescent
from .steepest import SteepestDescent

RULES = {rule.rule_name: rule for rule in (DeepestDescent, DantzigDescent, SteepestDescent)}
RULE_NAMES = tuple(sorted(RULES))


def get_rule(rule, **kwargs):
    """Return an AugmentationRule instance for rule (a name, class or instance)"""
    if isinstance(rule, AugmentationRule):
        return rule
    if isinstance(rule, type) and issubclass(rule, AugmentationRule):
        return rule(**kwargs)
    try:
        return RULES[rule](**kwargs)
    except (KeyError, TypeError):
        raise GraverLabInputError("Unknown augmentation rule %r (choose from %s)"
                                  % (rule, ", ".join(RULE_NAMES))) from None
