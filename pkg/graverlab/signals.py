from django.dispatch import Signal


# Before each rule augmentation (receivers may raise GraverLabStopAugmentation)
# provides args: point, direction, instance, rule_name
pre_augment = Signal()

# After each augmentation, rule or cleanup
# provides args: step, point, instance, rule_name
post_augment = Signal()

# A solve has returned its final point
# provides args: trace, point, instance, rule_name
solve_finished = Signal()
