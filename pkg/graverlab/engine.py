"""Traced solves, optimality certificates, circuit distances and phase-I starts"""

import logging
import warnings

from .exceptions import (
    GraverLabInfeasibleError, GraverLabInputError, GraverLabNonUniqueTargetWarning)
from .instance import REAL, Instance
from .linalg import IntegerMatrix
from .rules import SteepestDescent, get_rule
from .testsets import circuits, graver_basis
from .utils import norm1

logger = logging.getLogger(__name__)


def default_test_set(inst):
    """G(A) for integer instances, C(A) for real ones"""
    return graver_basis(inst.A) if inst.is_integer else circuits(inst.A)


def pick_direction(x, inst, T, rule):
    """(z, α) chosen by rule at x, or None when no direction of T improves x"""
    return get_rule(rule).pick_direction(x, inst, T)


def is_optimal(x, inst, T):
    """Test-set certificate: no element of T is an applicable improving direction"""
    return pick_direction(x, inst, T, "steepest") is None


def augment_to_optimality(inst, x0=None, rule="steepest", T=None, **kwargs):
    """Solve inst from x0 with rule; returns (x*, trace).

    x0 defaults to the instance's own start point. T defaults to
    default_test_set(inst).
    """
    if x0 is None:
        x0 = inst.x0
    if x0 is None:
        raise GraverLabInputError("No start point given and the instance has none", instance=inst)
    T = default_test_set(inst) if T is None else T
    rule = get_rule(rule, **kwargs)
    x, trace = rule.augment(inst, x0, T)
    logger.debug("%s solve of %r: %d rule steps, %d cleanup steps, objective %s",
                 rule.rule_name, inst.name, len(trace.rule_steps), len(trace.cleanup_steps),
                 trace.final_objective)
    return x, trace


def target_cost(inst, vertex):
    """Cost making vertex the unique optimum: 1 where it sits at 0, -1 where it sits at u"""
    cost = []
    for vi, ui in zip(vertex, inst.u):
        if vi == 0:
            cost.append(1)
        elif vi == ui:
            cost.append(-1)
        else:
            cost.append(0)
    return tuple(cost)


def circuit_walk(inst, v_start, v_target, C=None):
    """Steepest circuit walk from v_start towards v_target.

    Returns (count, terminal, trace); terminal differs from v_target only
    when the target cost has several optimal vertices.
    """
    inst = inst.with_domain(REAL)
    for label, v in (("start", v_start), ("target", v_target)):
        if not inst.is_vertex(v):
            raise GraverLabInputError("%s point %r is not a vertex" % (label, tuple(v)),
                                      instance=inst)
    C = circuits(inst.A) if C is None else C
    walk = inst.replace(c=target_cost(inst, v_target), x0=None)
    terminal, trace = SteepestDescent().augment(walk, v_start, C)
    return len(trace.rule_steps), terminal, trace


def circuit_distance(inst, v_start, v_target, C=None):
    """Number of steepest circuit augmentations from v_start until v_target's cost is optimal"""
    count, terminal, _ = circuit_walk(inst, v_start, v_target, C)
    if tuple(terminal) != tuple(v_target):
        warnings.warn("Circuit walk to %r ended at %r" % (tuple(v_target), tuple(terminal)),
                      GraverLabNonUniqueTargetWarning)
    return count


def phase_one(inst):
    """The auxiliary instance min{1·s⁺ + 1·s⁻ : Ax + s⁺ - s⁻ = b} with its obvious start.

    Slacks are bounded by ||b||_1. Returns (instance, x0).
    """
    d, n = inst.d, inst.n
    identity = IntegerMatrix.identity(d)
    negative = IntegerMatrix([[-x for x in row] for row in identity.rows])
    A = inst.A.hstack(identity, negative)
    slack_bound = norm1(inst.b)
    c = (0,) * n + (1,) * (2 * d)
    u = inst.u + (slack_bound,) * (2 * d)
    x0 = (0,) * n + tuple(max(bi, 0) for bi in inst.b) + tuple(max(-bi, 0) for bi in inst.b)
    return Instance(A, inst.b, c, u, domain=inst.domain, name="%s-phase1" % inst.name, x0=x0), x0


def feasible_start(inst):
    """A feasible point of inst, by steepest descent on the phase-one instance"""
    auxiliary, x0 = phase_one(inst)
    x, trace = augment_to_optimality(auxiliary, x0, "steepest")
    if auxiliary.objective(x) > 0:
        raise GraverLabInfeasibleError(instance=inst)
    start = tuple(x[:inst.n])
    logger.debug("phase one for %r: %d steps to %r", inst.name, len(trace.rule_steps), start)
    return start
