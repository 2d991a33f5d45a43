"""Maximal step lengths, applicable directions and vertex cleanup"""

import logging
from fractions import Fraction
from math import floor

from .exceptions import GraverLabError, GraverLabInputError
from .linalg import rank
from .trace import AugmentationStep
from .utils import dot, is_zero, norm1, normalize_point, support

logger = logging.getLogger(__name__)


def max_step(x, z, inst, integral=None):
    """Largest α >= 0 with 0 <= x + α·z <= u; floored for integer instances.

    integral overrides the instance's domain (vertex cleanup always
    takes real steps).
    """
    if is_zero(z):
        raise GraverLabInputError("Can't step along the zero direction", instance=inst)
    integral = inst.is_integer if integral is None else integral
    ratios = []
    for xi, zi, ui in zip(x, z, inst.u):
        if zi > 0:
            ratios.append(Fraction(ui - xi) / zi)
        elif zi < 0:
            ratios.append(Fraction(xi) / -zi)
    alpha = min(ratios)
    if integral:
        return floor(alpha)
    return alpha.numerator if alpha.denominator == 1 else alpha


def candidates(x, inst, T):
    """Yield (z, c·z, α) for every improving applicable z ∈ T, in T's order"""
    for z in T.elements:
        cz = dot(inst.c, z)
        if cz >= 0:
            continue
        alpha = max_step(x, z, inst)
        if alpha > 0:  # integer steps are floored, so this means alpha >= 1
            yield z, cz, alpha


def steepness(z, c):
    return Fraction(-dot(c, z), norm1(z))


def take_step(x, z, alpha):
    return normalize_point(xi + alpha * zi for xi, zi in zip(x, z))


def vertex_cleanup(x, inst, C):
    """Move x to a vertex with no larger objective along circuits of C.

    Each move uses a circuit supported on the components strictly inside
    the box, with c·z <= 0, taken with its maximal real step, so at least
    one more component reaches a bound. At most n moves. Returns
    (vertex, steps) with every step tagged as cleanup.
    """
    inst.check_feasible(x, "cleanup point")
    x = normalize_point(x)
    steps = []
    for _ in range(inst.n + 1):
        free = inst.free_indices(x)
        if not free or rank(inst.A.submatrix(column_indices=free)) == len(free):
            return x, steps
        free = frozenset(free)
        best = None
        for z in C.elements:
            if not support(z) <= free:
                continue
            cz = dot(inst.c, z)
            if cz > 0:
                continue
            if best is None or -cz > best[0]:
                best = (-cz, z)
        if best is None:
            raise GraverLabError("No circuit lies in the free face of a non-vertex point; "
                                 "is the test set the full circuit set?", instance=inst)
        z = best[1]
        alpha = max_step(x, z, inst, integral=False)
        x = take_step(x, z, alpha)
        steps.append(AugmentationStep(z, alpha, inst.objective(x), steepness(z, inst.c),
                                      cleanup=True))
        logger.debug("cleanup step z=%r alpha=%s", z, alpha)
    raise GraverLabError("Vertex cleanup did not reach a vertex in %d moves" % inst.n,
                         instance=inst)
