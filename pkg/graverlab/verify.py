"""The bound table: every proven augmentation bound, checked exactly on one input.

Each row is a BoundCheck whose holds is True, False, or None when the
bound does not apply to the input (wrong domain, too large to enumerate,
gap too small for a logarithm). Logarithms are base 2 and evaluated as
exact ceilings.
"""

import logging
from fractions import Fraction

from .engine import augment_to_optimality, circuit_walk, feasible_start
from .exceptions import GraverLabResourceError, GraverLabVerificationFailure
from .instance import INTEGER, REAL, Instance
from .lab import (
    augmenting_path_max_flow, brute_force_optimum, flow_value, gamma, network_to_json, vertices)
from .linalg import is_totally_unimodular, rank, subdeterminant_lcm
from .nfold import build_nfold, build_phase1, nfold_growth, solve_nfold
from .rules import RULE_NAMES
from .steps import max_step, steepness, take_step
from .testsets import (
    circuits, conforms, decompose_integer_conformal, decompose_real_conformal,
    distinct_steepness_values, graver_basis, graver_oracle, kernel_points,
    minimal_decomposition_length)
from .utils import ceil_log2, dot, format_rational, get_graverlab_setting, norm1, support

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "n/a"

# exhaustive rows are only run up to these column counts
OVERALL_STEEPEST_MAX_N = 4
ORACLE_MAX_N = 5
SEBO_MAX_N = 4


def _exact(value):
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    return value


class BoundCheck:
    """One row of the bound table"""

    def __init__(self, name, holds, observed=None, bound=None, detail=""):
        self.name = name
        self.holds = holds
        self.observed = observed
        self.bound = bound
        self.detail = detail

    @property
    def status(self):
        return NOT_APPLICABLE if self.holds is None else PASS if self.holds else FAIL

    def to_json(self):
        return {
            "name": self.name,
            "status": self.status,
            "observed": _exact(self.observed),
            "bound": _exact(self.bound),
            "detail": self.detail,
        }

    def __repr__(self):
        return "<BoundCheck %s: %s>" % (self.name, self.status)


def not_applicable(name, detail):
    return BoundCheck(name, None, detail=detail)


class VerificationReport:
    """Ordered bound rows for one subject (an instance, N-fold program or polytope)"""

    def __init__(self, subject, checks=None, **extra):
        self.subject = subject
        self.checks = list(checks or [])
        self.extra = extra  # additional JSON-ready data (distances, growth table, ...)

    def add(self, check):
        self.checks.append(check)
        return check

    def extend(self, checks):
        self.checks.extend(checks)

    def __iter__(self):
        return iter(self.checks)

    def __getitem__(self, name):
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    @property
    def failed(self):
        return [check.name for check in self.checks if check.holds is False]

    @property
    def passed(self):
        return not self.failed

    def raise_for_failures(self):
        if self.failed:
            raise GraverLabVerificationFailure(self.failed)

    def to_json(self):
        data = {
            "subject": self.subject,
            "passed": self.passed,
            "failed": self.failed,
            "checks": [check.to_json() for check in self.checks],
        }
        data.update(self.extra)
        return data


# Trace rows

def replay(trace):
    """Yield (point before, step) for every step of a trace"""
    x = trace.start
    for step in trace.steps:
        yield x, step
        x = take_step(x, step.direction, step.alpha)


def trace_rows(prefix, inst, trace, x_star, optimum):
    """Rows every solve must satisfy: optimality, strict decrease, maximal steps"""
    rows = [BoundCheck(prefix + "terminal_optimum", inst.objective(x_star) == optimum,
                       observed=inst.objective(x_star), bound=optimum)]
    improvements = trace.rule_improvements()
    rows.append(BoundCheck(prefix + "strict_decrease",
                           all(after < before for before, after in improvements),
                           observed=len(improvements)))
    non_increasing = all(step.objective <= before for before, step in
                         zip(trace.objectives(), trace.steps))
    rows.append(BoundCheck(prefix + "objective_nonincreasing", non_increasing))
    maximal = all(step.alpha == max_step(x, step.direction, inst,
                                         integral=inst.is_integer and not step.cleanup)
                  for x, step in replay(trace))
    rows.append(BoundCheck(prefix + "maximal_steps", maximal))
    if inst.is_integer:
        rows.append(BoundCheck(prefix + "integral_steps", all(
            Fraction(step.alpha).denominator == 1 and Fraction(step.objective).denominator == 1
            for step in trace.steps)))
    else:
        rows.append(BoundCheck(prefix + "terminal_vertex", inst.is_vertex(x_star)))
    return rows


def steepest_rows(prefix, inst, trace, T):
    rows = []
    directions = trace.directions
    steps = len(trace.rule_steps)
    name = "steps_le_graver_size" if inst.is_integer else "steps_le_circuit_count"
    rows.append(BoundCheck(prefix + name, steps <= len(T),
                           observed=steps, bound=len(T)))
    rows.append(BoundCheck(prefix + "no_repeat", len(set(directions)) == len(directions),
                           observed=len(directions) - len(set(directions)), bound=0))
    values = [step.steepness for step in trace.rule_steps]
    rows.append(BoundCheck(prefix + "steepness_nonincreasing",
                           all(a >= b for a, b in zip(values, values[1:]))))
    if not inst.is_integer:
        distinct = len(distinct_steepness_values(T, inst.c))
        rows.append(BoundCheck(prefix + "bland_count", steps <= inst.n * distinct,
                               observed=steps, bound=inst.n * distinct))
    if inst.is_integer:
        rows.append(overall_steepest_row(prefix, inst, trace, T))
    return rows


def overall_steepest_row(prefix, inst, trace, G):
    """Each chosen steepness equals the best over all applicable kernel points in G's box"""
    name = prefix + "overall_steepest"
    if inst.n > OVERALL_STEEPEST_MAX_N:
        return not_applicable(name, "n > %d" % OVERALL_STEEPEST_MAX_N)
    try:
        kernel = kernel_points(inst.A, max(G.max_norm_inf, 1))
    except GraverLabResourceError as err:
        return not_applicable(name, str(err))
    for x, step in replay(trace):
        if step.cleanup:
            continue
        best = max((steepness(z, inst.c) for z in kernel
                    if dot(inst.c, z) < 0 and max_step(x, z, inst) > 0),
                   default=None)
        if best != step.steepness:
            return BoundCheck(name, False, observed=step.steepness, bound=best,
                              detail="at %r" % (x,))
    return BoundCheck(name, True)


def per_step_row(name, trace, optimum, divisor):
    """Every rule step improves by at least (current gap)/divisor"""
    for before, after in trace.rule_improvements():
        gap = before - optimum
        if before - after < Fraction(gap) / divisor:
            return BoundCheck(name, False, observed=before - after, bound=Fraction(gap) / divisor)
    return BoundCheck(name, True, bound=divisor, detail="improvement >= gap/%s" % format_rational(divisor))


def count_row(name, steps, factor, log_argument):
    """steps <= factor · ceil(log2(log_argument)), when log_argument >= 2"""
    if log_argument < 2:
        return not_applicable(name, "log argument %s < 2" % format_rational(log_argument))
    bound = factor * ceil_log2(log_argument)
    return BoundCheck(name, steps <= bound, observed=steps, bound=bound)


# Matrix rows

def matrix_rows(A, box_bound=None, G=None, C=None):
    """Rows about G(A) and C(A) themselves: oracle equality, TU coincidence, decompositions"""
    box_bound = get_graverlab_setting('box_bound', kwargs={'box_bound': box_bound})
    G = graver_basis(A) if G is None else G
    C = circuits(A) if C is None else C
    n, r = A.n, rank(A)
    rows = []

    if n <= ORACLE_MAX_N:
        try:
            oracle = graver_oracle(A, max(G.max_norm_inf, 1))
        except GraverLabResourceError as err:
            rows.append(not_applicable("graver_oracle_equality", str(err)))
        else:
            rows.append(BoundCheck("graver_oracle_equality", oracle == G,
                                   observed=len(G), bound=len(oracle)))
    else:
        rows.append(not_applicable("graver_oracle_equality", "n > %d" % ORACLE_MAX_N))

    rows.append(BoundCheck("circuits_in_graver", all(z in G for z in C),
                           observed=len(C), bound=len(G)))

    try:
        unimodular = is_totally_unimodular(A)
    except GraverLabResourceError as err:
        unimodular = None
        rows.append(not_applicable("tu_coincidence", str(err)))
    if unimodular:
        shaped = all(all(abs(x) <= 1 for x in g) and len(support(g)) <= A.d + 1 for g in G)
        rows.append(BoundCheck("tu_coincidence", C == G and shaped, observed=len(C), bound=len(G)))
    elif unimodular is False:
        rows.append(not_applicable("tu_coincidence", "A is not totally unimodular"))

    try:
        points = kernel_points(A, box_bound)
    except GraverLabResourceError as err:
        rows.extend(not_applicable(name, str(err)) for name in
                    ("integer_decomposition", "sebo_term_bound", "sebo_kernel_dimension_bound",
                     "real_decomposition_terms"))
        return rows

    valid = True
    for z in points:
        terms = decompose_integer_conformal(z, G)
        total = tuple(sum(alpha * g[i] for alpha, g in terms) for i in range(n))
        valid = valid and total == z and all(
            conforms(tuple(alpha * gi for gi in g), z) for alpha, g in terms) \
            and sum(alpha * norm1(g) for alpha, g in terms) == norm1(z)
    rows.append(BoundCheck("integer_decomposition", valid, observed=len(points),
                           detail="kernel points with ||z||_inf <= %d" % box_bound))

    if n <= SEBO_MAX_N:
        longest = max((minimal_decomposition_length(z, G) for z in points), default=0)
        rows.append(BoundCheck("sebo_term_bound", longest <= max(2 * n - 2, 1),
                               observed=longest, bound=max(2 * n - 2, 1)))
        rows.append(BoundCheck("sebo_kernel_dimension_bound", longest <= max(2 * (n - r) - 2, 1),
                               observed=longest, bound=max(2 * (n - r) - 2, 1)))
    else:
        rows.extend(not_applicable(name, "n > %d" % SEBO_MAX_N)
                    for name in ("sebo_term_bound", "sebo_kernel_dimension_bound"))

    most = 0
    valid = True
    for z in points:
        terms = decompose_real_conformal(z, C)
        total = tuple(sum(alpha * g[i] for alpha, g in terms) for i in range(n))
        valid = valid and total == z and len(terms) <= len(support(z)) \
            and sum(alpha * norm1(g) for alpha, g in terms) == norm1(z)
        most = max(most, len(terms))
    rows.append(BoundCheck("real_decomposition_terms", valid and most <= n, observed=most, bound=n))
    return rows


# Instances

def relaxation_row(inst):
    """The LP optimum never exceeds the ILP optimum of the same data"""
    try:
        lp = brute_force_optimum(inst.with_domain(REAL)).objective
        ilp = brute_force_optimum(inst.with_domain(INTEGER)).objective
    except GraverLabResourceError as err:
        return not_applicable("lp_relaxation_le_ilp", str(err))
    if ilp is None:
        return not_applicable("lp_relaxation_le_ilp", "no integer point")
    return BoundCheck("lp_relaxation_le_ilp", lp <= ilp, observed=lp, bound=ilp)


def verify_instance(inst, x0=None, box_bound=None, network=None):
    """Run every rule on inst from x0 and check all bounds for its domain.

    network, when given, is (graph, source, sink) for a maxflow_instance
    and adds the flow rows.
    """
    if x0 is None:
        x0 = inst.x0 if inst.x0 is not None else feasible_start(inst)
    inst.check_feasible(x0)
    G = graver_basis(inst.A)
    C = circuits(inst.A)
    T = G if inst.is_integer else C
    optimum = brute_force_optimum(inst).objective
    gap0 = inst.objective(x0) - optimum
    n, d = inst.n, inst.d

    report = VerificationReport(inst.name, instance=inst.to_json(),
                                start=[format_rational(x) for x in x0])
    report.extend(matrix_rows(inst.A, box_bound, G=G, C=C))
    report.add(relaxation_row(inst))

    try:
        unimodular = is_totally_unimodular(inst.A)
    except GraverLabResourceError:
        unimodular = False
    gamma_value = gamma(inst)
    delta = 1 if inst.is_integer or inst.A.is_zero() else subdeterminant_lcm(inst.A)

    traces = {}
    for rule in RULE_NAMES:
        x_star, trace = augment_to_optimality(inst, x0, rule, T=T)
        traces[rule] = (x_star, trace)
        prefix = rule + "."
        steps = len(trace.rule_steps)
        report.extend(trace_rows(prefix, inst, trace, x_star, optimum))

        if rule == "steepest":
            report.extend(steepest_rows(prefix, inst, trace, T))
            if inst.is_integer and unimodular:
                distinct = len(distinct_steepness_values(T, inst.c))
                report.add(BoundCheck(prefix + "tu_bland_count", steps <= n * distinct,
                                      observed=steps, bound=n * distinct))
                report.add(BoundCheck(prefix + "tu_cost_bound", steps <= n * (d + 1) * norm1(inst.c),
                                      observed=steps, bound=n * (d + 1) * norm1(inst.c)))
            continue

        if inst.is_integer:
            terms = max(2 * n - 2, 1)
            if rule == "deepest":
                report.add(per_step_row(prefix + "deepest_step_improvement", trace, optimum, terms))
                report.add(count_row(prefix + "deepest_step_count", steps, 2 * terms, gap0))
            else:
                report.add(per_step_row(prefix + "dantzig_step_improvement", trace, optimum,
                                        terms * max(gamma_value, 1)))
                report.add(count_row(prefix + "dantzig_step_count", steps,
                                     2 * terms * gamma_value, gap0))
            if all(ui <= 1 for ui in inst.u):
                report.add(count_row(prefix + "zero_one_count", steps, 2 * terms, norm1(inst.c)))
        else:
            if rule == "deepest":
                report.add(per_step_row(prefix + "deepest_step_improvement", trace, optimum, n))
                report.add(count_row(prefix + "deepest_step_count", steps, 2 * n, delta * gap0))
            else:
                report.add(per_step_row(prefix + "dantzig_step_improvement", trace, optimum,
                                        n * delta * max(gamma_value, 1)))
                report.add(count_row(prefix + "dantzig_step_count", steps,
                                     2 * n * n * delta * gamma_value, delta * gap0))

    if network is not None:
        graph, source, sink = network
        report.extra["network"] = network_to_json(graph, source, sink)
        x_star, trace = traces["steepest"]
        expected = augmenting_path_max_flow(graph, source, sink)
        value = flow_value(inst, x_star)
        report.add(BoundCheck("flow_value_matches_oracle", value == expected,
                              observed=value, bound=expected))
        steps = len(trace.rule_steps)
        bound = n * (d + 1) * norm1(inst.c)
        report.add(BoundCheck("edmonds_karp_bound", steps <= bound, observed=steps, bound=bound,
                              detail="|E|·|V| with the auxiliary arc counted in |E|"))

    report.extra["summary"] = {
        rule: {"steps": len(trace.rule_steps), "cleanup_steps": len(trace.cleanup_steps),
               "objective": format_rational(inst.objective(x_star))}
        for rule, (x_star, trace) in traces.items()}
    report.extra["optimum"] = format_rational(optimum)
    report.extra["gamma"] = format_rational(gamma_value)
    report.extra["delta"] = delta
    logger.debug("verified %r: %d rows, %d failed", inst.name, len(report.checks), len(report.failed))
    return report


def verify_nfold(spec, b, c, u, domain=INTEGER):
    """Two-phase N-fold solve checked against brute force and the Graver growth bound.

    g(A,B) is reported as 0 when [A,B]^(N) has no Graver elements; the
    growth row is then not applicable.
    """
    result = solve_nfold(spec, b, c, u, domain)
    phase1, x0 = build_phase1(spec, b, u, domain)
    original = Instance(build_nfold(spec), b, c, u, domain=domain, name="nfold-N%d" % spec.N)
    oracle = brute_force_optimum(original)

    report = VerificationReport("nfold-N%d" % spec.N, result=result.to_json())
    report.add(BoundCheck("phase1_feasible", phase1.is_feasible(x0),
                          observed=phase1.objective(x0), bound=norm1(b)))
    report.add(BoundCheck("phase1_verdict_matches_oracle", result.feasible == (oracle.point is not None),
                          observed=result.feasible, bound=oracle.point is not None))
    if result.feasible and oracle.point is not None:
        report.add(BoundCheck("terminal_optimum", result.objective == oracle.objective,
                              observed=result.objective, bound=oracle.objective))
        steps = len(result.phase2_trace.rule_steps)
        size = result.graver_size if domain == INTEGER else len(circuits(original.A))
        report.add(BoundCheck("steps_le_graver_size", steps <= size, observed=steps, bound=size))
    else:
        report.add(not_applicable("terminal_optimum", "infeasible"))

    g, growth = nfold_growth(spec.A, spec.B, spec.N)
    bounded = [(N, size, bound) for N, size, bound in growth if bound is not None]
    if g == 0:
        report.add(not_applicable("graver_growth_bound", "g(A,B) = 0"))
    elif bounded:
        report.add(BoundCheck("graver_growth_bound", all(size <= bound for _, size, bound in bounded),
                              observed=[size for _, size, _ in bounded],
                              bound=[bound for _, _, bound in bounded]))
    else:
        report.add(not_applicable("graver_growth_bound", "N < g(A,B) = %d" % g))
    report.add(BoundCheck("graver_complexity", True, observed=g,
                          detail="reported" if g else "0: [A,B]^(N) has no Graver elements"))
    report.extra["growth"] = [{"N": N, "graver_size": size, "bound": bound} for N, size, bound in growth]
    return report


# Polytopes

def diameter_experiment(inst, C=None):
    """Circuit distances between all ordered vertex pairs of a (small) polytope"""
    inst = inst.with_domain(REAL)
    C = circuits(inst.A) if C is None else C
    points = vertices(inst)
    n, d = inst.n, inst.d
    bound = n * (d + 1) * (n - d)
    distances = {}
    flagged = []
    for v in points:
        for w in points:
            if v == w:
                continue
            count, terminal, _ = circuit_walk(inst, v, w, C)
            distances[(v, w)] = count
            if tuple(terminal) != tuple(w):
                flagged.append((v, w))

    longest = max(distances.values(), default=0)
    round_trip = max((distances[(v, w)] + distances[(w, v)] for v, w in distances), default=0)
    report = VerificationReport(inst.name, vertices=[[format_rational(x) for x in v] for v in points],
                                distances=[{"from": [format_rational(x) for x in v],
                                            "to": [format_rational(x) for x in w],
                                            "steps": count}
                                           for (v, w), count in sorted(distances.items())])
    report.add(BoundCheck("pair_distance_bound", longest <= bound, observed=longest, bound=bound,
                          detail="n(d+1)(n-d)"))
    report.add(BoundCheck("round_trip_bound", round_trip <= 2 * bound, observed=round_trip,
                          bound=2 * bound))
    if flagged:
        report.add(not_applicable("non_unique_targets", "%d walks ended elsewhere" % len(flagged)))
    report.extra["circuit_diameter"] = longest
    return report
