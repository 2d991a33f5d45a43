"""N-fold programs: block assembly, the phase-I extension and the two-phase solve"""

import logging
from math import comb

from .engine import augment_to_optimality
from .exceptions import GraverLabInputError, GraverLabResourceError
from .instance import INTEGER, Instance
from .lab import balanced_transportation, cost_vector
from .linalg import IntegerMatrix
from .testsets import circuits, graver_basis, graver_complexity
from .utils import as_integer, format_rational, get_graverlab_setting, norm1

logger = logging.getLogger(__name__)


class NFoldSpec:
    """Bricks A (d_A × t) and B (d_B × t), repeated N times.

    [A, B]^(N) has B repeated across the top block row and N copies of A
    on the block diagonal below it.
    """

    def __init__(self, A, B, N):
        self.A = A if isinstance(A, IntegerMatrix) else IntegerMatrix(A)
        self.B = B if isinstance(B, IntegerMatrix) else IntegerMatrix(B)
        self.N = as_integer(N, "N")
        if self.A.n != self.B.n:
            raise GraverLabInputError("A has %d columns but B has %d" % (self.A.n, self.B.n))
        if self.N < 1:
            raise GraverLabInputError("N must be positive")

    @property
    def t(self):
        return self.A.n

    @property
    def shape(self):
        return self.B.d + self.N * self.A.d, self.N * self.t

    def bricks(self, x):
        """Split a length N·t vector into its N bricks"""
        return [tuple(x[k * self.t:(k + 1) * self.t]) for k in range(self.N)]

    def to_json(self):
        return {"A": self.A.to_json(), "B": self.B.to_json(), "N": self.N}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(data["A"], data["B"], data["N"])
        except (KeyError, TypeError) as err:
            raise GraverLabInputError("Malformed N-fold document") from err

    def __repr__(self):
        return "NFoldSpec(A=%r, B=%r, N=%d)" % (self.A.to_json(), self.B.to_json(), self.N)


def build_nfold(spec):
    """The (d_B + N·d_A) × (N·t) matrix [A, B]^(N)"""
    t = spec.t
    rows = [list(row) * spec.N for row in spec.B.rows]
    for k in range(spec.N):
        for row in spec.A.rows:
            rows.append([0] * (k * t) + list(row) + [0] * ((spec.N - k - 1) * t))
    return IntegerMatrix(rows)


def phase1_spec(spec):
    """Extended bricks (A I -I O O) and (B O O I -I)"""
    d_a, d_b = spec.A.d, spec.B.d

    def plus_minus(k):
        # rows of (I -I) for a k-row brick
        return [[1 if j == i else -1 if j == i + k else 0 for j in range(2 * k)] for i in range(k)]

    slack_a, slack_b = plus_minus(d_a), plus_minus(d_b)
    A = [list(row) + slack + [0] * (2 * d_b) for row, slack in zip(spec.A.rows, slack_a)]
    B = [list(row) + [0] * (2 * d_a) + slack for row, slack in zip(spec.B.rows, slack_b)]
    return NFoldSpec(A, B, spec.N)


def _check_rhs(spec, b, u):
    rows, cols = spec.shape
    b = [as_integer(x, "b entry") for x in b]
    u = [as_integer(x, "u entry") for x in u]
    if len(b) != rows:
        raise GraverLabInputError("b needs %d entries for this N-fold matrix, got %d" % (rows, len(b)))
    if len(u) != cols:
        raise GraverLabInputError("u needs %d entries for this N-fold matrix, got %d" % (cols, len(u)))
    return b, u


def build_phase1(spec, b, u, domain=INTEGER):
    """Phase-I instance over the extended bricks, with its immediate start point.

    The objective is 0 on original variables and 1 on every slack; slacks
    are bounded by ||b||_1. The start sets originals to 0, each brick's
    A-slacks to the positive/negative parts of its right-hand side, and
    loads the whole B right-hand side onto brick 1's B-slacks.
    Returns (instance, x0).
    """
    b, u = _check_rhs(spec, b, u)
    extended = phase1_spec(spec)
    t, d_a, d_b = spec.t, spec.A.d, spec.B.d
    slack_bound = norm1(b)
    b_top, b_bricks = b[:d_b], b[d_b:]

    c, bounds, x0 = [], [], []
    for k in range(spec.N):
        rhs = b_bricks[k * d_a:(k + 1) * d_a]
        c += [0] * t + [1] * (2 * d_a + 2 * d_b)
        bounds += u[k * t:(k + 1) * t] + [slack_bound] * (2 * d_a + 2 * d_b)
        x0 += [0] * t
        x0 += [max(r, 0) for r in rhs] + [max(-r, 0) for r in rhs]
        top = b_top if k == 0 else [0] * d_b
        x0 += [max(r, 0) for r in top] + [max(-r, 0) for r in top]
    instance = Instance(build_nfold(extended), b, c, bounds, domain=domain, name="nfold-phase1",
                        x0=x0)
    return instance, tuple(x0)


def original_components(spec, x):
    """Drop the slack components of an extended-brick point"""
    return tuple(xi for brick in phase1_spec(spec).bricks(x) for xi in brick[:spec.t])


class NFoldResult:
    """Outcome of solve_nfold; point is None when the program is infeasible"""

    def __init__(self, spec, instance, point, phase1_objective, phase1_trace, phase2_trace,
                 graver_size, complexity):
        self.spec = spec
        self.instance = instance
        self.point = point
        self.phase1_objective = phase1_objective
        self.phase1_trace = phase1_trace
        self.phase2_trace = phase2_trace
        self.graver_size = graver_size
        self.complexity = complexity

    @property
    def feasible(self):
        return self.point is not None

    @property
    def objective(self):
        return None if self.point is None else self.instance.objective(self.point)

    def to_json(self):
        return {
            "spec": self.spec.to_json(),
            "instance": self.instance.to_json(),
            "feasible": self.feasible,
            "point": None if self.point is None else [format_rational(x) for x in self.point],
            "objective": None if self.point is None else format_rational(self.objective),
            "phase1_objective": format_rational(self.phase1_objective),
            "graver_size": self.graver_size,
            "graver_complexity": self.complexity,
            "phase1_trace": self.phase1_trace.to_json(),
            "phase2_trace": None if self.phase2_trace is None else self.phase2_trace.to_json(),
        }


def solve_nfold(spec, b, c, u, domain=INTEGER, cap=None):
    """Phase I then phase II, both by steepest descent.

    Test sets are G(·) for integer programs and C(·) for real ones. A
    positive phase-I optimum means the program is infeasible.
    """
    cap = get_graverlab_setting('nfold_cap', kwargs={'nfold_cap': cap})
    if spec.N > cap:
        raise GraverLabResourceError(cap_name='NFOLD_CAP', cap=cap, observed=spec.N)
    test_set = graver_basis if domain == INTEGER else circuits

    phase1, x0 = build_phase1(spec, b, u, domain)
    x1, trace1 = augment_to_optimality(phase1, x0, "steepest", T=test_set(phase1.A))
    phase1_objective = phase1.objective(x1)

    matrix = build_nfold(spec)
    instance = Instance(matrix, b, c, u, domain=domain, name="nfold-N%d" % spec.N)
    graver_size = len(graver_basis(matrix))
    complexity = graver_complexity(spec.A, spec.B)
    logger.debug("N-fold phase I: %d steps, optimum %s", len(trace1.rule_steps), phase1_objective)

    if phase1_objective > 0:
        return NFoldResult(spec, instance, None, phase1_objective, trace1, None,
                           graver_size, complexity)
    start = original_components(spec, x1)
    x, trace2 = augment_to_optimality(instance.replace(x0=start), start, "steepest",
                                      T=test_set(matrix))
    return NFoldResult(spec, instance.replace(x0=start), x, phase1_objective, trace1, trace2,
                       graver_size, complexity)


def transportation_nfold(supplies, demands, costs=None):
    """The transportation problem with a fixed number of supply rows as an N-fold program.

    Brick j holds column j (x_1j .. x_rj): A = (1 ... 1) enforces demand
    d_j, B = I_r sums the bricks into the supplies. Returns (spec, b, c, u).
    """
    supplies, demands = balanced_transportation(supplies, demands)
    r, s = len(supplies), len(demands)
    spec = NFoldSpec([[1] * r], IntegerMatrix.identity(r), s)
    row_major = cost_vector(costs, r, s)
    c = [row_major[i * s + j] for j in range(s) for i in range(r)]
    u = [min(supplies[i], demands[j]) for j in range(s) for i in range(r)]
    return spec, supplies + demands, c, u


def nfold_growth(A, B, max_N):
    """|G([A,B]^(N))| for N = 1..max_N, with the bound C(N, g)·|G([A,B]^(g))| where N >= g.

    Returns (g, rows) with rows of (N, size, bound-or-None).
    """
    g = graver_complexity(A, B)
    sizes = [len(graver_basis(build_nfold(NFoldSpec(A, B, N)))) for N in range(1, max_N + 1)]
    rows = []
    for N, size in enumerate(sizes, start=1):
        bound = comb(N, g) * sizes[g - 1] if 1 <= g <= N else None
        rows.append((N, size, bound))
    return g, rows
