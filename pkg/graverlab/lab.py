"""Instance generators and brute-force reference oracles.

Generators are seeded and deterministic. Oracles enumerate exhaustively,
so every one of them refuses inputs beyond its configured cap.
"""

import logging
import random
from collections import namedtuple
from itertools import combinations, product
from math import prod

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from .exceptions import GraverLabInfeasibleError, GraverLabInputError, GraverLabResourceError
from .instance import INTEGER, REAL, Instance
from .linalg import IntegerMatrix, rank, solve_exact
from .utils import as_integer, get_graverlab_setting, normalize_point

logger = logging.getLogger(__name__)

Optimum = namedtuple('Optimum', ['point', 'objective'])  # both None when infeasible

SOURCE = "s"
SINK = "t"


# Max flow

def flow_arcs(graph):
    """The graph's arcs as (tail, head, capacity), in a deterministic order"""
    arcs = []
    for tail, head, capacity in graph.edges(data="capacity"):
        if capacity is None:
            raise GraverLabInputError("Arc %s->%s has no capacity" % (tail, head))
        capacity = as_integer(capacity, "capacity of arc %s->%s" % (tail, head))
        if capacity < 0:
            raise GraverLabInputError("Arc %s->%s has negative capacity" % (tail, head))
        arcs.append((tail, head, capacity))
    return sorted(arcs, key=lambda arc: (str(arc[0]), str(arc[1])))


def flow_nodes(graph, drop):
    return sorted((node for node in graph.nodes if node != drop), key=str)


def incidence_matrix(graph, drop=None, extra_arcs=()):
    """Node-arc incidence matrix (+1 at the tail, -1 at the head) without node drop's row"""
    drop = flow_nodes(graph, None)[-1] if drop is None else drop
    nodes = flow_nodes(graph, drop)
    arcs = [(tail, head) for tail, head, _ in flow_arcs(graph)] + list(extra_arcs)
    return IntegerMatrix([[1 if tail == node else -1 if head == node else 0
                           for tail, head in arcs] for node in nodes])


def maxflow_instance(graph, source=SOURCE, sink=SINK, name="maxflow"):
    """The max-flow problem as min{-x_aux : Ax = 0, 0 <= x <= u}.

    A is the incidence matrix of the graph plus an auxiliary sink->source
    arc, with the sink's row dropped. The auxiliary arc's capacity is the
    sum of all capacities. x = 0 is the start point.
    """
    for node in (source, sink):
        if node not in graph:
            raise GraverLabInputError("Node %r is not in the graph" % (node,))
    if source == sink:
        raise GraverLabInputError("Source and sink must differ")
    if not nx.is_weakly_connected(graph):
        raise GraverLabInputError("The flow network must be connected")
    arcs = flow_arcs(graph)
    A = incidence_matrix(graph, drop=sink, extra_arcs=[(sink, source)])
    n = len(arcs) + 1
    u = [capacity for _, _, capacity in arcs] + [sum(capacity for _, _, capacity in arcs)]
    c = [0] * (n - 1) + [-1]
    return Instance(A, [0] * A.d, c, u, domain=INTEGER, name=name, x0=[0] * n)


def flow_value(inst, x):
    """Flow carried on the auxiliary arc of a maxflow_instance point"""
    return -inst.objective(x)


def augmenting_path_max_flow(graph, source=SOURCE, sink=SINK):
    """Reference max-flow value from networkx's Edmonds-Karp"""
    return nx.maximum_flow_value(graph, source, sink, capacity="capacity", flow_func=edmonds_karp)


def network_from_json(data):
    """A DiGraph from {"source", "sink", "arcs": [{"tail", "head", "cap"}]}"""
    try:
        graph = nx.DiGraph()
        for arc in data["arcs"]:
            graph.add_edge(str(arc["tail"]), str(arc["head"]),
                           capacity=as_integer(arc["cap"], "arc capacity"))
        return graph, str(data.get("source", SOURCE)), str(data.get("sink", SINK))
    except (KeyError, TypeError) as err:
        raise GraverLabInputError("Malformed network document") from err


def network_to_json(graph, source=SOURCE, sink=SINK):
    return {
        "source": source,
        "sink": sink,
        "arcs": [{"tail": tail, "head": head, "cap": cap} for tail, head, cap in flow_arcs(graph)],
    }


def random_flow_network(seed, nodes=5, extra_arcs=2, cap_bound=3):
    """A weakly connected random network from "s" to "t".

    A random path s -> ... -> t through every node guarantees an s-t path;
    extra_arcs more arcs are added between random distinct node pairs.
    """
    if nodes < 2:
        raise GraverLabInputError("A flow network needs at least 2 nodes")
    rng = random.Random(seed)
    inner = ["v%d" % i for i in range(1, nodes - 1)]
    rng.shuffle(inner)
    path = [SOURCE] + inner + [SINK]
    graph = nx.DiGraph()
    for tail, head in zip(path, path[1:]):
        graph.add_edge(tail, head, capacity=rng.randint(1, cap_bound))
    pairs = [(a, b) for a in path for b in path if a != b and not graph.has_edge(a, b)]
    for tail, head in rng.sample(pairs, min(extra_arcs, len(pairs))):
        graph.add_edge(tail, head, capacity=rng.randint(1, cap_bound))
    return graph


# Transportation

def northwest_corner(supplies, demands):
    """Northwest-corner start for the transportation problem, row-major"""
    supplies, demands = list(supplies), list(demands)
    x = [[0] * len(demands) for _ in supplies]
    i = j = 0
    while i < len(supplies) and j < len(demands):
        amount = min(supplies[i], demands[j])
        x[i][j] = amount
        supplies[i] -= amount
        demands[j] -= amount
        if supplies[i] == 0 and i < len(supplies) - 1:
            i += 1
        elif demands[j] == 0:
            j += 1
        else:
            i += 1
    return [value for row in x for value in row]


def balanced_transportation(supplies, demands):
    supplies = [as_integer(s, "supply") for s in supplies]
    demands = [as_integer(d, "demand") for d in demands]
    if not supplies or not demands:
        raise GraverLabInputError("Need at least one supply and one demand")
    if any(s < 0 for s in supplies) or any(d < 0 for d in demands):
        raise GraverLabInputError("Supplies and demands must be nonnegative")
    if sum(supplies) != sum(demands):
        raise GraverLabInputError("Total supply %d differs from total demand %d"
                                  % (sum(supplies), sum(demands)))
    return supplies, demands


def cost_vector(costs, rows, cols):
    if costs is None:
        return [1] * (rows * cols)
    if costs and isinstance(costs[0], (list, tuple)):
        costs = [value for row in costs for value in row]
    if len(costs) != rows * cols:
        raise GraverLabInputError("Need %d costs, got %d" % (rows * cols, len(costs)))
    return [as_integer(value, "cost") for value in costs]


def transportation_instance(supplies, demands, costs=None, domain=INTEGER, name="transportation"):
    """The 2-way transportation problem on variables x_ij (row-major).

    One equation per supply and per demand, minus the last demand
    equation (implied by the balance). u_ij = min(s_i, d_j); costs default
    to all ones; the northwest-corner solution is the start point.
    """
    supplies, demands = balanced_transportation(supplies, demands)
    r, s = len(supplies), len(demands)
    rows = [[1 if k // s == i else 0 for k in range(r * s)] for i in range(r)]
    rows += [[1 if k % s == j else 0 for k in range(r * s)] for j in range(s - 1)]
    b = supplies + demands[:-1]
    u = [min(supplies[i], demands[j]) for i in range(r) for j in range(s)]
    return Instance(rows, b, cost_vector(costs, r, s), u, domain=domain, name=name,
                    x0=northwest_corner(supplies, demands))


# Oracles

def feasible_points(inst, cap=None):
    """Yield every integer point of {Ax = b, 0 <= x <= u}, in lexicographic order"""
    cap = get_graverlab_setting('enumeration_cap', kwargs={'enumeration_cap': cap})
    size = prod(ui + 1 for ui in inst.u)
    if size > cap:
        raise GraverLabResourceError(cap_name='ENUMERATION_CAP', cap=cap, observed=size,
                                     instance=inst)
    A, n = inst.A, inst.n
    # low[k][i], high[k][i]: range of row i's contribution from coordinates k..n-1
    low = [[sum(min(0, row[j] * inst.u[j]) for j in range(k, n)) for row in A.rows]
           for k in range(n + 1)]
    high = [[sum(max(0, row[j] * inst.u[j]) for j in range(k, n)) for row in A.rows]
            for k in range(n + 1)]

    def extend(prefix, residual):
        k = len(prefix)
        if any(not lo <= r <= hi for r, lo, hi in zip(residual, low[k], high[k])):
            return
        if k == n:
            yield tuple(prefix)
            return
        column = A.columns[k]
        for value in range(inst.u[k] + 1):
            prefix.append(value)
            yield from extend(prefix, [r - value * a for r, a in zip(residual, column)])
            prefix.pop()

    yield from extend([], list(inst.b))


def vertices(inst, cap=None):
    """All vertices of {Ax = b, 0 <= x <= u}, sorted.

    Every vertex is determined by a column basis F of A and a choice of
    bound for each component outside F.
    """
    cap = get_graverlab_setting('vertex_cap', kwargs={'vertex_cap': cap})
    A = inst.A
    r = rank(A)
    if r == 0:
        bases = [()]
        row_basis = []
    else:
        row_basis = list(A.to_sympy().T.rref()[1])
        bases = combinations(range(inst.n), r)
    found = set()
    tried = 0
    for F in bases:
        square = A.submatrix(row_basis, F) if F else None
        if square is not None and rank(square) < r:
            continue
        outside = [j for j in range(inst.n) if j not in F]
        for values in product(*[sorted({0, inst.u[j]}) for j in outside]):
            tried += 1
            if tried > cap:
                raise GraverLabResourceError(cap_name='VERTEX_CAP', cap=cap, observed=tried,
                                             instance=inst)
            x = [0] * inst.n
            for j, value in zip(outside, values):
                x[j] = value
            if F:
                rhs = [inst.b[i] - sum(A.rows[i][j] * x[j] for j in outside) for i in row_basis]
                for j, value in zip(F, solve_exact(square, rhs)):
                    x[j] = value
            if all(0 <= xj <= uj for xj, uj in zip(x, inst.u)) and A.times(x) == inst.b:
                found.add(normalize_point(x))
    logger.debug("vertex enumeration of %r: %d candidates, %d vertices", inst.name, tried, len(found))
    return sorted(found)


def brute_force_optimum(inst, cap=None):
    """Exact optimum by enumeration: lattice points for ILP, vertices for LP.

    Ties go to the lexicographically smallest point. Returns
    Optimum(None, None) when the feasible region is empty.
    """
    best = Optimum(None, None)
    points = feasible_points(inst, cap) if inst.is_integer else vertices(inst, cap)
    for x in points:
        value = inst.objective(x)
        if best.point is None or value < best.objective:
            best = Optimum(x, value)
    return best


def gamma(inst, cap=None):
    """γ: the largest |x_i| over feasible integer points (ILP) or vertices (LP)"""
    points = feasible_points(inst, cap) if inst.is_integer else vertices(inst, cap)
    largest = None
    for x in points:
        top = max((abs(xi) for xi in x), default=0)
        largest = top if largest is None else max(largest, top)
    if largest is None:
        raise GraverLabInfeasibleError(instance=inst)
    return largest


# Random instances

def random_instance(seed, d, n, entry_bound=2, u_bound=3, domain=INTEGER):
    """Seeded random instance whose random box point x̄ certifies feasibility (b = A·x̄)"""
    if d < 1 or n < 1:
        raise GraverLabInputError("Random instances need d >= 1 and n >= 1 (got %r×%r)" % (d, n))
    rng = random.Random(seed)
    A = IntegerMatrix([[rng.randint(-entry_bound, entry_bound) for _ in range(n)]
                       for _ in range(d)])
    c = [rng.randint(-entry_bound, entry_bound) for _ in range(n)]
    u = [rng.randint(1, u_bound) for _ in range(n)]
    x_bar = [rng.randint(0, ui) for ui in u]
    return Instance(A, A.times(x_bar), c, u, domain=domain, name="random-%s" % seed, x0=x_bar)


def random_tu_instance(seed, nodes=4, extra_arcs=1, u_bound=2, cost_bound=2, domain=REAL):
    """Seeded random instance on a network incidence matrix (so A is totally unimodular)"""
    graph = random_flow_network(seed, nodes=nodes, extra_arcs=extra_arcs, cap_bound=u_bound)
    rng = random.Random(seed)
    A = incidence_matrix(graph, drop=SINK)
    u = [cap for _, _, cap in flow_arcs(graph)]
    x_bar = [rng.randint(0, ui) for ui in u]
    c = [rng.randint(-cost_bound, cost_bound) for _ in u]
    return Instance(A, A.times(x_bar), c, u, domain=domain, name="tu-%s" % seed, x0=x_bar)
