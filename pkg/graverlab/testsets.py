"""Graver bases, circuits and conformal (sign-compatible) decompositions"""

import heapq
import logging
from fractions import Fraction
from itertools import combinations

from .exceptions import GraverLabError, GraverLabInputError, GraverLabResourceError
from .linalg import IntegerMatrix, kernel_lattice_basis, rank
from .utils import add, canonical, get_graverlab_setting, is_zero, negate, norm1, norm_inf, support

logger = logging.getLogger(__name__)

GRAVER = 'graver'
CIRCUITS = 'circuits'


def conforms(u, v):
    """u ⊑ v: u and v lie in the same orthant and |u_i| <= |v_i| everywhere.

    >>> conforms((1, 0, -1), (2, 0, -1))
    True
    >>> conforms((1, 0), (-1, 0))
    False
    """
    if len(u) != len(v):
        raise GraverLabInputError("Can't compare vectors of lengths %d and %d" % (len(u), len(v)))
    return all(ui * vi >= 0 and abs(ui) <= abs(vi) for ui, vi in zip(u, v))


def sign_compatible(u, v):
    return all(ui * vi >= 0 for ui, vi in zip(u, v))


def _masks(v):
    pos = neg = 0
    for i, vi in enumerate(v):
        if vi > 0:
            pos |= 1 << i
        elif vi < 0:
            neg |= 1 << i
    return pos, neg


class TestSet:
    """A finite symmetric set of primitive kernel directions of a matrix.

    kind is 'graver' for G(A) or 'circuits' for C(A). Elements are kept
    as a lexicographically sorted tuple of integer tuples; the negation
    of every element is always present.
    """

    def __init__(self, matrix, kind, elements):
        if kind not in (GRAVER, CIRCUITS):
            raise GraverLabInputError("Unknown test set kind %r" % kind)
        self.matrix = matrix
        self.kind = kind
        closed = set()
        for g in elements:
            g = tuple(g)
            if len(g) != matrix.n:
                raise GraverLabInputError("Direction %r has the wrong length for a %d×%d matrix"
                                          % (g, matrix.d, matrix.n), matrix=matrix)
            closed.add(g)
            closed.add(negate(g))
        self.elements = tuple(sorted(closed))
        self._lookup = frozenset(closed)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, z):
        return tuple(z) in self._lookup

    def __eq__(self, other):
        return isinstance(other, TestSet) and self.matrix == other.matrix \
            and self._lookup == other._lookup

    def __repr__(self):
        return "<TestSet %s of %d×%d matrix: %d elements>" % (
            self.kind, self.matrix.d, self.matrix.n, len(self))

    def representatives(self):
        """One element per ± pair (first nonzero entry positive), sorted"""
        return sorted({canonical(g) for g in self.elements})

    @property
    def max_norm_inf(self):
        return max((norm_inf(g) for g in self.elements), default=0)

    @property
    def max_norm_1(self):
        return max((norm1(g) for g in self.elements), default=0)

    def to_json(self):
        return {
            "matrix": self.matrix.to_json(),
            "kind": self.kind,
            "elements": [list(g) for g in self.elements],
        }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(IntegerMatrix(data["matrix"]), data["kind"], data["elements"])
        except (KeyError, TypeError) as err:
            raise GraverLabInputError("Malformed test set document") from err


def _normal_form(s, pool):
    """Subtract pool elements g ⊑ s from s until none applies.

    pool is a list of (g, pos_mask, neg_mask); the masks let most
    candidates be rejected without touching their entries.
    """
    while True:
        pos, neg = _masks(s)
        for g, g_pos, g_neg in pool:
            if g_pos & ~pos or g_neg & ~neg:
                continue
            if all(abs(gi) <= abs(si) for gi, si in zip(g, s)):
                s = add(s, g, -1)
                break
        else:
            return s
        if is_zero(s):
            return s


def graver_basis(A, cap=None):
    """G(A), by normal-form completion of a kernel lattice basis.

    Start from a lattice basis of ker(A) ∩ Z^n and its negations, reduce
    every pairwise sum against the current set, add what survives, and
    repeat until no new element appears. The completed set contains
    G(A); its ⊑-minimal elements are exactly G(A).
    """
    cap = get_graverlab_setting('graver_cap', kwargs={'graver_cap': cap})
    seed = kernel_lattice_basis(A)
    pool = []
    seen = set()
    pending = []

    def enqueue(f):
        f_pos, f_neg = _masks(f)
        for g, _, _ in pool:
            if sign_compatible(f, g):
                continue  # f+g reduces to zero through f then g
            s = add(f, g)
            if not is_zero(s):
                heapq.heappush(pending, (norm1(s), s))
        pool.append((f, f_pos, f_neg))
        seen.add(f)
        if len(pool) > cap:
            raise GraverLabResourceError(cap_name='GRAVER_CAP', cap=cap, observed=len(pool), matrix=A)

    for v in seed:
        for f in (v, negate(v)):
            if f not in seen:
                enqueue(f)

    rounds = 0
    while pending:
        _, s = heapq.heappop(pending)
        f = _normal_form(s, pool)
        if not is_zero(f) and f not in seen:
            enqueue(f)
        rounds += 1
    logger.debug("completion of %d×%d matrix: %d reductions, %d elements before minimization",
                 A.d, A.n, rounds, len(pool))

    elements = [g for g, _, _ in pool]
    minimal = [v for v in elements
               if not any(w != v and conforms(w, v) for w in elements)]
    return TestSet(A, GRAVER, minimal)


def kernel_points(A, M, cap=None):
    """All nonzero z ∈ ker(A) ∩ Z^n with ||z||_inf <= M, in lexicographic order.

    Depth-first over the box, pruning prefixes whose partial row sums can't
    return to zero.
    """
    cap = get_graverlab_setting('enumeration_cap', kwargs={'enumeration_cap': cap})
    if (2 * M + 1) ** A.n > cap:
        raise GraverLabResourceError(cap_name='ENUMERATION_CAP', cap=cap,
                                     observed=(2 * M + 1) ** A.n, matrix=A)
    # remaining[k][i]: largest |row i contribution| from coordinates k..n-1
    remaining = [[M * sum(abs(x) for x in row[k:]) for row in A.rows] for k in range(A.n + 1)]
    found = []

    def extend(prefix, partial):
        k = len(prefix)
        if any(abs(p) > r for p, r in zip(partial, remaining[k])):
            return
        if k == A.n:
            if any(prefix):
                found.append(tuple(prefix))
            return
        column = A.columns[k]
        for value in range(-M, M + 1):
            prefix.append(value)
            extend(prefix, [p + value * a for p, a in zip(partial, column)])
            prefix.pop()

    extend([], [0] * A.d)
    return found


def graver_oracle(A, M, cap=None):
    """The ⊑-minimal nonzero kernel vectors with ||z||_inf <= M, by exhaustive search"""
    found = kernel_points(A, M, cap)
    found.sort(key=lambda v: (norm1(v), v))
    minimal = []
    for v in found:
        if not any(conforms(w, v) for w in minimal):
            minimal.append(v)
    return TestSet(A, GRAVER, minimal)


def circuits(A):
    """C(A): primitive kernel vectors of support-minimal support.

    Each column subset S of size <= rank(A)+1 whose submatrix has a
    one-dimensional kernel spanned by a vector with full support on S
    contributes that vector (and its negation).
    """
    r = rank(A)
    found = set()
    for size in range(1, min(r + 1, A.n) + 1):
        for columns in combinations(range(A.n), size):
            basis = kernel_lattice_basis(A.submatrix(column_indices=columns), reduce=False)
            if len(basis) != 1 or any(x == 0 for x in basis[0]):
                continue
            z = [0] * A.n
            for j, x in zip(columns, basis[0]):
                z[j] = x
            found.add(canonical(z))
    logger.debug("circuits of %d×%d matrix: %d pairs", A.d, A.n, len(found))
    return TestSet(A, CIRCUITS, found)


def _check_kernel_vector(z, T):
    if len(z) != T.matrix.n:
        raise GraverLabInputError("Vector %r has the wrong length for a %d×%d matrix"
                                  % (tuple(z), T.matrix.d, T.matrix.n), matrix=T.matrix)
    if is_zero(z):
        raise GraverLabInputError("Can't decompose the zero vector", matrix=T.matrix)
    if not T.matrix.in_kernel(z):
        raise GraverLabInputError("%r is not in ker(A)" % (tuple(z),), matrix=T.matrix)


def conformal_multiple(g, r):
    """Largest integer α with α·g ⊑ r (0 if g does not conform to r)"""
    if not conforms(g, r):
        return 0
    return min(abs(ri) // abs(gi) for gi, ri in zip(g, r) if gi)


def decompose_integer_conformal(z, G):
    """Greedy conformal decomposition z = Σ α_i g_i with g_i ∈ G(A), α_i g_i ⊑ z"""
    z = tuple(z)
    _check_kernel_vector(z, G)
    terms = []
    residual = z
    while not is_zero(residual):
        for g in G.elements:
            alpha = conformal_multiple(g, residual)
            if alpha:
                break
        else:
            raise GraverLabError("No element of the test set conforms to %r; "
                                 "is it really a Graver basis?" % (residual,), matrix=G.matrix)
        terms.append((alpha, g))
        residual = add(residual, g, -alpha)
    return terms


def decompose_real_conformal(z, C):
    """Conformal circuit decomposition z = Σ α_i g_i with rational α_i > 0.

    Every term zeroes at least one more residual component, so there are
    at most |supp(z)| terms.
    """
    z = tuple(Fraction(x) for x in z)
    _check_kernel_vector(z, C)
    terms = []
    residual = z
    while not is_zero(residual):
        live = support(residual)
        for g in C.elements:
            if support(g) <= live and sign_compatible(g, residual):
                break
        else:
            raise GraverLabError("No circuit conforms to %r" % (residual,), matrix=C.matrix)
        alpha = min(residual[i] / g[i] for i in support(g))
        terms.append((alpha, g))
        residual = tuple(ri - alpha * gi for ri, gi in zip(residual, g))
    return terms


def minimal_decomposition_length(z, G):
    """Fewest distinct Graver elements in any conformal integer decomposition of z.

    Exhaustive (iterative deepening), so only for tiny instances.
    """
    z = tuple(z)
    _check_kernel_vector(z, G)
    candidates = [g for g in G.elements if conforms(g, z)]

    def decomposes(residual, start, terms_left):
        if is_zero(residual):
            return True
        if terms_left == 0:
            return False
        for index in range(start, len(candidates)):
            g = candidates[index]
            for alpha in range(conformal_multiple(g, residual), 0, -1):
                if decomposes(add(residual, g, -alpha), index + 1, terms_left - 1):
                    return True
        return False

    for k in range(1, len(candidates) + 1):
        if decomposes(z, 0, k):
            return k
    raise GraverLabError("%r has no conformal decomposition over the test set" % (z,),
                         matrix=G.matrix)


def graver_complexity(A, B, cap=None):
    """g(A, B): the largest 1-norm in the Graver basis of the matrix with columns B·g, g ∈ G(A).

    Duplicate columns are kept. Returns 0 when G(A) is empty (then every
    brick is fixed and no N-fold Graver element exists).
    """
    if A.n != B.n:
        raise GraverLabInputError("A has %d columns but B has %d" % (A.n, B.n))
    G = graver_basis(A, cap)
    if not len(G):
        return 0
    BG = IntegerMatrix.from_columns([B.times(g) for g in G.elements], d=B.d)
    return graver_basis(BG, cap).max_norm_1


def distinct_steepness_values(T, c):
    """The distinct positive values (-c·z)/||z||_1 over T"""
    values = set()
    for z in T.elements:
        value = Fraction(-sum(ci * zi for ci, zi in zip(c, z)), norm1(z))
        if value > 0:
            values.add(value)
    return values

