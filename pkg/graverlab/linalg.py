"""Exact integer matrices, kernel lattices and subdeterminant statistics.

Nothing in here touches floating point: entries are Python ints,
rational work goes through fractions.Fraction or sympy's exact domains.
"""

import logging
from fractions import Fraction
from itertools import combinations
from math import lcm

from sympy import Matrix, Rational, ZZ
from sympy.polys.matrices import DomainMatrix

from .exceptions import GraverLabInputError, GraverLabResourceError
from .utils import as_integer, dot, get_graverlab_setting, is_zero

logger = logging.getLogger(__name__)


class IntegerMatrix:
    """An immutable d×n matrix of exact integers (d >= 1, n >= 1)"""

    def __init__(self, rows):
        if isinstance(rows, IntegerMatrix):
            rows = rows.rows
        try:
            rows = [tuple(as_integer(x, "matrix entry") for x in row) for row in rows]
        except TypeError as err:
            raise GraverLabInputError("A matrix must be a list of rows of integers") from err
        if not rows or not rows[0]:
            raise GraverLabInputError("A matrix needs at least one row and one column")
        n = len(rows[0])
        if any(len(row) != n for row in rows):
            raise GraverLabInputError("Matrix rows have different lengths: %r"
                                      % sorted({len(row) for row in rows}))
        self.rows = tuple(rows)
        self._columns = None

    @classmethod
    def from_columns(cls, columns, d=None):
        columns = [tuple(col) for col in columns]
        if not columns:
            raise GraverLabInputError("A matrix needs at least one column")
        d = len(columns[0]) if d is None else d
        return cls([[col[i] for col in columns] for i in range(d)])

    @classmethod
    def identity(cls, k):
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    @property
    def d(self):
        return len(self.rows)

    @property
    def n(self):
        return len(self.rows[0])

    @property
    def shape(self):
        return self.d, self.n

    @property
    def columns(self):
        if self._columns is None:
            self._columns = tuple(zip(*self.rows))
        return self._columns

    def times(self, v):
        """Exact product A·v; v may hold ints or Fractions"""
        if len(v) != self.n:
            raise GraverLabInputError("Vector of length %d can't multiply a %d×%d matrix"
                                      % (len(v), self.d, self.n), matrix=self)
        return tuple(dot(row, v) for row in self.rows)

    def in_kernel(self, v):
        return is_zero(self.times(v))

    def submatrix(self, row_indices=None, column_indices=None):
        row_indices = range(self.d) if row_indices is None else row_indices
        column_indices = range(self.n) if column_indices is None else column_indices
        return IntegerMatrix([[self.rows[i][j] for j in column_indices] for i in row_indices])

    def hstack(self, *others):
        for other in others:
            if other.d != self.d:
                raise GraverLabInputError("Can't place a %d-row block beside a %d-row block"
                                          % (other.d, self.d))
        return IntegerMatrix([sum((other.rows[i] for other in others), self.rows[i])
                              for i in range(self.d)])

    def is_zero(self):
        return all(x == 0 for row in self.rows for x in row)

    def to_sympy(self):
        return Matrix(self.d, self.n, lambda i, j: self.rows[i][j])

    def to_json(self):
        return [list(row) for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "IntegerMatrix(%r)" % (self.to_json(),)


def rank(A):
    """Rank of A over the rationals"""
    return A.to_sympy().rank()


def column_echelon(A):
    """Integer column echelon form of A, tracking the unimodular transform.

    Returns (pivots, transform) where transform is a list of n integer
    columns u_j with A·[u_0 ... u_{n-1}] in column echelon form and
    exactly `pivots` nonzero columns (so pivots == rank(A)).
    """
    work = [list(col) for col in A.columns]
    transform = [[1 if i == j else 0 for i in range(A.n)] for j in range(A.n)]
    pivots = 0

    def combine(target, source, q):
        # column target -= q * column source, on both work and transform
        work[target] = [t - q * s for t, s in zip(work[target], work[source])]
        transform[target] = [t - q * s for t, s in zip(transform[target], transform[source])]

    for i in range(A.d):
        while True:
            live = [j for j in range(pivots, A.n) if work[j][i] != 0]
            if len(live) <= 1:
                break
            smallest = min(live, key=lambda j: (abs(work[j][i]), j))
            work[pivots], work[smallest] = work[smallest], work[pivots]
            transform[pivots], transform[smallest] = transform[smallest], transform[pivots]
            for j in range(pivots + 1, A.n):
                if work[j][i] != 0:
                    combine(j, pivots, work[j][i] // work[pivots][i])
        if live:
            j = live[0]
            work[pivots], work[j] = work[j], work[pivots]
            transform[pivots], transform[j] = transform[j], transform[pivots]
            pivots += 1
        if pivots == A.n:
            break
    return pivots, transform


def kernel_lattice_basis(A, reduce=True):
    """A basis of the lattice ker(A) ∩ Z^n (n - rank(A) integer vectors).

    The echelon transform is unimodular, so its columns beyond the pivots
    generate the whole kernel lattice. With reduce (the default) the basis
    is LLL-reduced, which keeps the Graver completion seed short.
    """
    pivots, transform = column_echelon(A)
    basis = [tuple(col) for col in transform[pivots:]]
    if reduce and basis:
        reduced = DomainMatrix([[ZZ(x) for x in v] for v in basis], (len(basis), A.n), ZZ).lll()
        basis = [tuple(int(x) for x in row) for row in reduced.to_Matrix().tolist()]
    logger.debug("kernel lattice basis of %d×%d matrix: %r", A.d, A.n, basis)
    return basis


def solve_exact(A, rhs):
    """The unique rational solution of A·x = rhs, or None if there isn't exactly one"""
    system = A.to_sympy()
    target = Matrix([Rational(Fraction(r).numerator, Fraction(r).denominator) for r in rhs])
    try:
        solution, params = system.gauss_jordan_solve(target)
    except ValueError:  # inconsistent
        return None
    if params.shape[0]:
        return None
    return tuple(Fraction(int(x.p), int(x.q)) for x in solution)


def square_submatrices(A, cap=None):
    """Yield (rows, cols, square) for every square submatrix of A, smallest first.

    square is a sympy DomainMatrix over ZZ, so its determinant stays exact.
    """
    cap = get_graverlab_setting('subdeterminant_cap', kwargs={'subdeterminant_cap': cap})
    size = min(A.d, A.n)
    if size > cap:
        raise GraverLabResourceError(cap_name='SUBDETERMINANT_CAP', cap=cap, observed=size,
                                     matrix=A)
    for k in range(1, size + 1):
        for row_indices in combinations(range(A.d), k):
            for column_indices in combinations(range(A.n), k):
                entries = [[ZZ(A.rows[i][j]) for j in column_indices] for i in row_indices]
                yield row_indices, column_indices, DomainMatrix(entries, (k, k), ZZ)


def subdeterminant_lcm(A, cap=None):
    """δ: lcm of the absolute values of all nonzero subdeterminants of A"""
    if A.is_zero():
        raise GraverLabInputError("δ is undefined for a zero matrix", matrix=A)
    delta = 1
    for _, _, square in square_submatrices(A, cap):
        det = int(square.det())
        if det:
            delta = lcm(delta, abs(det))
    return delta


def is_totally_unimodular(A, cap=None):
    """True iff every square submatrix of A has determinant in {-1, 0, 1}"""
    if any(abs(x) > 1 for row in A.rows for x in row):
        return False
    for _, _, square in square_submatrices(A, cap):
        if square.shape[0] > 1 and abs(int(square.det())) > 1:
            return False
    return True
