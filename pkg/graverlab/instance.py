from fractions import Fraction

from .exceptions import GraverLabInputError
from .linalg import IntegerMatrix, rank
from .utils import as_integer, as_rational, dot, format_rational, normalize_point

INTEGER = 'integer'
REAL = 'real'
DOMAINS = (INTEGER, REAL)


class Instance:
    """The box-constrained standard-form program min{c·x : Ax = b, 0 <= x <= u, x ∈ X}.

    X is Z^n for domain 'integer' and R^n for domain 'real'. All data are
    exact integers and the box is always finite. An optional start point
    x0 travels with the instance (random instances and N-fold phase-I
    instances come with one).
    """

    def __init__(self, A, b, c, u, domain=INTEGER, name="instance", x0=None):
        self.A = A if isinstance(A, IntegerMatrix) else IntegerMatrix(A)
        if domain not in DOMAINS:
            raise GraverLabInputError("domain must be 'integer' or 'real', not %r" % (domain,))
        self.domain = domain
        self.name = name
        self.b = tuple(as_integer(x, "b entry") for x in b)
        self.c = tuple(as_integer(x, "c entry") for x in c)
        if u is None or any(x is None for x in u):
            raise GraverLabInputError("Upper bounds u must be finite", instance=self)
        self.u = tuple(as_integer(x, "u entry") for x in u)
        if len(self.b) != self.d:
            raise GraverLabInputError("b has %d entries but A has %d rows" % (len(self.b), self.d),
                                      instance=self)
        if len(self.c) != self.n or len(self.u) != self.n:
            raise GraverLabInputError("c and u need %d entries (got %d and %d)"
                                      % (self.n, len(self.c), len(self.u)), instance=self)
        if any(x < 0 for x in self.u):
            raise GraverLabInputError("Upper bounds u must be nonnegative", instance=self)
        self.x0 = None if x0 is None else normalize_point(as_rational(x, "x0 entry") for x in x0)

    @property
    def d(self):
        return self.A.d

    @property
    def n(self):
        return self.A.n

    @property
    def is_integer(self):
        return self.domain == INTEGER

    def objective(self, x):
        return dot(self.c, x)

    def with_domain(self, domain):
        return self.replace(domain=domain)

    def replace(self, **changes):
        fields = dict(A=self.A, b=self.b, c=self.c, u=self.u, domain=self.domain,
                      name=self.name, x0=self.x0)
        fields.update(changes)
        return Instance(**fields)

    def is_feasible(self, x):
        if len(x) != self.n:
            return False
        if any(xi < 0 or xi > ui for xi, ui in zip(x, self.u)):
            return False
        if self.is_integer and any(Fraction(xi).denominator != 1 for xi in x):
            return False
        return self.A.times(x) == self.b

    def free_indices(self, x):
        return [i for i, (xi, ui) in enumerate(zip(x, self.u)) if 0 < xi < ui]

    def is_vertex(self, x):
        """Feasible, and the columns of A for components strictly inside the box are independent"""
        if not self.is_feasible(x):
            return False
        free = self.free_indices(x)
        return not free or rank(self.A.submatrix(column_indices=free)) == len(free)

    def check_feasible(self, x, what="start point"):
        if len(x) != self.n:
            raise GraverLabInputError("%s has %d entries, expected %d" % (what, len(x), self.n),
                                      instance=self)
        if not self.is_feasible(x):
            raise GraverLabInputError("%s %s is not feasible" % (
                what, "(%s)" % ", ".join(format_rational(xi) for xi in x)), instance=self)

    def to_json(self):
        data = {
            "name": self.name,
            "d": self.d,
            "n": self.n,
            "A": self.A.to_json(),
            "b": list(self.b),
            "c": list(self.c),
            "u": list(self.u),
            "domain": self.domain,
        }
        if self.x0 is not None:
            data["x0"] = [format_rational(xi) for xi in self.x0]
        return data

    @classmethod
    def from_json(cls, data):
        try:
            instance = cls(data["A"], data["b"], data["c"], data["u"],
                           domain=data.get("domain", INTEGER), name=data.get("name", "instance"),
                           x0=data.get("x0"))
        except (KeyError, TypeError) as err:
            raise GraverLabInputError("Malformed instance document: %s" % err) from err
        for key in ("d", "n"):
            if key in data and data[key] != getattr(instance, key):
                raise GraverLabInputError("Instance declares %s=%r but A is %d×%d"
                                          % (key, data[key], instance.d, instance.n))
        return instance

    def __repr__(self):
        return "<Instance %r %d×%d %s>" % (self.name, self.d, self.n, self.domain)


def is_feasible(x, inst):
    """True iff Ax = b, 0 <= x <= u, and x is integral for integer instances"""
    return inst.is_feasible(x)


def is_vertex(x, inst):
    return inst.is_vertex(x)
