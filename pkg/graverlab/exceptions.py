from traceback import format_exception_only

from django.core.exceptions import ImproperlyConfigured


class GraverLabError(Exception):
    """Base class for exceptions raised by graverlab

    Overrides __str__ to describe the matrix, instance or rule involved,
    and any chained cause.
    """

    def __init__(self, *args, **kwargs):
        """
        Optional kwargs:
          matrix: the IntegerMatrix being processed
          instance: the Instance being solved
          rule: the augmentation rule name
        """
        self.matrix = kwargs.pop('matrix', None)
        self.instance = kwargs.pop('instance', None)
        self.rule = kwargs.pop('rule', None)
        super().__init__(*args, **kwargs)

    def __str__(self):
        parts = [
            " ".join([str(arg) for arg in self.args]),
            self.describe_context(),
            self.describe_cause(),
        ]
        return "\n".join(filter(None, parts))

    def describe_context(self):
        """Return a one-line description of the instance/rule involved, or None"""
        context = []
        if self.instance is not None:
            context.append("instance %r (%d×%d, %s)" % (
                self.instance.name, self.instance.d, self.instance.n, self.instance.domain))
        elif self.matrix is not None:
            context.append("matrix %d×%d" % (self.matrix.d, self.matrix.n))
        if self.rule is not None:
            context.append("rule %s" % self.rule)
        return ", ".join(context) or None

    def describe_cause(self):
        """Describe the original exception"""
        if self.__cause__ is None:
            return None
        return ''.join(format_exception_only(type(self.__cause__), self.__cause__)).strip()


class GraverLabInputError(GraverLabError, ValueError):
    """Exception for malformed or inconsistent input data

    Dimension mismatches, non-integer entries, vectors outside ker(A),
    zero directions, infeasible start points, non-vertex inputs.
    """


class GraverLabResourceError(GraverLabError):
    """Exception when a desk-scale enumeration or completion exceeds its cap"""

    def __init__(self, message=None, *args, cap_name=None, cap=None, observed=None, **kwargs):
        self.cap_name = cap_name
        self.cap = cap
        self.observed = observed
        if message is None:
            message = "%s exceeded: %s > %s" % (cap_name or "cap", observed, cap)
        if cap_name is not None:
            message += " (raise GRAVERLAB['%s'] or pass --cap)" % cap_name
        super().__init__(message, *args, **kwargs)


class GraverLabInfeasibleError(GraverLabError):
    """Exception when an operation needs a feasible point and none exists"""

    def __init__(self, message=None, *args, **kwargs):
        if message is None:
            message = "The feasible region {Ax=b, 0<=x<=u} is empty"
        super().__init__(message, *args, **kwargs)


class GraverLabVerificationFailure(GraverLabError):
    """Exception when one or more verified bounds do not hold"""

    def __init__(self, failed=None, *args, **kwargs):
        self.failed = list(failed or [])
        message = "Verification failed: %s" % ", ".join(self.failed) if self.failed \
            else "Verification failed"
        super().__init__(message, *args, **kwargs)


class GraverLabStopAugmentation(GraverLabError):
    """Pre-augment signal receiver can raise to stop a solve early"""


class GraverLabSerializationError(GraverLabError, TypeError):
    """Exception for values graverlab can't write to a report.

    Reports only hold ints, Fractions, strings, bools and lists/dicts of those.
    """
    # inherits from TypeError for compatibility with JSON serialization error

    def __init__(self, message=None, orig_err=None, *args, **kwargs):
        if message is None:
            message = "Don't know how to serialize this value. " \
                      "Reports hold exact integers and rationals only."
        if orig_err is not None:
            message += "\n%s" % str(orig_err)
        super().__init__(message, *args, **kwargs)


class GraverLabConfigurationError(ImproperlyConfigured):
    """Exception for graverlab configuration or installation issues"""
    # This deliberately doesn't inherit from GraverLabError,
    # so command error mapping never mistakes it for an input error


# Warnings

class GraverLabWarning(Warning):
    """Base warning for graverlab"""


class GraverLabNonUniqueTargetWarning(GraverLabWarning):
    """Warns when a circuit-distance run stops at a vertex other than its target"""
