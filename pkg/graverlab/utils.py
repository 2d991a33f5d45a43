from fractions import Fraction
from functools import reduce
from math import gcd

from django.conf import settings

from .exceptions import GraverLabConfigurationError, GraverLabInputError


UNSET = type('UNSET', (object,), {})  # Used as non-None default value

SETTING_DEFAULTS = {
    'GRAVER_CAP': 20000,
    'SUBDETERMINANT_CAP': 8,
    'ENUMERATION_CAP': 500000,
    'VERTEX_CAP': 100000,
    'NFOLD_CAP': 4,
    'STEP_CAP': 100000,
    'BOX_BOUND': 3,
}


def get_graverlab_setting(name, default=UNSET, kwargs=None):
    """Returns a graverlab option from kwargs or Django settings.

    Returns first of:
    - kwargs[name] -- e.g., kwargs['graver_cap'] -- and name key will be popped from kwargs
    - settings.GRAVERLAB['<NAME>'] -- e.g., settings.GRAVERLAB['GRAVER_CAP']
    - settings.GRAVERLAB_<NAME> -- e.g., settings.GRAVERLAB_GRAVER_CAP
    - default if provided; else the built-in default for <NAME> if there is one;
      else raises GraverLabConfigurationError

    Django settings are skipped when they haven't been configured,
    so the library works outside a Django project.
    """

    try:
        value = kwargs.pop(name)
        if value is not None:
            return value
    except (AttributeError, KeyError):
        pass

    setting = name.upper()
    graverlab_setting = "GRAVERLAB_%s" % setting
    if default is UNSET:
        default = SETTING_DEFAULTS.get(setting, UNSET)

    if settings.configured:
        try:
            return settings.GRAVERLAB[setting]
        except (AttributeError, KeyError):
            try:
                return getattr(settings, graverlab_setting)
            except AttributeError:
                pass
    if default is UNSET:
        raise GraverLabConfigurationError(
            "You must set %s or GRAVERLAB = {'%s': ...} in your Django settings"
            % (graverlab_setting, setting)) from None
    return default


# Exact rationals

def as_integer(value, what="value"):
    """Return value as an exact int, rejecting floats, bools and non-integral rationals.

    >>> as_integer(Fraction(6, 3))
    2
    >>> as_integer("-4")
    -4
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise GraverLabInputError("%s must be an exact integer, not %r" % (what, value))
    if isinstance(value, str):
        value = as_rational(value, what)
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise GraverLabInputError("%s must be integral, not %s" % (what, format_rational(value)))
        return value.numerator
    if isinstance(value, int):
        return int(value)
    raise GraverLabInputError("%s must be an exact integer, not %r" % (what, value))


def as_rational(value, what="value"):
    """Return value as a Fraction; accepts ints, Fractions and "p/q" strings (never floats).

    >>> as_rational("3/6")
    Fraction(1, 2)
    >>> as_rational(7)
    Fraction(7, 1)
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise GraverLabInputError("%s must be exact (int or \"p/q\"), not %r" % (what, value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as err:
            raise GraverLabInputError("%s is not an exact rational: %r" % (what, value)) from err
    raise GraverLabInputError("%s must be exact (int or \"p/q\"), not %r" % (what, value))


def format_rational(value):
    """Exact string form of a rational: "p" for integers, else "p/q".

    >>> format_rational(Fraction(3, 2))
    '3/2'
    >>> format_rational(Fraction(-4, 2))
    '-2'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def normalize_point(x):
    """Return x as a tuple with integral entries as ints and the rest as Fractions"""
    result = []
    for xi in x:
        xi = Fraction(xi)
        result.append(xi.numerator if xi.denominator == 1 else xi)
    return tuple(result)


def ceil_log2(value):
    """Smallest k >= 0 with 2**k >= value, computed exactly for positive rationals.

    >>> ceil_log2(1), ceil_log2(2), ceil_log2(5), ceil_log2(Fraction(1, 3))
    (0, 1, 3, 0)
    """
    value = Fraction(value)
    if value <= 1:
        return 0
    # ceil of a rational, then bit tricks on the integer
    k = (-(-value.numerator // value.denominator) - 1).bit_length()
    return k


# Integer vectors

def dot(a, b):
    return sum(ai * bi for ai, bi in zip(a, b))


def norm1(v):
    return sum(abs(vi) for vi in v)


def norm_inf(v):
    return max((abs(vi) for vi in v), default=0)


def support(v):
    return frozenset(i for i, vi in enumerate(v) if vi != 0)


def add(a, b, scale=1):
    """a + scale*b, componentwise"""
    return tuple(ai + scale * bi for ai, bi in zip(a, b))


def negate(v):
    return tuple(-vi for vi in v)


def is_zero(v):
    return all(vi == 0 for vi in v)


def primitive(v):
    """Divide an integer vector by the gcd of its entries.

    >>> primitive((2, -4, 0))
    (1, -2, 0)
    """
    g = reduce(gcd, (abs(vi) for vi in v), 0)
    if g <= 1:
        return tuple(v)
    return tuple(vi // g for vi in v)


def canonical(v):
    """The representative of ±v whose first nonzero entry is positive.

    >>> canonical((0, -1, 2))
    (0, 1, -2)
    """
    for vi in v:
        if vi != 0:
            return tuple(v) if vi > 0 else negate(v)
    return tuple(v)
