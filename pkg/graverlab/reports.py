"""Report writers: deterministic JSON and flat CSV for test sets, traces and bound tables"""

import csv
import io
import json
from fractions import Fraction

from .exceptions import GraverLabSerializationError
from .testsets import TestSet
from .trace import AugmentationTrace
from .utils import format_rational
from .verify import VerificationReport

JSON = "json"
CSV = "csv"
FORMATS = (JSON, CSV)

TRACE_FIELDS = ["step", "z", "alpha", "objective", "steepness", "cleanup"]
CHECK_FIELDS = ["name", "status", "observed", "bound", "detail"]


def _json_default(o):
    """json.dump default function for the exact types reports carry"""
    if isinstance(o, Fraction):
        return format_rational(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    if hasattr(o, "to_json"):
        return o.to_json()
    raise TypeError("Object of type '%s' is not JSON serializable" % o.__class__.__name__)


def to_json(data):
    """Returns data as indented JSON, raising GraverLabSerializationError with context"""
    try:
        return json.dumps(data, indent=2, ensure_ascii=False, default=_json_default) + "\n"
    except (TypeError, ValueError) as err:
        raise GraverLabSerializationError(orig_err=err) from None


def _cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(item) for item in value)
    return str(value)


def _write_rows(header, rows):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(value) for value in row])
    return out.getvalue()


def trace_csv(trace):
    """One row per step, same fields as the trace JSON"""
    return _write_rows(TRACE_FIELDS, (
        (index, step.direction, step.alpha, step.objective, step.steepness, step.cleanup)
        for index, step in enumerate(trace.steps, start=1)))


def testset_csv(test_set):
    """One row per ± pair (its representative), one column per component"""
    n = test_set.matrix.n
    return _write_rows(["z%d" % (j + 1) for j in range(n)], test_set.representatives())


def report_csv(report):
    return _write_rows(CHECK_FIELDS, (
        (check.name, check.status, check.observed, check.bound, check.detail)
        for check in report.checks))


def points_csv(points, n):
    return _write_rows(["x%d" % (j + 1) for j in range(n)], points)


def to_csv(obj):
    """CSV for the objects that have a flat form"""
    if isinstance(obj, AugmentationTrace):
        return trace_csv(obj)
    if isinstance(obj, TestSet):
        return testset_csv(obj)
    if isinstance(obj, VerificationReport):
        return report_csv(obj)
    raise GraverLabSerializationError("No CSV form for %s; use --format json" % obj.__class__.__name__)


def render(obj, fmt=JSON, data=None):
    """Render obj in fmt. data overrides the JSON document (e.g. a solve summary around a trace)"""
    if fmt == JSON:
        return to_json(obj.to_json() if data is None else data)
    if fmt == CSV:
        return to_csv(obj)
    raise GraverLabSerializationError("Unknown report format %r" % (fmt,))
