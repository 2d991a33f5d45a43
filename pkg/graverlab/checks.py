from django.core import checks

from .utils import SETTING_DEFAULTS, get_graverlab_setting


def check_cap_settings(app_configs, **kwargs):
    errors = []

    # graverlab.E001: caps and bounds must be positive integers
    for name in SETTING_DEFAULTS:
        value = get_graverlab_setting(name)
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            errors.append(checks.Error(
                "The GRAVERLAB setting '%s' must be a positive integer (got %r)." % (name, value),
                hint="Fix GRAVERLAB['%s'] or GRAVERLAB_%s in your settings.py." % (name, name),
                id="graverlab.E001",
            ))

    # graverlab.W001: subdeterminant enumeration is exponential in the cap
    cap = get_graverlab_setting("subdeterminant_cap")
    if isinstance(cap, int) and not isinstance(cap, bool) and cap > 10:
        errors.append(checks.Warning(
            "GRAVERLAB['SUBDETERMINANT_CAP'] is %d; subdeterminant and total-unimodularity "
            "checks enumerate every square submatrix and will be very slow above 10." % cap,
            hint="Keep SUBDETERMINANT_CAP at 10 or below for desk-scale runs.",
            id="graverlab.W001",
        ))

    return errors
