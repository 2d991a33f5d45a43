#!/usr/bin/env python
"""Run the graverlab test suite through Django's test runner.

    python runtests.py [tests.test_x tests.test_y.SomeTestCase ...]

GRAVERLAB_ONLY_TEST and GRAVERLAB_SKIP_TESTS take comma-separated test
tags. Under CONTINUOUS_INTEGRATION the slow suites are skipped unless
GRAVERLAB_RUN_SLOW_TESTS is set.
"""

import os
import sys
import warnings

import django
from django.conf import settings
from django.test.utils import get_runner

TRUE_VALUES = {'y', 'yes', 't', 'true', 'on', '1'}
FALSE_VALUES = {'n', 'no', 'f', 'false', 'off', '0'}


def env_flag(var):
    value = os.getenv(var, '').strip().lower()
    if value and value not in TRUE_VALUES | FALSE_VALUES:
        raise ValueError("%s should be a yes/no value, got %r" % (var, value))
    return value in TRUE_VALUES


def env_tags(var):
    return [tag.strip() for tag in os.getenv(var, '').split(',') if tag.strip()]


def setup_and_run_tests(test_labels=None):
    """Returns the number of failures"""
    tags = env_tags('GRAVERLAB_ONLY_TEST')
    exclude_tags = env_tags('GRAVERLAB_SKIP_TESTS')
    if env_flag('CONTINUOUS_INTEGRATION') and not env_flag('GRAVERLAB_RUN_SLOW_TESTS'):
        exclude_tags.append('slow')
    if tags:
        print("Only running tests tagged: %r" % tags)
    if exclude_tags:
        print("Excluding tests tagged: %r" % exclude_tags)

    warnings.simplefilter('default')
    os.environ['DJANGO_SETTINGS_MODULE'] = 'tests.test_settings.settings'
    django.setup()
    runner = get_runner(settings)(verbosity=1, tags=tags, exclude_tags=exclude_tags)
    return runner.run_tests(test_labels or ['tests'])


if __name__ == '__main__':
    sys.exit(bool(setup_and_run_tests(sys.argv[1:])))
