# graverlab test utils
import json
import warnings
from contextlib import contextmanager
from pathlib import Path
from unittest import TestCase

from graverlab.instance import INTEGER, Instance
from graverlab.lab import SINK, SOURCE
from graverlab.linalg import IntegerMatrix

import networkx as nx


#
# Sample files for testing (in ./test_files subdir)
#

TEST_FILES_DIR = Path(__file__).parent.joinpath("test_files").resolve()


def test_file_path(filename):
    """Returns path to a test file"""
    return TEST_FILES_DIR.joinpath(filename)


test_file_path.__test__ = False  # helper, not a pytest test


def test_file_json(filename):
    """Returns the parsed contents of a JSON test file"""
    return json.loads(TEST_FILES_DIR.joinpath(filename).read_text(encoding="utf-8"))


test_file_json.__test__ = False  # helper, not a pytest test


#
# Sample inputs used across the suite
#

def sum_instance(domain=INTEGER, c=(1, 2, 3), x0=(0, 0, 3)):
    """min c·x over x1 + x2 + x3 = 3, 0 <= x <= 3"""
    return Instance([[1, 1, 1]], [3], c, [3, 3, 3], domain=domain, name="sum3", x0=x0)


def small_flow_network():
    """s->a (2), a->t (1), s->t (1): max flow 2"""
    graph = nx.DiGraph()
    graph.add_edge(SOURCE, "a", capacity=2)
    graph.add_edge("a", SINK, capacity=1)
    graph.add_edge(SOURCE, SINK, capacity=1)
    return graph


def matrix(*rows):
    return IntegerMatrix(rows)


#
# TestCase helpers
#

class GraverLabTestMixin(TestCase):
    """Helpful additional methods for graverlab tests"""

    def assertElementsEqual(self, test_set, expected, msg=None):
        """Tests that a TestSet holds exactly expected, closed under negation.

        expected lists one representative per ± pair.
        """
        closed = set()
        for v in expected:
            closed.add(tuple(v))
            closed.add(tuple(-x for x in v))
        self.assertEqual(set(test_set.elements), closed, msg)

    def assertInKernel(self, A, v, msg=None):
        if not A.in_kernel(v):
            raise self.failureException(msg or "%r is not in the kernel of %r" % (tuple(v), A))

    def assertAllRowsPass(self, report, msg=None):
        """Tests that no row of a VerificationReport failed"""
        failed = [(check.name, check.observed, check.bound, check.detail)
                  for check in report.checks if check.holds is False]
        if failed:
            raise self.failureException(msg or "Bound rows failed: %r" % failed)

    @contextmanager
    def assertDoesNotWarn(self, disallowed_warning=Warning):
        """Makes test error (rather than fail) if disallowed_warning occurs."""
        try:
            warnings.simplefilter("error", disallowed_warning)
            yield
        finally:
            warnings.resetwarnings()
