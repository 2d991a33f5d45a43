from django.dispatch import receiver
from django.test import SimpleTestCase

from graverlab.engine import augment_to_optimality
from graverlab.exceptions import GraverLabError, GraverLabStopAugmentation
from graverlab.instance import REAL
from graverlab.rules import DantzigDescent, SteepestDescent
from graverlab.signals import post_augment, pre_augment, solve_finished

from .utils import sum_instance


class TestPreAugmentSignal(SimpleTestCase):
    """Test graverlab's pre_augment signal"""

    def test_pre_augment(self):
        """Pre-augment receivers see the point and the chosen direction before each rule step"""
        calls = []

        @receiver(pre_augment, weak=False)
        def handle_pre_augment(sender, point, direction, instance, rule_name, **kwargs):
            self.assertEqual(sender, SteepestDescent)
            self.assertEqual(rule_name, "steepest")
            calls.append((point, direction))
        self.addCleanup(pre_augment.disconnect, receiver=handle_pre_augment)

        augment_to_optimality(sum_instance(), (0, 0, 3), "steepest")
        self.assertEqual(calls, [((0, 0, 3), (1, 0, -1))])

    def test_stop_in_pre_augment(self):
        """Pre-augment receiver can stop the solve"""
        @receiver(pre_augment, weak=False)
        def stop_pre_augment(sender, **kwargs):
            raise GraverLabStopAugmentation("that's far enough")
        self.addCleanup(pre_augment.disconnect, receiver=stop_pre_augment)

        x, trace = augment_to_optimality(sum_instance(), (0, 0, 3), "steepest")
        self.assertEqual(x, (0, 0, 3))
        self.assertTrue(trace.stopped)
        self.assertEqual(len(trace), 0)
        self.assertTrue(trace.to_json()["stopped"])

    def test_stop_skips_final_cleanup(self):
        @receiver(pre_augment, weak=False)
        def stop_pre_augment(sender, **kwargs):
            raise GraverLabStopAugmentation()
        self.addCleanup(pre_augment.disconnect, receiver=stop_pre_augment)

        x, trace = augment_to_optimality(sum_instance(domain=REAL), (1, 1, 1), "steepest")
        self.assertEqual(x, (1, 1, 1))
        self.assertEqual(trace.cleanup_steps, [])


class TestPostAugmentSignal(SimpleTestCase):
    """Test graverlab's post_augment signal"""

    def test_post_augment(self):
        """Post-augment receivers see every step, including cleanup"""
        seen = []

        @receiver(post_augment, weak=False)
        def handle_post_augment(sender, step, point, instance, rule_name, **kwargs):
            self.assertEqual(sender, DantzigDescent)
            seen.append((step.cleanup, point))
        self.addCleanup(post_augment.disconnect, receiver=handle_post_augment)

        augment_to_optimality(sum_instance(domain=REAL), (1, 1, 1), "dantzig")
        self.assertEqual(seen, [(True, (3, 0, 0)), (True, (3, 0, 0))])

    def test_post_augment_errors(self):
        """All post-augment receivers are called, then the first exception is raised"""
        @receiver(post_augment, weak=False)
        def handler_1(sender, **kwargs):
            raise ValueError("oops")
        self.addCleanup(post_augment.disconnect, receiver=handler_1)

        @receiver(post_augment, weak=False)
        def handler_2(sender, **kwargs):
            self.handler_2_called = True
        self.addCleanup(post_augment.disconnect, receiver=handler_2)

        self.handler_2_called = False
        with self.assertRaisesMessage(ValueError, "oops"):
            augment_to_optimality(sum_instance(), (0, 0, 3), "steepest")
        self.assertTrue(self.handler_2_called)


class TestSolveFinishedSignal(SimpleTestCase):
    def test_solve_finished(self):
        finished = []

        @receiver(solve_finished, weak=False)
        def handle_solve_finished(sender, trace, point, instance, rule_name, **kwargs):
            finished.append((rule_name, point, len(trace)))
        self.addCleanup(solve_finished.disconnect, receiver=handle_solve_finished)

        augment_to_optimality(sum_instance(), (0, 0, 3), "deepest")
        self.assertEqual(finished, [("deepest", (3, 0, 0), 1)])

    def test_stop_is_a_graverlab_error(self):
        self.assertTrue(issubclass(GraverLabStopAugmentation, GraverLabError))
