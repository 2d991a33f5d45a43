from fractions import Fraction

from django.test import SimpleTestCase, override_settings, tag

from graverlab.exceptions import GraverLabVerificationFailure
from graverlab.instance import REAL, Instance
from graverlab.lab import SINK, SOURCE, maxflow_instance, random_tu_instance, transportation_instance
from graverlab.nfold import NFoldSpec
from graverlab.verify import (
    FAIL, NOT_APPLICABLE, PASS, BoundCheck, VerificationReport, count_row, diameter_experiment,
    matrix_rows, not_applicable, relaxation_row, verify_instance, verify_nfold)

from .utils import GraverLabTestMixin, matrix, small_flow_network, sum_instance


class BoundCheckTests(SimpleTestCase):
    def test_status(self):
        self.assertEqual(BoundCheck("a", True).status, PASS)
        self.assertEqual(BoundCheck("a", False).status, FAIL)
        self.assertEqual(not_applicable("a", "too big").status, NOT_APPLICABLE)

    def test_json_is_exact(self):
        data = BoundCheck("gap", True, observed=Fraction(1, 3), bound=2).to_json()
        self.assertEqual(data, {"name": "gap", "status": "pass", "observed": "1/3",
                                "bound": "2", "detail": ""})

    def test_count_row(self):
        self.assertEqual(count_row("c", 3, 2, 1).status, NOT_APPLICABLE)
        row = count_row("c", 5, 2, 6)  # ceil(log2 6) = 3
        self.assertEqual(row.bound, 6)
        self.assertTrue(row.holds)
        self.assertFalse(count_row("c", 7, 2, 6).holds)


class VerificationReportTests(SimpleTestCase):
    def test_failures(self):
        report = VerificationReport("demo", [BoundCheck("ok", True), BoundCheck("bad", False),
                                             not_applicable("skip", "n/a")], seed=3)
        self.assertEqual(report.failed, ["bad"])
        self.assertFalse(report.passed)
        self.assertEqual(report["skip"].status, NOT_APPLICABLE)
        with self.assertRaises(KeyError):
            report["missing"]  # noqa: B018
        with self.assertRaises(GraverLabVerificationFailure) as cm:
            report.raise_for_failures()
        self.assertEqual(cm.exception.failed, ["bad"])
        self.assertIn("bad", str(cm.exception))
        data = report.to_json()
        self.assertEqual(data["subject"], "demo")
        self.assertEqual(data["seed"], 3)
        self.assertEqual([row["status"] for row in data["checks"]], ["pass", "fail", "n/a"])

    def test_passing_report(self):
        report = VerificationReport("demo", [BoundCheck("ok", True)])
        self.assertTrue(report.passed)
        report.raise_for_failures()


class MatrixRowTests(GraverLabTestMixin, SimpleTestCase):
    def test_sum_matrix(self):
        # 18 nonzero kernel points in the box [-2,2]^3
        rows = VerificationReport("A", matrix_rows(matrix([1, 1, 1]), box_bound=2))
        self.assertAllRowsPass(rows)
        self.assertEqual(rows["tu_coincidence"].status, PASS)
        self.assertEqual(rows["sebo_term_bound"].bound, 4)
        self.assertEqual(rows["sebo_kernel_dimension_bound"].bound, 2)
        self.assertEqual(rows["integer_decomposition"].observed, 18)

    def test_not_unimodular(self):
        rows = VerificationReport("A", matrix_rows(matrix([1, 1, -2]), box_bound=2))
        self.assertAllRowsPass(rows)
        self.assertEqual(rows["tu_coincidence"].status, NOT_APPLICABLE)
        self.assertEqual(rows["circuits_in_graver"].observed, 6)
        self.assertEqual(rows["circuits_in_graver"].bound, 8)

    @override_settings(GRAVERLAB={'ENUMERATION_CAP': 10})
    def test_enumeration_cap(self):
        rows = VerificationReport("A", matrix_rows(matrix([1, 1, 1]), box_bound=2))
        for name in ("integer_decomposition", "sebo_term_bound", "real_decomposition_terms"):
            self.assertEqual(rows[name].status, NOT_APPLICABLE)

    def test_relaxation(self):
        self.assertTrue(relaxation_row(Instance([[2, 2]], [2], [-1, -2], [1, 1])).holds)
        infeasible = Instance([[2, 2]], [3], [0, 0], [1, 1])
        self.assertEqual(relaxation_row(infeasible).status, NOT_APPLICABLE)


class VerifyInstanceTests(GraverLabTestMixin, SimpleTestCase):
    def test_integer_instance(self):
        report = verify_instance(sum_instance())
        self.assertAllRowsPass(report)
        for rule in ("deepest", "dantzig", "steepest"):
            self.assertEqual(report[rule + ".terminal_optimum"].status, PASS)
            self.assertEqual(report[rule + ".integral_steps"].status, PASS)
        self.assertEqual(report["steepest.overall_steepest"].status, PASS)
        self.assertEqual(report["steepest.tu_bland_count"].status, PASS)
        # gap 6, 2(2n-2)·ceil(log2 6) = 8·3
        self.assertEqual(report["deepest.deepest_step_count"].bound, 24)
        data = report.to_json()
        self.assertEqual(data["optimum"], "3")
        self.assertEqual(data["gamma"], "3")
        self.assertEqual(data["delta"], 1)
        self.assertEqual(data["summary"]["steepest"]["steps"], 1)

    def test_real_instance(self):
        report = verify_instance(sum_instance(domain=REAL), x0=(1, 1, 1))
        self.assertAllRowsPass(report)
        for rule in ("deepest", "dantzig", "steepest"):
            self.assertEqual(report[rule + ".terminal_vertex"].status, PASS)
        self.assertEqual(report["steepest.steps_le_circuit_count"].bound, 6)
        self.assertEqual(report["steepest.bland_count"].bound, 6)
        # n·δ·γ = 3·1·3
        self.assertEqual(report["dantzig.dantzig_step_improvement"].status, PASS)
        self.assertEqual(report["dantzig.dantzig_step_improvement"].bound, 9)
        with self.assertRaises(KeyError):
            report["steepest.overall_steepest"]  # noqa: B018

    def test_zero_one_instance(self):
        inst = Instance([[1, 1, 1, 1]], [2], [3, -1, 2, -2], [1, 1, 1, 1], x0=(1, 0, 1, 0))
        report = verify_instance(inst)
        self.assertAllRowsPass(report)
        self.assertEqual(report["deepest.zero_one_count"].status, PASS)

    def test_flow_network(self):
        graph = small_flow_network()
        inst = maxflow_instance(graph)
        report = verify_instance(inst, network=(graph, SOURCE, SINK))
        self.assertAllRowsPass(report)
        self.assertEqual(report["flow_value_matches_oracle"].observed, 2)
        self.assertEqual(report["edmonds_karp_bound"].bound, 12)
        network = report.to_json()["network"]
        self.assertEqual((network["source"], network["sink"]), (SOURCE, SINK))
        self.assertEqual(len(network["arcs"]), 3)

    @tag('slow')
    def test_transportation(self):
        report = verify_instance(transportation_instance([2, 1], [1, 1, 1], [[3, 1, 2], [1, 2, 1]]))
        self.assertAllRowsPass(report)


class VerifyNFoldTests(GraverLabTestMixin, SimpleTestCase):
    def test_feasible(self):
        spec = NFoldSpec([[1, 1]], [[1, 0]], 2)
        report = verify_nfold(spec, (2, 2, 2), (1, 0, 2, 0), (2, 2, 2, 2))
        self.assertAllRowsPass(report)
        self.assertEqual(report["terminal_optimum"].status, PASS)
        self.assertEqual(report["graver_growth_bound"].status, PASS)
        self.assertEqual(report["graver_complexity"].observed, 2)
        self.assertEqual(report.extra["growth"][1], {"N": 2, "graver_size": 2, "bound": 2})

    def test_small_N(self):
        for N in (1, 2, 3):
            spec = NFoldSpec([[1, 1]], [[1, 0]], N)
            with self.subTest(N=N):
                report = verify_nfold(spec, (2,) + (2,) * N, (1, 0) * N, (2, 2) * N)
                self.assertAllRowsPass(report)
                self.assertEqual(report["terminal_optimum"].status, PASS)
                self.assertEqual(report["steps_le_graver_size"].status, PASS)
                expected = NOT_APPLICABLE if N < 2 else PASS
                self.assertEqual(report["graver_growth_bound"].status, expected)
        self.assertEqual(report["graver_growth_bound"].observed, [2, 6])
        self.assertEqual(report["graver_growth_bound"].bound, [2, 6])

    def test_infeasible(self):
        spec = NFoldSpec([[1, 1]], [[1, 0]], 2)
        report = verify_nfold(spec, (0, 10, 0), (0, 0, 0, 0), (1, 1, 1, 1))
        self.assertAllRowsPass(report)
        self.assertEqual(report["phase1_verdict_matches_oracle"].status, PASS)
        self.assertEqual(report["terminal_optimum"].status, NOT_APPLICABLE)

    def test_zero_complexity(self):
        # A = (1) fixes every brick, so [A,B]^(N) has no Graver elements
        spec = NFoldSpec([[1]], [[1]], 2)
        report = verify_nfold(spec, (2, 1, 1), (1, 1), (1, 1))
        self.assertAllRowsPass(report)
        self.assertEqual(report["graver_complexity"].observed, 0)
        self.assertIn("no Graver elements", report["graver_complexity"].detail)
        self.assertEqual(report["graver_growth_bound"].status, NOT_APPLICABLE)
        self.assertEqual(report["graver_growth_bound"].detail, "g(A,B) = 0")
        self.assertEqual(report["terminal_optimum"].observed, 2)


class DiameterTests(GraverLabTestMixin, SimpleTestCase):
    def test_simplex(self):
        report = diameter_experiment(sum_instance())
        self.assertAllRowsPass(report)
        self.assertEqual(report.extra["circuit_diameter"], 1)
        self.assertEqual(len(report.extra["distances"]), 6)
        self.assertEqual(report["pair_distance_bound"].bound, 12)
        self.assertEqual(report["round_trip_bound"].observed, 2)
        with self.assertRaises(KeyError):
            report["non_unique_targets"]  # noqa: B018

    def test_unimodular_polytopes(self):
        polytopes = [random_tu_instance(seed) for seed in range(3)]
        polytopes.append(transportation_instance([2, 1], [1, 1, 1], domain=REAL))
        for inst in polytopes:
            with self.subTest(inst=inst.name):
                report = diameter_experiment(inst)
                self.assertEqual(report["pair_distance_bound"].status, PASS)
                self.assertEqual(report["round_trip_bound"].status, PASS)
                self.assertEqual(report["pair_distance_bound"].bound,
                                 inst.n * (inst.d + 1) * (inst.n - inst.d))
