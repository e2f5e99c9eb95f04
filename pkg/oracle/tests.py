import json
from dataclasses import replace
from unittest import mock

from django.test import SimpleTestCase

from core.exceptions import ValuationMismatch
from lattice.vertices import Vertex, VertexType
from paving.regions import Region
from paving.retraction import retract
from springer import dimensions
from springer.gamma import make_gamma
from . import suite
from .reports import VerificationReport
from .services import (
    brute_fixed_points,
    compare_counts,
    compare_field_sizes,
    power_exponent,
    verify_mutation_sensitivity,
    verify_partition,
    verify_retractions,
    verify_springer,
    verify_uniqueness,
)


def skip_ceiling_correction(form, a):
    """Retraction that forgets to move the top of z into i"""
    w, target = retract(form, a)
    return w, replace(target, z=form.z, i=form.i)


class ReportTests(SimpleTestCase):

    def test_witness_only_on_failure(self):
        report = VerificationReport('demo')
        report.add('ok', True, 1, 1, {'vertex': '(0,0)'})
        self.assertTrue(report.passed)
        self.assertIsNone(report.witness)
        report.add('bad', False, 1, 2, {'vertex': '(1,0)'})
        self.assertFalse(report.passed)
        self.assertEqual(report.witness, {'vertex': '(1,0)'})

    def test_merge_keeps_order(self):
        first, second = VerificationReport('a'), VerificationReport('b')
        first.add('one', True)
        second.add('two', False)
        second.skip('three', 'infeasible')
        merged = first.merge(second)
        self.assertEqual([c.name for c in merged.checks], ['one', 'two'])
        self.assertEqual(merged.scope, 'a; b')
        self.assertEqual(len(merged.skipped), 1)

    def test_elapsed_only_with_timings(self):
        report = VerificationReport('demo', elapsed=1.23456)
        self.assertNotIn('elapsed', report.to_dict())
        self.assertEqual(report.to_dict(timings=True)['elapsed'], 1.235)
        self.assertEqual(json.loads(report.to_json())['scope'], 'demo')


class UniquenessTests(SimpleTestCase):

    def test_base_point(self):
        report = verify_uniqueness(Vertex(0, 0), 0, 2)
        self.assertTrue(report.passed)
        self.assertEqual(report.checks[0].actual, 1)

    def test_type_two_at_level_one(self):
        report = verify_uniqueness(Vertex(-1, 1), 1, 2)
        self.assertTrue(report.passed, report.to_json())
        self.assertEqual(report.checks[0].actual, 8)
        self.assertIn('pairwise cosets', [c.name for c in report.checks])

    def test_type_three_over_f3(self):
        report = verify_uniqueness(Vertex(-2, -1), 0, 3)
        self.assertTrue(report.passed, report.to_json())
        self.assertEqual(report.checks[0].actual, 27)


class PartitionTests(SimpleTestCase):

    def test_level_zero(self):
        self.assertTrue(verify_partition(3, 0, 2).passed)

    def test_level_one(self):
        report = verify_partition(3, 1, 2)
        self.assertTrue(report.passed, report.to_json())

    def test_level_two_keeps_movement_lines(self):
        report = verify_partition(4, 2, 2)
        self.assertTrue(report.passed, report.to_json())
        moved = sum(c.expected for c in report.checks if c.name.endswith('movement line'))
        self.assertGreater(moved, 0)


class RetractionOracleTests(SimpleTestCase):

    def test_vacuous_without_moving_vertices(self):
        report = verify_retractions(2, 1, 2)
        self.assertTrue(report.passed)
        self.assertEqual(report.checks[0].expected, 0)

    def test_all_points_pass(self):
        report = verify_retractions(4, 1, 2)
        self.assertTrue(report.passed, report.to_json())
        self.assertGreater(report.checks[0].expected, 0)

    def test_injected_fault_is_caught(self):
        report = verify_retractions(4, 1, 2, retract=skip_ceiling_correction)
        self.assertFalse(report.passed)
        self.assertEqual(report.witness['vertex'], '(-1,2)')

    def test_injected_fault_breaks_the_partition(self):
        self.assertFalse(verify_partition(4, 1, 2, retract=skip_ceiling_correction).passed)


class SpringerOracleTests(SimpleTestCase):

    def test_trivial_valuations(self):
        report = verify_springer(1, 0, 0, 5)
        self.assertTrue(report.passed, report.to_json())

    def test_split_case(self):
        report = verify_springer(2, 1, 2, 2)
        self.assertTrue(report.passed, report.to_json())

    def test_level_zero_path(self):
        report = verify_springer(2, 2, 2, 3)
        self.assertTrue(report.passed, report.to_json())

    def test_infeasible_gamma(self):
        with self.assertRaises(ValuationMismatch):
            verify_springer(2, 1, 1, 2)

    def test_wrong_count_is_reported(self):
        g = make_gamma(0, 0, 5, 10)
        counts, _ = brute_fixed_points(1, g, 5)
        counts[Vertex(1, 0)] += 1
        report = compare_counts(counts, g, 5, 1)
        self.assertFalse(report.passed)
        self.assertEqual(report.witness['vertex'], '(1,0)')

    def test_corrupted_formula_is_caught(self):
        key = (Region.S, VertexType.TYPE_1)
        terms = dimensions.DIMENSION_TERMS[key]
        mutated = (replace(terms[0], offset=1),) + terms[1:]
        with mock.patch.dict(dimensions.DIMENSION_TERMS, {key: mutated}):
            self.assertFalse(verify_springer(4, 1, 2, 2).passed)
        self.assertIs(dimensions.DIMENSION_TERMS[key], terms)

    def test_mutation_sensitivity(self):
        report = verify_mutation_sensitivity(**suite.MUTATION_POINT)
        self.assertTrue(report.passed, report.to_json())
        self.assertEqual(len(report.checks), 2 * sum(len(t) for t in dimensions.DIMENSION_TERMS.values()))


class FieldSizeTests(SimpleTestCase):

    def test_power_exponent(self):
        self.assertEqual(power_exponent(8, 2), 3)
        self.assertEqual(power_exponent(1, 3), 0)
        self.assertIsNone(power_exponent(6, 2))
        self.assertIsNone(power_exponent(0, 2))

    def test_matching_exponents_pass(self):
        v = Vertex(-1, 2)
        report = compare_field_sizes({2: {v: 8}, 3: {v: 27}}, 1, 2)
        self.assertTrue(report.passed)
        self.assertEqual(report.checks[0].actual, {2: 3, 3: 3})

    def test_q_dependence_is_flagged(self):
        v = Vertex(-1, 2)
        with self.assertLogs('oracle.services', level='WARNING'):
            report = compare_field_sizes({2: {v: 4}, 3: {v: 27}}, 1, 2)
        self.assertFalse(report.passed)
        self.assertEqual(report.witness['counts'], {2: 4, 3: 27})

    def test_single_field_size_has_nothing_to_compare(self):
        self.assertEqual(compare_field_sizes({2: {Vertex(0, 0): 1}}, 1, 2).checks, [])


class SuiteTests(SimpleTestCase):

    def test_degeneration(self):
        self.assertTrue(suite.degeneration().passed)

    def test_order_structure(self):
        report = suite.order_structure()
        self.assertTrue(report.passed, report.to_json())

    def test_infeasible_points_are_skipped(self):
        with mock.patch.object(suite, 'SPRINGER_GRID', ((1, 1), (0, 0))), \
                mock.patch.object(suite, 'FIELD_SIZES', (2,)), \
                mock.patch.object(suite, 'CELL_COUNT_N', 1):
            with self.assertLogs('oracle.suite', level='WARNING'):
                report = suite.springer_grid()
        self.assertTrue(report.passed)
        self.assertEqual([s['name'] for s in report.skipped], ['m=1 n=1 q=2', 'm=0 n=0 q=2'])

    def test_grid_compares_field_sizes(self):
        with mock.patch.object(suite, 'SPRINGER_GRID', ((1, 2),)), \
                mock.patch.object(suite, 'CELL_COUNT_N', 1):
            report = suite.springer_grid()
        self.assertTrue(report.passed, report.to_json())
        names = [c.name for c in report.checks if c.name.startswith('q-independence')]
        self.assertEqual(len(names), 4)

    def test_fixed_grids_are_timed(self):
        for scope in (suite.degeneration, suite.order_structure):
            with mock.patch('core.decorators.time.perf_counter', side_effect=[1.0, 3.5]):
                report = scope()
            self.assertEqual(report.elapsed, 2.5)

    def test_run_suite_in_fixed_order(self):
        report = suite.run_suite(('order', 'degeneration'))
        self.assertTrue(report.passed)
        self.assertTrue(report.checks[0].name.startswith('windows'))
