from django.test import SimpleTestCase, override_settings

from core.exceptions import BudgetExceeded, PrecisionExhausted, WindowViolation
from series.laurent import LaurentSeries
from .matrices import SeriesMatrix
from .patterns import (
    EntryConstraint,
    conjugation_pattern,
    intersection_pattern,
    iwahori_pattern,
    pattern_member,
    stabilizer_pattern,
    translated_pattern,
)
from .services import ClassificationService
from .standard_form import StandardForm, enumerate_orbit, fit_to_window, matrix_of
from .vertices import Vertex, VertexType, classify
from .windows import Coordinate, CoordWindow, orbit_dimension, windows


def active(v, a):
    return {w.coordinate: (w.lo, w.hi) for w in windows(v, a) if not w.is_empty}


class ClassifyTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(classify(Vertex(0, 0), 0), VertexType.BASE_POINT)
        self.assertEqual(classify(Vertex(-1, 1), 0), VertexType.TYPE_1)
        self.assertEqual(classify(Vertex(2, -2), 1), VertexType.TYPE_7)
        self.assertEqual(classify(Vertex(3, 3), 0), VertexType.TYPE_10)
        self.assertEqual(classify(Vertex(-2, -1), 0), VertexType.TYPE_3)

    def test_every_vertex_gets_exactly_one_type(self):
        for a in range(4):
            for s in range(-5, 6):
                for t in range(-5, 6):
                    vertex_type = classify(Vertex(s, t), a)
                    self.assertEqual(vertex_type == VertexType.BASE_POINT, s == t == a)

    def test_negative_level_rejected(self):
        with self.assertRaises(ValueError):
            classify(Vertex(0, 0), -1)

    def test_ring_index(self):
        self.assertEqual(Vertex(0, 0).ring, 0)
        self.assertEqual(Vertex(1, 0).ring, 1)
        self.assertEqual(Vertex(-1, -1).ring, 1)
        self.assertEqual(Vertex(2, -2).ring, 6)


class WindowTests(SimpleTestCase):

    def test_type_one_at_level_zero(self):
        self.assertEqual(active(Vertex(-1, 1), 0), {'i': (0, 1), 'z': (1, 2)})
        self.assertEqual(orbit_dimension(Vertex(-1, 1), 0), 2)

    def test_type_three_window_for_z_is_empty(self):
        # z ranges over P/P^(t-s) and t - s = 1 here
        self.assertEqual(active(Vertex(-2, -1), 0), {'i': (0, 2), 'j': (0, 1)})
        self.assertEqual(orbit_dimension(Vertex(-2, -1), 0), 3)

    def test_type_seven_at_level_one(self):
        self.assertEqual(active(Vertex(2, -2), 1), {'j': (-1, 2), 'k': (0, 4)})
        self.assertEqual(orbit_dimension(Vertex(2, -2), 1), 7)

    def test_base_point_has_no_windows(self):
        self.assertEqual(active(Vertex(2, 2), 2), {})

    def test_window_order_is_fixed(self):
        self.assertEqual([w.coordinate for w in windows(Vertex(1, 2), 0)], ['i', 'j', 'k', 'x', 'y', 'z'])

    def test_coordinate_positions(self):
        self.assertEqual(Coordinate('z').position, (2, 1))
        self.assertEqual(Coordinate.K.position, (1, 2))

    def test_unknown_coordinate_rejected(self):
        with self.assertRaises(ValueError):
            CoordWindow('w', 0, 1)

    def test_empty_window_has_zero_length(self):
        window = CoordWindow('y', 3, 1)
        self.assertTrue(window.is_empty)
        self.assertEqual(window.length, 0)


class PatternTests(SimpleTestCase):

    def test_iwahori_bounds(self):
        pattern = iwahori_pattern(1)
        self.assertEqual(pattern.bound(0, 1), -1)
        self.assertEqual(pattern.bound(0, 2), -1)
        self.assertEqual(pattern.bound(1, 0), 2)
        self.assertEqual(pattern.bound(2, 1), 1)
        self.assertEqual(pattern.bound(1, 2), 0)
        self.assertEqual(pattern.entry(1, 1), EntryConstraint.unit())

    def test_conjugation_bounds(self):
        pattern = conjugation_pattern(Vertex(1, 2))
        self.assertEqual(pattern.bound(0, 1), -1)
        self.assertEqual(pattern.bound(2, 0), 2)
        self.assertEqual(pattern.bound(1, 2), -1)

    def test_stabilizer_takes_the_larger_bound(self):
        pattern = stabilizer_pattern(Vertex(3, 3), 0)
        self.assertEqual(pattern.bound(0, 1), 0)
        self.assertEqual(pattern.bound(0, 2), 0)
        self.assertEqual(pattern.bound(1, 0), 3)
        self.assertEqual(pattern.bound(2, 0), 3)
        self.assertEqual(pattern.bound(2, 1), 1)
        self.assertEqual(pattern.entry(0, 0), EntryConstraint.unit())

    def test_intersection_with_a_conjugate(self):
        pattern = intersection_pattern(2)
        self.assertEqual(pattern.bound(0, 1), 0)
        self.assertEqual(pattern.bound(1, 0), 3)
        self.assertEqual(pattern.bound(2, 1), 1)
        self.assertEqual(pattern.entry(2, 2), EntryConstraint.unit())

    def test_translated_pattern(self):
        pattern = translated_pattern(Vertex(-1, 2), Vertex(0, 3), 1)
        # -1 + v_r - w_c
        self.assertEqual(pattern.bound(0, 0), -1)
        self.assertEqual(pattern.bound(2, 1), -1 + 2 - 0)
        self.assertEqual(pattern.bound(1, 2), -1 - 1 - 3)

    def test_identity_lies_in_iwahori(self):
        self.assertTrue(pattern_member(SeriesMatrix.identity(3, 5), iwahori_pattern(0)))

    def test_unit_below_diagonal_leaves_iwahori(self):
        form = StandardForm.build(Vertex(1, 0), 0, 3, 5, x=LaurentSeries.one(3, 5))
        self.assertFalse(pattern_member(matrix_of(form), iwahori_pattern(0)))

    def test_undecidable_entry_raises(self):
        with self.assertRaises(PrecisionExhausted):
            pattern_member(SeriesMatrix.identity(2, 1), conjugation_pattern(Vertex(0, 3)))


class MatrixTests(SimpleTestCase):

    def setUp(self):
        q, prec = 3, 6
        self.form = StandardForm.build(
            Vertex(-1, 1), 0, q, prec,
            i=LaurentSeries.one(q, prec),
            z=LaurentSeries.monomial(q, 1, 2, prec),
        )

    def test_unipotent_determinant_is_one(self):
        self.assertEqual(matrix_of(self.form).determinant().terms(), ((0, 1),))

    def test_general_inverse_agrees_with_the_adjugate(self):
        m = matrix_of(self.form)
        for r in range(3):
            for c in range(3):
                self.assertEqual(m.inverse().entry(r, c).terms(), m.unipotent_inverse().entry(r, c).terms())

    def test_unipotent_inverse(self):
        m = matrix_of(self.form)
        product = m @ m.unipotent_inverse()
        for r in range(3):
            for c in range(3):
                expected = ((0, 1),) if r == c else ()
                self.assertEqual(product.entry(r, c).terms(), expected)


class EnumerationTests(SimpleTestCase):

    def test_orbit_count_and_distinctness(self):
        points = list(enumerate_orbit(Vertex(-1, 1), 1, 2))
        self.assertEqual(len(points), 8)
        self.assertEqual(len({p.key() for p in points}), 8)

    def test_type_three_orbit_over_f3(self):
        points = list(enumerate_orbit(Vertex(-2, -1), 0, 3))
        self.assertEqual(len(points), 27)
        self.assertTrue(all(p.fits(windows(Vertex(-2, -1), 0)) for p in points))

    def test_base_point_orbit_is_a_single_vertex(self):
        points = list(enumerate_orbit(Vertex(0, 0), 0, 2))
        self.assertEqual(len(points), 1)
        self.assertTrue(points[0].is_vertex())

    def test_first_point_is_the_vertex(self):
        first = next(enumerate_orbit(Vertex(2, -2), 1, 2))
        self.assertTrue(first.is_vertex())

    @override_settings(APAVER_BUDGET=4)
    def test_budget_from_settings(self):
        with self.assertRaises(BudgetExceeded):
            enumerate_orbit(Vertex(-1, 1), 1, 2)

    def test_budget_argument(self):
        with self.assertRaises(BudgetExceeded) as ctx:
            enumerate_orbit(Vertex(2, -2), 1, 2, budget=100)
        self.assertEqual(ctx.exception.requested, 128)

    def test_record(self):
        form = StandardForm.build(Vertex(-1, 1), 0, 2, 4, z=LaurentSeries.monomial(2, 1, 1, 4))
        record = form.to_record()
        self.assertEqual(record['z'], [[1, 1]])
        self.assertEqual(record['i'], [])
        self.assertEqual((record['s'], record['t'], record['a']), (-1, 1, 0))


class FitToWindowTests(SimpleTestCase):

    def test_drops_terms_at_or_above_the_window_end(self):
        series = LaurentSeries.from_terms(2, {2: 1, 3: 1}, 6)
        fitted = fit_to_window(series, CoordWindow('y', 1, 3))
        self.assertEqual(fitted.terms(), ((2, 1),))

    def test_term_below_window_start(self):
        with self.assertRaises(WindowViolation):
            fit_to_window(LaurentSeries.one(2, 4), CoordWindow('z', 1, 2))

    def test_empty_window_accepts_high_terms_only(self):
        series = LaurentSeries.monomial(2, 3, 1, 6)
        self.assertTrue(fit_to_window(series, CoordWindow('x', 2, 2)).is_zero())


class ClassificationServiceTests(SimpleTestCase):

    def test_table_size(self):
        self.assertEqual(len(ClassificationService.type_table(2, 0)), 1 + 3 + 6)

    def test_row(self):
        row = ClassificationService.row(Vertex(1, 0), 0)
        self.assertEqual(row['type'], 8)
        self.assertEqual(row['orbit_dimension'], 1)
        self.assertEqual(row['triangle'], 1)
        self.assertEqual(row['windows'], 'k∈[0,1)')

    def test_base_row(self):
        row = ClassificationService.row(Vertex(0, 0), 0)
        self.assertEqual(row['type'], 'base')
        self.assertEqual(row['windows'], '')
