from django.test import SimpleTestCase

from core.exceptions import PrecisionExhausted, ValuationMismatch
from lattice.standard_form import StandardForm
from lattice.vertices import Vertex, VertexType
from paving.cells import cell
from paving.regions import Region, region_of
from paving.triangles import triangle_size, triangle_vertices
from series.laurent import LaurentSeries
from series.precision import precision_budget
from .dimensions import (
    DETERMINED,
    DIMENSION_TERMS,
    dimension_key,
    fixed_cell_dimension,
    fixed_cell_parameterization,
    matches_determined,
    solve_determined,
)
from .fixed_points import commutator, fixed_point_level, is_fixed
from .gamma import SplitElement, difference_valuation, make_gamma
from .poincare import poincare, poincare_at
from .services import SpringerService

PREC = precision_budget(3, 2, 1)


class MakeGammaTests(SimpleTestCase):

    def test_valuations_over_f2(self):
        g = make_gamma(1, 2, 2, PREC)
        self.assertEqual((g.m, g.n, g.a), (1, 2, 1))
        self.assertEqual(difference_valuation(g.u1, g.u2), 1)
        self.assertEqual(difference_valuation(g.u1, g.u3), 1)
        self.assertEqual(difference_valuation(g.u2, g.u3), 2)

    def test_all_units_distinct_mod_p(self):
        g = make_gamma(0, 0, 5, PREC)
        self.assertEqual(len({u.coefficient(0) for u in g.units}), 3)
        self.assertEqual(g.a, 0)

    def test_no_split_element_over_f2_with_m_equal_n(self):
        with self.assertRaises(ValuationMismatch):
            make_gamma(1, 1, 2, PREC)
        with self.assertRaises(ValuationMismatch):
            make_gamma(0, 0, 2, PREC)

    def test_order_of_valuations(self):
        with self.assertRaises(ValuationMismatch):
            make_gamma(2, 1, 5, PREC)

    def test_precision_must_reach_n(self):
        with self.assertRaises(PrecisionExhausted):
            make_gamma(1, 3, 3, 3)

    def test_from_units_moves_the_near_unit_first(self):
        g = make_gamma(1, 2, 2, PREC)
        shuffled = SplitElement.from_units(g.u3, g.u1, g.u2)
        self.assertEqual((shuffled.m, shuffled.n), (1, 2))
        self.assertEqual(shuffled.u1, g.u1)
        self.assertEqual({shuffled.u2, shuffled.u3}, {g.u2, g.u3})

    def test_from_units_rejects_non_units(self):
        p = LaurentSeries.monomial(3, 1, 1, PREC)
        one = LaurentSeries.one(3, PREC)
        with self.assertRaises(ValuationMismatch):
            SplitElement.from_units(one, p, one + one)

    def test_ratios(self):
        g = make_gamma(1, 2, 3, PREC)
        self.assertEqual(g.ratio(2, 2).terms(), ((0, 1),))
        self.assertEqual((g.ratio(1, 2) * g.ratio(2, 1)).terms(), ((0, 1),))


class FixedPointTests(SimpleTestCase):

    def test_levels(self):
        g = make_gamma(1, 2, 2, PREC)
        self.assertEqual(fixed_point_level(Region.V, g), 0)
        self.assertEqual(fixed_point_level(Region.S, g), 1)

    def test_vertices_are_fixed(self):
        g = make_gamma(1, 2, 2, PREC)
        for v in triangle_vertices(3):
            form = StandardForm.zero(v, g.a, 2, PREC)
            self.assertTrue(is_fixed(form, g, region_of(v)), str(v))

    def test_commutator_of_a_vertex_is_the_identity(self):
        g = make_gamma(0, 0, 5, PREC)
        product = commutator(StandardForm.zero(Vertex(1, 2), 0, 5, PREC), g)
        for r in range(3):
            for c in range(3):
                self.assertEqual(product.entry(r, c).terms(), ((0, 1),) if r == c else ())

    def test_unit_coordinate_is_moved_when_units_differ_mod_p(self):
        g = make_gamma(0, 0, 5, PREC)
        form = StandardForm.build(Vertex(1, 0), 0, 5, PREC, k=LaurentSeries.one(5, PREC))
        self.assertFalse(is_fixed(form, g, Region.V))

    def test_type_four_needs_i_divisible_by_p(self):
        # fixed iff v(i) >= -s - m = 1
        g = make_gamma(1, 2, 2, PREC)
        v = Vertex(-2, -2)
        unit_i = StandardForm.build(v, 0, 2, PREC, i=LaurentSeries.one(2, PREC))
        high_i = StandardForm.build(v, 0, 2, PREC, i=LaurentSeries.monomial(2, 1, 1, PREC))
        self.assertFalse(is_fixed(unit_i, g, region_of(v)))
        self.assertTrue(is_fixed(high_i, g, region_of(v)))

    def test_type_twelve_needs_y_divisible_by_p_squared(self):
        # v(z) >= t - s - n = 1 and v(y) >= t - m = 2
        g = make_gamma(1, 2, 2, PREC)
        v = Vertex(0, 3)
        p = LaurentSeries.monomial(2, 1, 1, PREC)
        p2 = LaurentSeries.monomial(2, 2, 1, PREC)
        self.assertFalse(is_fixed(StandardForm.build(v, 0, 2, PREC, y=p), g, region_of(v)))
        self.assertTrue(is_fixed(StandardForm.build(v, 0, 2, PREC, y=p2, z=p), g, region_of(v)))


class DimensionTests(SimpleTestCase):

    def test_twelve_formulas(self):
        self.assertEqual(len(DIMENSION_TERMS), 12)
        self.assertEqual(len(DETERMINED), 6)

    def test_worked_dimensions(self):
        g = make_gamma(1, 2, 2, PREC)
        self.assertEqual(fixed_cell_dimension(Vertex(-2, -2), g), 2)
        self.assertEqual(fixed_cell_dimension(Vertex(-2, 2), g), 3)

    def test_base_point(self):
        g = make_gamma(1, 2, 2, PREC)
        self.assertIsNone(dimension_key(Vertex(0, 0), g.a))
        self.assertEqual(fixed_cell_dimension(Vertex(0, 0), g), 0)

    def test_region_s_is_typed_relative_to_a(self):
        g = make_gamma(1, 2, 2, PREC)
        self.assertEqual(dimension_key(Vertex(-1, 2), g.a), (Region.S, VertexType.TYPE_1))
        self.assertEqual(dimension_key(Vertex(-1, 1), g.a), (Region.S, VertexType.TYPE_2))
        self.assertEqual(dimension_key(Vertex(1, 2), g.a), (Region.V, VertexType.TYPE_11))

    def test_trivial_valuations_give_points(self):
        g = make_gamma(0, 0, 5, PREC)
        self.assertTrue(all(fixed_cell_dimension(v, g) == 0 for v in triangle_vertices(3)))

    def test_dimensions_are_bounded_by_the_cell(self):
        g = make_gamma(1, 2, 2, PREC)
        for v in triangle_vertices(4):
            self.assertLessEqual(fixed_cell_dimension(v, g), cell(v, g.a).dimension, str(v))

    def test_parameterization_flags_the_determined_coordinate(self):
        g = make_gamma(1, 2, 2, PREC)
        records = fixed_cell_parameterization(Vertex(-1, 2), g)
        self.assertEqual([r.coordinate for r in records], ['i', 'y', 'z'])
        self.assertEqual([r.coordinate for r in records if r.determined], ['z'])
        self.assertEqual(sum(r.window.length for r in records), fixed_cell_dimension(Vertex(-1, 2), g))

    def test_determined_part_of_a_vertex(self):
        g = make_gamma(1, 2, 2, PREC)
        form = StandardForm.zero(Vertex(-1, 2), g.a, 2, PREC)
        name, value, _ = solve_determined(form, g)
        self.assertEqual(name, 'z')
        self.assertTrue(value.is_zero())
        self.assertTrue(matches_determined(form, g))

    def test_no_determined_coordinate(self):
        g = make_gamma(1, 2, 2, PREC)
        self.assertIsNone(solve_determined(StandardForm.zero(Vertex(-1, 1), g.a, 2, PREC), g))


class PoincareTests(SimpleTestCase):

    def test_trivial(self):
        g = make_gamma(0, 0, 5, PREC)
        self.assertEqual(poincare(0, g), [1])
        self.assertEqual(poincare(3, g), [triangle_size(3)])

    def test_counts_every_vertex(self):
        g = make_gamma(1, 2, 2, PREC)
        self.assertEqual(sum(poincare(4, g)), triangle_size(4))

    def test_evaluation(self):
        self.assertEqual(poincare_at([1, 2, 1], 2), 9)
        self.assertEqual(poincare_at([3], 7), 3)

    def test_negative_n(self):
        with self.assertRaises(ValueError):
            poincare(-1, make_gamma(0, 0, 5, PREC))


class SpringerServiceTests(SimpleTestCase):

    def test_dimension_table(self):
        g = SpringerService.gamma(1, 2, 2, 3)
        rows = SpringerService.dimension_table(3, g)
        self.assertEqual(len(rows), triangle_size(3))
        self.assertEqual(rows[0]['type'], 'base')
        self.assertEqual(list(rows[0]), SpringerService.DIMENSION_HEADER)

    def test_poincare_record(self):
        g = SpringerService.gamma(0, 0, 5, 0)
        self.assertEqual(SpringerService.poincare_record(0, g, 5), {'m': 0, 'n': 0, 'N': 0, 'coeffs': [1], 'q': 5, 'points': 1})
