from django.test import SimpleTestCase

from core.exceptions import NotApplicable
from lattice.standard_form import StandardForm, enumerate_orbit
from lattice.vertices import Vertex, VertexType, classify
from lattice.windows import orbit_dimension, windows
from series.laurent import LaurentSeries
from .cells import cell, enumerate_cell
from .figures import FigureKind, movement_arrows, render_figure
from .filtration import Stage, filtration_order
from .regions import Region, is_stationary, region_of
from .retraction import IncomingSource, incoming_sources, retract, retract_type1, shift_of
from .services import PavingService
from .triangles import Edge, edge_of, in_triangle, ring_vertices, triangle_index, triangle_size, triangle_vertices

PREC = 10


def type1_point(y=None, z=None, i=None, q=2):
    return StandardForm.build(Vertex(-1, 2), 0, q, PREC, y=y, z=z, i=i)


class RegionTests(SimpleTestCase):

    def test_regions(self):
        self.assertEqual(region_of(Vertex(-1, 1)), Region.S)
        self.assertEqual(region_of(Vertex(-2, -1)), Region.S)
        self.assertEqual(region_of(Vertex(1, -1)), Region.T)
        self.assertEqual(region_of(Vertex(1, 2)), Region.V)
        self.assertEqual(region_of(Vertex(0, 0)), Region.V)

    def test_stationary_depends_on_the_valuation_of_y(self):
        form = type1_point(y=LaurentSeries.monomial(2, 1, 1, PREC))
        self.assertFalse(is_stationary(form, 1))
        self.assertTrue(is_stationary(form, 0))
        self.assertTrue(is_stationary(type1_point(), 3))

    def test_types_two_and_three_never_move(self):
        for form in enumerate_orbit(Vertex(-2, 0), 0, 2):
            self.assertTrue(is_stationary(form, 2))

    def test_region_v_is_rejected(self):
        with self.assertRaises(NotApplicable):
            is_stationary(StandardForm.zero(Vertex(1, 2), 0, 2, PREC), 1)


class RetractionTests(SimpleTestCase):

    def test_type1_moves_along_its_line(self):
        form = type1_point(y=LaurentSeries.monomial(2, 1, 1, PREC))
        w, target = retract(form, 1)
        self.assertEqual(w, Vertex(-2, 0))
        self.assertEqual(classify(w, 1), VertexType.TYPE_3)
        self.assertEqual(w.t - 2 * w.s, form.vertex.t - 2 * form.vertex.s)
        self.assertEqual(target.j.terms(), ((-1, 1),))
        self.assertTrue(target.i.is_zero())
        self.assertTrue(target.z.is_zero())
        self.assertTrue(target.fits(windows(w, 1)))

    def test_type1_ceiling_of_z_moves_into_i(self):
        form = StandardForm.build(
            Vertex(-1, 3), 0, 2, PREC,
            y=LaurentSeries.monomial(2, 2, 1, PREC),
            z=LaurentSeries.monomial(2, 3, 1, PREC),
        )
        w, target = retract_type1(form, 2)
        self.assertEqual(w, Vertex(-2, 1))
        self.assertEqual(target.i.terms(), ((1, 1),))
        self.assertEqual(target.j.terms(), ((-2, 1),))
        self.assertTrue(target.z.is_zero())

    def test_every_moving_point_lands_in_the_target_orbit(self):
        moved = []
        for form in enumerate_orbit(Vertex(-1, 2), 0, 2, prec=PREC):
            if not is_stationary(form, 1):
                w, target = retract(form, 1)
                self.assertTrue(target.fits(windows(w, 1)))
                moved.append(target.key())
        self.assertEqual(len(moved), 8)
        self.assertEqual(len(set(moved)), 8)

    def test_type7_mirror(self):
        form = StandardForm.build(Vertex(2, -1), 0, 3, PREC, x=LaurentSeries.monomial(3, 1, 2, PREC))
        w, target = retract(form, 1)
        self.assertEqual(w, Vertex(0, -2))
        self.assertEqual(classify(w, 1), VertexType.TYPE_5)
        self.assertEqual(w.s - 2 * w.t, form.vertex.s - 2 * form.vertex.t)
        self.assertTrue(target.fits(windows(w, 1)))

    def test_stationary_point_is_not_retracted(self):
        with self.assertRaises(NotApplicable):
            retract_type1(type1_point(), 1)

    def test_wrong_type(self):
        with self.assertRaises(NotApplicable):
            retract_type1(StandardForm.zero(Vertex(2, -1), 0, 2, PREC), 1)

    def test_shift(self):
        self.assertEqual(shift_of(Vertex(-1, 2), Vertex(-2, 0)), 1)
        self.assertEqual(shift_of(Vertex(2, -1), Vertex(0, -2)), 1)

    def test_incoming_sources(self):
        self.assertEqual(incoming_sources(Vertex(-2, 0), 1), [IncomingSource(Vertex(-1, 2), 1, 1)])
        self.assertEqual(incoming_sources(Vertex(-2, 0), 0), [])


class CellTests(SimpleTestCase):

    def test_type_three_cell(self):
        c = cell(Vertex(-2, -1), 3)
        self.assertEqual(c.region, Region.S)
        self.assertEqual(c.vertex_type, VertexType.TYPE_3)
        self.assertEqual(c.dimension, 3)
        self.assertEqual(len(list(enumerate_cell(c, 2))), 8)

    def test_type_five_cell_widens_i(self):
        c = cell(Vertex(0, -2), 2)
        self.assertEqual(c.region, Region.T)
        self.assertEqual(c.dimension, 5)
        self.assertEqual(
            {w.coordinate: (w.lo, w.hi) for w in c.windows if not w.is_empty},
            {'i': (-1, 0), 'j': (0, 2), 'k': (0, 2)},
        )

    def test_target_cell_absorbs_incoming_points(self):
        # 8 stationary points of the type 2 orbit plus 8 arriving from (-1, 2)
        c = cell(Vertex(-2, 0), 1)
        self.assertEqual(c.dimension, 4)
        self.assertEqual(orbit_dimension(Vertex(-2, 0), 0), 3)

    def test_source_cell_loses_the_moving_points(self):
        self.assertEqual(cell(Vertex(-1, 2), 1).dimension, orbit_dimension(Vertex(-1, 2), 0) - 1)

    def test_region_v_uses_the_iwahori_orbit(self):
        v = Vertex(1, 2)
        self.assertEqual(cell(v, 2).dimension, orbit_dimension(v, 0))

    def test_level_zero_is_the_iwahori_paving(self):
        for v in triangle_vertices(5):
            self.assertEqual(cell(v, 0).dimension, orbit_dimension(v, 0))

    def test_ring_totals_match(self):
        for a in (1, 2):
            for i in range(1, 5):
                for region in (Region.S, Region.T):
                    vertices = [v for v in ring_vertices(i) if region_of(v) == region]
                    orbits = sum(2 ** orbit_dimension(v, 0) for v in vertices)
                    cells = sum(2 ** cell(v, a).dimension for v in vertices)
                    self.assertEqual(orbits, cells, f'ring {i} {region} a={a}')

    def test_to_dict(self):
        record = cell(Vertex(-2, -1), 3).to_dict()
        self.assertEqual(record['type'], 3)
        self.assertEqual(record['region'], 'S')
        self.assertEqual(len(record['windows']), 6)


class TriangleTests(SimpleTestCase):

    def test_ring_sizes(self):
        self.assertEqual(ring_vertices(0), [Vertex(0, 0)])
        for i in range(1, 6):
            self.assertEqual(len(ring_vertices(i)), 3 * i)
        self.assertEqual(len(triangle_vertices(4)), triangle_size(4))
        self.assertEqual(triangle_size(4), 31)

    def test_ring_vertices_have_their_index(self):
        for i in range(6):
            self.assertTrue(all(triangle_index(v) == i for v in ring_vertices(i)))
            self.assertTrue(all(in_triangle(v, i) for v in ring_vertices(i)))
            if i:
                self.assertFalse(any(in_triangle(v, i - 1) for v in ring_vertices(i)))

    def test_edges(self):
        self.assertEqual(edge_of(Vertex(1, 1)), Edge.AB)
        self.assertEqual(edge_of(Vertex(-1, 1)), Edge.BC)
        self.assertEqual(edge_of(Vertex(1, -1)), Edge.CA)
        self.assertEqual(edge_of(Vertex(-2, -2)), Edge.CORNER)


class FiltrationTests(SimpleTestCase):

    def test_first_ring(self):
        entries = filtration_order(1, 0)
        self.assertEqual([e.vertex for e in entries], [Vertex(0, 0), Vertex(0, 1), Vertex(1, 0), Vertex(-1, -1)])
        self.assertEqual([e.stage for e in entries], [Stage.BASE] + [Stage.THIRD] * 3)
        self.assertEqual(entries[-1].ring_rank, 3)

    def test_ranks_are_consecutive(self):
        entries = filtration_order(4, 2)
        self.assertEqual([e.rank for e in entries], list(range(triangle_size(4))))

    def test_outer_ring_of_delta_nine(self):
        ring = [e for e in filtration_order(9, 4) if e.triangle == 9]
        stages = [e.stage for e in ring]
        self.assertEqual(stages, [Stage.FIRST] * 8 + [Stage.SECOND] * 16 + [Stage.THIRD] * 3)
        self.assertEqual({e.vertex for e in ring[-3:]}, {Vertex(9, 0), Vertex(0, 9), Vertex(-9, -9)})
        first = [orbit_dimension(e.vertex, 0) for e in ring[:8]]
        second = [orbit_dimension(e.vertex, 4) for e in ring[8:24]]
        self.assertEqual(first, sorted(first))
        self.assertEqual(second, sorted(second))
        self.assertEqual([e.ring_rank for e in ring], list(range(1, 28)))

    def test_negative_input(self):
        with self.assertRaises(ValueError):
            filtration_order(-1, 0)


class FigureTests(SimpleTestCase):

    def test_movement_arrows(self):
        arrows = set(movement_arrows(4, 1))
        self.assertEqual(arrows, {
            (Vertex(-1, 2), Vertex(-2, 0), 1),
            (Vertex(2, -1), Vertex(0, -2), 1),
        })
        self.assertEqual(movement_arrows(4, 0), [])

    def test_every_kind_renders(self):
        for kind in FigureKind.values:
            svg = render_figure(kind, 3, 1)
            self.assertIn('viewBox="0 0 1000 1000"', svg)
            self.assertIn(f'data-kind="{kind}"', svg)
            self.assertEqual(svg.count('<circle'), triangle_size(3))

    def test_render_is_deterministic(self):
        self.assertEqual(render_figure(FigureKind.ORDER, 4, 2), render_figure(FigureKind.ORDER, 4, 2))

    def test_service(self):
        self.assertEqual(len(PavingService.cells(2, 1)), triangle_size(2))
        self.assertIn('<svg', PavingService.figure(FigureKind.TYPES, 2, 0))
