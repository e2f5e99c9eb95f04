"""
Apartment diagrams built from computed data and rendered to SVG.
"""
import logging
import math

from django.db import models
from django.template.loader import render_to_string

from lattice.vertices import Vertex, VertexType, classify
from .filtration import filtration_order
from .regions import region_of
from .triangles import corners, triangle_vertices

logger = logging.getLogger(__name__)

CANVAS = 1000
RADIUS = 440


class FigureKind(models.TextChoices):
    TYPES = 'types', 'vertex types relative to a'
    TRIANGLES = 'triangles', 'triangles Δ_i'
    MOVEMENT = 'movement', 'movement of non-stationary points'
    STAGES = 'stages', 'stages of the outer ring'
    ORDER = 'order', 'order on the outer ring'


class Projection:
    """Plane embedding with the edge (N,0)-(0,N) vertical on the left"""

    def __init__(self, N):
        self.unit = RADIUS / (2 * max(N, 1))

    def point(self, v):
        x = -(v.s + v.t)
        y = (v.t - v.s) * math.sqrt(3)
        return CANVAS / 2 + self.unit * x, CANVAS / 2 - self.unit * y

    def polygon(self, vertices):
        return ' '.join(f'{px:.2f},{py:.2f}' for px, py in map(self.point, vertices))


def _dot(projection, v, css, label=''):
    px, py = projection.point(v)
    return {
        'x': px, 'y': py, 'label_y': py - 0.35 * projection.unit,
        'css': css, 'label': label, 'name': str(v),
    }


def types_figure(N, a):
    projection = Projection(N)
    dots = []
    for v in triangle_vertices(N):
        vertex_type = classify(v, a)
        label = 'b' if vertex_type == VertexType.BASE_POINT else str(int(vertex_type))
        dots.append(_dot(projection, v, f'type-{int(vertex_type)} region-{region_of(v)}', label))
    return projection, {'dots': dots, 'polygons': [], 'arrows': []}


def triangles_figure(N, a):
    projection = Projection(N)
    polygons = [
        {'points': projection.polygon(corners(i)), 'css': f'ring ring-{i % 2}'}
        for i in range(N, 0, -1)
    ]
    dots = [_dot(projection, v, f'ring-{v.ring % 2}', str(v.ring)) for v in triangle_vertices(N)]
    return projection, {'dots': dots, 'polygons': polygons, 'arrows': []}


def movement_arrows(N, a):
    """(source, target, valuation) for every movement inside Δ_N"""
    arrows = []
    for v in triangle_vertices(N):
        vertex_type = classify(v, 0)
        if vertex_type == VertexType.TYPE_1:
            for val in range(1, min(a, v.t - 1) + 1):
                d = v.t - val
                arrows.append((v, Vertex(v.s - d, v.t - 2 * d), val))
        elif vertex_type == VertexType.TYPE_7:
            for val in range(1, min(a, v.s - 1) + 1):
                d = v.s - val
                arrows.append((v, Vertex(v.s - 2 * d, v.t - d), val))
    return arrows


def movement_figure(N, a):
    projection, context = triangles_figure(N, a)
    context['dots'] = [
        _dot(projection, v, f'region-{region_of(v)}') for v in triangle_vertices(N)
    ]
    for source, target, val in movement_arrows(N, a):
        (x1, y1), (x2, y2) = projection.point(source), projection.point(target)
        context['arrows'].append({'x1': x1, 'y1': y1, 'x2': x2, 'y2': y2, 'label': f'v={val}'})
    return projection, context


def stages_figure(N, a):
    projection, context = triangles_figure(N, a)
    dots = []
    for entry in filtration_order(N, a):
        css = f'stage-{entry.stage}' if entry.triangle == N else 'inner'
        dots.append(_dot(projection, entry.vertex, css, str(entry.stage) if entry.triangle == N else ''))
    context['dots'] = dots
    return projection, context


def order_figure(N, a):
    projection, context = triangles_figure(N, a)
    dots = []
    for entry in filtration_order(N, a):
        if entry.triangle == N or N == 0:
            dots.append(_dot(projection, entry.vertex, f'stage-{entry.stage}', str(entry.ring_rank)))
        else:
            dots.append(_dot(projection, entry.vertex, 'inner'))
    context['dots'] = dots
    return projection, context


BUILDERS = {
    FigureKind.TYPES: types_figure,
    FigureKind.TRIANGLES: triangles_figure,
    FigureKind.MOVEMENT: movement_figure,
    FigureKind.STAGES: stages_figure,
    FigureKind.ORDER: order_figure,
}


def render_figure(kind, N, a=0):
    kind = FigureKind(kind)
    projection, context = BUILDERS[kind](N, a)
    context.update({
        'title': f'{kind.label} (N={N}, a={a})',
        'kind': kind.value,
        'size': CANVAS,
        'unit': projection.unit,
    })
    logger.info(f"Rendering {kind.value} figure for N={N}, a={a}")
    return render_to_string('paving/apartment.svg', context)
