"""
Triangles Δ_i with corners (i, 0), (0, i), (-i, -i) and their boundary rings.
"""
from django.db import models

from lattice.vertices import Vertex


class Edge(models.TextChoices):
    AB = 'AB', 'from (i,0) to (0,i)'
    BC = 'BC', 'from (0,i) to (-i,-i)'
    CA = 'CA', 'from (-i,-i) to (i,0)'
    CORNER = 'corner', 'corner'


def triangle_index(v):
    """Smallest i with v in Δ_i.

    The three supporting functionals s + t, t - 2s and s - 2t sum to zero, so
    their maximum is never negative.
    """
    return v.ring


def in_triangle(v, i):
    """Hull membership: v lies on the inner side of all three edges of Δ_i"""
    return v.s + v.t <= i and v.t - 2 * v.s <= i and v.s - 2 * v.t <= i


def corners(i):
    return [Vertex(i, 0), Vertex(0, i), Vertex(-i, -i)]


def ring_edges(i):
    """Interior vertices of the three edges of ring i, plus its corners"""
    if i == 0:
        return {Edge.AB: [], Edge.BC: [], Edge.CA: [], Edge.CORNER: [Vertex(0, 0)]}
    return {
        Edge.AB: [Vertex(s, i - s) for s in range(1, i)],
        Edge.BC: [Vertex(s, i + 2 * s) for s in range(-i + 1, 0)],
        Edge.CA: [Vertex(i + 2 * t, t) for t in range(-i + 1, 0)],
        Edge.CORNER: corners(i),
    }


def ring_vertices(i):
    """The 3i vertices of Δ_i outside Δ_(i-1) (the base point for i = 0)"""
    edges = ring_edges(i)
    return edges[Edge.AB] + edges[Edge.BC] + edges[Edge.CA] + edges[Edge.CORNER]


def edge_of(v):
    i = triangle_index(v)
    for edge, members in ring_edges(i).items():
        if v in members:
            return edge
    raise ValueError(f"{v} not found on ring {i}")


def triangle_vertices(N):
    """All vertices of Δ_N, ring by ring"""
    return [v for i in range(N + 1) for v in ring_vertices(i)]


def triangle_size(N):
    return 1 + 3 * N * (N + 1) // 2
