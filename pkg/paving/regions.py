"""
The regions S, T and V of the apartment, and the stationary-point test.
"""
from django.db import models

from core.exceptions import NotApplicable
from lattice.patterns import intersection_pattern, pattern_member
from lattice.standard_form import matrix_of
from lattice.vertices import VertexType, classify

S_TYPES = (VertexType.TYPE_1, VertexType.TYPE_2, VertexType.TYPE_3)
T_TYPES = (VertexType.TYPE_5, VertexType.TYPE_6, VertexType.TYPE_7)


class Region(models.TextChoices):
    S = 'S', 'types 1, 2, 3 relative to 0'
    T = 'T', 'types 5, 6, 7 relative to 0'
    V = 'V', 'every other vertex'


def region_of(v):
    vertex_type = classify(v, 0)
    if vertex_type in S_TYPES:
        return Region.S
    if vertex_type in T_TYPES:
        return Region.T
    return Region.V


def is_stationary(form, a):
    """Whether an I-orbit point stays inside the I^a-orbit of its own vertex.

    That happens iff its representative lies in I ∩ I^a: types 2, 3, 5 and 6
    always do, a type 1 point iff v(y) > a and a type 7 point iff v(x) > a.
    """
    if region_of(form.vertex) == Region.V:
        raise NotApplicable(f"{form.vertex} lies in region V")
    return pattern_member(matrix_of(form), intersection_pattern(a))
