"""
Apartment vertices and their classification relative to a level a.
"""
from dataclasses import dataclass

from django.db import models


@dataclass(frozen=True, order=True)
class Vertex:
    """The diagonal point (1, p^s, p^t)"""
    s: int
    t: int

    @property
    def exponents(self):
        return (0, self.s, self.t)

    @property
    def ring(self):
        """Index of the smallest triangle containing the vertex"""
        s, t = self.s, self.t
        return max(s + t, t - 2 * s, s - 2 * t)

    def __str__(self):
        return f'({self.s},{self.t})'


class VertexType(models.IntegerChoices):
    BASE_POINT = 0, 's = t = a'
    TYPE_1 = 1, 's < a < t'
    TYPE_2 = 2, 's < t = a'
    TYPE_3 = 3, 's < t < a'
    TYPE_4 = 4, 's = t < a'
    TYPE_5 = 5, 't < s < a'
    TYPE_6 = 6, 't < s = a'
    TYPE_7 = 7, 't < a < s'
    TYPE_8 = 8, 'a = t < s'
    TYPE_9 = 9, 'a < t < s'
    TYPE_10 = 10, 'a < t = s'
    TYPE_11 = 11, 'a < s < t'
    TYPE_12 = 12, 'a = s < t'


def classify(v, a):
    """The unique type row matched by (s, t) relative to a"""
    if a < 0:
        raise ValueError(f"Level a must be non-negative, got {a}")
    s, t = v.s, v.t
    if s == t == a:
        return VertexType.BASE_POINT
    if s < t:
        if t < a:
            return VertexType.TYPE_3
        if t == a:
            return VertexType.TYPE_2
        if s < a:
            return VertexType.TYPE_1
        if s == a:
            return VertexType.TYPE_12
        return VertexType.TYPE_11
    if t < s:
        if s < a:
            return VertexType.TYPE_5
        if s == a:
            return VertexType.TYPE_6
        if t < a:
            return VertexType.TYPE_7
        if t == a:
            return VertexType.TYPE_8
        return VertexType.TYPE_9
    if s < a:
        return VertexType.TYPE_4
    return VertexType.TYPE_10
