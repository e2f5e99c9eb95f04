"""
Exponent windows of the standard-form coordinates.

The generic representative of an orbit point is the unipotent matrix

    1 i j
    x 1 k
    y z 1

and each coordinate is a polynomial in p with exponents in a half-open
window [lo, hi) that depends on the vertex type.
"""
from dataclasses import dataclass

from django.db import models

from .vertices import VertexType, classify


class Coordinate(models.TextChoices):
    I = 'i', 'i'
    J = 'j', 'j'
    K = 'k', 'k'
    X = 'x', 'x'
    Y = 'y', 'y'
    Z = 'z', 'z'

    @property
    def position(self):
        """Matrix position (row, column), zero based"""
        return POSITIONS[self.value]


POSITIONS = {
    'i': (0, 1),
    'j': (0, 2),
    'k': (1, 2),
    'x': (1, 0),
    'y': (2, 0),
    'z': (2, 1),
}

COORDINATES = tuple(Coordinate.values)

ACTIVE = {
    VertexType.BASE_POINT: '',
    VertexType.TYPE_1: 'iyz',
    VertexType.TYPE_2: 'iz',
    VertexType.TYPE_3: 'ijz',
    VertexType.TYPE_4: 'ij',
    VertexType.TYPE_5: 'ijk',
    VertexType.TYPE_6: 'jk',
    VertexType.TYPE_7: 'jkx',
    VertexType.TYPE_8: 'kx',
    VertexType.TYPE_9: 'kxy',
    VertexType.TYPE_10: 'xy',
    VertexType.TYPE_11: 'xyz',
    VertexType.TYPE_12: 'yz',
}


@dataclass(frozen=True)
class CoordWindow:
    coordinate: str
    lo: int
    hi: int

    def __post_init__(self):
        Coordinate(self.coordinate)

    @classmethod
    def empty(cls, coordinate):
        return cls(coordinate, 0, 0)

    @property
    def length(self):
        return max(0, self.hi - self.lo)

    @property
    def is_empty(self):
        return self.lo >= self.hi

    def exponents(self):
        return range(self.lo, self.hi)

    def contains(self, series):
        """Every nonzero term of series lies inside the window"""
        return all(self.lo <= e < self.hi for e, _ in series.terms())

    def to_dict(self):
        return {'coordinate': self.coordinate, 'lo': self.lo, 'hi': self.hi, 'length': self.length}

    def __str__(self):
        return f'{self.coordinate}∈[{self.lo},{self.hi})'


def window_bounds(v, a):
    """Window formulas for all six coordinates before the active mask"""
    s, t = v.s, v.t
    return {
        'i': (-a, -s),
        'j': (-a, -t),
        'k': (0, s - t),
        'x': (a + 1, s),
        'y': (a + 1, t),
        'z': (1, t - s),
    }


def masked_windows(bounds, active):
    return [
        CoordWindow(name, *bounds[name]) if name in active else CoordWindow.empty(name)
        for name in COORDINATES
    ]


def windows(v, a):
    """The six coordinate windows of the I^a-orbit of v, in the order i, j, k, x, y, z"""
    return masked_windows(window_bounds(v, a), ACTIVE[classify(v, a)])


def orbit_dimension(v, a):
    return sum(w.length for w in windows(v, a))
