"""
Cells of the a-paving: S^a_v, T^a_v and V^0_v.
"""
import logging
from dataclasses import dataclass

from core.exceptions import InvalidCombination
from lattice.standard_form import enumerate_forms
from lattice.vertices import VertexType, classify
from lattice.windows import ACTIVE, masked_windows, windows
from .regions import Region, region_of

logger = logging.getLogger(__name__)


def s_cell_bounds(v, a):
    s, t = v.s, v.t
    return {
        'i': (0, -s),
        'j': (-min(a, t - s - 1), -t),
        'k': (0, 0),
        'x': (0, 0),
        'y': (a + 1, t),
        'z': (1, t - s),
    }


def t_cell_bounds(v, a):
    s, t = v.s, v.t
    return {
        'i': (-min(a, s - t - 1), -s),
        'j': (0, -t),
        'k': (0, s - t),
        'x': (a + 1, s),
        'y': (0, 0),
        'z': (0, 0),
    }


CELL_TYPES = {
    Region.S: ((VertexType.TYPE_1, VertexType.TYPE_2, VertexType.TYPE_3), s_cell_bounds),
    Region.T: ((VertexType.TYPE_5, VertexType.TYPE_6, VertexType.TYPE_7), t_cell_bounds),
}


@dataclass(frozen=True)
class CellDescriptor:
    vertex: object
    region: str
    a: int
    vertex_type: int
    windows: tuple

    @property
    def dimension(self):
        return sum(w.length for w in self.windows)

    def to_dict(self):
        return {
            's': self.vertex.s,
            't': self.vertex.t,
            'a': self.a,
            'region': str(self.region),
            'type': int(self.vertex_type),
            'dimension': self.dimension,
            'windows': [w.to_dict() for w in self.windows],
        }


def cell(v, a):
    """The cell of the a-paving containing the vertex v"""
    region = region_of(v)
    if region == Region.V:
        return CellDescriptor(v, region, a, classify(v, 0), tuple(windows(v, 0)))
    allowed, bounds = CELL_TYPES[region]
    vertex_type = classify(v, a)
    if vertex_type not in allowed:
        raise InvalidCombination(f"{v} in region {region} has type {vertex_type} relative to {a}")
    return CellDescriptor(v, region, a, vertex_type, tuple(masked_windows(bounds(v, a), ACTIVE[vertex_type])))


def enumerate_cell(c, q, prec=None, budget=None):
    """The q^dimension points of the cell, in standard-form enumeration order"""
    return enumerate_forms(c.vertex, c.a, q, c.windows, prec=prec, budget=budget)
