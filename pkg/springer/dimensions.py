"""
Dimensions and parameterizations of the fixed-point cells of X^γ.

Each cell meets X^γ in an affine space. Its dimension is a sum of terms
min(m, ...) or min(n, ...), one per free coordinate; every term counts the
free coefficients of that coordinate and is never negative for a legal vertex.
"""
import logging
from dataclasses import dataclass, field

from core.exceptions import InvalidCombination
from lattice.vertices import VertexType, classify
from lattice.windows import CoordWindow
from paving.regions import Region, region_of
from series.laurent import LaurentSeries

logger = logging.getLogger(__name__)

T = VertexType


@dataclass(frozen=True)
class MinTerm:
    """min(parameter, bound_1(s, t, a), ...) + offset, for one free coordinate.

    The free window of the coordinate is [hi - value, hi) clipped below at
    floor, where hi and floor come from the cell window.
    """
    coordinate: str
    parameter: str
    bounds: tuple
    hi: object
    floor: object
    offset: int = 0

    def value(self, s, t, a, m, n):
        param = m if self.parameter == 'm' else n
        return min([param] + [bound(s, t, a) for bound in self.bounds]) + self.offset

    def window(self, s, t, a, m, n):
        hi = self.hi(s, t, a)
        param = m if self.parameter == 'm' else n
        lo = max(hi - param, self.floor(s, t, a))
        return CoordWindow(self.coordinate, lo, hi)


def term(coordinate, parameter, hi, floor, *bounds):
    return MinTerm(coordinate, parameter, tuple(bounds), hi, floor)


# Dimension formulas keyed by (region, vertex type); V vertices are typed
# relative to 0, S and T vertices relative to a.
DIMENSION_TERMS = {
    (Region.V, T.TYPE_4): (
        term('i', 'm', lambda s, t, a: -s, lambda s, t, a: 0, lambda s, t, a: -s),
        term('j', 'm', lambda s, t, a: -t, lambda s, t, a: 0, lambda s, t, a: -t),
    ),
    (Region.V, T.TYPE_8): (
        term('x', 'm', lambda s, t, a: s, lambda s, t, a: 1, lambda s, t, a: s - 1),
        term('k', 'n', lambda s, t, a: s - t, lambda s, t, a: 0, lambda s, t, a: s - t),
    ),
    (Region.V, T.TYPE_9): (
        term('k', 'n', lambda s, t, a: s - t, lambda s, t, a: 0, lambda s, t, a: s - t),
        term('y', 'm', lambda s, t, a: t, lambda s, t, a: 1, lambda s, t, a: t - 1),
        term('x', 'm', lambda s, t, a: s, lambda s, t, a: 1, lambda s, t, a: s - 1),
    ),
    (Region.V, T.TYPE_10): (
        term('x', 'm', lambda s, t, a: s, lambda s, t, a: 1, lambda s, t, a: s - 1),
        term('y', 'm', lambda s, t, a: t, lambda s, t, a: 1, lambda s, t, a: t - 1),
    ),
    (Region.V, T.TYPE_11): (
        term('z', 'n', lambda s, t, a: t - s, lambda s, t, a: 1, lambda s, t, a: t - s - 1),
        term('x', 'm', lambda s, t, a: s, lambda s, t, a: 1, lambda s, t, a: s - 1),
        term('y', 'm', lambda s, t, a: t, lambda s, t, a: 1, lambda s, t, a: t - 1),
    ),
    (Region.V, T.TYPE_12): (
        term('z', 'n', lambda s, t, a: t - s, lambda s, t, a: 1, lambda s, t, a: t - s - 1),
        term('y', 'm', lambda s, t, a: t, lambda s, t, a: 1, lambda s, t, a: t - 1),
    ),
    (Region.S, T.TYPE_1): (
        term('i', 'm', lambda s, t, a: -s, lambda s, t, a: 0, lambda s, t, a: -s),
        term('y', 'm', lambda s, t, a: t, lambda s, t, a: a + 1, lambda s, t, a: t - (a + 1)),
        term('z', 'n', lambda s, t, a: t - s, lambda s, t, a: 1, lambda s, t, a: t - s - 1),
    ),
    (Region.S, T.TYPE_2): (
        term('i', 'm', lambda s, t, a: -s, lambda s, t, a: 0, lambda s, t, a: -s),
        term('z', 'n', lambda s, t, a: t - s, lambda s, t, a: 1, lambda s, t, a: t - s - 1),
    ),
    (Region.S, T.TYPE_3): (
        term('i', 'm', lambda s, t, a: -s, lambda s, t, a: 0, lambda s, t, a: -s),
        term('z', 'n', lambda s, t, a: t - s, lambda s, t, a: 1, lambda s, t, a: t - s - 1),
        term('j', 'm', lambda s, t, a: -t, lambda s, t, a: -min(a, t - s - 1),
             lambda s, t, a: a - t, lambda s, t, a: -s - 1),
    ),
    (Region.T, T.TYPE_7): (
        term('j', 'm', lambda s, t, a: -t, lambda s, t, a: 0, lambda s, t, a: -t),
        term('x', 'm', lambda s, t, a: s, lambda s, t, a: a + 1, lambda s, t, a: s - (a + 1)),
        term('k', 'n', lambda s, t, a: s - t, lambda s, t, a: 0, lambda s, t, a: s - t),
    ),
    (Region.T, T.TYPE_6): (
        term('j', 'm', lambda s, t, a: -t, lambda s, t, a: 0, lambda s, t, a: -t),
        term('k', 'n', lambda s, t, a: s - t, lambda s, t, a: 0, lambda s, t, a: s - t),
    ),
    (Region.T, T.TYPE_5): (
        term('j', 'm', lambda s, t, a: -t, lambda s, t, a: 0, lambda s, t, a: -t),
        term('k', 'n', lambda s, t, a: s - t, lambda s, t, a: 0, lambda s, t, a: s - t),
        term('i', 'm', lambda s, t, a: -s, lambda s, t, a: -min(a, s - t - 1),
             lambda s, t, a: a - s, lambda s, t, a: -t - 1),
    ),
}


@dataclass(frozen=True)
class DeterminedPart:
    """coordinate' = -(f1 f2)(1 - u_p/u_q) / (u_r/u_s - 1)"""
    coordinate: str
    factors: tuple
    one_minus: tuple
    minus_one: tuple

    def describe(self):
        f1, f2 = self.factors
        (p, q), (r, s) = self.one_minus, self.minus_one
        return f"{self.coordinate}' = -{f1}{f2}(1-u{p}/u{q})/(u{r}/u{s}-1)"


DETERMINED = {
    (Region.V, T.TYPE_9): DeterminedPart('x', ('k', 'y'), (3, 1), (2, 1)),
    (Region.V, T.TYPE_11): DeterminedPart('y', ('z', 'x'), (2, 1), (3, 1)),
    (Region.S, T.TYPE_1): DeterminedPart('z', ('y', 'i'), (1, 2), (3, 2)),
    (Region.S, T.TYPE_3): DeterminedPart('i', ('j', 'z'), (3, 2), (1, 2)),
    (Region.T, T.TYPE_7): DeterminedPart('k', ('x', 'j'), (1, 3), (2, 3)),
    (Region.T, T.TYPE_5): DeterminedPart('j', ('k', 'i'), (2, 3), (1, 3)),
}


def dimension_key(v, a):
    """(region, vertex type) selecting the formula, or None at the base point"""
    region = region_of(v)
    vertex_type = classify(v, 0 if region == Region.V else a)
    if vertex_type == T.BASE_POINT:
        return None
    key = (region, vertex_type)
    if key not in DIMENSION_TERMS:
        raise InvalidCombination(f"No formula for {v} in region {region} with type {vertex_type}")
    return key


def fixed_cell_dimension(v, g):
    key = dimension_key(v, g.a)
    if key is None:
        return 0
    total = 0
    for min_term in DIMENSION_TERMS[key]:
        value = min_term.value(v.s, v.t, g.a, g.m, g.n)
        if value < 0:
            raise InvalidCombination(f"Negative term {value} for {min_term.coordinate} at {v}")
        total += value
    return total


@dataclass(frozen=True)
class ParameterRecord:
    coordinate: str
    window: CoordWindow
    determined: bool = False
    formula: str = field(default='')

    def to_dict(self):
        return {
            'coordinate': self.coordinate,
            'window': self.window.to_dict(),
            'determined': self.determined,
            'formula': self.formula,
        }


def fixed_cell_parameterization(v, g):
    """Free windows of the fixed-point cell; the determined coordinate, if
    any, is flagged with its closed-form determined part"""
    key = dimension_key(v, g.a)
    if key is None:
        return []
    determined = DETERMINED.get(key)
    records = []
    for min_term in DIMENSION_TERMS[key]:
        window = min_term.window(v.s, v.t, g.a, g.m, g.n)
        if determined and determined.coordinate == min_term.coordinate:
            records.append(ParameterRecord(min_term.coordinate, window, True, determined.describe()))
        else:
            records.append(ParameterRecord(min_term.coordinate, window))
    return records


def determined_part(form, g, part):
    one = LaurentSeries.one(g.q, g.prec)
    f1, f2 = (form.coordinate(name) for name in part.factors)
    numerator = f1 * f2 * (one - g.ratio(*part.one_minus))
    denominator = g.ratio(*part.minus_one) - one
    return (numerator * denominator.invert_unit()).neg()


def solve_determined(form, g):
    """Recompute the determined coordinate of a fixed point from its free
    coordinates. Returns (coordinate, determined part, free window), or None
    when the cell has no determined coordinate."""
    key = dimension_key(form.vertex, g.a)
    part = DETERMINED.get(key) if key else None
    if part is None:
        return None
    record = next(r for r in fixed_cell_parameterization(form.vertex, g) if r.determined)
    return part.coordinate, determined_part(form, g, part), record.window


def matches_determined(form, g):
    """The determined coordinate equals its determined part plus an element of
    the free window: their difference vanishes below the window start"""
    solved = solve_determined(form, g)
    if solved is None:
        return True
    name, value, window = solved
    difference = form.coordinate(name) - value
    return all(difference.coefficient(e) == 0 for e in range(difference.lo, window.lo))
