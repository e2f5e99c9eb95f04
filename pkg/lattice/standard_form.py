"""
Standard-form coset representatives and their enumeration.
"""
import itertools
import logging
from dataclasses import dataclass

from django.conf import settings

from core.exceptions import BudgetExceeded, PrecisionExhausted, WindowViolation
from series.field import check_prime
from series.laurent import LaurentSeries
from series.precision import precision_budget
from .matrices import SeriesMatrix
from .windows import COORDINATES, Coordinate, windows

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class StandardForm:
    vertex: object
    a: int
    q: int
    prec: int
    i: LaurentSeries
    j: LaurentSeries
    k: LaurentSeries
    x: LaurentSeries
    y: LaurentSeries
    z: LaurentSeries

    @classmethod
    def build(cls, vertex, a, q, prec, **coords):
        """Missing coordinates are zero"""
        values = {
            name: coords[name] if coords.get(name) is not None else LaurentSeries.zero(q, prec)
            for name in COORDINATES
        }
        return cls(vertex, a, q, prec, **values)

    @classmethod
    def zero(cls, vertex, a, q, prec):
        return cls.build(vertex, a, q, prec)

    def coordinate(self, name):
        return getattr(self, name)

    def coordinates(self):
        return {name: getattr(self, name) for name in COORDINATES}

    def key(self):
        """Identity of the point: vertex and the six coordinate polynomials"""
        return (self.vertex,) + tuple(getattr(self, name).terms() for name in COORDINATES)

    def is_vertex(self):
        return all(getattr(self, name).is_zero() for name in COORDINATES)

    def fits(self, coord_windows):
        return all(w.contains(getattr(self, w.coordinate)) for w in coord_windows)

    def to_record(self):
        record = {'s': self.vertex.s, 't': self.vertex.t, 'a': self.a}
        for name in COORDINATES:
            record[name] = [[e, c] for e, c in getattr(self, name).terms()]
        return record

    def __eq__(self, other):
        if not isinstance(other, StandardForm):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        parts = [f'{name}={getattr(self, name)}' for name in COORDINATES
                 if not getattr(self, name).is_zero()]
        return f'{self.vertex} a={self.a}: ' + (', '.join(parts) or 'vertex')


def matrix_of(form):
    """The unipotent matrix with i, j, k above and x, y, z below the diagonal"""
    identity = SeriesMatrix.identity(form.q, form.prec)
    rows = [list(row) for row in identity.rows]
    for name in COORDINATES:
        r, c = Coordinate(name).position
        rows[r][c] = getattr(form, name)
    return SeriesMatrix.of(rows)


def default_precision(vertex, a=0):
    return precision_budget(max(vertex.ring, 0), 0, a)


def enumeration_size(coord_windows, q):
    return q ** sum(w.length for w in coord_windows)


def check_budget(coord_windows, q, budget=None):
    budget = settings.APAVER_BUDGET if budget is None else budget
    size = enumeration_size(coord_windows, q)
    if size > budget:
        raise BudgetExceeded(size, budget)
    return size


def coordinate_series(window, digits, q, prec):
    if window.is_empty:
        return LaurentSeries.zero(q, prec)
    if prec < window.hi:
        raise PrecisionExhausted(f"prec {prec} cannot hold window {window}")
    return LaurentSeries(q, window.lo, prec, tuple(digits) + (0,) * (prec - window.hi))


def enumerate_forms(vertex, a, q, coord_windows, prec=None, budget=None):
    """Every standard form whose coordinates range over the given windows.

    Order is lexicographic over coefficient vectors in coordinate order
    i, j, k, x, y, z, lowest exponent first.
    """
    check_prime(q)
    prec = default_precision(vertex, a) if prec is None else prec
    size = check_budget(coord_windows, q, budget)
    logger.debug(f"Enumerating {size} points at {vertex} (a={a}, q={q})")
    return _generate_forms(vertex, a, q, list(coord_windows), prec)


def _generate_forms(vertex, a, q, coord_windows, prec):
    lengths = [w.length for w in coord_windows]
    for digits in itertools.product(range(q), repeat=sum(lengths)):
        coords, offset = {}, 0
        for window, length in zip(coord_windows, lengths):
            coords[window.coordinate] = coordinate_series(
                window, digits[offset:offset + length], q, prec
            )
            offset += length
        yield StandardForm(vertex, a, q, prec, **coords)


def enumerate_orbit(vertex, a, q, prec=None, budget=None):
    """The q^orbit_dimension points of the I^a-orbit of vertex"""
    return enumerate_forms(vertex, a, q, windows(vertex, a), prec=prec, budget=budget)


def fit_to_window(series, window, prec=None):
    """Exact restriction of series to the window, as a standard-form coordinate"""
    if window.is_empty:
        low = [e for e, _ in series.terms() if e < window.hi]
        if low:
            raise WindowViolation(f"Term at p^{low[0]} survives in empty window {window}")
        return LaurentSeries.zero(series.q, series.prec if prec is None else prec)
    return series.restrict(window.lo, window.hi, prec)
