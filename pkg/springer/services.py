"""
Springer fiber services used by the management commands
"""
import logging

from paving.regions import region_of
from paving.triangles import triangle_vertices
from series.precision import resolve_precision
from .dimensions import dimension_key, fixed_cell_dimension, fixed_cell_parameterization
from .gamma import make_gamma
from .poincare import poincare, poincare_at

logger = logging.getLogger(__name__)


class SpringerService:
    """Dimension tables and Poincaré coefficients for X^γ over Δ_N"""

    DIMENSION_HEADER = ['rank', 's', 't', 'region', 'type', 'dim', 'free_windows']

    @staticmethod
    def gamma(m, n, q, N, prec=None):
        prec = resolve_precision(N, n, n - m, prec)
        return make_gamma(m, n, q, prec)

    @staticmethod
    def dimension_table(N, g):
        rows = []
        for rank, v in enumerate(triangle_vertices(N)):
            key = dimension_key(v, g.a)
            records = fixed_cell_parameterization(v, g)
            rows.append({
                'rank': rank,
                's': v.s,
                't': v.t,
                'region': str(region_of(v)),
                'type': 'base' if key is None else int(key[1]),
                'dim': fixed_cell_dimension(v, g),
                'free_windows': ' '.join(
                    f"{r.window}{'*' if r.determined else ''}" for r in records if not r.window.is_empty
                ),
            })
        logger.info(f"Dimension table for Δ_{N}, m={g.m}, n={g.n}: {len(rows)} rows")
        return rows

    @staticmethod
    def poincare_record(N, g, q=None):
        coeffs = poincare(N, g)
        record = {'m': g.m, 'n': g.n, 'N': N, 'coeffs': coeffs}
        if q is not None:
            record['q'] = q
            record['points'] = poincare_at(coeffs, q)
        return record
