"""
Vertex classification table for the classify command
"""
import logging

from paving.regions import region_of
from paving.triangles import triangle_vertices
from .vertices import VertexType, classify
from .windows import orbit_dimension, windows

logger = logging.getLogger(__name__)


class ClassificationService:
    """Type, region and orbit data for every vertex of Δ_N at level a"""

    HEADER = ['s', 't', 'triangle', 'type', 'condition', 'region', 'orbit_dimension', 'windows']

    @staticmethod
    def row(v, a):
        vertex_type = classify(v, a)
        active = [str(w) for w in windows(v, a) if not w.is_empty]
        return {
            's': v.s,
            't': v.t,
            'triangle': v.ring,
            'type': 'base' if vertex_type == VertexType.BASE_POINT else int(vertex_type),
            'condition': vertex_type.label,
            'region': str(region_of(v)),
            'orbit_dimension': orbit_dimension(v, a),
            'windows': ' '.join(active),
        }

    @classmethod
    def type_table(cls, N, a):
        rows = [cls.row(v, a) for v in triangle_vertices(N)]
        logger.info(f"Classified {len(rows)} vertices of Δ_{N} relative to a={a}")
        return rows
