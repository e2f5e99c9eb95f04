"""
Paving services used by the management commands
"""
import logging

from .cells import cell
from .figures import render_figure
from .filtration import filtration_order
from .triangles import triangle_vertices

logger = logging.getLogger(__name__)


class PavingService:
    """Cells, vertex order and figures of the a-paving over Δ_N"""

    @staticmethod
    def cells(N, a):
        """One CellDescriptor per vertex of Δ_N, ring by ring"""
        descriptors = [cell(v, a) for v in triangle_vertices(N)]
        total = sum(d.dimension for d in descriptors)
        logger.info(f"Built {len(descriptors)} cells for Δ_{N}, a={a} (total dimension {total})")
        return descriptors

    @staticmethod
    def order(N, a):
        return filtration_order(N, a)

    @staticmethod
    def figure(kind, N, a):
        return render_figure(kind, N, a)
