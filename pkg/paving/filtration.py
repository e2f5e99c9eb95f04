"""
Total order on the vertices of Δ_N whose prefixes are the closed pieces of the
paving.

Ring by ring: the open edge from (i,0) to (0,i) sorted by I-orbit dimension,
then the two other open edges together sorted by I^a-orbit dimension, then
the three corners sorted by I-orbit dimension. Ties go to (s, t).
"""
import logging
from dataclasses import dataclass

from django.db import models

from lattice.windows import orbit_dimension
from .triangles import Edge, ring_edges, triangle_size

logger = logging.getLogger(__name__)


class Stage(models.TextChoices):
    BASE = 'base', 'base point'
    FIRST = 'i', 'edge (i,0)-(0,i)'
    SECOND = 'ii', 'slanted edges'
    THIRD = 'iii', 'corners'


@dataclass(frozen=True)
class FiltrationEntry:
    vertex: object
    triangle: int
    stage: str
    rank: int
    sort_key: int

    @property
    def ring_rank(self):
        """1-based position inside the ring (0 for the base point)"""
        if self.triangle == 0:
            return 0
        return self.rank - triangle_size(self.triangle - 1) + 1

    def to_row(self):
        return [self.rank, self.vertex.s, self.vertex.t, self.triangle, str(self.stage), self.sort_key]


CSV_HEADER = ['rank', 's', 't', 'triangle', 'stage', 'sort_key']


def _sorted(vertices, a):
    keyed = [(orbit_dimension(v, a), v.s, v.t, v) for v in vertices]
    return [(key, v) for key, _, _, v in sorted(keyed, key=lambda item: item[:3])]


def filtration_order(N, a):
    if N < 0 or a < 0:
        raise ValueError(f"N and a must be non-negative, got N={N}, a={a}")
    entries = [FiltrationEntry(ring_edges(0)[Edge.CORNER][0], 0, Stage.BASE, 0, 0)]
    for i in range(1, N + 1):
        edges = ring_edges(i)
        stages = [
            (Stage.FIRST, _sorted(edges[Edge.AB], 0)),
            (Stage.SECOND, _sorted(edges[Edge.BC] + edges[Edge.CA], a)),
            (Stage.THIRD, _sorted(edges[Edge.CORNER], 0)),
        ]
        for stage, members in stages:
            for key, v in members:
                entries.append(FiltrationEntry(v, i, stage, len(entries), key))
    logger.info(f"Ordered {len(entries)} vertices of Δ_{N} for a={a}")
    return entries
