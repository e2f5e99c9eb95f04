"""
The full desk-scale verification grid run by `manage.py verify`.
"""
import logging

from core.decorators import timed_report
from core.exceptions import ValuationMismatch
from lattice.windows import orbit_dimension, windows
from paving.cells import cell
from paving.filtration import Stage, filtration_order
from paving.triangles import triangle_vertices
from .reports import VerificationReport
from .services import (
    compare_field_sizes,
    verify_mutation_sensitivity,
    verify_partition,
    verify_retractions,
    verify_springer,
    verify_uniqueness,
)

logger = logging.getLogger(__name__)

SPRINGER_GRID = ((0, 0), (1, 1), (1, 2), (2, 2), (0, 2), (1, 3))
FIELD_SIZES = (2, 3)
LEVELS = (0, 1, 2)
CELL_COUNT_N = 4
RING_MAX = 4
DEGENERATION_N = 5
# Δ_3 has no type 1^a or 7^a vertex at (m, n) = (1, 2); N=4 reaches all twelve formulas
MUTATION_POINT = {'N': 4, 'm': 1, 'n': 2, 'q': 2}
ORDER_POINT = {'N': 9, 'a': 4}

SCOPES = ('springer', 'degeneration', 'uniqueness', 'partition', 'order', 'mutation')


def springer_grid(budget=None):
    report = VerificationReport('springer cell counts')
    for m, n in SPRINGER_GRID:
        counts_by_q = {}
        for q in FIELD_SIZES:
            counts = {}
            try:
                part = verify_springer(CELL_COUNT_N, m, n, q, budget=budget, counts=counts)
            except ValuationMismatch as exc:
                logger.warning(f"Skipping m={m}, n={n}, q={q}: {exc}")
                report.skip(f'm={m} n={n} q={q}', str(exc))
                continue
            report = report.merge(part, scope=report.scope)
            counts_by_q[q] = counts
        report = report.merge(compare_field_sizes(counts_by_q, m, n), scope=report.scope)
    return report


@timed_report
def degeneration(N=DEGENERATION_N):
    """At a=0 every paving cell is the I-orbit of its vertex"""
    report = VerificationReport(f'a=0 degeneration N={N}')
    for v in triangle_vertices(N):
        cell_windows = tuple(w for w in cell(v, 0).windows if not w.is_empty)
        orbit_windows = tuple(w for w in windows(v, 0) if not w.is_empty)
        report.add(f'windows {v}', cell_windows == orbit_windows,
                   [str(w) for w in orbit_windows], [str(w) for w in cell_windows],
                   {'vertex': str(v), 'a': 0})
    return report


def uniqueness_grid(budget=None):
    report = VerificationReport('coset uniqueness')
    for q in FIELD_SIZES:
        for a in LEVELS:
            for v in triangle_vertices(RING_MAX):
                report = report.merge(verify_uniqueness(v, a, q, budget=budget), scope=report.scope)
    return report


def partition_grid(budget=None):
    report = VerificationReport('partition and retractions')
    for q in FIELD_SIZES:
        for a in LEVELS:
            report = report.merge(verify_partition(RING_MAX, a, q, budget=budget), scope=report.scope)
            report = report.merge(verify_retractions(RING_MAX, a, q, budget=budget), scope=report.scope)
    return report


def _weakly_increasing(values):
    return all(x <= y for x, y in zip(values, values[1:]))


@timed_report
def order_structure(N=ORDER_POINT['N'], a=ORDER_POINT['a']):
    """Stage sizes and monotone orbit dimensions inside the outer ring"""
    report = VerificationReport(f'order N={N} a={a}')
    ring = [entry for entry in filtration_order(N, a) if entry.triangle == N]
    by_stage = {stage: [e for e in ring if e.stage == stage] for stage in (Stage.FIRST, Stage.SECOND, Stage.THIRD)}
    sizes = {str(stage): len(entries) for stage, entries in by_stage.items()}
    expected = {str(Stage.FIRST): N - 1, str(Stage.SECOND): 2 * (N - 1), str(Stage.THIRD): 3}
    report.add('stage sizes', sizes == expected, expected, sizes, {'N': N, 'a': a})
    report.add('stage order', [e.stage for e in ring] == sorted(
        (e.stage for e in ring), key=lambda stage: (Stage.FIRST, Stage.SECOND, Stage.THIRD).index(stage)
    ), 'i, ii, iii', ' '.join(str(e.stage) for e in ring), {'N': N, 'a': a})
    first = [orbit_dimension(e.vertex, 0) for e in by_stage[Stage.FIRST]]
    second = [orbit_dimension(e.vertex, a) for e in by_stage[Stage.SECOND]]
    report.add('stage i dimensions', _weakly_increasing(first), 'weakly increasing', first, {'N': N, 'a': 0})
    report.add('stage ii dimensions', _weakly_increasing(second), 'weakly increasing', second, {'N': N, 'a': a})
    return report


def mutation(budget=None):
    return verify_mutation_sensitivity(**MUTATION_POINT, budget=budget)


RUNNERS = {
    'springer': springer_grid,
    'degeneration': lambda budget=None: degeneration(),
    'uniqueness': uniqueness_grid,
    'partition': partition_grid,
    'order': lambda budget=None: order_structure(),
    'mutation': mutation,
}


def run_suite(scopes=SCOPES, budget=None):
    """Run the named scopes in a fixed order and merge their reports"""
    report = VerificationReport('suite: ' + ', '.join(scopes))
    for scope in SCOPES:
        if scope not in scopes:
            continue
        logger.info(f"Running verification scope {scope}")
        part = RUNNERS[scope](budget=budget)
        report = report.merge(part, scope=report.scope)
    logger.info(f"Suite finished: {len(report.checks)} checks, {len(report.failures)} failed")
    return report
