"""
Brute-force verifiers.

Expected counts here come from enumeration and pointwise tests only; the
dimension formulas are consulted solely on the side being checked.
"""
import logging
from contextlib import contextmanager
from dataclasses import replace

from django.conf import settings

from core.decorators import timed_report
from core.exceptions import ApaverError
from lattice.patterns import conjugation_pattern, pattern_member
from lattice.standard_form import default_precision, enumerate_orbit, matrix_of
from lattice.vertices import VertexType, classify
from lattice.windows import orbit_dimension, windows
from paving.cells import cell, enumerate_cell
from paving.regions import Region, is_stationary, region_of
from paving.retraction import retract as default_retract, retraction_pattern, shift_of
from paving.triangles import ring_vertices, triangle_vertices
from series.precision import resolve_precision
from springer import dimensions
from springer.dimensions import fixed_cell_dimension, matches_determined
from springer.fixed_points import is_fixed
from springer.gamma import make_gamma
from springer.poincare import poincare, poincare_at
from .reports import VerificationReport

logger = logging.getLogger(__name__)

MOVING_TYPES = (VertexType.TYPE_1, VertexType.TYPE_7)


def witness(form, q, **extra):
    record = {'vertex': str(form.vertex), 'a': form.a, 'q': q, 'coordinates': form.to_record()}
    record.update(extra)
    return record


def vertex_witness(v, a, q, **extra):
    return {'vertex': str(v), 'a': a, 'q': q, **extra}


@timed_report
def verify_uniqueness(v, a, q, prec=None, budget=None):
    """Enumerated orbit points are pairwise distinct and number q^orbit_dimension"""
    report = VerificationReport(f'uniqueness v={v} a={a} q={q}')
    prec = default_precision(v, a) if prec is None else prec
    coord_windows = windows(v, a)
    points = list(enumerate_orbit(v, a, q, prec=prec, budget=budget))
    expected = q ** orbit_dimension(v, a)

    seen, duplicate, outside = set(), None, None
    for form in points:
        if form.key() in seen and duplicate is None:
            duplicate = form
        seen.add(form.key())
        if outside is None and not form.fits(coord_windows):
            outside = form
    report.add('count', len(points) == expected, expected, len(points), vertex_witness(v, a, q))
    report.add('distinct', duplicate is None, len(points), len(seen),
               witness(duplicate, q) if duplicate else None)
    report.add('windows', outside is None, 0, int(outside is not None),
               witness(outside, q) if outside else None)

    if len(points) <= settings.APAVER_PAIRWISE_LIMIT:
        # Distinct representatives must differ by an element outside vKv^-1
        pattern = conjugation_pattern(v)
        inverses = [matrix_of(form).unipotent_inverse() for form in points]
        clash, failure = None, None
        for idx, first in enumerate(points):
            for second in points[idx + 1:]:
                try:
                    same_coset = pattern_member(inverses[idx] @ matrix_of(second), pattern)
                except ApaverError as exc:
                    failure = witness(first, q, other=second.to_record(), error=str(exc))
                    break
                if same_coset:
                    clash = witness(first, q, other=second.to_record())
                    break
            if clash or failure:
                break
        report.add('pairwise cosets', clash is None and failure is None, 0,
                   int(clash is not None or failure is not None), clash or failure)
    return report


def _ring_region_vertices(i, region):
    return [v for v in ring_vertices(i) if region_of(v) == region]


def _movement_line_kept(source, target):
    if classify(source, 0) == VertexType.TYPE_1:
        return target.t - 2 * target.s == source.t - 2 * source.s
    return target.s - 2 * target.t == source.s - 2 * source.t


@timed_report
def verify_partition(ring_max, a, q, prec=None, budget=None, retract=default_retract):
    """Per ring, the I-orbit points of S (and of T) biject onto the points of
    the a-paving cells over the same vertices"""
    report = VerificationReport(f'partition rings<={ring_max} a={a} q={q}')
    prec = resolve_precision(ring_max, 0, a, prec)
    for i in range(1, ring_max + 1):
        for region in (Region.S, Region.T):
            vertices = _ring_region_vertices(i, region)
            cells = {v: cell(v, a) for v in vertices}
            orbit_total = sum(q ** orbit_dimension(v, 0) for v in vertices)
            cell_total = sum(q ** c.dimension for c in cells.values())
            label = f'ring {i} {region}'
            report.add(f'{label} totals', orbit_total == cell_total, orbit_total, cell_total,
                       vertex_witness(vertices[0], a, q) if vertices else None)

            images, failure, moved, off_line = set(), None, 0, None
            for v in vertices:
                for form in enumerate_orbit(v, 0, q, prec=prec, budget=budget):
                    try:
                        if is_stationary(form, a):
                            target_vertex, image = v, form
                        else:
                            target_vertex, image = retract(form, a)
                            moved += 1
                            if off_line is None and not _movement_line_kept(v, target_vertex):
                                off_line = witness(form, q, target=str(target_vertex))
                        target_cell = cells.get(target_vertex)
                        if target_cell is None or not image.fits(target_cell.windows):
                            raise ApaverError(f'image outside the cells of {label}')
                        if image.key() in images:
                            raise ApaverError('two points share an image')
                        images.add(image.key())
                    except ApaverError as exc:
                        if failure is None:
                            failure = witness(form, q, error=str(exc))
            report.add(f'{label} bijection', failure is None and len(images) == cell_total,
                       cell_total, len(images), failure or vertex_witness(vertices[0], a, q)
                       if vertices else failure)
            report.add(f'{label} movement line', off_line is None, moved, moved - int(off_line is not None),
                       off_line)
    return report


@timed_report
def verify_retractions(ring_max, a, q, prec=None, budget=None, retract=default_retract):
    """Every non-stationary point and its retraction name the same point of X"""
    report = VerificationReport(f'retractions rings<={ring_max} a={a} q={q}')
    prec = resolve_precision(ring_max, 0, a, prec)
    checked, failure = 0, None
    for v in triangle_vertices(ring_max):
        if classify(v, 0) not in MOVING_TYPES:
            continue
        for form in enumerate_orbit(v, 0, q, prec=prec, budget=budget):
            if is_stationary(form, a):
                continue
            checked += 1
            try:
                w, image = retract(form, a)
                d = shift_of(v, w)
                product = matrix_of(form).unipotent_inverse() @ matrix_of(image)
                if not pattern_member(product, retraction_pattern(v, w, d)):
                    raise ApaverError(f'M^-1 M\' outside the pattern for {v} -> {w}, d={d}')
                if classify(w, a) not in (VertexType.TYPE_3, VertexType.TYPE_5):
                    raise ApaverError(f'target {w} has type {classify(w, a)} relative to {a}')
                if not image.fits(windows(w, a)):
                    raise ApaverError(f'image does not fit the I^{a}-orbit windows of {w}')
            except ApaverError as exc:
                if failure is None:
                    failure = witness(form, q, error=str(exc))
    report.add('retractions', failure is None, checked, checked - int(failure is not None), failure)
    logger.info(f"Checked {checked} non-stationary points up to ring {ring_max} (a={a}, q={q})")
    return report


def brute_fixed_points(N, g, q, prec=None, budget=None):
    """Fixed points of γ in every cell of Δ_N, counted pointwise.

    Returns (counts by vertex, consistency report) where the report covers
    vertex fixedness and the determined-part check.
    """
    prec = resolve_precision(N, g.n, g.a, prec)
    report = VerificationReport(f'brute count N={N} m={g.m} n={g.n} q={q}')
    counts = {}
    unfixed_vertex, inconsistent = None, None
    for v in triangle_vertices(N):
        region = region_of(v)
        descriptor = cell(v, g.a)
        count = 0
        for form in enumerate_cell(descriptor, q, prec=prec, budget=budget):
            if is_fixed(form, g, region):
                count += 1
                if inconsistent is None and not matches_determined(form, g):
                    inconsistent = witness(form, q)
            elif form.is_vertex() and unfixed_vertex is None:
                unfixed_vertex = witness(form, q)
        counts[v] = count
        logger.debug(f"{v}: {count} fixed points")
    report.add('vertices fixed', unfixed_vertex is None, 0, int(unfixed_vertex is not None), unfixed_vertex)
    report.add('determined parts', inconsistent is None, 0, int(inconsistent is not None), inconsistent)
    return counts, report


def compare_counts(counts, g, q, N):
    """Brute counts against q^fixed_cell_dimension and the Poincaré total"""
    report = VerificationReport(f'cell counts N={N} m={g.m} n={g.n} q={q}')
    mismatch, expected_total = None, 0
    for v, count in counts.items():
        try:
            expected = q ** fixed_cell_dimension(v, g)
        except ApaverError as exc:
            expected = None
            if mismatch is None:
                mismatch = vertex_witness(v, g.a, q, error=str(exc), actual=count)
            continue
        expected_total += expected
        if expected != count and mismatch is None:
            mismatch = vertex_witness(v, g.a, q, expected=expected, actual=count)
    report.add('cell counts', mismatch is None, len(counts), len(counts) - int(mismatch is not None),
               mismatch)
    brute_total = sum(counts.values())
    try:
        poincare_total = poincare_at(poincare(N, g), q)
    except ApaverError as exc:
        report.add('poincare total', False, brute_total, None, {'error': str(exc)})
    else:
        report.add('poincare total', poincare_total == brute_total, brute_total, poincare_total,
                   {'N': N, 'm': g.m, 'n': g.n, 'q': q})
    return report


@timed_report
def verify_springer(N, m, n, q, prec=None, budget=None, counts=None):
    """Every cell of Δ_N meets X^γ in exactly q^fixed_cell_dimension points.

    When a dict is passed as counts it receives the brute count per vertex.
    """
    prec = resolve_precision(N, n, n - m, prec)
    g = make_gamma(m, n, q, prec)
    found, consistency = brute_fixed_points(N, g, q, prec=prec, budget=budget)
    if counts is not None:
        counts.update(found)
    report = consistency.merge(compare_counts(found, g, q, N),
                               scope=f'springer N={N} m={m} n={n} q={q}')
    return report


@contextmanager
def substituted_terms(key, terms):
    """Temporarily replace one entry of the dimension formula table"""
    original = dimensions.DIMENSION_TERMS[key]
    dimensions.DIMENSION_TERMS[key] = terms
    try:
        yield
    finally:
        dimensions.DIMENSION_TERMS[key] = original


@timed_report
def verify_mutation_sensitivity(N, m, n, q, prec=None, budget=None):
    """Perturbing any single min-term by ±1 must make the cell counts fail"""
    prec = resolve_precision(N, n, n - m, prec)
    g = make_gamma(m, n, q, prec)
    counts, _ = brute_fixed_points(N, g, q, prec=prec, budget=budget)
    report = VerificationReport(f'mutation N={N} m={m} n={n} q={q}')
    for key, terms in list(dimensions.DIMENSION_TERMS.items()):
        for index, min_term in enumerate(terms):
            for delta in (-1, 1):
                mutated = terms[:index] + (replace(min_term, offset=min_term.offset + delta),) + terms[index + 1:]
                with substituted_terms(key, mutated):
                    caught = not compare_counts(counts, g, q, N).passed
                region, vertex_type = key
                report.add(
                    f'{region}{int(vertex_type)} {min_term.coordinate} {delta:+d}', caught, True, caught,
                    {'N': N, 'm': m, 'n': n, 'q': q},
                )
    return report


def power_exponent(count, q):
    """e with count == q^e, or None when count is not a power of q"""
    e = 0
    while count > 1 and count % q == 0:
        count //= q
        e += 1
    return e if count == 1 else None


def compare_field_sizes(counts_by_q, m, n):
    """Per-vertex fixed-point exponents must not depend on the residue field"""
    report = VerificationReport(f'field size independence m={m} n={n}')
    if len(counts_by_q) < 2:
        return report
    sizes = sorted(counts_by_q)
    vertices = sorted(set.intersection(*(set(counts) for counts in counts_by_q.values())))
    for v in vertices:
        exponents = {q: power_exponent(counts_by_q[q][v], q) for q in sizes}
        agree = None not in exponents.values() and len(set(exponents.values())) == 1
        if not agree:
            logger.warning(f"Fixed points at {v} depend on q for m={m}, n={n}: {exponents}")
        report.add(f'q-independence {v}', agree, exponents[sizes[0]], exponents,
                   {'vertex': str(v), 'm': m, 'n': n, 'counts': {q: counts_by_q[q][v] for q in sizes}})
    return report
