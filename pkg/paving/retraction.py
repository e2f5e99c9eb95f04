"""
Movement of non-stationary I-orbit points into I^a-orbits along edge lines.

A type 1 point with 1 <= v(y) <= min(a, t - 1) lies in the I^a-orbit of
w = (s - d, t - 2d), d = t - v(y), a type 3 vertex relative to a. A type 7
point with 1 <= v(x) <= min(a, s - 1) lies in the I^a-orbit of
w = (s - 2d, t - d), d = s - v(x), a type 5 vertex relative to a.
"""
import logging
from dataclasses import dataclass

from core.exceptions import NotApplicable
from lattice.patterns import translated_pattern
from lattice.standard_form import StandardForm
from lattice.vertices import Vertex, VertexType, classify

logger = logging.getLogger(__name__)


def retraction_pattern(v, w, shift):
    """Pattern M^-1 M' must satisfy when M at v and M' at w name the same point"""
    return translated_pattern(v, w, shift)


def _bounded_valuation(series, a, top):
    v = series.valuation()
    if not 1 <= v <= min(a, top):
        return None
    return v


def retract_type1(form, a):
    v = form.vertex
    s, t = v.s, v.t
    if classify(v, 0) != VertexType.TYPE_1:
        raise NotApplicable(f"{v} is not a type 1 vertex")
    vy = _bounded_valuation(form.y, a, t - 1)
    if vy is None:
        raise NotApplicable(f"v(y) = {form.y.valuation()} outside [1, min({a}, {t - 1})]")
    d = t - vy
    w = Vertex(s - d, t - 2 * d)
    prec = form.prec

    ceil_z = form.z.slice(t - s - d, t - s)
    y_inv = form.y.invert_unit()
    z_new = (form.z - ceil_z).restrict(1, t - s - d, prec)
    i_new = (form.i - ceil_z * y_inv).restrict(0, d - s, prec)
    j_new = y_inv.restrict(-vy, 2 * d - t, prec)

    target = StandardForm.build(w, a, form.q, prec, i=i_new, j=j_new, z=z_new)
    logger.debug(f"Type 1 point at {v} moves to {w} (d={d})")
    return w, target


def retract_type7(form, a):
    v = form.vertex
    s, t = v.s, v.t
    if classify(v, 0) != VertexType.TYPE_7:
        raise NotApplicable(f"{v} is not a type 7 vertex")
    vx = _bounded_valuation(form.x, a, s - 1)
    if vx is None:
        raise NotApplicable(f"v(x) = {form.x.valuation()} outside [1, min({a}, {s - 1})]")
    d = s - vx
    w = Vertex(s - 2 * d, t - d)
    prec = form.prec

    ceil_k = form.k.slice(s - t - d, s - t)
    x_inv = form.x.invert_unit()
    k_new = (form.k - ceil_k).restrict(0, s - t - d, prec)
    j_new = (form.j - ceil_k * x_inv).restrict(0, d - t, prec)
    i_new = x_inv.restrict(-vx, 2 * d - s, prec)

    target = StandardForm.build(w, a, form.q, prec, i=i_new, j=j_new, k=k_new)
    logger.debug(f"Type 7 point at {v} moves to {w} (d={d})")
    return w, target


def retract(form, a):
    """Target of a non-stationary point, dispatched on the vertex type"""
    if classify(form.vertex, 0) == VertexType.TYPE_1:
        return retract_type1(form, a)
    return retract_type7(form, a)


def shift_of(source, target):
    """The d of a movement, read off the two vertices"""
    if source.t - target.t == 2 * (source.s - target.s):
        return source.s - target.s
    return source.t - target.t


@dataclass(frozen=True)
class IncomingSource:
    source: Vertex
    shift: int
    valuation: int


def incoming_sources(w, a):
    """Source vertices whose non-stationary points land in the I^a-orbit of w.

    For a type 3 target the sources are (s + d, t + 2d) with v(y) = t_w + d;
    for a type 5 target they are (s + 2d, t + d) with v(x) = s_w + d.
    """
    target_type = classify(w, a)
    sources = []
    if target_type == VertexType.TYPE_3 and w.s < 0:
        for d in range(1, -w.s):
            source = Vertex(w.s + d, w.t + 2 * d)
            valuation = w.t + d
            if classify(source, 0) == VertexType.TYPE_1 and 1 <= valuation <= min(a, source.t - 1):
                sources.append(IncomingSource(source, d, valuation))
    elif target_type == VertexType.TYPE_5 and w.t < 0:
        for d in range(1, -w.t):
            source = Vertex(w.s + 2 * d, w.t + d)
            valuation = w.s + d
            if classify(source, 0) == VertexType.TYPE_7 and 1 <= valuation <= min(a, source.s - 1):
                sources.append(IncomingSource(source, d, valuation))
    return sources
