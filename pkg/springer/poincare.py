"""
Census of the fixed-point cells over Δ_N by dimension.
"""
from paving.triangles import triangle_vertices
from .dimensions import fixed_cell_dimension


def poincare(N, g):
    """c_d = number of vertices of Δ_N whose fixed-point cell has dimension d"""
    if N < 0:
        raise ValueError(f"N must be non-negative, got {N}")
    dims = [fixed_cell_dimension(v, g) for v in triangle_vertices(N)]
    coeffs = [0] * (max(dims) + 1)
    for d in dims:
        coeffs[d] += 1
    return coeffs


def poincare_at(coeffs, q):
    """Evaluate the coefficient list at q: the number of F_q-points"""
    return sum(c * q ** d for d, c in enumerate(coeffs))
