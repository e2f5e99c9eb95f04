"""
The fixed-point test for γ acting on a cell.

M v K is fixed by γ iff M^-1 γ M γ^-1 lies in the stabilizer of v: at level 0
for V cells and at level a for S and T cells.
"""
from lattice.patterns import pattern_member, stabilizer_pattern
from lattice.standard_form import matrix_of
from paving.regions import Region


def fixed_point_level(region, g):
    return 0 if region == Region.V else g.a


def commutator(form, g):
    """M^-1 γ M γ^-1 for the standard form M"""
    matrix = matrix_of(form)
    return matrix.unipotent_inverse() @ g.conjugate(matrix)


def is_fixed(form, g, region):
    pattern = stabilizer_pattern(form.vertex, fixed_point_level(region, g))
    return pattern_member(commutator(form, g), pattern)
