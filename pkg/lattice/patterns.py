"""
Entrywise valuation patterns for subgroups such as I, I^a and vKv^-1.
"""
from dataclasses import dataclass
from functools import lru_cache

from django.db import models

from core.exceptions import PrecisionExhausted


class Constraint(models.TextChoices):
    AT_LEAST = 'atleast', 'valuation at least a bound'
    UNIT = 'unit', 'valuation exactly zero'


@dataclass(frozen=True)
class EntryConstraint:
    kind: str
    bound: int = 0

    @classmethod
    def at_least(cls, bound):
        return cls(Constraint.AT_LEAST, bound)

    @classmethod
    def unit(cls):
        return cls(Constraint.UNIT, 0)

    def intersect(self, other):
        if Constraint.UNIT in (self.kind, other.kind):
            bound = max(self.bound, other.bound)
            if bound > 0:
                raise ValueError('A unit entry cannot have positive valuation')
            return EntryConstraint.unit()
        return EntryConstraint.at_least(max(self.bound, other.bound))

    def satisfied_by(self, entry):
        """Decide the constraint on a series entry.

        Raises PrecisionExhausted when every tracked coefficient vanishes but
        the window stops before the bound, so the answer is unknown.
        """
        target = self.bound if self.kind == Constraint.AT_LEAST else 0
        for e in range(entry.lo, min(target, entry.prec)):
            if entry.coefficient(e):
                return False
        if self.kind == Constraint.AT_LEAST:
            if entry.prec < target:
                raise PrecisionExhausted(
                    f"Entry known below {entry.prec} cannot certify valuation >= {target}"
                )
            return True
        if entry.prec <= 0:
            raise PrecisionExhausted('Entry window ends before the constant term')
        return entry.coefficient(0) != 0

    def __str__(self):
        if self.kind == Constraint.UNIT:
            return 'unit'
        return f'>={self.bound}'


@dataclass(frozen=True)
class ValuationPattern:
    entries: tuple

    @classmethod
    def from_bounds(cls, bounds, unit_diagonal=False):
        """bounds: a function (row, col) -> int"""
        rows = []
        for r in range(3):
            row = []
            for c in range(3):
                if unit_diagonal and r == c:
                    row.append(EntryConstraint.unit())
                else:
                    row.append(EntryConstraint.at_least(bounds(r, c)))
            rows.append(tuple(row))
        return cls(tuple(rows))

    def entry(self, r, c):
        return self.entries[r][c]

    def bound(self, r, c):
        return self.entries[r][c].bound

    def intersect(self, other):
        return ValuationPattern(tuple(
            tuple(self.entries[r][c].intersect(other.entries[r][c]) for c in range(3))
            for r in range(3)
        ))

    def __str__(self):
        return '\n'.join(' '.join(f'{str(e):>5}' for e in row) for row in self.entries)


def iwahori_pattern(a=0):
    """I^a, the conjugate of the Iwahori subgroup by diag(1, p^a, p^a)"""
    upper = {(0, 1): -a, (0, 2): -a, (1, 2): 0}
    lower = {(1, 0): a + 1, (2, 0): a + 1, (2, 1): 1}
    table = {**upper, **lower}
    return ValuationPattern.from_bounds(lambda r, c: table[(r, c)], unit_diagonal=True)


def conjugation_pattern(v):
    """vKv^-1: entry (r, c) has valuation at least e_r - e_c"""
    e = v.exponents
    return ValuationPattern.from_bounds(lambda r, c: e[r] - e[c])


@lru_cache(maxsize=None)
def stabilizer_pattern(v, a=0):
    """I^a ∩ vKv^-1, the stabilizer of v inside I^a"""
    return iwahori_pattern(a).intersect(conjugation_pattern(v))


def intersection_pattern(a):
    """I ∩ I^a"""
    return iwahori_pattern(0).intersect(iwahori_pattern(a))


def translated_pattern(v, w, shift):
    """p^-shift · vKw^-1: entry (r, c) has valuation at least -shift + v_r - w_c"""
    ev, ew = v.exponents, w.exponents
    return ValuationPattern.from_bounds(lambda r, c: -shift + ev[r] - ew[c])


def pattern_member(matrix, pattern):
    return all(
        pattern.entry(r, c).satisfied_by(matrix.entry(r, c))
        for r in range(3)
        for c in range(3)
    )
