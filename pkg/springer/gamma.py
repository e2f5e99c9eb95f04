"""
Regular split compact elements γ = diag(u1, u2, u3).

The units are ordered so that v(1 - u1/u2) = v(1 - u1/u3) = m and
v(1 - u2/u3) = n with n >= m >= 0; a = n - m.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property

from core.exceptions import PrecisionExhausted, ValuationMismatch
from lattice.matrices import SeriesMatrix
from series.field import check_prime
from series.laurent import LaurentSeries

logger = logging.getLogger(__name__)

PAIRS = ((0, 1), (0, 2), (1, 2))


def difference_valuation(u, w):
    """v(1 - u/w), which equals v(w - u) for units"""
    return (LaurentSeries.one(u.q, u.prec) - u * w.invert_unit()).valuation(strict=True)


@dataclass(frozen=True)
class SplitElement:
    u1: LaurentSeries
    u2: LaurentSeries
    u3: LaurentSeries
    m: int
    n: int

    @property
    def a(self):
        return self.n - self.m

    @property
    def units(self):
        return (self.u1, self.u2, self.u3)

    @property
    def q(self):
        return self.u1.q

    @property
    def prec(self):
        return min(u.prec for u in self.units)

    @classmethod
    def from_units(cls, u1, u2, u3):
        """Order three distinct units so the pair with the larger difference
        valuation sits in positions 2 and 3.

        Two of the three pairwise valuations always agree and the third is at
        least as large.
        """
        units = (u1, u2, u3)
        for u in units:
            if u.valuation() != 0:
                raise ValuationMismatch(f"{u} is not a unit")
        try:
            vals = {pair: difference_valuation(units[pair[0]], units[pair[1]]) for pair in PAIRS}
        except PrecisionExhausted as exc:
            raise ValuationMismatch(f"Units are not distinct within the window: {exc}") from exc
        far = max(PAIRS, key=lambda pair: (vals[pair], pair))
        near = next(idx for idx in range(3) if idx not in far)
        m = min(vals.values())
        n = vals[far]
        ordered = (units[near], units[far[0]], units[far[1]])
        return cls(*ordered, m=m, n=n)

    @cached_property
    def ratios(self):
        """u_r / u_c for every ordered pair, computed once"""
        inverses = [u.invert_unit() for u in self.units]
        return {
            (r, c): self.units[r] * inverses[c]
            for r in range(3) for c in range(3)
        }

    def ratio(self, r, c):
        """u_r / u_c with 1-based indices"""
        return self.ratios[(r - 1, c - 1)]

    def conjugate(self, matrix):
        """γ M γ^-1, whose (r, c) entry is M_rc u_r / u_c"""
        return SeriesMatrix.of([
            [matrix.entry(r, c) if r == c else matrix.entry(r, c) * self.ratios[(r, c)]
             for c in range(3)]
            for r in range(3)
        ])

    def to_dict(self):
        return {
            'm': self.m,
            'n': self.n,
            'a': self.a,
            'units': [[[e, c] for e, c in u.terms()] for u in self.units],
        }


def _candidate(m, n, c, c2, q, prec):
    one = LaurentSeries.one(q, prec)
    u2 = one + LaurentSeries.monomial(q, m, c, prec)
    u3 = u2 * (one + LaurentSeries.monomial(q, n, c2, prec))
    return one, u2, u3


def make_gamma(m, n, q, prec):
    """A split element with invariants (m, n) over F_q.

    Tries u1 = 1, u2 = 1 + c p^m, u3 = u2 (1 + c' p^n) over the unit scalars
    c, c' and keeps the first choice whose recomputed valuations match.
    """
    check_prime(q)
    if not 0 <= m <= n:
        raise ValuationMismatch(f"Need n >= m >= 0, got m={m}, n={n}")
    if prec <= n:
        raise PrecisionExhausted(f"prec {prec} cannot certify valuation {n}")
    for c, c2 in itertools.product(range(1, q), repeat=2):
        try:
            g = SplitElement.from_units(*_candidate(m, n, c, c2, q, prec))
        except ValuationMismatch as exc:
            logger.debug(f"Rejected c={c}, c'={c2} for m={m}, n={n}, q={q}: {exc}")
            continue
        if (g.m, g.n) == (m, n):
            logger.info(f"Built split element m={m}, n={n} over F_{q} with c={c}, c'={c2}")
            return g
        logger.debug(f"c={c}, c'={c2} gave valuations ({g.m}, {g.n}); retrying")
    raise ValuationMismatch(f"No split element with m={m}, n={n} over F_{q}")
