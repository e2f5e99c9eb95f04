"""
Truncated formal Laurent series over a prime field.

A series tracks the exponents lo <= e < prec. Coefficients below lo are zero
by construction; coefficients at or above prec are unknown and no operation
ever reads them.
"""
import math
from dataclasses import dataclass

from core.exceptions import PrecisionExhausted, WindowViolation, ZeroSeries
from .field import FieldScalar, check_prime

INFINITY = math.inf


@dataclass(frozen=True, eq=False)
class LaurentSeries:
    q: int
    lo: int
    prec: int
    coeffs: tuple

    def __post_init__(self):
        check_prime(self.q)
        if self.lo > self.prec:
            raise WindowViolation(f"lo {self.lo} exceeds prec {self.prec}")
        if len(self.coeffs) != self.prec - self.lo:
            raise WindowViolation(
                f"{len(self.coeffs)} coefficients for window [{self.lo}, {self.prec})"
            )

    # Constructors

    @classmethod
    def zero(cls, q, prec, lo=0):
        lo = min(lo, prec)
        return cls(q, lo, prec, (0,) * (prec - lo))

    @classmethod
    def one(cls, q, prec):
        return cls.monomial(q, 0, 1, prec)

    @classmethod
    def monomial(cls, q, exponent, coefficient=1, prec=None):
        if prec is None:
            prec = exponent + 1
        return cls.from_terms(q, {exponent: coefficient}, prec)

    @classmethod
    def from_terms(cls, q, terms, prec, lo=None):
        """Build a series from {exponent: coefficient} (or (exponent, coefficient) pairs)"""
        terms = dict(terms)
        if lo is None:
            nonzero = [e for e, c in terms.items() if c % q]
            lo = min(nonzero) if nonzero else 0
        lo = min(lo, prec)
        coeffs = [0] * (prec - lo)
        for e, c in terms.items():
            c %= q
            if not c:
                continue
            if e < lo:
                raise WindowViolation(f"Term at exponent {e} lies below lo {lo}")
            if e < prec:
                coeffs[e - lo] = c
        return cls(q, lo, prec, tuple(coeffs))

    # Inspection

    def coefficient(self, e):
        if e < self.lo:
            return 0
        if e >= self.prec:
            raise PrecisionExhausted(f"Coefficient of p^{e} is beyond prec {self.prec}")
        return self.coeffs[e - self.lo]

    def scalar(self, e):
        return FieldScalar(self.coefficient(e), self.q)

    def terms(self):
        """Nonzero (exponent, coefficient) pairs in increasing exponent order"""
        return tuple((self.lo + idx, c) for idx, c in enumerate(self.coeffs) if c)

    def is_zero(self):
        return not any(self.coeffs)

    def valuation(self, strict=False):
        """Least exponent with a nonzero coefficient; INFINITY for zero.

        With strict=True a vanishing window raises PrecisionExhausted instead,
        for callers that need a finite answer.
        """
        for idx, c in enumerate(self.coeffs):
            if c:
                return self.lo + idx
        if strict:
            raise PrecisionExhausted(f"No nonzero coefficient below prec {self.prec}")
        return INFINITY

    def normalize(self):
        """Strip leading zeros so lo records the true valuation"""
        v = self.valuation()
        if v == INFINITY:
            return LaurentSeries(self.q, self.prec, self.prec, ())
        return LaurentSeries(self.q, v, self.prec, self.coeffs[v - self.lo:])

    # Arithmetic

    def _check(self, other):
        if self.q != other.q:
            raise TypeError('Cannot combine series over different fields')

    def add(self, other):
        self._check(other)
        prec = min(self.prec, other.prec)
        lo = min(self.lo, other.lo, prec)
        q = self.q
        coeffs = tuple(
            (self._raw(e) + other._raw(e)) % q for e in range(lo, prec)
        )
        return LaurentSeries(q, lo, prec, coeffs)

    def _raw(self, e):
        if e < self.lo or e >= self.prec:
            return 0
        return self.coeffs[e - self.lo]

    def neg(self):
        q = self.q
        return LaurentSeries(q, self.lo, self.prec, tuple(-c % q for c in self.coeffs))

    def sub(self, other):
        return self.add(other.neg())

    def scale(self, c):
        """Multiply every coefficient by c, an int or a FieldScalar of the same field"""
        if isinstance(c, FieldScalar):
            self._check(c)
            c = c.value
        q = self.q
        return LaurentSeries(q, self.lo, self.prec, tuple(c * x % q for x in self.coeffs))

    def shift(self, k):
        """Multiply by p^k"""
        return LaurentSeries(self.q, self.lo + k, self.prec + k, self.coeffs)

    def mul(self, other):
        self._check(other)
        q = self.q
        lo = self.lo + other.lo
        prec = min(self.lo + other.prec, other.lo + self.prec)
        coeffs = [0] * (prec - lo)
        right = other.terms()
        for ea, ca in self.terms():
            for eb, cb in right:
                e = ea + eb
                if e >= prec:
                    break
                coeffs[e - lo] = (coeffs[e - lo] + ca * cb) % q
        return LaurentSeries(q, lo, prec, tuple(coeffs))

    def invert_unit(self):
        """Multiplicative inverse of a series with finite valuation.

        If self = p^v * u with u known on [0, prec - v), the inverse is
        p^-v * u^-1 known on [-v, prec - 2v).
        """
        v = self.valuation()
        if v == INFINITY:
            raise ZeroSeries(f"Cannot invert {self}")
        q = self.q
        unit = self.coeffs[v - self.lo:]
        length = len(unit)
        lead_inv = self.scalar(v).inverse().value
        inv = [0] * length
        inv[0] = lead_inv
        for k in range(1, length):
            acc = 0
            for i in range(1, k + 1):
                if unit[i]:
                    acc += unit[i] * inv[k - i]
            inv[k] = -lead_inv * acc % q
        return LaurentSeries(q, -v, -v + length, tuple(inv))

    def slice(self, start, stop):
        """Keep the coefficients with exponents in [start, stop), zero the rest"""
        if not self.lo <= start <= stop <= self.prec:
            raise WindowViolation(
                f"Slice [{start}, {stop}) outside tracked window [{self.lo}, {self.prec})"
            )
        coeffs = tuple(
            c if start <= self.lo + idx < stop else 0
            for idx, c in enumerate(self.coeffs)
        )
        return LaurentSeries(self.q, self.lo, self.prec, coeffs)

    def restrict(self, lo, hi, prec=None):
        """Exact polynomial on [lo, hi) obtained by dropping the terms at or above hi.

        Nonzero terms below lo raise WindowViolation; a window reaching past
        the known precision raises PrecisionExhausted.
        """
        prec = self.prec if prec is None else prec
        hi = max(lo, hi)
        for e, c in self.terms():
            if e >= lo:
                break
            raise WindowViolation(f"Term {c}*p^{e} lies below window start {lo}")
        if hi > self.prec:
            raise PrecisionExhausted(f"Window end {hi} is beyond prec {self.prec}")
        if prec < hi:
            raise PrecisionExhausted(f"Requested prec {prec} is below window end {hi}")
        terms = {e: c for e, c in self.terms() if e < hi}
        return LaurentSeries.from_terms(self.q, terms, prec, lo=lo)

    # Python protocol

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __neg__ = neg

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.q, self.prec, self.terms()) == (other.q, other.prec, other.terms())

    def __hash__(self):
        return hash((self.q, self.prec, self.terms()))

    def __str__(self):
        body = ' + '.join(f'{c}*p^{e}' for e, c in self.terms()) or '0'
        return f'{body} [prec {self.prec}]'

    def __repr__(self):
        return f'LaurentSeries(F_{self.q}: {self})'
