"""
Prime field scalars used as series coefficients.
"""
from dataclasses import dataclass

from core.exceptions import ZeroSeries

SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13, 17)


def check_prime(q):
    """Reject field sizes outside the supported primes"""
    if q not in SUPPORTED_PRIMES:
        raise ValueError(f"Unsupported field size {q}; expected one of {SUPPORTED_PRIMES}")
    return q


def inverse_mod(value, q):
    if value % q == 0:
        raise ZeroSeries(f"0 has no inverse in F_{q}")
    return pow(value, -1, q)


@dataclass(frozen=True)
class FieldScalar:
    value: int
    q: int

    def __post_init__(self):
        check_prime(self.q)
        if not 0 <= self.value < self.q:
            raise ValueError(f"{self.value} not in field range to {self.q - 1}")

    @classmethod
    def of(cls, value, q):
        return cls(value % q, q)

    @classmethod
    def elements(cls, q):
        return [cls(v, q) for v in range(q)]

    @classmethod
    def units(cls, q):
        return [cls(v, q) for v in range(1, q)]

    def __repr__(self):
        return f'F_{self.q}({self.value})'

    def __bool__(self):
        return self.value != 0

    def _check(self, other):
        if self.q != other.q:
            raise TypeError('Cannot combine elements of different fields')

    def __add__(self, other):
        self._check(other)
        return FieldScalar((self.value + other.value) % self.q, self.q)

    def __sub__(self, other):
        self._check(other)
        return FieldScalar((self.value - other.value) % self.q, self.q)

    def __mul__(self, other):
        self._check(other)
        return FieldScalar((self.value * other.value) % self.q, self.q)

    def __neg__(self):
        return FieldScalar(-self.value % self.q, self.q)

    def inverse(self):
        return FieldScalar(inverse_mod(self.value, self.q), self.q)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()
