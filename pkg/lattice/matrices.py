"""
3x3 matrices with truncated Laurent series entries.
"""
from dataclasses import dataclass

from series.laurent import LaurentSeries


@dataclass(frozen=True)
class SeriesMatrix:
    rows: tuple

    @classmethod
    def of(cls, rows):
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, q, prec):
        one, zero = LaurentSeries.one(q, prec), LaurentSeries.zero(q, prec)
        return cls.of([[one if r == c else zero for c in range(3)] for r in range(3)])

    def entry(self, r, c):
        return self.rows[r][c]

    def __matmul__(self, other):
        rows = []
        for r in range(3):
            row = []
            for c in range(3):
                acc = self.rows[r][0] * other.rows[0][c]
                acc = acc + self.rows[r][1] * other.rows[1][c]
                acc = acc + self.rows[r][2] * other.rows[2][c]
                row.append(acc)
            rows.append(row)
        return SeriesMatrix.of(rows)

    def _minor(self, r, c):
        keep_r = [i for i in range(3) if i != r]
        keep_c = [j for j in range(3) if j != c]
        (a, b), (d, e) = (
            (self.rows[keep_r[0]][keep_c[0]], self.rows[keep_r[0]][keep_c[1]]),
            (self.rows[keep_r[1]][keep_c[0]], self.rows[keep_r[1]][keep_c[1]]),
        )
        return a * e - b * d

    def adjugate(self):
        rows = []
        for r in range(3):
            row = []
            for c in range(3):
                minor = self._minor(c, r)
                row.append(minor if (r + c) % 2 == 0 else minor.neg())
            rows.append(row)
        return SeriesMatrix.of(rows)

    def determinant(self):
        m = self.rows
        return (
            m[0][0] * self._minor(0, 0)
            - m[0][1] * self._minor(0, 1)
            + m[0][2] * self._minor(0, 2)
        )

    def inverse(self):
        """Adjugate scaled by the inverse determinant"""
        det_inv = self.determinant().invert_unit()
        return SeriesMatrix.of([[entry * det_inv for entry in row] for row in self.adjugate().rows])

    def unipotent_inverse(self):
        """Inverse of a determinant-one matrix, which is its adjugate"""
        return self.adjugate()

    def __str__(self):
        return '\n'.join(' | '.join(str(e) for e in row) for row in self.rows)
