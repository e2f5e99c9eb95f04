import itertools
import random

from django.test import SimpleTestCase

from core.exceptions import PrecisionExhausted, WindowViolation, ZeroSeries
from .field import FieldScalar, SUPPORTED_PRIMES
from .laurent import INFINITY, LaurentSeries
from .precision import precision_budget, resolve_precision


def series(q, terms, prec, lo=None):
    return LaurentSeries.from_terms(q, terms, prec, lo=lo)


def agree(a, b):
    """Equal on the window both series know about"""
    top = min(a.prec, b.prec)
    return all(a.coefficient(e) == b.coefficient(e) for e in range(min(a.lo, b.lo), top))


class FieldScalarTests(SimpleTestCase):

    def test_field_axioms_exhaustive(self):
        for q in (2, 3, 5, 7):
            elements = FieldScalar.elements(q)
            zero, one = FieldScalar(0, q), FieldScalar(1, q)
            for x in elements:
                self.assertEqual(x + zero, x)
                self.assertEqual(x * one, x)
                self.assertEqual(x + (-x), zero)
                if x:
                    self.assertEqual(x * x.inverse(), one)
                for y in elements:
                    self.assertEqual(x + y, y + x)
                    self.assertEqual(x * y, y * x)
                    for z in elements:
                        self.assertEqual((x * y) * z, x * (y * z))
                        self.assertEqual(x * (y + z), x * y + x * z)

    def test_rejects_out_of_range(self):
        with self.assertRaises(ValueError):
            FieldScalar(5, 5)
        with self.assertRaises(ValueError):
            FieldScalar(1, 4)

    def test_zero_has_no_inverse(self):
        with self.assertRaises(ZeroSeries):
            FieldScalar(0, 3).inverse()

    def test_supported_primes_stop_at_17(self):
        self.assertEqual(max(SUPPORTED_PRIMES), 17)


class LaurentArithmeticTests(SimpleTestCase):

    def test_add_cancels_in_characteristic_two(self):
        a = series(2, {1: 1, 2: 1}, 5)
        b = series(2, {1: 1}, 5)
        total = a + b
        self.assertEqual(total.terms(), ((2, 1),))
        self.assertEqual(total.prec, 5)

    def test_add_zero_is_identity(self):
        x = series(3, {-1: 2, 0: 1, 3: 1}, 6)
        self.assertEqual(x + LaurentSeries.zero(3, 6), x)

    def test_add_takes_smaller_precision(self):
        total = series(2, {-1: 1}, 3) + series(2, {1: 1}, 2)
        self.assertEqual(total.terms(), ((-1, 1), (1, 1)))
        self.assertEqual(total.prec, 2)

    def test_mul_examples(self):
        p = series(2, {1: 1}, 6)
        self.assertEqual((p * p).terms(), ((2, 1),))
        one_plus_p = series(2, {0: 1, 1: 1}, 6)
        self.assertEqual((one_plus_p * one_plus_p).terms(), ((0, 1), (2, 1)))
        x = series(5, {-2: 3, 1: 4}, 7)
        self.assertTrue(agree(x * LaurentSeries.one(5, 10), x))

    def test_scale(self):
        self.assertEqual(series(5, {0: 2, 1: 3}, 4).scale(3).terms(), ((0, 1), (1, 4)))

    def test_scale_by_field_scalar(self):
        x = series(5, {0: 2, 1: 3}, 4)
        self.assertEqual(x.scale(FieldScalar(3, 5)), x.scale(3))
        with self.assertRaises(TypeError):
            x.scale(FieldScalar(1, 3))

    def test_scalar_coefficient(self):
        x = series(7, {-1: 4, 2: 6}, 5)
        self.assertEqual(x.scalar(-1), FieldScalar(4, 7))
        self.assertFalse(x.scalar(0))
        self.assertEqual(x.scalar(-1) * x.scalar(-1).inverse(), FieldScalar(1, 7))

    def test_mul_window(self):
        a = series(3, {-1: 1}, 4)
        b = series(3, {2: 1}, 5)
        product = a * b
        self.assertEqual(product.lo, 1)
        self.assertEqual(product.prec, min(-1 + 5, 2 + 4))

    def test_invert_unit_examples(self):
        one = LaurentSeries.one(2, 4)
        self.assertEqual(one.invert_unit().terms(), ((0, 1),))
        inv = series(2, {0: 1, 1: 1}, 4).invert_unit()
        self.assertEqual(inv.terms(), ((0, 1), (1, 1), (2, 1), (3, 1)))
        self.assertEqual(inv.prec, 4)
        mono = LaurentSeries.monomial(3, 2, 1, prec=8).invert_unit()
        self.assertEqual(mono.valuation(), -2)
        self.assertEqual(mono.terms(), ((-2, 1),))

    def test_invert_zero_raises(self):
        with self.assertRaises(ZeroSeries):
            LaurentSeries.zero(3, 5).invert_unit()

    def test_inverse_times_unit_is_one(self):
        rng = random.Random(20)
        for q in (2, 3, 5):
            for _ in range(300):
                coeffs = {e: rng.randrange(q) for e in range(1, 8)}
                coeffs[0] = rng.randrange(1, q)
                a = series(q, coeffs, 8)
                residual = a * a.invert_unit() - LaurentSeries.one(q, 8)
                self.assertGreaterEqual(residual.valuation(), residual.prec)

    def test_valuation(self):
        self.assertEqual(series(2, {3: 1, 5: 1}, 8).valuation(), 3)
        self.assertEqual(LaurentSeries.zero(2, 8).valuation(), INFINITY)
        self.assertEqual(series(3, {-2: 1}, 4).valuation(), -2)
        with self.assertRaises(PrecisionExhausted):
            LaurentSeries.zero(2, 8).valuation(strict=True)

    def test_valuation_is_additive(self):
        for q in (2, 3):
            for ca, cb in itertools.product(range(1, q), repeat=2):
                a = series(q, {-1: ca, 2: 1}, 6)
                b = series(q, {2: cb, 3: 1}, 6)
                self.assertEqual((a * b).valuation(), a.valuation() + b.valuation())

    def test_slice_examples(self):
        z = series(2, {1: 1, 2: 1, 3: 1}, 6, lo=1)
        self.assertEqual(z.slice(3, 4).terms(), ((3, 1),))
        self.assertTrue(z.slice(1, 1).is_zero())
        self.assertEqual(z.slice(z.lo, z.prec), z)

    def test_slice_complement_restores(self):
        x = series(3, {-1: 2, 0: 1, 2: 2, 4: 1}, 6)
        part = x.slice(0, 3)
        self.assertEqual(part + (x - part), x)

    def test_slice_outside_window(self):
        x = series(3, {0: 1}, 4)
        with self.assertRaises(WindowViolation):
            x.slice(-1, 2)
        with self.assertRaises(WindowViolation):
            x.slice(0, 5)

    def test_restrict(self):
        x = series(5, {1: 2, 3: 1, 6: 4}, 9)
        fitted = x.restrict(1, 4, prec=12)
        self.assertEqual(fitted.terms(), ((1, 2), (3, 1)))
        self.assertEqual(fitted.prec, 12)
        with self.assertRaises(WindowViolation):
            x.restrict(2, 4)
        with self.assertRaises(PrecisionExhausted):
            x.restrict(1, 10)

    def test_normalize_records_valuation(self):
        x = series(3, {2: 1}, 6, lo=-1)
        self.assertEqual(x.lo, -1)
        self.assertEqual(x.normalize().lo, 2)
        self.assertEqual(x.normalize(), x)

    def test_text_form(self):
        self.assertEqual(str(series(3, {0: 1, 2: 2}, 5)), '1*p^0 + 2*p^2 [prec 5]')
        self.assertEqual(str(LaurentSeries.zero(2, 3)), '0 [prec 3]')


class RingAxiomTests(SimpleTestCase):

    def sample(self, q, rng):
        lo = rng.randrange(-2, 2)
        terms = {e: rng.randrange(q) for e in range(lo, lo + 5)}
        return series(q, terms, 10, lo=lo)

    def test_ring_axioms_on_common_window(self):
        rng = random.Random(7)
        for q in (2, 3, 5):
            for _ in range(100):
                a, b, c = (self.sample(q, rng) for _ in range(3))
                self.assertTrue(agree(a + b, b + a))
                self.assertTrue(agree(a * b, b * a))
                self.assertTrue(agree((a * b) * c, a * (b * c)))
                self.assertTrue(agree(a * (b + c), a * b + a * c))
                self.assertTrue(agree((a + b) + c, a + (b + c)))


class PrecisionBudgetTests(SimpleTestCase):

    def test_budget_formula(self):
        self.assertEqual(precision_budget(4, 2, 1), 19)
        self.assertEqual(precision_budget(0), 4)

    def test_override_wins(self):
        self.assertEqual(resolve_precision(3, 1, 1, override=40), 40)
        self.assertEqual(resolve_precision(3, 1, 1), 15)
