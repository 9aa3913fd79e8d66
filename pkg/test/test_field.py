"""
Defines unit-tests for 'quivalg/field.py' that cannot be implemented inside docstrings.
"""
import random
from fractions import Fraction
from unittest import TestCase

from quivalg.exceptions import DivisionByZero, InvalidParameters
from quivalg.field import FieldKind, FieldSpec, scalar_arith


class Construction(TestCase):
    def test_rationals_by_default(self):
        field = FieldSpec()
        self.assertIs(field.kind, FieldKind.RATIONALS)
        self.assertEqual(field.label, 'Q')
        self.assertEqual(field.format(field.lambda_), '1')

    def test_prime_field(self):
        field = FieldSpec(5, -1)
        self.assertIs(field.kind, FieldKind.PRIME_FIELD)
        self.assertEqual(field.characteristic, 5)
        self.assertEqual(field.format(field.lambda_), '4')

    def test_non_prime_characteristic(self):
        self.assertRaisesRegex(
            InvalidParameters,
            'Field characteristic must be 0 or a prime, got 6',
            lambda: FieldSpec(6)
        )
        self.assertRaisesRegex(
            InvalidParameters,
            'Field characteristic must be 0 or a prime, got -3',
            lambda: FieldSpec(-3)
        )

    def test_zero_lambda(self):
        self.assertRaisesRegex(InvalidParameters, 'lambda must be a nonzero element', lambda: FieldSpec(0, 0))
        self.assertRaisesRegex(InvalidParameters, 'lambda must be a nonzero element', lambda: FieldSpec(5, 10))

    def test_parse(self):
        self.assertEqual(FieldSpec.parse('Q', '2'), FieldSpec(0, 2))
        self.assertEqual(FieldSpec.parse('Fp:5', '-1'), FieldSpec(5, 4))
        self.assertRaisesRegex(InvalidParameters, "Field must be 'Q' or 'Fp:<p>', got 'R'", lambda: FieldSpec.parse('R'))
        self.assertRaisesRegex(InvalidParameters, 'Cannot read a prime', lambda: FieldSpec.parse('Fp:x'))

    def test_with_lambda(self):
        self.assertEqual(FieldSpec(7).with_lambda(3), FieldSpec(7, 3))
        self.assertNotEqual(FieldSpec(7), FieldSpec(7, 3))
        self.assertEqual(hash(FieldSpec(0, '1/2')), hash(FieldSpec(0, Fraction(1, 2))))


class Conversion(TestCase):
    def test_rational_strings(self):
        field = FieldSpec()
        self.assertEqual(field.format(field.convert('-3/6')), '-1/2')
        self.assertEqual(field.format(field.convert(Fraction(4, 2))), '2')

    def test_vanishing_denominator(self):
        field = FieldSpec(3)
        self.assertRaisesRegex(DivisionByZero, 'Denominator 3 vanishes in F3', lambda: field.convert('1/3'))

    def test_garbage(self):
        self.assertRaisesRegex(
            InvalidParameters,
            "Cannot read a rational number from 'abc'",
            lambda: FieldSpec().convert('abc')
        )
        self.assertRaisesRegex(InvalidParameters, 'Cannot convert', lambda: FieldSpec().convert(1.5))


class Arithmetic(TestCase):
    def test_examples(self):
        q = FieldSpec()
        self.assertEqual(q.format(scalar_arith(q, 'add', q.convert('1/2'), q.convert('1/3'))), '5/6')
        f5 = FieldSpec(5)
        self.assertEqual(f5.format(scalar_arith(f5, 'inv', f5.convert(2))), '3')
        for field in (FieldSpec(0, 7), FieldSpec(5, 2)):
            lam = field.lambda_
            self.assertEqual(scalar_arith(field, 'mul', lam, scalar_arith(field, 'inv', lam)), field.one)
            self.assertEqual(scalar_arith(field, 'neg', lam) + lam, field.zero)

    def test_inverse_of_zero(self):
        for field in (FieldSpec(), FieldSpec(7)):
            self.assertRaisesRegex(
                DivisionByZero,
                f'Cannot invert zero in {field.label}',
                lambda: scalar_arith(field, 'inv', field.zero)
            )

    def test_wrong_operands(self):
        q = FieldSpec()
        self.assertRaisesRegex(InvalidParameters, "Operation 'add' needs two operands", lambda: scalar_arith(q, 'add', q.one))
        self.assertRaisesRegex(
            InvalidParameters,
            "Operation 'neg' takes a single operand",
            lambda: scalar_arith(q, 'neg', q.one, q.one)
        )
        self.assertRaisesRegex(InvalidParameters, "Unknown scalar operation 'pow'", lambda: scalar_arith(q, 'pow', q.one))

    def test_field_axioms_on_random_triples(self):
        rng = random.Random(0)
        for field in (FieldSpec(), FieldSpec(5), FieldSpec(7)):
            for _ in range(200):
                a, b, c = (field.random_element(rng, 20) for _ in range(3))
                self.assertEqual((a + b) + c, a + (b + c))
                self.assertEqual((a * b) * c, a * (b * c))
                self.assertEqual(a * (b + c), a * b + a * c)
                self.assertEqual((a + b) - b, a)
                if a:
                    self.assertEqual(a * field.inv(a), field.one)
