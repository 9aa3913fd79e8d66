"""
Defines unit-tests for 'quivalg/analysis.py' that cannot be implemented inside docstrings.
"""
from unittest import TestCase

from quivalg.analysis import (
    CartanMatrix,
    cartan,
    dimension,
    find_symmetrizing_form,
    gabriel_quiver,
    longest_nonzero_paths,
    radical_generators,
    socle_basis,
    socle_dims,
    socle_is_path_spanned,
    span_closure,
    verify_identity
)
from quivalg.field import FieldSpec
from quivalg.linalg import matrix_from_rows, rank
from quivalg.presets import PresetParams, load_preset
from quivalg.quiver import AlgebraElement, Quiver
from quivalg.rewriting import build_algebra
from quivalg.settings import SYMMETRY_SAMPLE_PAIRS
from quivalg.suites import expected_cartan

K = FieldSpec()
LOOPS = Quiver(('1',), (('x', '1', '1'), ('y', '1', '1')))


def arrow_counts(quiver: Quiver):
    counts = [[0] * len(quiver.vertices) for _ in quiver.vertices]
    for arrow in quiver.arrows:
        counts[arrow.source][arrow.target] += 1
    return counts


def radical_square_zero():
    w = lambda *names: AlgebraElement.from_path(LOOPS, K, LOOPS.path(*names))  # noqa: E731
    return build_algebra(LOOPS, [w('x', 'x'), w('x', 'y'), w('y', 'x'), w('y', 'y')], 2)


class Cartan(TestCase):
    def test_validation(self):
        self.assertRaisesRegex(ValueError, 'Cartan matrix must be square', lambda: CartanMatrix([[1, 2]]))
        self.assertRaisesRegex(ValueError, 'entries must be non-negative', lambda: CartanMatrix([[1, -1], [0, 1]]))

    def test_helpers(self):
        matrix = CartanMatrix([[2, 1], [0, 3]], ('a', 'b'))
        self.assertEqual(matrix.row_sums(), [3, 3])
        self.assertEqual(matrix.column_sums(), [2, 4])
        self.assertEqual(matrix.total(), 6)
        self.assertFalse(matrix.is_symmetric())
        self.assertEqual(matrix, [[2, 1], [0, 3]])
        self.assertEqual(matrix.vertices, ('a', 'b'))
        self.assertEqual(repr(matrix), 'CartanMatrix([[2, 1], [0, 3]])')

    def test_presets(self):
        for preset in ('spherical', 'tetrahedral'):
            algebra = load_preset(preset, PresetParams(2))
            matrix = cartan(algebra)
            self.assertEqual(matrix, expected_cartan(preset, 2))
            self.assertTrue(matrix.is_symmetric())
            self.assertEqual(matrix.total(), dimension(algebra))

    def test_spherical_m3(self):
        algebra = load_preset('spherical', PresetParams(3))
        self.assertEqual(len(algebra), 112)
        self.assertEqual(cartan(algebra), expected_cartan('spherical', 3))


class Identities(TestCase):
    def setUp(self):
        self.algebra = load_preset('spherical', PresetParams(2))

    def test_defining_relation(self):
        self.assertTrue(verify_identity(self.algebra, self.algebra.element('alpha', 'beta', 'nu'),
                                        self.algebra.element('rho', 'omega', 'nu')).passed)

    def test_false_identity(self):
        check = verify_identity(self.algebra, self.algebra.element('alpha', 'beta'), self.algebra.element('rho', 'omega'))
        self.assertFalse(check.passed)
        self.assertTrue(check.residual)

    def test_long_cycles_vanish(self):
        cycle = ('alpha', 'beta', 'gamma', 'sigma')
        zero = AlgebraElement.zero(self.algebra.quiver, self.algebra.field)
        self.assertTrue(verify_identity(self.algebra, self.algebra.element(*(cycle * 2 + ('alpha',))), zero).passed)
        self.assertFalse(verify_identity(self.algebra, self.algebra.element(*(cycle * 2)), zero).passed)


class Socle(TestCase):
    def test_symmetric_presets(self):
        for preset in ('spherical', 'tetrahedral'):
            self.assertEqual(socle_dims(load_preset(preset, PresetParams(2))), [1] * 6)

    def test_radical_square_zero(self):
        algebra = radical_square_zero()
        self.assertEqual(socle_dims(algebra), [2])
        self.assertEqual(longest_nonzero_paths(algebra, 0)[0], 1)
        self.assertFalse(socle_is_path_spanned(algebra, 0))

    def test_spanned_by_longest_paths(self):
        for preset in ('spherical', 'tetrahedral'):
            algebra = load_preset(preset, PresetParams(2))
            for v in range(6):
                self.assertTrue(socle_is_path_spanned(algebra, v), (preset, v))

    def test_spherical_cycle_power_spans_socle(self):
        algebra = load_preset('spherical', PresetParams(2))
        socle, = socle_basis(algebra, 0)
        cycle = algebra.path_vector(*(('alpha', 'beta', 'gamma', 'sigma') * 2))
        self.assertEqual(rank(matrix_from_rows([socle, cycle], len(algebra), algebra.field.domain)), 1)
        self.assertGreaterEqual(longest_nonzero_paths(algebra, 0)[0], 8)


class SymmetrizingForms(TestCase):
    def test_presets(self):
        for preset in ('spherical', 'tetrahedral'):
            algebra = load_preset(preset, PresetParams(2))
            form = find_symmetrizing_form(algebra)
            self.assertIsNotNone(form)
            self.assertEqual(form.gram_rank, len(algebra))
            self.assertEqual(form.verify(algebra, SYMMETRY_SAMPLE_PAIRS), 0)

    def test_not_frobenius(self):
        with self.assertLogs('quivalg.analysis', 'WARNING'):
            self.assertIsNone(find_symmetrizing_form(radical_square_zero(), cap=40))


class Radical(TestCase):
    def test_gabriel_quiver_recovers_arrows(self):
        for preset in ('spherical', 'tetrahedral'):
            algebra = load_preset(preset, PresetParams(2))
            self.assertEqual(gabriel_quiver(algebra), arrow_counts(algebra.quiver))

    def test_arrows_generate_the_radical(self):
        algebra = load_preset('tetrahedral', PresetParams(2))
        self.assertEqual(len(span_closure(algebra, radical_generators(algebra))), len(algebra) - 6)
