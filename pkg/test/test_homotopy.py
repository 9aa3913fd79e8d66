"""
Defines unit-tests for 'quivalg/homotopy.py' that cannot be implemented inside docstrings.
"""
from unittest import TestCase

from quivalg.analysis import cartan
from quivalg.exceptions import ComplexError, Condition1Failure, Condition2Failure, TiltingFailure
from quivalg.homotopy import (
    ChainMap,
    ProjComplex,
    build_tilting_T,
    build_tilting_generators,
    endomorphism_algebra,
    euler_hom_dimension,
    hom_complexes,
    verify_spherical_presentation,
    verify_tilting
)
from quivalg.presets import PresetParams, load_preset
from quivalg.suites import expected_cartan

PARAMS = PresetParams(2)
SPHERICAL_ARROWS = [
    [0, 1, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 0],
    [1, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0]
]


def tetrahedral():
    return load_preset('tetrahedral', PARAMS)


class Complexes(TestCase):
    def setUp(self):
        self.algebra = tetrahedral()
        self.vertex = self.algebra.quiver.vertex_index

    def test_differentials_square_to_zero(self):
        self.assertRaisesRegex(
            ComplexError,
            'd1∘d2 of X is not zero',
            lambda: ProjComplex(
                self.algebra,
                {2: (self.vertex('5'),), 1: (self.vertex('1'),), 0: (self.vertex('3'),)},
                {2: {(0, 0): self.algebra.path_vector('delta')}, 1: {(0, 0): self.algebra.path_vector('alpha')}},
                'X'
            )
        )

    def test_entry_outside_block(self):
        self.assertRaisesRegex(
            ComplexError,
            'Entry of d1 of Y must lie in e3·A·e1',
            lambda: ProjComplex(
                self.algebra,
                {1: (self.vertex('1'),), 0: (self.vertex('3'),)},
                {1: {(0, 0): self.algebra.path_vector('beta')}},
                'Y'
            )
        )

    def test_missing_summand(self):
        self.assertRaisesRegex(
            ComplexError,
            'refers to a missing summand',
            lambda: ProjComplex(
                self.algebra,
                {1: (self.vertex('1'),), 0: (self.vertex('3'),)},
                {1: {(1, 0): self.algebra.path_vector('alpha')}}
            )
        )

    def test_shift(self):
        t3 = build_tilting_T(self.algebra)[2]
        shifted = t3.shift(1)
        self.assertEqual(shifted.degrees, (1, 2))
        self.assertEqual(repr(shifted), 'T3[1]')
        self.assertEqual(repr(t3.shift(0)), 'T3')
        self.assertEqual(shifted.differential(2)[0, 0], self.algebra.path_vector('sigma'))
        self.assertEqual(t3.shift(2).differential(3), t3.differential(1))
        self.assertEqual(t3.summands(), [self.vertex('3'), self.vertex('4'), self.vertex('2')])
        self.assertFalse(t3.is_stalk())

    def test_repr_without_name(self):
        complex_ = ProjComplex(self.algebra, {0: (self.vertex('1'), self.vertex('2'))})
        self.assertEqual(repr(complex_), 'ProjComplex(0: P1 + P2)')


class HomSpaces(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.algebra = tetrahedral()
        cls.complexes = build_tilting_T(cls.algebra)

    def test_stalks(self):
        t1 = self.complexes[0]
        self.assertEqual(len(hom_complexes(t1, t1)), 3)
        self.assertEqual(len(hom_complexes(t1, t1, 1)), 0)

    def test_into_two_term_complex(self):
        t1, t3 = self.complexes[0], self.complexes[2]
        self.assertEqual(len(hom_complexes(t1, t3)), 3)
        for t in self.complexes:
            self.assertEqual(len(hom_complexes(t3, t, 1)), 0)
            self.assertEqual(len(hom_complexes(t, t3, -1)), 0)

    def test_euler_form(self):
        matrix = cartan(self.algebra)
        t1, t3, t6 = self.complexes[0], self.complexes[2], self.complexes[5]
        self.assertEqual(euler_hom_dimension(t1, t3, matrix), 3)
        self.assertEqual(euler_hom_dimension(t1, t6, matrix), 2)
        for x in self.complexes:
            for y in self.complexes:
                self.assertEqual(euler_hom_dimension(x, y, matrix), len(hom_complexes(x, y)))

    def test_classes(self):
        t3 = self.complexes[2]
        space = hom_complexes(t3, t3)
        identity = t3.identity()
        identity.check()
        self.assertFalse(space.is_null_homotopic(identity))
        self.assertTrue(space.is_null_homotopic(identity.combine(identity, -self.algebra.field.one)))
        self.assertEqual(space.chain_dimension - space.null_homotopic_dimension, len(space))
        for k, representative in enumerate(space.basis()):
            representative.check()
            coordinates = space.class_of(representative)
            self.assertEqual([int(c) for c in coordinates], [int(i == k) for i in range(len(space))])
        difference = space.representative(space.class_of(identity)).combine(identity, -self.algebra.field.one)
        self.assertTrue(space.is_null_homotopic(difference))

    def test_non_chain_map(self):
        t3 = self.complexes[2]
        partial = ChainMap(t3, t3, {0: t3.identity().component(0)})
        self.assertRaisesRegex(ComplexError, 'does not commute with the differentials in degree 1', partial.check)
        self.assertRaisesRegex(ComplexError, 'is not a chain map', lambda: hom_complexes(t3, t3).class_of(partial))


class Tilting(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.algebra = tetrahedral()
        cls.complexes = build_tilting_T(cls.algebra)

    def test_conditions_hold(self):
        report = verify_tilting(self.complexes)
        self.assertEqual(sorted(report.generated), ['1', '2', '3', '4', '5', '6'])
        self.assertEqual(report.generated[-1], '2')
        self.assertEqual(report.support, (0, 1))
        self.assertFalse(any(report.hom_dimensions.values()))

    def test_stalk_sum_is_tilting(self):
        stalks = [ProjComplex.stalk(self.algebra, v) for v in range(6)]
        self.assertEqual(verify_tilting(stalks).support, (0, 0))

    def test_missing_summand(self):
        with self.assertRaises(Condition2Failure) as context:
            verify_tilting(self.complexes[:2] + self.complexes[3:])
        self.assertEqual(context.exception.missing, ('2',))
        self.assertRegex(str(context.exception), 'P2 is not generated')

    def test_shifted_summand(self):
        t1 = self.complexes[0]
        with self.assertRaises(Condition1Failure) as context:
            verify_tilting([t1, t1.shift(1)])
        self.assertEqual((context.exception.pair, context.exception.shift, context.exception.dimension), ((0, 1), -1, 3))

    def test_shifts_must_cover_support(self):
        self.assertRaisesRegex(TiltingFailure, 'do not cover the degree support', lambda: verify_tilting(self.complexes, (1,)))


class Endomorphisms(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.complexes = build_tilting_T(tetrahedral())
        cls.endomorphisms = endomorphism_algebra(cls.complexes)
        cls.generators = build_tilting_generators(cls.complexes, PARAMS)

    def test_dimension_and_cartan(self):
        self.assertEqual(len(self.endomorphisms), 76)
        self.assertEqual(cartan(self.endomorphisms), expected_cartan('spherical', 2))
        self.assertEqual(self.endomorphisms.vertices, ('T1', 'T2', 'T3', 'T4', 'T5', 'T6'))

    def test_associativity(self):
        self.assertEqual(self.endomorphisms.check_associativity(), [])

    def test_unit(self):
        one = self.endomorphisms.one()
        for u in range(len(self.endomorphisms)):
            x = {u: self.endomorphisms.field.one}
            self.assertEqual(self.endomorphisms.multiply(one, x), x)
            self.assertEqual(self.endomorphisms.multiply(x, one), x)

    def test_product_is_composition(self):
        alpha, beta = self.generators['alpha'], self.generators['beta']
        self.assertEqual(
            self.endomorphisms.class_vector(alpha.compose(beta)),
            self.endomorphisms.multiply(self.endomorphisms.class_vector(alpha), self.endomorphisms.class_vector(beta))
        )

    def test_generators(self):
        self.assertEqual(sorted(self.generators), ['alpha', 'beta', 'delta', 'gamma', 'nu', 'omega', 'rho', 'sigma'])
        for generator in self.generators.values():
            self.assertTrue(self.endomorphisms.class_vector(generator))

    def test_presentation(self):
        report = verify_spherical_presentation(self.endomorphisms, self.generators, PARAMS)
        self.assertEqual([r.label for r in report.identities], [f'G{i}' for i in range(1, 11)])
        self.assertTrue(all(r.passed for r in report.identities), [r for r in report.identities if not r.passed])
        self.assertTrue(all(r.passed for r in report.starred), [r for r in report.starred if not r.passed])
        self.assertEqual(report.generated_dimension, 76)
        self.assertTrue(report.isomorphic)
        self.assertEqual(report.gabriel, SPHERICAL_ARROWS)

    def test_stalk_sum_gives_the_algebra_back(self):
        algebra = tetrahedral()
        endomorphisms = endomorphism_algebra([ProjComplex.stalk(algebra, v) for v in range(6)])
        self.assertEqual(len(endomorphisms), 72)
        self.assertEqual(cartan(endomorphisms).to_lists(), cartan(algebra).to_lists())
