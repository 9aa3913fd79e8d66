"""
Defines unit-tests for 'quivalg/representations.py' that cannot be implemented inside docstrings.
"""
from unittest import TestCase

from quivalg.analysis import cartan
from quivalg.exceptions import ModuleError
from quivalg.field import FieldSpec
from quivalg.presets import PresetParams, load_preset
from quivalg.quiver import AlgebraElement, Quiver, Relation
from quivalg.representations import (
    ModuleMap,
    Representation,
    direct_sum,
    hom_space,
    modules_isomorphic,
    omega_orbit,
    projective,
    projective_cover,
    simple,
    syzygy,
    top_dimensions
)
from quivalg.rewriting import build_algebra

K = FieldSpec()
ONE = K.one
CYCLE = Quiver(('1', '2'), (('a', '1', '2'), ('b', '2', '1')))


def cycle_algebra():
    ab = AlgebraElement.from_path(CYCLE, K, CYCLE.path('a', 'b'))
    return build_algebra(CYCLE, [Relation(ab, AlgebraElement.zero(CYCLE, K), 'ab')], 4)


class Construction(TestCase):
    def test_wrong_sizes(self):
        algebra = cycle_algebra()
        self.assertRaisesRegex(
            ModuleError,
            'Representation needs 2 dimensions and 2 matrices, got 1 and 2',
            lambda: Representation(algebra, [1], [[], []])
        )
        self.assertRaisesRegex(
            ModuleError,
            "Matrix of arrow 'a' does not map dimension 1 to dimension 0",
            lambda: Representation(algebra, [1, 0], [[{0: ONE}], []])
        )

    def test_relation_must_act_by_zero(self):
        self.assertRaisesRegex(
            ModuleError,
            "Relation 'ab' does not act by zero",
            lambda: Representation(cycle_algebra(), [1, 1], [[{0: ONE}], [{0: ONE}]])
        )

    def test_map_must_commute(self):
        algebra = cycle_algebra()
        source = Representation(algebra, [1, 1], [[{0: ONE}], [{}]])
        bad = ModuleMap(source, source, ([{0: ONE}], [{}]))
        self.assertRaisesRegex(ModuleError, "does not commute with the action of arrow 'a'", bad.check)
        ModuleMap(source, source, ([{0: ONE}], [{0: ONE}])).check()

    def test_empty_sum(self):
        algebra = cycle_algebra()
        self.assertEqual(direct_sum([], algebra).dims, (0, 0))
        self.assertRaisesRegex(ValueError, 'The algebra of an empty direct sum must be given', lambda: direct_sum([]))


class Projectives(TestCase):
    def test_dimension_vectors_are_cartan_rows(self):
        for preset in ('spherical', 'tetrahedral'):
            algebra = load_preset(preset, PresetParams(2))
            rows = cartan(algebra).to_lists()
            for v in range(6):
                self.assertEqual(list(projective(algebra, v).dims), rows[v])

    def test_top(self):
        algebra = load_preset('tetrahedral', PresetParams(2))
        self.assertEqual(top_dimensions(projective(algebra, 2)), [0, 0, 1, 0, 0, 0])
        self.assertEqual(top_dimensions(direct_sum([simple(algebra, 0), simple(algebra, 0)])), [2, 0, 0, 0, 0, 0])

    def test_cover_of_simple(self):
        algebra = load_preset('tetrahedral', PresetParams(2))
        cover = projective_cover(simple(algebra, 3))
        self.assertEqual(cover.summands, (3,))
        cover.epi.check()
        self.assertEqual(cover.projective, projective(algebra, 3))

    def test_hom_into_simples(self):
        algebra = cycle_algebra()
        for i in range(2):
            for j in range(2):
                self.assertEqual(len(hom_space(projective(algebra, i), simple(algebra, j))), int(i == j))


class Syzygies(TestCase):
    def test_syzygy_of_simple_is_radical(self):
        algebra = load_preset('spherical', PresetParams(2))
        row = cartan(algebra).to_lists()[0]
        self.assertEqual(list(syzygy(simple(algebra, 0)).dims), [row[0] - 1] + row[1:])

    def test_isomorphism_search(self):
        algebra = cycle_algebra()
        p = projective(algebra, 1)
        witness = modules_isomorphic(p, projective(algebra, 1))
        self.assertIsNotNone(witness)
        self.assertTrue(witness.is_invertible())
        self.assertIsNone(modules_isomorphic(p, projective(algebra, 0)))

    def test_simples_are_periodic(self):
        algebra = load_preset('tetrahedral', PresetParams(2))
        orbit = omega_orbit(algebra, 0, 4)
        self.assertEqual([step.step for step in orbit], [1, 2, 3, 4])
        self.assertFalse(orbit[0].isomorphic)
        self.assertTrue(orbit[-1].isomorphic)
        self.assertEqual(orbit[-1].dims, (1, 0, 0, 0, 0, 0))

    def test_steps_must_be_positive(self):
        self.assertRaisesRegex(ValueError, 'Number of steps must be positive, got 0', lambda: omega_orbit(cycle_algebra(), 0, 0))
