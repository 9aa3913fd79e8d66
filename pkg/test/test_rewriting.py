"""
Defines unit-tests for 'quivalg/rewriting.py' that cannot be implemented inside docstrings.
"""
import random
from unittest import TestCase

from quivalg.analysis import cartan
from quivalg.exceptions import (
    CompletionBudgetExceeded,
    MalformedRelation,
    NoFiniteCertificate,
    NonParallelRelation,
    StabilizationFailure
)
from quivalg.field import FieldSpec
from quivalg.presets import PRESETS, PresetParams, load_preset
from quivalg.quiver import AlgebraElement, Quiver, Relation, random_path
from quivalg.rewriting import build_algebra, complete, normal_form, orient, verify_by_truncation

K = FieldSpec()
LOOPS = Quiver(('1',), (('x', '1', '1'), ('y', '1', '1')))
CYCLE = Quiver(('1', '2'), (('a', '1', '2'), ('b', '2', '1')))


def element(quiver: Quiver, *names: str, coefficient=1) -> AlgebraElement:
    if not names:
        return AlgebraElement.from_path(quiver, K, quiver.stationary(0), coefficient)
    return AlgebraElement.from_path(quiver, K, quiver.path(*names), coefficient)


class Orientation(TestCase):
    def test_leading_path_is_largest(self):
        rules = orient([element(LOOPS, 'x', 'y') - element(LOOPS, 'y', 'x')])
        self.assertEqual([rule.format() for rule in rules], ['y.x -> x.y'])

    def test_longer_path_leads(self):
        rules = orient([element(LOOPS, 'x') - element(LOOPS, 'y', 'y', coefficient=3)])
        self.assertEqual([rule.format() for rule in rules], ['y.y -> 1/3*x'])

    def test_trivial_relation(self):
        zero = element(LOOPS, 'x') - element(LOOPS, 'x')
        self.assertRaisesRegex(MalformedRelation, 'is trivially zero', lambda: orient([zero]))
        self.assertRaisesRegex(
            MalformedRelation,
            "Relation 'r' is trivially zero",
            lambda: orient([Relation(element(LOOPS, 'x'), element(LOOPS, 'x'), 'r')])
        )

    def test_stationary_lead(self):
        self.assertRaisesRegex(MalformedRelation, 'is led by a stationary path', lambda: orient([element(LOOPS)]))

    def test_non_parallel(self):
        self.assertRaisesRegex(
            NonParallelRelation,
            'do not share source and target',
            lambda: orient([element(CYCLE, 'a') + element(CYCLE, 'b')])
        )


class Completion(TestCase):
    def test_overlap_adds_rule(self):
        relations = [element(LOOPS, 'y', 'x') - element(LOOPS, 'x', 'x'), element(LOOPS, 'y', 'y')]
        rules = complete(orient(relations), 4)
        self.assertEqual([rule.format() for rule in rules], ['y.x -> x.x', 'y.y -> 0', 'x.x.x -> 0'])

    def test_resolvable_overlaps_add_nothing(self):
        relations = [
            element(LOOPS, 'x', 'y') - element(LOOPS, 'y', 'x'),
            element(LOOPS, 'x', 'x'),
            element(LOOPS, 'y', 'y')
        ]
        self.assertEqual(len(complete(orient(relations), 4)), 3)

    def test_empty(self):
        self.assertEqual(complete([], 4), [])

    def test_budget(self):
        relations = [element(LOOPS, 'y', 'x') - element(LOOPS, 'x', 'x'), element(LOOPS, 'y', 'y')]
        self.assertRaisesRegex(
            CompletionBudgetExceeded,
            'Completion created more than 1 rules',
            lambda: complete(orient(relations), 4, budget=1)
        )

    def test_degenerate_ideal(self):
        relations = [element(LOOPS, 'x') - element(LOOPS), element(LOOPS, 'x', 'x')]
        self.assertRaisesRegex(
            MalformedRelation,
            'The ideal contains the stationary path e1',
            lambda: build_algebra(LOOPS, relations, 4)
        )


class Building(TestCase):
    def test_added_rules_shrink_the_basis(self):
        relations = [element(LOOPS, 'y', 'x') - element(LOOPS, 'x', 'x'), element(LOOPS, 'y', 'y')]
        algebra = build_algebra(LOOPS, relations, 4)
        self.assertEqual(len(algebra), 6)
        self.assertEqual(algebra.labels, ('e1', 'x', 'y', 'x.x', 'x.y', 'x.x.y'))
        self.assertEqual([rule.format() for rule in algebra.added_rules], ['x.x.x -> 0'])

    def test_commutative_exterior(self):
        relations = [
            element(LOOPS, 'x', 'y') - element(LOOPS, 'y', 'x'),
            element(LOOPS, 'x', 'x'),
            element(LOOPS, 'y', 'y')
        ]
        algebra = build_algebra(LOOPS, relations, 4)
        self.assertEqual(len(algebra), 4)
        self.assertEqual(algebra.element_vector(element(LOOPS, 'y', 'x')), algebra.path_vector('x', 'y'))
        self.assertEqual(normal_form(element(LOOPS, 'y', 'x', 'y'), algebra), AlgebraElement.zero(LOOPS, K))

    def test_multiplication_table(self):
        algebra = build_algebra(CYCLE, [element(CYCLE, 'a', 'b')], 4)
        self.assertEqual(len(algebra), 5)
        a, b = algebra.path_vector('a'), algebra.path_vector('b')
        self.assertFalse(algebra.multiply(a, b))
        self.assertEqual(algebra.multiply(b, a), algebra.path_vector('b', 'a'))
        self.assertEqual(algebra.multiply(algebra.stationary_vector(0), a), a)
        self.assertEqual(algebra.vector_element(algebra.path_vector('b', 'a')), algebra.element('b', 'a'))
        self.assertEqual(cartan(algebra).to_lists(), [[1, 1], [1, 2]])

    def test_no_certificate(self):
        self.assertRaisesRegex(
            NoFiniteCertificate,
            'Path x.x.x of length 3 is irreducible',
            lambda: build_algebra(LOOPS, [element(LOOPS, 'y')], 2, raise_cap=False)
        )

    def test_cap_is_raised(self):
        with self.assertLogs('quivalg.rewriting', 'WARNING'):
            algebra = build_algebra(LOOPS, [element(LOOPS, 'y'), element(LOOPS, *'xxxxx')], 2)
        self.assertEqual(algebra.degree_cap, 6)
        self.assertEqual(len(algebra), 5)


class Truncation(TestCase):
    def test_agrees_with_completion(self):
        relations = [element(CYCLE, 'a', 'b'), element(CYCLE, 'b', 'a')]
        self.assertEqual(verify_by_truncation(CYCLE, relations, 3), cartan(build_algebra(CYCLE, relations, 4)).to_lists())

    def test_stabilization_failure(self):
        self.assertRaisesRegex(
            StabilizationFailure,
            'Truncated dimensions change from 3 at degree 2 to 5 at degree 4',
            lambda: verify_by_truncation(LOOPS, [element(LOOPS, 'y')], 2)
        )


def random_element(algebra, rng: random.Random) -> AlgebraElement:
    quiver, field = algebra.quiver, algebra.field
    x = AlgebraElement.zero(quiver, field)
    for _ in range(rng.randint(1, 3)):
        x += AlgebraElement.from_path(quiver, field, random_path(quiver, 6, rng), rng.randint(-3, 3))
    return x


class NormalForms(TestCase):
    def test_rewriting_strategies_agree(self):
        rng = random.Random(0)
        for preset in PRESETS:
            algebra = load_preset(preset, PresetParams(2))
            for _ in range(1000):
                path = random_path(algebra.quiver, algebra.degree_cap, rng)
                x = AlgebraElement.from_path(algebra.quiver, algebra.field, path)
                self.assertEqual(algebra.normal_form(x), algebra.normal_form(x, rightmost=True), (preset, path))

    def test_normal_form_is_multiplicative(self):
        rng = random.Random(1)
        for preset in PRESETS:
            algebra = load_preset(preset, PresetParams(2))
            for _ in range(200):
                x, y = random_element(algebra, rng), random_element(algebra, rng)
                self.assertEqual(
                    normal_form(x * y, algebra),
                    normal_form(normal_form(x, algebra) * normal_form(y, algebra), algebra)
                )

    def test_normal_form_is_supported_on_the_basis(self):
        rng = random.Random(2)
        algebra = load_preset('tetrahedral', PresetParams(2))
        basis = set(algebra.basis_paths)
        for _ in range(100):
            self.assertLessEqual(set(normal_form(random_element(algebra, rng), algebra).terms), basis)
