"""
Defines unit-tests for 'quivalg/presets.py' that cannot be implemented inside docstrings.
"""
from unittest import TestCase

from quivalg.analysis import cartan
from quivalg.exceptions import InvalidParameters, NonParallelRelation, PresentationSyntaxError, QuiverError
from quivalg.field import FieldSpec
from quivalg.presets import (
    PresetParams,
    TriangulationData,
    load_preset,
    parse_presentation,
    preset_presentation,
    serialize_presentation,
    spherical,
    tetrahedral
)
from quivalg.quiver import AlgebraElement

HEADER = 'vertex 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n'


class Params(TestCase):
    def test_degree_bounds(self):
        self.assertRaisesRegex(InvalidParameters, 'Degree m must be at least 2, got 1', lambda: PresetParams(1))
        self.assertEqual(PresetParams(1, allow_m1=True).m, 1)
        self.assertRaisesRegex(InvalidParameters, 'Degree m must be at least 1, got 0', lambda: PresetParams(0, allow_m1=True))

    def test_equality(self):
        self.assertEqual(PresetParams(2), PresetParams(2, FieldSpec()))
        self.assertNotEqual(PresetParams(2), PresetParams(2, FieldSpec(0, 2)))
        self.assertEqual(PresetParams(3, FieldSpec(5, 2)).lambda_, FieldSpec(5, 2).lambda_)

    def test_unknown_preset(self):
        self.assertRaisesRegex(InvalidParameters, "Unknown preset 'cube'", lambda: preset_presentation('cube', PresetParams(2)))


class Parsing(TestCase):
    def test_power_and_lambda(self):
        quiver, relations, field = parse_presentation(HEADER + 'relation r: (a.b)^2.a = L*a - 1/2*e1.a', FieldSpec(0, 3))
        a = AlgebraElement.from_path(quiver, field, quiver.path('a'))
        self.assertEqual(relations[0].label, 'r')
        self.assertEqual(relations[0].lhs, AlgebraElement.from_path(quiver, field, quiver.path('a', 'b', 'a', 'b', 'a')))
        self.assertEqual(relations[0].rhs, a * '5/2')

    def test_comments_and_default_labels(self):
        text = '# two-cycle\n' + HEADER + '\nrelation a.b = 0  # first\nrelation b.a = 0\n'
        _, relations, _ = parse_presentation(text)
        self.assertEqual([r.label for r in relations], ['r1', 'r2'])
        self.assertFalse(relations[1].rhs)

    def test_unknown_arrow_position(self):
        with self.assertRaises(PresentationSyntaxError) as context:
            parse_presentation(HEADER + 'relation a = c')
        self.assertEqual((context.exception.line, context.exception.column), (4, 14))
        self.assertRegex(str(context.exception), "Unknown arrow 'c'")

    def test_statement_errors(self):
        self.assertRaisesRegex(PresentationSyntaxError, "Unknown statement 'edge'", lambda: parse_presentation('edge 1 2'))
        self.assertRaisesRegex(
            PresentationSyntaxError,
            "Expected 'arrow <name>: <source> -> <target>'",
            lambda: parse_presentation('vertex 1 2\narrow a 1 -> 2')
        )
        self.assertRaisesRegex(
            PresentationSyntaxError,
            'Arrow declared after the first relation',
            lambda: parse_presentation(HEADER + 'relation a.b = 0\narrow c: 1 -> 1')
        )
        self.assertRaisesRegex(PresentationSyntaxError, "Expected '=' in a relation", lambda: parse_presentation(HEADER + 'relation a.b'))

    def test_expression_errors(self):
        self.assertRaisesRegex(
            PresentationSyntaxError,
            'Consecutive factors of the path do not compose',
            lambda: parse_presentation(HEADER + 'relation a.a = 0')
        )
        self.assertRaisesRegex(
            PresentationSyntaxError,
            "Expected '\\^' after a parenthesized path",
            lambda: parse_presentation(HEADER + 'relation (a.b) = 0')
        )
        self.assertRaisesRegex(
            PresentationSyntaxError,
            'Only cycles can be raised to a power',
            lambda: parse_presentation(HEADER + 'relation (a)^2 = 0')
        )
        self.assertRaisesRegex(PresentationSyntaxError, "Unexpected character '\\$'", lambda: parse_presentation(HEADER + 'relation a$ = 0'))

    def test_quiver_errors_carry_a_position(self):
        self.assertRaisesRegex(
            PresentationSyntaxError,
            "Arrow 'a' refers to the undeclared vertex '3' \\(line 1, column 1\\)",
            lambda: parse_presentation('vertex 1 2\narrow a: 1 -> 3')
        )

    def test_non_parallel(self):
        self.assertRaisesRegex(
            NonParallelRelation,
            "Terms of relation 'r1' on line 4 do not share source and target",
            lambda: parse_presentation(HEADER + 'relation a = b')
        )

    def test_round_trip(self):
        for params in (PresetParams(2), PresetParams(3, FieldSpec(0, '-1/2')), PresetParams(2, FieldSpec(7, 3))):
            presentation = spherical(params)
            parsed = parse_presentation(serialize_presentation(presentation), params.field)
            self.assertEqual(parsed.quiver, presentation.quiver)
            self.assertEqual(parsed.relations, presentation.relations)


class Triangulation(TestCase):
    def setUp(self):
        self.quiver, self.relations, self.triangulation = tetrahedral(PresetParams(2))

    def test_binomials_start_with_theta_f_theta(self):
        f = self.triangulation.f
        for relation in self.relations[:12]:
            (path, _), = relation.lhs
            first, second = (self.quiver.arrows[a].name for a in path.arrows)
            self.assertEqual(f[first], second)

    def test_binomial_words(self):
        self.assertEqual(self.triangulation.binomial_words('gamma'), (('gamma', 'delta'), ('beta', 'epsilon')))
        self.assertEqual(self.triangulation.binomial_words('nu'), (('nu', 'mu'), ('delta', 'xi')))

    def test_permutations_have_order_three(self):
        for permutation in (self.triangulation.f, self.triangulation.g):
            for name in permutation:
                self.assertEqual(permutation[permutation[permutation[name]]], name)
                self.assertNotEqual(permutation[name], name)

    def test_bad_orbits(self):
        orbits = self.triangulation.f_orbits()
        self.assertRaisesRegex(
            QuiverError,
            'does not have length 3',
            lambda: TriangulationData(self.quiver, orbits[:-1] + (orbits[-1][:2],), self.triangulation.g_orbits())
        )
        self.assertRaisesRegex(
            QuiverError,
            'Orbits of f do not cover every arrow exactly once',
            lambda: TriangulationData(self.quiver, orbits[:-1], self.triangulation.g_orbits())
        )
        self.assertRaisesRegex(
            QuiverError,
            "Arrow 'gamma' lies in two orbits of g",
            lambda: TriangulationData(self.quiver, orbits, self.triangulation.g_orbits() + (('gamma', 'delta', 'eta'),))
        )

    def test_zero_relations(self):
        labels = [r.label for r in self.relations]
        self.assertEqual(labels[:3], ['B1', 'B2', 'B3'])
        self.assertIn('Z(alpha)', labels)
        self.assertTrue(all(not r.rhs for r in self.relations[12:]))

    def test_zero_relations_regenerate_from_orbits(self):
        for m in (2, 3):
            params = PresetParams(m)
            quiver, relations, triangulation = tetrahedral(params)
            f, g = triangulation.f, triangulation.g
            zero_relations = {r.label: r for r in relations[12:]}
            self.assertEqual(len(zero_relations), 12)
            for arrow in quiver.arrows:
                theta = arrow.name
                word = [theta, f[theta], f[f[theta]]] * (m - 1) + [theta, f[theta], g[f[theta]]]
                relation = zero_relations[f'Z({theta})']
                self.assertEqual(relation.lhs, AlgebraElement.from_path(quiver, params.field, quiver.path(*word)))
                self.assertFalse(relation.rhs)


class Presets(TestCase):
    def test_spherical_dimension(self):
        algebra = load_preset('spherical', PresetParams(2))
        self.assertEqual(len(algebra), 76)
        self.assertEqual(cartan(algebra).to_lists()[0], [3, 2, 3, 2, 2, 2])
        self.assertIs(load_preset('spherical', PresetParams(2)), algebra)

    def test_tetrahedral_dimension(self):
        algebra = load_preset('tetrahedral', PresetParams(2))
        self.assertEqual(len(algebra), 72)
        self.assertEqual(cartan(algebra).to_lists()[0], [3, 1, 2, 2, 2, 2])

    def test_prime_field_and_lambda(self):
        self.assertEqual(len(load_preset('tetrahedral', PresetParams(2, FieldSpec(5, 3)))), 72)
        self.assertEqual(len(load_preset('spherical', PresetParams(2, FieldSpec(0, -1)))), 76)
