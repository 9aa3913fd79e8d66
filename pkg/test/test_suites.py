"""
Defines unit-tests for 'quivalg/suites.py' that cannot be implemented inside docstrings.
"""
import json
from unittest import TestCase
from unittest.mock import patch

import jsonschema

from quivalg.exceptions import CompletionBudgetExceeded, InvalidParameters
from quivalg.presets import PresetParams
from quivalg.suites import REPORT_SCHEMA, CheckResult, Status, VerificationReport, expected_cartan, plan_suite, run_suite

PARAMS = PresetParams(2)


class Planning(TestCase):
    def test_names(self):
        self.assertEqual([name for name, _ in plan_suite('tilting', PARAMS, 0)],
                         ['m=2/tilting/conditions', 'm=2/tilting/generators'])
        names = [name for name, _ in plan_suite('identities', PARAMS, 0)]
        self.assertIn('m=2/spherical/consequences', names)
        self.assertIn('m=2/tetrahedral/truncation-oracle', names)
        self.assertNotIn('m=3/spherical/truncation-oracle', [name for name, _ in plan_suite('identities', PresetParams(3), 0)])

    def test_full_suite(self):
        names = [name for name, _ in plan_suite('all', PARAMS, 0)]
        self.assertEqual(len(names), 35)
        self.assertEqual(len(set(names)), len(names))
        self.assertEqual(names[-1], 'm=2/tetrahedral/omega4/S6')

    def test_unknown_suite(self):
        self.assertRaisesRegex(InvalidParameters, "Unknown suite 'speed'", lambda: plan_suite('speed', PARAMS, 0))
        self.assertRaisesRegex(InvalidParameters, 'At least one parameter set is required', lambda: run_suite('tilting', [], 0))

    def test_expected_cartan(self):
        self.assertEqual(expected_cartan('spherical', 3)[1], [3, 4, 3, 3, 3, 2])
        self.assertRaisesRegex(InvalidParameters, "Unknown preset 'cube'", lambda: expected_cartan('cube', 2))


class Running(TestCase):
    def test_tilting_suite_passes(self):
        report = run_suite('tilting', [PARAMS], 0)
        self.assertTrue(report.passed)
        self.assertEqual(report.exit_code(), 0)
        self.assertEqual(report.summary(), {'pass': 2, 'fail': 0, 'inconclusive': 0, 'skipped': 0})
        self.assertEqual(report.check('m=2/tilting/conditions').data['support'], [0, 1])
        self.assertRaises(KeyError, lambda: report.check('m=2/tilting/other'))

    def test_identity_suite_passes(self):
        report = run_suite('identities', [PARAMS], 0)
        self.assertTrue(report.passed, [c for c in report.checks if c.status is not Status.PASS])
        self.assertEqual(report.check('m=2/spherical/dimension').data, {'dimension': 76, 'expected': 76})
        for preset in ('spherical', 'tetrahedral'):
            oracle = report.check(f'm=2/{preset}/truncation-oracle').data
            self.assertEqual(oracle['truncation'], 14)
            self.assertEqual(sum(map(sum, oracle['blocks'])), 76 if preset == 'spherical' else 72)

    def test_failure_skips_the_rest(self):
        with patch('quivalg.suites.expected_cartan', return_value=[[0]]):
            report = run_suite('identities', [PARAMS], 0)
        statuses = [check.status for check in report.checks]
        self.assertEqual(statuses[:3], [Status.PASS, Status.FAIL, Status.SKIPPED])
        self.assertTrue(all(status is Status.SKIPPED for status in statuses[2:]))
        self.assertEqual(report.checks[2].message, 'not run after an earlier failure')
        self.assertEqual(report.exit_code(), 1)

    def test_keep_going(self):
        with patch('quivalg.suites.expected_cartan', return_value=[[0]]):
            report = run_suite('identities', [PARAMS], 0, keep_going=True)
        self.assertEqual(report.summary()['fail'], 2)
        self.assertEqual(report.summary()['skipped'], 0)

    def test_budget(self):
        with patch('quivalg.suites.load_preset', side_effect=CompletionBudgetExceeded('Completion created more than 5 rules')):
            report = run_suite('tilting', [PARAMS], 0)
        self.assertTrue(report.budget_exceeded)
        self.assertEqual(report.exit_code(), 3)
        self.assertEqual(report.checks[0].data, {'error': 'CompletionBudgetExceeded'})
        self.assertEqual(report.checks[1].status, Status.SKIPPED)


class Reports(TestCase):
    def setUp(self):
        checks = [
            CheckResult('m=2/x/cartan', Status.PASS, {'cartan': [[1, 2], [2, 1]]}, '', 0.25),
            CheckResult('m=2/x/socle', Status.INCONCLUSIVE, {'socle_dims': [1, 1]}, 'no witness')
        ]
        self.report = VerificationReport('identities', [PARAMS], 7, None, checks)

    def test_json_is_canonical(self):
        text = self.report.to_json()
        document = json.loads(text)
        jsonschema.validate(instance=document, schema=REPORT_SCHEMA)
        self.assertEqual(text, json.dumps(document, sort_keys=True, indent=2, separators=(',', ': '), ensure_ascii=False) + '\n')
        self.assertEqual(document['summary'], {'pass': 1, 'fail': 0, 'inconclusive': 1, 'skipped': 0})
        self.assertEqual((document['field'], document['lambda'], document['seed']), ('Q', '1', 7))
        self.assertNotIn('seconds', document['checks'][0])
        self.assertEqual(json.loads(self.report.to_json(timings=True))['checks'][0]['seconds'], 0.25)

    def test_schema_rejects_unknown_status(self):
        document = self.report.to_dict()
        document['checks'][0]['status'] = 'maybe'
        self.assertRaises(jsonschema.ValidationError, lambda: jsonschema.validate(instance=document, schema=REPORT_SCHEMA))

    def test_markdown(self):
        text = self.report.to_markdown()
        self.assertTrue(text.startswith('# quivalg verification: identities\n'))
        self.assertIn('| m=2/x/socle | inconclusive | no witness |', text)
        self.assertIn('| 1 | 1 | 2 |', text)
        self.assertNotIn('seconds', text)
        self.assertIn('| 0.25 |', self.report.to_markdown(timings=True))

    def test_exit_code(self):
        self.assertFalse(self.report.passed)
        self.assertEqual(self.report.exit_code(), 1)
        self.assertEqual(repr(self.report), 'VerificationReport(identities, pass=1, fail=0, inconclusive=1, skipped=0)')
