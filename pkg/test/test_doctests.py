"""
Collects the docstring examples of the 'quivalg' modules into the unit-test run.
"""
import doctest

from quivalg import algebra, analysis, field, functions, homotopy, linalg, presets, quiver, rewriting, settings, suites

MODULES = (algebra, analysis, field, functions, homotopy, linalg, presets, quiver, rewriting, settings, suites)


def load_tests(loader, tests, ignore):
    for module in MODULES:
        tests.addTests(doctest.DocTestSuite(module))
    return tests
