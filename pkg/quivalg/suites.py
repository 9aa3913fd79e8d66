"""
Verification suites over the preset algebras and the report they produce.

A suite is planned as a list of named checks before anything runs, so a run that stops at the first
failure still lists every check, the unreached ones as skipped.
"""
import json
import logging
import random
from enum import Enum
from functools import cached_property
from itertools import product
from time import perf_counter
from typing import Any, Callable, Dict, Final, List, NamedTuple, Optional, Sequence, Tuple

import jsonschema

from quivalg.analysis import (
    cartan,
    dimension,
    find_symmetrizing_form,
    longest_nonzero_paths,
    socle_dims,
    socle_is_path_spanned,
    verify_identity
)
from quivalg.exceptions import BudgetExceeded, InvalidParameters, QuivalgError, StabilizationFailure
from quivalg.homotopy import (
    EndomorphismAlgebra,
    PresentationReport,
    ProjComplex,
    build_tilting_T,
    build_tilting_generators,
    endomorphism_algebra,
    euler_hom_dimension,
    verify_spherical_presentation,
    verify_tilting
)
from quivalg.presets import PRESETS, PresetParams, load_preset, preset_presentation
from quivalg.quiver import AlgebraElement, Quiver
from quivalg.representations import omega_orbit
from quivalg.rewriting import QuotientAlgebra, verify_by_truncation
from quivalg.settings import CAP_RAISE_ATTEMPTS, REPORT_SCHEMA_VERSION, SYMMETRY_SAMPLE_PAIRS

__all__: Final = (
    # Classes
    'CheckResult',
    'Status',
    'VerificationReport',

    # Functions
    'expected_cartan',
    'plan_suite',
    'render_markdown',
    'run_suite',

    # Constants
    'REPORT_SCHEMA',
    'SUITES'
)

_logger = logging.getLogger(__name__)

SUITES: Final = ('identities', 'symmetric', 'tilting', 'derived-equivalence', 'periodicity', 'all')

_ASSOCIATIVITY_SAMPLE: Final = 5000
_PERIOD: Final = 4


class Status(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    INCONCLUSIVE = 'inconclusive'
    SKIPPED = 'skipped'


class CheckResult(NamedTuple):
    name: str
    status: Status
    data: Dict[str, Any]
    message: str = ''
    seconds: float = 0.0


Outcome = Tuple[Status, Dict[str, Any], str]
Plan = List[Tuple[str, Callable[[], Outcome]]]


def _outcome(passed: bool, data: Dict[str, Any], message: str = '') -> Outcome:
    return Status.PASS if passed else Status.FAIL, data, message


REPORT_SCHEMA: Final = {
    '$schema': 'https://json-schema.org/draft/2020-12/schema',
    'type': 'object',
    'required': ['schema_version', 'suite', 'field', 'lambda', 'seed', 'm', 'degree_cap', 'conventions', 'checks',
                 'summary', 'budget_exceeded'],
    'additionalProperties': False,
    'properties': {
        'schema_version': {'const': REPORT_SCHEMA_VERSION},
        'suite': {'enum': list(SUITES)},
        'field': {'type': 'string'},
        'lambda': {'type': 'string'},
        'seed': {'type': 'integer'},
        'm': {'type': 'array', 'items': {'type': 'integer', 'minimum': 1}},
        'degree_cap': {'type': ['integer', 'null']},
        'conventions': {'type': 'object', 'additionalProperties': {'type': 'string'}},
        'checks': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['name', 'status', 'data', 'message'],
                'additionalProperties': False,
                'properties': {
                    'name': {'type': 'string'},
                    'status': {'enum': [s.value for s in Status]},
                    'data': {'type': 'object'},
                    'message': {'type': 'string'},
                    'seconds': {'type': 'number', 'minimum': 0}
                }
            }
        },
        'summary': {
            'type': 'object',
            'required': [s.value for s in Status],
            'additionalProperties': {'type': 'integer', 'minimum': 0}
        },
        'budget_exceeded': {'type': 'boolean'}
    }
}

_CONVENTIONS: Final = {
    'cartan': 'C[i][j] = dim e_i A e_j',
    'homotopy': 'homological grading; X[s]_n = X_(n-s) with differential (-1)^s d; End(T) block (i, j) is Hom(T_j, T_i)',
    'syzygies': 'computed for right modules over A, not for bimodules',
    'field': 'exact arithmetic over the stated prime field; no statement depends on an algebraic closure'
}


class VerificationReport:
    """Outcome of one suite run; every planned check appears exactly once."""

    __slots__ = ('_budget_exceeded', '_checks', '_degree_cap', '_params', '_seed', '_suite')

    def __init__(self,
                 suite: str,
                 params: Sequence[PresetParams],
                 seed: int,
                 degree_cap: Optional[int],
                 checks: Sequence[CheckResult],
                 budget_exceeded: bool = False) -> None:
        self._suite: Final = suite
        self._params: Final = tuple(params)
        self._seed: Final = seed
        self._degree_cap: Final = degree_cap
        self._checks: Final = tuple(checks)
        self._budget_exceeded: Final = budget_exceeded

    def __repr__(self) -> str:
        counts = ', '.join(f'{status}={count}' for status, count in self.summary().items())
        return f'VerificationReport({self._suite}, {counts})'

    @property
    def budget_exceeded(self) -> bool:
        return self._budget_exceeded

    @property
    def checks(self) -> Tuple[CheckResult, ...]:
        return self._checks

    @property
    def passed(self) -> bool:
        return all(check.status is Status.PASS for check in self._checks)

    def check(self, name: str) -> CheckResult:
        for result in self._checks:
            if result.name == name:
                return result
        raise KeyError(name)

    def exit_code(self) -> int:
        """0 when every check passed, 3 when a budget ran out, 1 otherwise."""
        if self._budget_exceeded:
            return 3
        return 0 if self.passed else 1

    def summary(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in Status}
        for result in self._checks:
            counts[result.status.value] += 1
        return counts

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        field = self._params[0].field
        checks = []
        for result in self._checks:
            entry = {'name': result.name, 'status': result.status.value, 'data': result.data, 'message': result.message}
            if timings:
                entry['seconds'] = round(result.seconds, 3)
            checks.append(entry)
        return {
            'schema_version': REPORT_SCHEMA_VERSION,
            'suite': self._suite,
            'field': field.label,
            'lambda': field.format(field.lambda_),
            'seed': self._seed,
            'm': [params.m for params in self._params],
            'degree_cap': self._degree_cap,
            'conventions': dict(_CONVENTIONS),
            'checks': checks,
            'summary': self.summary(),
            'budget_exceeded': self._budget_exceeded
        }

    def to_json(self, timings: bool = False) -> str:
        """
        Canonical JSON: sorted keys and fixed separators, validated against ``REPORT_SCHEMA``.

        Raises:
            jsonschema.ValidationError:  if the report does not match the schema
        """
        document = self.to_dict(timings)
        jsonschema.validate(instance=document, schema=REPORT_SCHEMA)
        return json.dumps(document, sort_keys=True, indent=2, separators=(',', ': '), ensure_ascii=False) + '\n'

    def to_markdown(self, timings: bool = False) -> str:
        return render_markdown(self.to_dict(timings))


def render_markdown(document: Dict[str, Any]) -> str:
    """Markdown rendering of a report document, as produced by ``VerificationReport.to_dict``."""
    timings = any('seconds' in entry for entry in document['checks'])
    lines = [
        f"# quivalg verification: {document['suite']}",
        '',
        f"Field {document['field']}, lambda = {document['lambda']}, m in {document['m']}, seed {document['seed']}.",
        ''
    ]
    lines.extend(f'- {key}: {value}' for key, value in sorted(document['conventions'].items()))
    lines.extend(['', '| check | status | message |' + (' seconds |' if timings else ''),
                  '|---|---|---|' + ('---|' if timings else '')])
    for entry in document['checks']:
        row = f"| {entry['name']} | {entry['status']} | {entry['message']} |"
        if timings:
            row += f" {entry['seconds']} |"
        lines.append(row)
    for entry in document['checks']:
        for key, value in sorted(entry['data'].items()):
            if _is_matrix(value):
                lines.extend(['', f"{entry['name']}: {key}", '', _markdown_matrix(value)])
    lines.extend(['', ', '.join(f'{status}: {count}' for status, count in document['summary'].items()), ''])
    return '\n'.join(lines)


def _is_matrix(value: Any) -> bool:
    return isinstance(value, list) and bool(value) and all(
        isinstance(row, list) and all(isinstance(x, int) for x in row) for row in value
    )


def _markdown_matrix(rows: List[List[int]]) -> str:
    width = len(rows[0])
    header = '| | ' + ' | '.join(str(j + 1) for j in range(width)) + ' |'
    lines = [header, '|---' * (width + 1) + '|']
    lines.extend(f'| {i + 1} | ' + ' | '.join(map(str, row)) + ' |' for i, row in enumerate(rows))
    return '\n'.join(lines)


def expected_cartan(preset: str, m: int) -> List[List[int]]:
    """
    Closed-form Cartan matrices of the presets.

    >>> expected_cartan('tetrahedral', 2)[0]
    [3, 1, 2, 2, 2, 2]
    """
    if preset == 'spherical':
        pattern = (
            (1, 0, 1, 0, 0, 0),
            (0, 1, 0, 0, 0, -1),
            (1, 0, 1, 0, 0, 0),
            (0, 0, 0, 1, -1, 0),
            (0, 0, 0, -1, 1, 0),
            (0, -1, 0, 0, 0, 1)
        )
    elif preset == 'tetrahedral':
        pattern = (
            (1, -1, 0, 0, 0, 0),
            (-1, 1, 0, 0, 0, 0),
            (0, 0, 1, -1, 0, 0),
            (0, 0, -1, 1, 0, 0),
            (0, 0, 0, 0, 1, -1),
            (0, 0, 0, 0, -1, 1)
        )
    else:
        raise InvalidParameters(f"Unknown preset {preset!r}; expected one of {', '.join(PRESETS)}")
    return [[m + x for x in row] for row in pattern]


def _arrow_counts(quiver: Quiver) -> List[List[int]]:
    n = len(quiver.vertices)
    counts = [[0] * n for _ in range(n)]
    for arrow in quiver.arrows:
        counts[arrow.source][arrow.target] += 1
    return counts


def _consequences(quiver: Quiver, params: PresetParams) -> List[Tuple[AlgebraElement, AlgebraElement]]:
    """Identities that follow from the spherical relations; each pair is (lhs, rhs)."""
    field, m = params.field, params.m

    def w(*names: str) -> AlgebraElement:
        return AlgebraElement.from_path(quiver, field, quiver.path(*names))

    abgs, bgsa = ('alpha', 'beta', 'gamma', 'sigma'), ('beta', 'gamma', 'sigma', 'alpha')
    gsab, sabg = ('gamma', 'sigma', 'alpha', 'beta'), ('sigma', 'alpha', 'beta', 'gamma')
    zero = AlgebraElement.zero(quiver, field)
    identities = [
        (w(*(bgsa * (m - 1) + ('beta', 'gamma', 'sigma', 'rho'))), zero),
        (w(*(abgs * m + ('rho',))), zero),
        (w(*(('omega', 'gamma', 'sigma', 'alpha') + bgsa * (m - 1))), zero),
        (w(*(('omega',) + gsab * m)), zero),
        (w(*(sabg * (m - 1) + ('sigma', 'alpha', 'beta', 'nu'))), zero),
        (w(*(gsab * m + ('nu',))), zero),
        (w(*(('delta', 'alpha', 'beta', 'gamma') + sabg * (m - 1))), zero),
        (w(*(('delta',) + abgs * m)), zero)
    ]
    for r in range(2, m + 1):
        identities.append((w(*(('rho', 'omega', 'nu', 'delta') * r)), w(*(abgs * r))))
        identities.append((w(*(('nu', 'delta', 'rho', 'omega') * r)), w(*(gsab * r))))
    return identities


class _Context:
    """Objects shared by the checks of one parameter set, built on first use."""

    def __init__(self, params: PresetParams, seed: int, degree_cap: Optional[int]) -> None:
        self.params = params
        self.seed = seed
        self.degree_cap = degree_cap

    def algebra(self, preset: str) -> QuotientAlgebra:
        return load_preset(preset, self.params, self.degree_cap)

    @cached_property
    def complexes(self) -> List[ProjComplex]:
        return build_tilting_T(self.algebra('tetrahedral'))

    @cached_property
    def endomorphisms(self) -> EndomorphismAlgebra:
        return endomorphism_algebra(self.complexes)

    @cached_property
    def presentation(self) -> PresentationReport:
        generators = build_tilting_generators(self.complexes, self.params)
        return verify_spherical_presentation(self.endomorphisms, generators, self.params)


def _identity_checks(context: _Context) -> Plan:
    params = context.params
    m = params.m
    plan: Plan = []
    for preset in PRESETS:
        expected_dimension = 36 * m + 4 if preset == 'spherical' else 36 * m

        def check_dimension(preset: str = preset, expected: int = expected_dimension) -> Outcome:
            found = dimension(context.algebra(preset))
            return _outcome(found == expected, {'dimension': found, 'expected': expected})

        def check_cartan(preset: str = preset) -> Outcome:
            found = cartan(context.algebra(preset)).to_lists()
            return _outcome(found == expected_cartan(preset, m), {'cartan': found})

        def check_relations(preset: str = preset) -> Outcome:
            algebra = context.algebra(preset)
            relations = preset_presentation(preset, params).relations
            failures = [r.label for r in relations if not verify_identity(algebra, r.lhs, r.rhs).passed]
            return _outcome(not failures, {'checked': len(relations), 'failures': failures})

        plan.extend([
            (f'm={m}/{preset}/dimension', check_dimension),
            (f'm={m}/{preset}/cartan', check_cartan),
            (f'm={m}/{preset}/relations', check_relations)
        ])

    def check_consequences() -> Outcome:
        algebra = context.algebra('spherical')
        identities = _consequences(algebra.quiver, params)
        failures = {
            f'{lhs!r} = {rhs!r}': repr(result.residual)
            for lhs, rhs in identities
            if not (result := verify_identity(algebra, lhs, rhs)).passed
        }
        return _outcome(not failures, {'checked': len(identities), 'failures': failures})

    plan.append((f'm={m}/spherical/consequences', check_consequences))
    if m == 2:
        for preset in PRESETS:
            def check_truncation(preset: str = preset) -> Outcome:
                algebra = context.algebra(preset)
                quiver, relations, _ = preset_presentation(preset, params)
                truncation = algebra.degree_cap + 2
                for attempt in range(CAP_RAISE_ATTEMPTS):
                    try:
                        table = verify_by_truncation(quiver, relations, truncation)
                        break
                    except StabilizationFailure:
                        if attempt == CAP_RAISE_ATTEMPTS - 1:
                            raise
                        truncation += 2
                return _outcome(table == algebra.cartan_blocks(), {'truncation': truncation, 'blocks': table})

            plan.append((f'm={m}/{preset}/truncation-oracle', check_truncation))
    return plan


def _symmetric_checks(context: _Context) -> Plan:
    m = context.params.m
    plan: Plan = []
    for preset in PRESETS:
        def check_form(preset: str = preset) -> Outcome:
            algebra = context.algebra(preset)
            form = find_symmetrizing_form(algebra, context.seed)
            if form is None:
                return Status.INCONCLUSIVE, {'dimension': len(algebra)}, 'no symmetrizing form found within the search cap'
            failures = form.verify(algebra, SYMMETRY_SAMPLE_PAIRS, context.seed)
            data = {
                'gram_rank': form.gram_rank,
                'dimension': len(algebra),
                'candidates_tried': form.candidates_tried,
                'sampled_pairs': SYMMETRY_SAMPLE_PAIRS,
                'sample_failures': failures
            }
            return _outcome(form.gram_rank == len(algebra) and not failures, data)

        def check_socle(preset: str = preset) -> Outcome:
            algebra = context.algebra(preset)
            dims = socle_dims(algebra)
            lengths = [longest_nonzero_paths(algebra, v)[0] for v in range(len(algebra.vertices))]
            spanned = [socle_is_path_spanned(algebra, v) for v in range(len(algebra.vertices))]
            data = {'socle_dims': dims, 'longest_path_lengths': lengths}
            return _outcome(all(d == 1 for d in dims) and all(spanned), data)

        def check_cartan_symmetry(preset: str = preset) -> Outcome:
            matrix = cartan(context.algebra(preset))
            return _outcome(matrix.is_symmetric(), {'cartan': matrix.to_lists()})

        plan.extend([
            (f'm={m}/{preset}/symmetrizing-form', check_form),
            (f'm={m}/{preset}/socle', check_socle),
            (f'm={m}/{preset}/cartan-symmetric', check_cartan_symmetry)
        ])
    return plan


def _tilting_checks(context: _Context) -> Plan:
    m = context.params.m

    def check_tilting() -> Outcome:
        report = verify_tilting(context.complexes)
        return _outcome(True, {
            'hom_spaces': len(report.hom_dimensions),
            'generated': list(report.generated),
            'support': list(report.support)
        })

    def check_generators() -> Outcome:
        generators = build_tilting_generators(context.complexes, context.params)
        return _outcome(len(generators) == 8, {'generators': sorted(generators)})

    return [(f'm={m}/tilting/conditions', check_tilting), (f'm={m}/tilting/generators', check_generators)]


def _derived_equivalence_checks(context: _Context) -> Plan:
    params = context.params
    m = params.m

    def check_dimension() -> Outcome:
        found = len(context.endomorphisms)
        return _outcome(found == 36 * m + 4, {'dimension': found, 'expected': 36 * m + 4})

    def check_cartan() -> Outcome:
        found = cartan(context.endomorphisms).to_lists()
        return _outcome(found == expected_cartan('spherical', m), {'cartan': found})

    def check_euler() -> Outcome:
        endomorphisms = context.endomorphisms
        complexes = endomorphisms.complexes
        matrix = cartan(context.algebra('tetrahedral'))
        mismatches = []
        for i, j in product(range(len(complexes)), repeat=2):
            expected = euler_hom_dimension(complexes[j], complexes[i], matrix)
            found = len(endomorphisms.hom_space(i, j))
            if found != expected:
                mismatches.append(f'Hom({complexes[j]!r}, {complexes[i]!r}): {found} != {expected}')
        return _outcome(not mismatches, {'pairs': len(complexes) ** 2, 'mismatches': mismatches})

    def check_associativity() -> Outcome:
        endomorphisms = context.endomorphisms
        if m == 2:
            failures = endomorphisms.check_associativity()
            sampled = False
        else:
            rng = random.Random(context.seed)
            n = len(endomorphisms)
            triples = [tuple(rng.randrange(n) for _ in range(3)) for _ in range(_ASSOCIATIVITY_SAMPLE)]
            failures = endomorphisms.check_associativity(triples)
            sampled = True
        return _outcome(not failures, {'sampled': sampled, 'failures': [list(t) for t in failures[:10]]})

    def check_presentation() -> Outcome:
        report = context.presentation
        results = report.identities + report.starred
        data = {
            'identities': {r.label: r.passed for r in report.identities},
            'starred': {r.label: r.passed for r in report.starred},
            'residuals': {r.label: r.residual for r in results if not r.passed},
            'generated_dimension': report.generated_dimension,
            'expected_dimension': report.expected_dimension
        }
        return _outcome(report.isomorphic, data, 'End(T) is isomorphic to the spherical algebra'
                        if report.isomorphic else 'presentation of End(T) not certified')

    def check_gabriel() -> Outcome:
        report = context.presentation
        expected = _arrow_counts(context.algebra('spherical').quiver)
        return _outcome(report.gabriel == expected, {'gabriel': report.gabriel})

    return [
        (f'm={m}/end-t/dimension', check_dimension),
        (f'm={m}/end-t/cartan', check_cartan),
        (f'm={m}/end-t/euler-form', check_euler),
        (f'm={m}/end-t/associativity', check_associativity),
        (f'm={m}/end-t/presentation', check_presentation),
        (f'm={m}/end-t/gabriel-quiver', check_gabriel)
    ]


def _periodicity_checks(context: _Context) -> Plan:
    m = context.params.m
    plan: Plan = []
    for preset in PRESETS:
        for vertex in range(6):
            def check_orbit(preset: str = preset, vertex: int = vertex) -> Outcome:
                orbit = omega_orbit(context.algebra(preset), vertex, _PERIOD, context.seed)
                data = {
                    'dims': [list(step.dims) for step in orbit],
                    'isomorphic': [step.isomorphic for step in orbit]
                }
                last = orbit[-1].isomorphic
                if last is None:
                    return Status.INCONCLUSIVE, data, 'dimension vectors agree but no isomorphism was found'
                return _outcome(last, data)

            plan.append((f"m={m}/{preset}/omega{_PERIOD}/S{vertex + 1}", check_orbit))
    return plan


_PLANNERS: Final[Dict[str, Callable[[_Context], Plan]]] = {
    'identities': _identity_checks,
    'symmetric': _symmetric_checks,
    'tilting': _tilting_checks,
    'derived-equivalence': _derived_equivalence_checks,
    'periodicity': _periodicity_checks
}


def plan_suite(suite: str, params: PresetParams, seed: int, degree_cap: Optional[int] = None) -> Plan:
    """
    Names and thunks of the checks of a suite for one parameter set.

    Raises:
        InvalidParameters:  if the suite is unknown
    """
    if suite not in SUITES:
        raise InvalidParameters(f"Unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    context = _Context(params, seed, degree_cap)
    names = [name for name in _PLANNERS if suite in (name, 'all')]
    return [entry for name in names for entry in _PLANNERS[name](context)]


def run_suite(suite: str,
              params: Sequence[PresetParams],
              seed: int,
              degree_cap: Optional[int] = None,
              keep_going: bool = False) -> VerificationReport:
    """
    Runs a suite for every parameter set in order.

    Args:
        suite:       one of ``SUITES``
        params:      parameter sets, typically one per m
        seed:        seed of every randomized search
        degree_cap:  completion cap override
        keep_going:  continue after a failing check instead of skipping the rest
    Returns:
        the report
    """
    if not params:
        raise InvalidParameters('At least one parameter set is required')
    plan = [entry for p in params for entry in plan_suite(suite, p, seed, degree_cap)]
    results: List[CheckResult] = []
    stopped = budget_exceeded = False
    for name, thunk in plan:
        if stopped:
            results.append(CheckResult(name, Status.SKIPPED, {}, 'not run after an earlier failure'))
            continue
        start = perf_counter()
        try:
            status, data, message = thunk()
        except BudgetExceeded as error:
            status, data, message = Status.FAIL, {'error': type(error).__name__}, str(error)
            budget_exceeded = True
        except QuivalgError as error:
            status, data, message = Status.FAIL, {'error': type(error).__name__}, str(error)
        elapsed = perf_counter() - start
        _logger.info('%s: %s (%.2fs)', name, status.value, elapsed)
        results.append(CheckResult(name, status, data, message, elapsed))
        if status is Status.FAIL and not keep_going:
            stopped = True
    return VerificationReport(suite, params, seed, degree_cap, results, budget_exceeded)
