"""
Command-line front end: ``quivalg build|verify|resolve|hom|report``.

Exit codes: 0 when everything passed, 1 on a failing check, 2 on a usage error, 3 when a budget ran out.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Final, List, Optional, Sequence

import jsonschema

from quivalg.analysis import cartan, socle_dims
from quivalg.exceptions import BudgetExceeded, InvalidParameters, PresentationSyntaxError, QuivalgError
from quivalg.field import FieldSpec
from quivalg.homotopy import build_tilting_T, hom_complexes
from quivalg.presets import PRESETS, PresetParams, load_preset, parse_presentation
from quivalg.representations import omega_orbit
from quivalg.rewriting import QuotientAlgebra, build_algebra
from quivalg.settings import DEFAULT_LAMBDA, DEFAULT_M_RANGE, DEFAULT_SEED, budgets, default_degree_cap
from quivalg.suites import REPORT_SCHEMA, SUITES, render_markdown, run_suite

__all__: Final = (
    'main',
    'make_parser'
)

_logger = logging.getLogger(__name__)

EXIT_OK: Final = 0
EXIT_FAILURE: Final = 1
EXIT_USAGE: Final = 2
EXIT_BUDGET: Final = 3


def _add_algebra_arguments(parser: argparse.ArgumentParser, source: bool = True) -> None:
    if source:
        group = parser.add_mutually_exclusive_group()
        group.add_argument('--preset', choices=PRESETS, default='spherical', help='built-in presentation')
        group.add_argument('--file', type=Path, help='presentation file')
    parser.add_argument('--lambda', dest='lambda_', default=str(DEFAULT_LAMBDA), help='nonzero value of lambda')
    parser.add_argument('--field', default='Q', help="'Q' or 'Fp:<p>'")
    parser.add_argument('--cap', type=int, help='degree cap of the completion')
    parser.add_argument('--format', choices=('md', 'json'), default='md', help='output format')


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='quivalg', description='Bound quiver algebra workbench.')
    parser.add_argument('-v', '--verbose', action='store_true', help='log at DEBUG level on stderr')
    commands = parser.add_subparsers(dest='command', required=True)

    build = commands.add_parser('build', help='build an algebra and print its dimension and Cartan matrix')
    _add_algebra_arguments(build)
    build.add_argument('--m', type=int, default=2, help='degree parameter of the preset')

    verify = commands.add_parser('verify', help='run a verification suite')
    _add_algebra_arguments(verify, source=False)
    verify.add_argument('--suite', choices=SUITES, default='all')
    verify.add_argument('--m', type=int, nargs='+', help=f'degree parameters; {list(DEFAULT_M_RANGE)} for the full suite')
    verify.add_argument('--seed', type=int, default=DEFAULT_SEED)
    verify.add_argument('--keep-going', action='store_true', help='run every check even after a failure')
    verify.add_argument('--timings', action='store_true', help='include timings in the report')
    verify.add_argument('--output', type=Path, help='write the report to a file instead of stdout')

    resolve = commands.add_parser('resolve', help='iterate syzygies of a simple module')
    _add_algebra_arguments(resolve)
    resolve.add_argument('--m', type=int, default=2)
    resolve.add_argument('--vertex', required=True, help='vertex label of the simple module')
    resolve.add_argument('--steps', type=int, default=4)
    resolve.add_argument('--seed', type=int, default=DEFAULT_SEED)

    hom = commands.add_parser('hom', help='dimensions of Hom(T_i, T_j[s]) for the tilting complex')
    _add_algebra_arguments(hom, source=False)
    hom.add_argument('--m', type=int, default=2)
    hom.add_argument('--shift', type=int, default=0)

    report = commands.add_parser('report', help='render a saved JSON report as Markdown')
    report.add_argument('path', type=Path)
    return parser


def _field(args: argparse.Namespace) -> FieldSpec:
    return FieldSpec.parse(args.field, args.lambda_)


def _algebra(args: argparse.Namespace) -> QuotientAlgebra:
    field = _field(args)
    if getattr(args, 'file', None) is not None:
        quiver, relations, field = parse_presentation(args.file.read_text(encoding='utf-8'), field)
        cap = default_degree_cap(args.m) if args.cap is None else args.cap
        return build_algebra(quiver, relations, cap, field)
    return load_preset(args.preset, PresetParams(args.m, field), args.cap)


def _dump(document: Dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, indent=2, separators=(',', ': '), ensure_ascii=False) + '\n'


def _matrix_lines(title: str, labels: Sequence[str], rows: Sequence[Sequence[int]]) -> List[str]:
    lines = [f'## {title}', '', '| | ' + ' | '.join(labels) + ' |', '|---' * (len(labels) + 1) + '|']
    lines.extend(f'| {label} | ' + ' | '.join(map(str, row)) + ' |' for label, row in zip(labels, rows))
    return lines + ['']


def _build(args: argparse.Namespace) -> int:
    algebra = _algebra(args)
    matrix = cartan(algebra)
    document = {
        'source': str(args.file) if args.file is not None else args.preset,
        'field': algebra.field.label,
        'lambda': algebra.field.format(algebra.field.lambda_),
        'dimension': len(algebra),
        'degree_cap': algebra.degree_cap,
        'added_rules': len(algebra.added_rules),
        'vertices': list(algebra.vertices),
        'cartan': matrix.to_lists(),
        'socle_dims': socle_dims(algebra)
    }
    if args.format == 'json':
        sys.stdout.write(_dump(document))
    else:
        lines = [
            f"# {document['source']} over {document['field']}, lambda = {document['lambda']}",
            '',
            f"Dimension {document['dimension']}; degree cap {document['degree_cap']}; "
            f"{document['added_rules']} rules added by completion.",
            ''
        ]
        lines.extend(_matrix_lines('Cartan matrix, C[i][j] = dim e_i A e_j', algebra.vertices, document['cartan']))
        lines.append(f"Socle dimensions: {document['socle_dims']}")
        sys.stdout.write('\n'.join(lines) + '\n')
    return EXIT_OK


def _verify(args: argparse.Namespace) -> int:
    field = _field(args)
    m_values = args.m or (list(DEFAULT_M_RANGE) if args.suite == 'all' else [2])
    params = [PresetParams(m, field) for m in m_values]
    report = run_suite(args.suite, params, args.seed, args.cap, args.keep_going)
    text = report.to_json(args.timings) if args.format == 'json' else report.to_markdown(args.timings)
    if args.output is not None:
        args.output.write_text(text, encoding='utf-8')
    else:
        sys.stdout.write(text)
    return report.exit_code()


def _resolve(args: argparse.Namespace) -> int:
    if args.steps < 1:
        raise InvalidParameters(f'Number of steps must be positive, got {args.steps}')
    algebra = _algebra(args)
    if args.vertex not in algebra.vertices:
        raise InvalidParameters(f'Unknown vertex {args.vertex!r}; expected one of {", ".join(algebra.vertices)}')
    orbit = omega_orbit(algebra, algebra.vertices.index(args.vertex), args.steps, args.seed)
    document = {
        'vertex': args.vertex,
        'steps': [{'step': s.step, 'dims': list(s.dims), 'isomorphic': s.isomorphic} for s in orbit]
    }
    if args.format == 'json':
        sys.stdout.write(_dump(document))
    else:
        lines = [f'# Syzygies of the simple module at {args.vertex}', '', '| step | dimension vector | isomorphic to S |',
                 '|---|---|---|']
        flags = {True: 'yes', False: 'no', None: 'inconclusive'}
        lines.extend(f'| {s.step} | {list(s.dims)} | {flags[s.isomorphic]} |' for s in orbit)
        sys.stdout.write('\n'.join(lines) + '\n')
    return EXIT_OK if orbit[-1].isomorphic else EXIT_FAILURE


def _hom(args: argparse.Namespace) -> int:
    algebra = load_preset('tetrahedral', PresetParams(args.m, _field(args)), args.cap)
    complexes = build_tilting_T(algebra)
    table = [[len(hom_complexes(x, y, args.shift)) for y in complexes] for x in complexes]
    if args.format == 'json':
        sys.stdout.write(_dump({'shift': args.shift, 'hom': table}))
    else:
        labels = [repr(t) for t in complexes]
        lines = _matrix_lines(f'dim Hom(T_i, T_j[{args.shift}]), row i, column j', labels, table)
        sys.stdout.write('\n'.join(lines))
    return EXIT_OK


def _report(args: argparse.Namespace) -> int:
    try:
        document = json.loads(args.path.read_text(encoding='utf-8'))
        jsonschema.validate(instance=document, schema=REPORT_SCHEMA)
    except json.JSONDecodeError as error:
        raise InvalidParameters(f'{args.path} is not JSON: {error}') from None
    except jsonschema.ValidationError as error:
        raise InvalidParameters(f'{args.path} is not a verification report: {error.message}') from None
    sys.stdout.write(render_markdown(document))
    failed = any(check['status'] != 'pass' for check in document['checks'])
    return EXIT_BUDGET if document['budget_exceeded'] else EXIT_FAILURE if failed else EXIT_OK


_COMMANDS: Final = {
    'build': _build,
    'verify': _verify,
    'resolve': _resolve,
    'hom': _hom,
    'report': _report
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s'
    )
    try:
        budgets()  # rejects a malformed QUIVALG_BUDGET before any work starts
        return _COMMANDS[args.command](args)
    except (InvalidParameters, PresentationSyntaxError, OSError) as error:
        _logger.error('%s', error)
        return EXIT_USAGE
    except BudgetExceeded as error:
        _logger.error('%s', error)
        return EXIT_BUDGET
    except QuivalgError as error:
        _logger.error('%s', error)
        return EXIT_FAILURE


if __name__ == '__main__':
    sys.exit(main())
