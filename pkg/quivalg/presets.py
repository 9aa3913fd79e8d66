"""
Built-in presentations of the higher spherical algebras S(m, λ) and the higher tetrahedral algebras Λ(m, λ),
and a plain text format for arbitrary presentations.

Text format, one statement per line, ``#`` starts a comment::

    vertex 1 2
    arrow a: 1 -> 2
    relation r1: 2*a.b = L*(c.d)^2.c - 1/2*e

Paths are ``.``-separated arrow names with the ``(path)^k`` power sugar; coefficients are rationals or
``L`` (the value of λ), multiplied with ``*``; ``e<vertex>`` is a stationary path; labels are optional.
"""
import re
from functools import lru_cache
from typing import Dict, Final, Iterator, List, NamedTuple, NoReturn, Optional, Sequence, Tuple

from quivalg.exceptions import InvalidParameters, NonParallelRelation, PresentationSyntaxError, QuiverError
from quivalg.field import FieldSpec
from quivalg.functions import cycles
from quivalg.quiver import AlgebraElement, Path, Quiver, Relation, compose
from quivalg.rewriting import QuotientAlgebra, build_algebra
from quivalg.settings import default_degree_cap

__all__: Final = (
    # Classes
    'PresetParams',
    'Presentation',
    'TriangulationData',

    # Functions
    'load_preset',
    'parse_presentation',
    'preset_presentation',
    'serialize_presentation',
    'spherical',
    'tetrahedral',

    # Constants
    'PRESETS'
)

PRESETS: Final = ('spherical', 'tetrahedral')

_SPHERICAL_VERTICES: Final = ('1', '2', '3', '4', '5', '6')
_SPHERICAL_ARROWS: Final = (
    ('alpha', '1', '2'),
    ('beta', '2', '3'),
    ('gamma', '3', '4'),
    ('sigma', '4', '1'),
    ('delta', '5', '1'),
    ('nu', '3', '5'),
    ('rho', '1', '6'),
    ('omega', '6', '3')
)

# Endpoints follow from the typing of the relations, e.g. δη = νω forces ν: 1 -> 6 and ω: 6 -> 4.
_TETRAHEDRAL_VERTICES: Final = ('1', '2', '3', '4', '5', '6')
_TETRAHEDRAL_ARROWS: Final = (
    ('delta', '1', '5'),
    ('nu', '1', '6'),
    ('epsilon', '2', '5'),
    ('rho', '2', '6'),
    ('sigma', '3', '2'),
    ('alpha', '3', '1'),
    ('gamma', '4', '1'),
    ('beta', '4', '2'),
    ('xi', '5', '3'),
    ('eta', '5', '4'),
    ('omega', '6', '4'),
    ('mu', '6', '3')
)
_F_ORBITS: Final = (('gamma', 'delta', 'eta'), ('epsilon', 'xi', 'sigma'), ('rho', 'omega', 'beta'), ('nu', 'mu', 'alpha'))
_G_ORBITS: Final = (('delta', 'xi', 'alpha'), ('nu', 'omega', 'gamma'), ('epsilon', 'eta', 'beta'), ('rho', 'mu', 'sigma'))


class PresetParams:
    """Degree m and the field (which carries λ) of a preset algebra."""

    __slots__ = ('_field', '_m')

    def __init__(self, m: int, field: Optional[FieldSpec] = None, allow_m1: bool = False) -> None:
        """
        >>> PresetParams(2)
        PresetParams(m=2, field=FieldSpec(Q, lambda=1))

        Args:
            m:         degree, at least 2
            field:     coefficient field with λ; the rationals with λ = 1 when omitted
            allow_m1:  accept m = 1 for exploration
        Raises:
            InvalidParameters:  if m is out of range
        """
        lowest = 1 if allow_m1 else 2
        if m < lowest:
            raise InvalidParameters(f'Degree m must be at least {lowest}, got {m}')
        self._m: Final = m
        self._field: Final = field if field is not None else FieldSpec()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PresetParams):
            return NotImplemented
        return (self._m, self._field) == (other._m, other._field)

    def __hash__(self) -> int:
        return hash((self._m, self._field))

    def __repr__(self) -> str:
        return f'PresetParams(m={self._m}, field={self._field!r})'

    @property
    def field(self) -> FieldSpec:
        return self._field

    @property
    def lambda_(self):
        return self._field.lambda_

    @property
    def m(self) -> int:
        return self._m


class Presentation(NamedTuple):
    quiver: Quiver
    relations: Tuple[Relation, ...]
    field: FieldSpec


class TriangulationData:
    """The order-3 arrow permutations f and g of a triangulation quiver."""

    __slots__ = ('_f', '_g', '_quiver')

    def __init__(self, quiver: Quiver, f_orbits: Sequence[Sequence[str]], g_orbits: Sequence[Sequence[str]]) -> None:
        """
        Args:
            quiver:    the quiver
            f_orbits:  3-cycles of f
            g_orbits:  3-cycles of g
        Raises:
            QuiverError:  if an orbit does not have length 3, is not a cycle of composable arrows,
                          or the orbits do not partition the arrows
        """
        names = [a.name for a in quiver.arrows]
        self._quiver: Final = quiver
        self._f: Final = self._permutation(quiver, f_orbits, names, 'f')
        self._g: Final = self._permutation(quiver, g_orbits, names, 'g')

    @staticmethod
    def _permutation(quiver: Quiver, orbits: Sequence[Sequence[str]], names: List[str], label: str) -> Dict[str, str]:
        mapping: Dict[str, str] = {}
        for orbit in orbits:
            if len(orbit) != 3:
                raise QuiverError(f'Orbit {tuple(orbit)} of {label} does not have length 3')
            quiver.path(*orbit, orbit[0])
            for i, name in enumerate(orbit):
                if name in mapping:
                    raise QuiverError(f'Arrow {name!r} lies in two orbits of {label}')
                mapping[name] = orbit[(i + 1) % 3]
        if sorted(mapping) != sorted(names):
            raise QuiverError(f'Orbits of {label} do not cover every arrow exactly once')
        return mapping

    @property
    def f(self) -> Dict[str, str]:
        return dict(self._f)

    @property
    def g(self) -> Dict[str, str]:
        return dict(self._g)

    def binomial_words(self, theta: str) -> Tuple[Tuple[str, str], Tuple[str, str]]:
        """
        The two paths θ·f(θ) and θ̄·g(θ̄) identified by the relation attached to θ, where θ̄ is the other
        arrow starting where θ starts.
        """
        start = self._quiver.arrows[self._quiver.arrow_index(theta)].source
        other, = (self._quiver.arrows[a].name for a in self._quiver.outgoing(start) if self._quiver.arrows[a].name != theta)
        return (theta, self._f[theta]), (other, self._g[other])

    def f_orbits(self) -> Tuple[Tuple[str, ...], ...]:
        return tuple(cycles(self._f, [a.name for a in self._quiver.arrows]))

    def g_orbits(self) -> Tuple[Tuple[str, ...], ...]:
        return tuple(cycles(self._g, [a.name for a in self._quiver.arrows]))

    def zero_relation_word(self, theta: str, m: int) -> Tuple[str, ...]:
        """
        >>> q, _, t = tetrahedral(PresetParams(2))
        >>> t.zero_relation_word('gamma', 2)
        ('gamma', 'delta', 'eta', 'gamma', 'delta', 'xi')

        Args:
            theta:  arrow θ
            m:      degree
        Returns:
            the arrows of (θ f(θ) f²(θ))^{m-1} θ f(θ) g(f(θ))
        """
        f = self._f
        return (theta, f[theta], f[f[theta]]) * (m - 1) + (theta, f[theta], self._g[f[theta]])


def _word(quiver: Quiver, field: FieldSpec, *names: str) -> AlgebraElement:
    return AlgebraElement.from_path(quiver, field, quiver.path(*names))


def _deformed(quiver: Quiver, field: FieldSpec, m: int, cycle: Sequence[str], tail: Sequence[str]) -> AlgebraElement:
    # tail + λ·(cycle)^{m-1}·tail
    return _word(quiver, field, *tail) + _word(quiver, field, *(tuple(cycle) * (m - 1) + tuple(tail))) * field.lambda_


def spherical(params: PresetParams) -> Presentation:
    """
    The quiver Δ and the ten relations of S(m, λ).

    >>> quiver, relations, _ = spherical(PresetParams(2))
    >>> len(quiver.arrows), len(relations)
    (8, 10)

    Args:
        params:  degree and field
    Returns:
        the presentation
    """
    field, m = params.field, params.m
    q = Quiver(_SPHERICAL_VERTICES, _SPHERICAL_ARROWS)
    w = lambda *names: _word(q, field, *names)  # noqa: E731
    zero = AlgebraElement.zero(q, field)
    relations = (
        Relation(w('beta', 'nu', 'delta'), _deformed(q, field, m, ('beta', 'gamma', 'sigma', 'alpha'), ('beta', 'gamma', 'sigma')), 'R1'),
        Relation(w('alpha', 'beta', 'nu'), w('rho', 'omega', 'nu'), 'R2'),
        Relation(w('nu', 'delta', 'alpha'), _deformed(q, field, m, ('gamma', 'sigma', 'alpha', 'beta'), ('gamma', 'sigma', 'alpha')), 'R3'),
        Relation(w('delta', 'alpha', 'beta'), w('delta', 'rho', 'omega'), 'R4'),
        Relation(w('sigma', 'rho', 'omega'), _deformed(q, field, m, ('sigma', 'alpha', 'beta', 'gamma'), ('sigma', 'alpha', 'beta')), 'R5'),
        Relation(w('omega', 'gamma', 'sigma'), w('omega', 'nu', 'delta'), 'R6'),
        Relation(w('rho', 'omega', 'gamma'), _deformed(q, field, m, ('alpha', 'beta', 'gamma', 'sigma'), ('alpha', 'beta', 'gamma')), 'R7'),
        Relation(w('gamma', 'sigma', 'rho'), w('nu', 'delta', 'rho'), 'R8'),
        Relation(w(*(('alpha', 'beta', 'gamma', 'sigma') * m + ('alpha',))), zero, 'R9'),
        Relation(w(*(('gamma', 'sigma', 'alpha', 'beta') * m + ('gamma',))), zero, 'R10')
    )
    return Presentation(q, relations, field)


def tetrahedral(params: PresetParams) -> Tuple[Quiver, Tuple[Relation, ...], TriangulationData]:
    """
    The quiver Q, the twelve binomial and twelve zero relations of Λ(m, λ), and the permutations f, g.

    >>> _, relations, _ = tetrahedral(PresetParams(2))
    >>> len(relations)
    24

    Args:
        params:  degree and field
    Returns:
        quiver, relations and triangulation data
    """
    field, m = params.field, params.m
    q = Quiver(_TETRAHEDRAL_VERTICES, _TETRAHEDRAL_ARROWS)
    triangulation = TriangulationData(q, _F_ORBITS, _G_ORBITS)
    w = lambda *names: _word(q, field, *names)  # noqa: E731
    binomials = (
        ('gamma', 'delta', _deformed(q, field, m, ('beta', 'rho', 'omega'), ('beta', 'epsilon'))),
        ('delta', 'eta', w('nu', 'omega')),
        ('eta', 'gamma', w('xi', 'alpha')),
        ('nu', 'mu', w('delta', 'xi')),
        ('rho', 'omega', _deformed(q, field, m, ('epsilon', 'xi', 'sigma'), ('epsilon', 'eta'))),
        ('omega', 'beta', w('mu', 'sigma')),
        ('beta', 'rho', w('gamma', 'nu')),
        ('mu', 'alpha', w('omega', 'gamma')),
        ('xi', 'sigma', _deformed(q, field, m, ('eta', 'gamma', 'delta'), ('eta', 'beta'))),
        ('sigma', 'epsilon', w('alpha', 'delta')),
        ('epsilon', 'xi', w('rho', 'mu')),
        ('alpha', 'nu', w('sigma', 'rho'))
    )
    zero = AlgebraElement.zero(q, field)
    relations = tuple(
        Relation(w(first, second), rhs, f'B{i}') for i, (first, second, rhs) in enumerate(binomials, 1)
    ) + tuple(
        Relation(w(*triangulation.zero_relation_word(a.name, m)), zero, f'Z({a.name})') for a in q.arrows
    )
    return q, relations, triangulation


def preset_presentation(name: str, params: PresetParams) -> Presentation:
    if name == 'spherical':
        return spherical(params)
    if name == 'tetrahedral':
        quiver, relations, _ = tetrahedral(params)
        return Presentation(quiver, relations, params.field)
    raise InvalidParameters(f"Unknown preset {name!r}; expected one of {', '.join(PRESETS)}")


@lru_cache(maxsize=None)
def load_preset(name: str, params: PresetParams, degree_cap: Optional[int] = None) -> QuotientAlgebra:
    """Builds a preset algebra once per process; the cap defaults to 4m + 4."""
    quiver, relations, field = preset_presentation(name, params)
    cap = default_degree_cap(params.m) if degree_cap is None else degree_cap
    return build_algebra(quiver, relations, cap, field)


class _Token(NamedTuple):
    kind: str
    text: str
    column: int


_TOKEN_RE: Final = re.compile(r'(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<symbol>[-+*/.()^]))')


def _tokenize(text: str, line: int, offset: int) -> List[_Token]:
    tokens = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position >= len(text):
            return tokens
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise PresentationSyntaxError(f'Unexpected character {text[position]!r}', line, offset + position + 1)
        kind = match.lastgroup or 'symbol'
        tokens.append(_Token(kind, match.group(kind), offset + position + 1))
        position = match.end()


class _Parser:
    """Recursive descent over the tokens of one side of a relation."""

    __slots__ = ('_field', '_line', '_position', '_quiver', '_tokens')

    def __init__(self, quiver: Quiver, field: FieldSpec, tokens: List[_Token], line: int) -> None:
        self._quiver = quiver
        self._field = field
        self._tokens = tokens
        self._line = line
        self._position = 0

    def combination(self) -> AlgebraElement:
        result = AlgebraElement.zero(self._quiver, self._field)
        sign = 1
        if self._accept('+'):
            pass
        elif self._accept('-'):
            sign = -1
        while True:
            result = result + self._term() * sign
            if self._accept('+'):
                sign = 1
            elif self._accept('-'):
                sign = -1
            else:
                break
        if self._position != len(self._tokens):
            self._fail(f'Unexpected {self._tokens[self._position].text!r}')
        return result

    def _accept(self, symbol: str) -> bool:
        if self._position < len(self._tokens) and self._tokens[self._position].text == symbol:
            self._position += 1
            return True
        return False

    def _coefficient(self):
        token = self._peek()
        if token.kind == 'number':
            self._position += 1
            numerator = int(token.text)
            if self._accept('/'):
                denominator = self._expect('number')
                return self._field.convert(f'{numerator}/{denominator.text}')
            return self._field.convert(numerator)
        self._position += 1
        return self._field.lambda_

    def _expect(self, kind: str) -> _Token:
        token = self._peek()
        if token.kind != kind:
            self._fail(f'Expected a {kind}, got {token.text!r}', token)
        self._position += 1
        return token

    def _factor(self) -> Path:
        token = self._peek()
        if self._accept('('):
            inner = self._path()
            if not self._accept(')'):
                self._fail("Expected ')'")
            if not self._accept('^'):
                self._fail("Expected '^' after a parenthesized path")
            exponent = int(self._expect('number').text)
            return self._power(inner, exponent, token)
        name = self._expect('name')
        try:
            return self._quiver.path(name.text)
        except QuiverError:
            vertex = name.text[1:]
            if name.text.startswith('e') and vertex in self._quiver.vertices:
                return self._quiver.stationary(vertex)
            self._fail(f'Unknown arrow {name.text!r}', name)

    def _fail(self, message: str, token: Optional[_Token] = None) -> NoReturn:
        if token is None:
            token = self._tokens[self._position] if self._position < len(self._tokens) else None
        column = token.column if token is not None else (self._tokens[-1].column + len(self._tokens[-1].text) if self._tokens else 1)
        raise PresentationSyntaxError(message, self._line, column)

    def _path(self) -> Path:
        start = self._peek()
        path = self._factor()
        while self._accept('.'):
            following = self._factor()
            joined = compose(path, following)
            if joined is None:
                self._fail('Consecutive factors of the path do not compose', start)
            path = joined  # type: ignore[assignment]
        return path

    def _peek(self) -> _Token:
        if self._position >= len(self._tokens):
            self._fail('Unexpected end of expression')
        return self._tokens[self._position]

    def _power(self, path: Path, exponent: int, token: _Token) -> Path:
        if exponent == 0:
            return Path(path.source, path.source)
        result = path
        for _ in range(exponent - 1):
            joined = compose(result, path)
            if joined is None:
                self._fail('Only cycles can be raised to a power', token)
            result = joined  # type: ignore[assignment]
        return result

    def _term(self) -> AlgebraElement:
        coefficient = self._field.one
        while self._peek().kind == 'number' or self._peek().text == 'L':
            coefficient = coefficient * self._coefficient()
            if not self._accept('*'):
                if coefficient:
                    self._fail('Expected a path after the coefficient')
                return AlgebraElement.zero(self._quiver, self._field)
        return AlgebraElement.from_path(self._quiver, self._field, self._path(), coefficient)


_KEYWORD_RE: Final = re.compile(r'\s*(\S+)\s*')
_LABEL_RE: Final = re.compile(r'\s*([^\s:=]+)\s*:')
_ARROW_RE: Final = re.compile(r'\s*([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(\S+)\s*->\s*(\S+)\s*$')


def _statements(text: str) -> Iterator[Tuple[int, int, str, str, int]]:
    # (line, keyword column, keyword, rest of the line, offset of the rest)
    for number, raw in enumerate(text.splitlines(), 1):
        content = raw.split('#', 1)[0]
        if not content.strip():
            continue
        match = _KEYWORD_RE.match(content)
        yield number, match.start(1) + 1, match.group(1), content[match.end():], match.end()


def parse_presentation(text: str, field: Optional[FieldSpec] = None) -> Presentation:
    """
    Reads a presentation in the text format.

    >>> quiver, relations, _ = parse_presentation('vertex 1 2\\narrow a: 1 -> 2\\narrow b: 2 -> 1\\nrelation a.b = 0')
    >>> len(quiver.arrows), relations[0].label, relations[0].lhs
    (2, 'r1', a.b)

    Args:
        text:   file contents
        field:  field of the coefficients and value of ``L``; the rationals with λ = 1 when omitted
    Returns:
        the presentation
    Raises:
        PresentationSyntaxError:  with the line and column of the offending token
        NonParallelRelation:      if the terms of a relation are not parallel
    """
    field = field if field is not None else FieldSpec()
    vertices: List[str] = []
    arrows: List[Tuple[str, str, str]] = []
    quiver: Optional[Quiver] = None
    relations: List[Relation] = []
    for line, column, keyword, rest, offset in _statements(text):
        if keyword in ('vertex', 'arrow') and quiver is not None:
            raise PresentationSyntaxError(f'{keyword.capitalize()} declared after the first relation', line, column)
        if keyword == 'vertex':
            vertices.extend(rest.split())
        elif keyword == 'arrow':
            if (match := _ARROW_RE.match(rest)) is None:
                raise PresentationSyntaxError("Expected 'arrow <name>: <source> -> <target>'", line, offset + 1)
            arrows.append((match.group(1), match.group(2), match.group(3)))
        elif keyword == 'relation':
            if quiver is None:
                try:
                    quiver = Quiver(vertices, arrows)
                except QuiverError as error:
                    raise PresentationSyntaxError(str(error), line, 1) from None
            label = f'r{len(relations) + 1}'
            body, body_offset = rest, offset
            if (match := _LABEL_RE.match(rest)) is not None:
                label = match.group(1)
                body, body_offset = rest[match.end():], offset + match.end()
            left, equals, right = body.partition('=')
            if not equals:
                raise PresentationSyntaxError("Expected '=' in a relation", line, body_offset + 1)
            lhs = _Parser(quiver, field, _tokenize(left, line, body_offset), line).combination()
            rhs = _Parser(quiver, field, _tokenize(right, line, body_offset + len(left) + 1), line).combination()
            if (lhs - rhs).endpoints() is None and (lhs - rhs):
                raise NonParallelRelation(f'Terms of relation {label!r} on line {line} do not share source and target')
            relations.append(Relation(lhs, rhs, label))
        else:
            raise PresentationSyntaxError(f'Unknown statement {keyword!r}', line, column)
    if quiver is None:
        try:
            quiver = Quiver(vertices, arrows)
        except QuiverError as error:
            raise PresentationSyntaxError(str(error), 1, 1) from None
    return Presentation(quiver, tuple(relations), field)


def serialize_presentation(presentation: Presentation) -> str:
    """
    Text form of a presentation, read back by ``parse_presentation`` with the same field.

    >>> text = serialize_presentation(spherical(PresetParams(2)))
    >>> text.splitlines()[1]
    'arrow alpha: 1 -> 2'
    """
    quiver, relations, _ = presentation
    lines = [f"vertex {' '.join(quiver.vertices)}"]
    lines.extend(
        f'arrow {a.name}: {quiver.vertices[a.source]} -> {quiver.vertices[a.target]}' for a in quiver.arrows
    )
    lines.extend(f'relation {r.label}: {r.lhs!r} = {r.rhs!r}' if r.label else f'relation {r.lhs!r} = {r.rhs!r}'
                 for r in relations)
    return '\n'.join(lines) + '\n'
