"""
Quivers, paths and elements of the free path algebra.

Paths compose left to right: ``αβ`` is "α then β", so a path from i to j lies in eᵢ·KQ·eⱼ.
"""
import random
from fractions import Fraction
from itertools import chain
from typing import Dict, Final, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from quivalg.exceptions import QuiverError
from quivalg.field import FieldSpec, Scalar

__all__: Final = (
    # Classes
    'Arrow',
    'Quiver',
    'Path',
    'AlgebraElement',
    'Relation',

    # Functions
    'arrow_cycles',
    'compose',
    'deglex_key',
    'enumerate_paths',
    'random_path'
)

ScalarLike = Union[int, str, Fraction, Scalar]


class Arrow(NamedTuple):
    name: str
    source: int
    target: int


class Path(NamedTuple):
    """Path of a quiver; vertices and arrows are stored as indices."""

    source: int
    target: int
    arrows: Tuple[int, ...] = ()

    @property
    def is_stationary(self) -> bool:
        return not self.arrows

    @property
    def length(self) -> int:
        return len(self.arrows)


def compose(p: Path, q: Path) -> Optional[Path]:
    """
    Concatenation of two paths.

    >>> compose(Path(0, 1, (0,)), Path(1, 2, (1,)))
    Path(source=0, target=2, arrows=(0, 1))

    >>> compose(Path(0, 1, (0,)), Path(2, 3, (2,))) is None
    True

    Args:
        p:  first path
        q:  path following p
    Returns:
        the path p·q, or None (the zero marker) if target(p) ≠ source(q)
    """
    if p.target != q.source:
        return None
    return Path(p.source, q.target, p.arrows + q.arrows)


def deglex_key(path: Path) -> Tuple[int, Tuple[int, ...]]:
    """Sort key of the monomial order: longer is bigger, ties broken lexicographically on arrow indices."""
    return len(path.arrows), path.arrows


class Quiver:
    """Finite quiver with ordered vertices and arrows; arrow order is the ranking used by the monomial order."""

    __slots__ = ('_arrow_index', '_arrows', '_incoming', '_outgoing', '_vertex_index', '_vertices')

    def __init__(self, vertices: Sequence[str], arrows: Sequence[Tuple[str, str, str]]) -> None:
        """
        >>> Quiver(('1', '2'), (('a', '1', '2'),))
        Quiver(vertices=('1', '2'), arrows=(a: 1 -> 2))

        Args:
            vertices:  vertex labels in order
            arrows:    triples (name, source label, target label) in order
        Raises:
            QuiverError:  on duplicate names or undeclared endpoints
        """
        self._vertices: Final = tuple(str(v) for v in vertices)
        self._vertex_index: Final = {label: i for i, label in enumerate(self._vertices)}
        if len(self._vertex_index) != len(self._vertices):
            raise QuiverError(f'Vertex labels of a quiver must be unique, got {self._vertices}')
        built: List[Arrow] = []
        self._arrow_index: Final[Dict[str, int]] = {}
        for name, source, target in arrows:
            if name in self._arrow_index:
                raise QuiverError(f'Arrow name {name!r} is declared twice')
            for end in (source, target):
                if end not in self._vertex_index:
                    raise QuiverError(f'Arrow {name!r} refers to the undeclared vertex {end!r}')
            self._arrow_index[name] = len(built)
            built.append(Arrow(name, self._vertex_index[source], self._vertex_index[target]))
        self._arrows: Final = tuple(built)
        self._outgoing: Final = tuple(
            tuple(i for i, a in enumerate(self._arrows) if a.source == v) for v in range(len(self._vertices))
        )
        self._incoming: Final = tuple(
            tuple(i for i, a in enumerate(self._arrows) if a.target == v) for v in range(len(self._vertices))
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self._vertices == other._vertices and self._arrows == other._arrows

    def __hash__(self) -> int:
        return hash((self._vertices, self._arrows))

    def __repr__(self) -> str:
        arrows = ', '.join(
            f'{a.name}: {self._vertices[a.source]} -> {self._vertices[a.target]}' for a in self._arrows
        )
        return f'Quiver(vertices={self._vertices}, arrows=({arrows}))'

    @property
    def arrows(self) -> Tuple[Arrow, ...]:
        return self._arrows

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    def arrow_index(self, name: str) -> int:
        try:
            return self._arrow_index[name]
        except KeyError:
            raise QuiverError(f'Unknown arrow {name!r}') from None

    def incoming(self, vertex: int) -> Tuple[int, ...]:
        return self._incoming[vertex]

    def outgoing(self, vertex: int) -> Tuple[int, ...]:
        return self._outgoing[vertex]

    def path(self, *names: str) -> Path:
        """
        Path through the named arrows.

        >>> q = Quiver(('1', '2', '3'), (('a', '1', '2'), ('b', '2', '3')))
        >>> q.path('a', 'b')
        Path(source=0, target=2, arrows=(0, 1))

        Args:
            *names:  arrow names in composition order
        Returns:
            the path
        Raises:
            QuiverError:  on an unknown name or when consecutive arrows do not compose
        """
        if not names:
            raise QuiverError('A path needs at least one arrow; use Quiver.stationary for eᵢ')
        indices = tuple(self.arrow_index(name) for name in names)
        for left, right in zip(indices, indices[1:]):
            if self._arrows[left].target != self._arrows[right].source:
                raise QuiverError(
                    f'Arrows {self._arrows[left].name!r} and {self._arrows[right].name!r} do not compose'
                )
        return Path(self._arrows[indices[0]].source, self._arrows[indices[-1]].target, indices)

    def path_name(self, path: Path) -> str:
        """Dotted spelling of a path; stationary paths are written ``e<label>``."""
        if path.is_stationary:
            return f'e{self._vertices[path.source]}'
        return '.'.join(self._arrows[i].name for i in path.arrows)

    def stationary(self, vertex: Union[int, str]) -> Path:
        index = vertex if isinstance(vertex, int) else self.vertex_index(vertex)
        if not 0 <= index < len(self._vertices):
            raise QuiverError(f'Vertex index {index} is out of range')
        return Path(index, index)

    def vertex_index(self, label: str) -> int:
        try:
            return self._vertex_index[label]
        except KeyError:
            raise QuiverError(f'Unknown vertex {label!r}') from None


class AlgebraElement:
    """Finite linear combination of paths with exact coefficients; zero coefficients are never stored."""

    __slots__ = ('_field', '_quiver', '_terms')

    def __init__(self, quiver: Quiver, field: FieldSpec, terms: Optional[Dict[Path, ScalarLike]] = None) -> None:
        """
        >>> q = Quiver(('1', '2'), (('a', '1', '2'),))
        >>> AlgebraElement(q, FieldSpec(), {q.path('a'): 2, q.stationary(0): 0})
        2*a

        Args:
            quiver:  underlying quiver
            field:   coefficient field
            terms:   coefficients of paths; zero entries are dropped
        """
        self._quiver: Final = quiver
        self._field: Final = field
        self._terms: Final[Dict[Path, Scalar]] = {}
        for path, coefficient in (terms or {}).items():
            value = field.convert(coefficient)
            if value:
                self._terms[path] = value

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        terms = dict(self._terms)
        for path, coefficient in other._terms.items():
            value = terms.get(path, self._field.zero) + coefficient
            if value:
                terms[path] = value
            else:
                terms.pop(path, None)
        return self._make_with_no_checks(self._quiver, self._field, terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._quiver == other._quiver and self._terms == other._terms

    def __iter__(self) -> Iterator[Tuple[Path, Scalar]]:
        """Terms in decreasing monomial order."""
        return iter(sorted(self._terms.items(), key=lambda item: deglex_key(item[0]), reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def __mul__(self, other: Union['AlgebraElement', ScalarLike]) -> 'AlgebraElement':
        """
        Bilinear extension of path composition; mismatched products vanish.

        >>> q = Quiver(('1', '2'), (('a', '1', '2'),))
        >>> K = FieldSpec()
        >>> e = AlgebraElement.from_path(q, K, q.stationary(0)) + AlgebraElement.from_path(q, K, q.stationary(1))
        >>> a = AlgebraElement.from_path(q, K, q.path('a'))
        >>> e * a == a
        True
        """
        if not isinstance(other, AlgebraElement):
            return self._scaled(self._field.convert(other))
        terms: Dict[Path, Scalar] = {}
        for p, x in self._terms.items():
            for q, y in other._terms.items():
                if (pq := compose(p, q)) is not None:
                    terms[pq] = terms.get(pq, self._field.zero) + x * y
        return self._make_with_no_checks(self._quiver, self._field, {p: c for p, c in terms.items() if c})

    def __neg__(self) -> 'AlgebraElement':
        return self._scaled(-self._field.one)

    def __pow__(self, exponent: int) -> 'AlgebraElement':
        """Power by repeated multiplication; the zeroth power is the sum of the stationary paths at the sources."""
        if exponent < 0:
            raise ValueError('Negative powers are not defined in a path algebra')
        result = AlgebraElement._make_with_no_checks(
            self._quiver,
            self._field,
            {Path(v, v): self._field.one for v in sorted({p.source for p in self._terms})}
        )
        for _ in range(exponent):
            result = result * self
        return result

    def __repr__(self) -> str:
        if not self._terms:
            return '0'
        pieces = []
        for path, coefficient in self:
            text = self._field.format(coefficient)
            name = self._quiver.path_name(path)
            if text == '1':
                pieces.append(f'+ {name}')
            elif text.startswith('-'):
                pieces.append(f'- {name}' if text == '-1' else f'- {text[1:]}*{name}')
            else:
                pieces.append(f'+ {text}*{name}')
        joined = ' '.join(pieces)
        return joined[2:] if joined.startswith('+ ') else '-' + joined[2:]

    def __rmul__(self, other: ScalarLike) -> 'AlgebraElement':
        return self._scaled(self._field.convert(other))

    def __sub__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    @staticmethod
    def _make_with_no_checks(quiver: Quiver, field: FieldSpec, terms: Dict[Path, Scalar]) -> 'AlgebraElement':
        """Wraps already reduced terms without converting coefficients or dropping zeros."""
        element = AlgebraElement.__new__(AlgebraElement)
        element._quiver = quiver  # type: ignore
        element._field = field  # type: ignore
        element._terms = terms  # type: ignore
        return element

    @classmethod
    def from_path(cls, quiver: Quiver, field: FieldSpec, path: Path, coefficient: ScalarLike = 1) -> 'AlgebraElement':
        return cls(quiver, field, {path: coefficient})

    @classmethod
    def zero(cls, quiver: Quiver, field: FieldSpec) -> 'AlgebraElement':
        return cls._make_with_no_checks(quiver, field, {})

    @property
    def field(self) -> FieldSpec:
        return self._field

    @property
    def quiver(self) -> Quiver:
        return self._quiver

    @property
    def terms(self) -> Dict[Path, Scalar]:
        """A copy of the coefficient map."""
        return dict(self._terms)

    def endpoints(self) -> Optional[Tuple[int, int]]:
        """Common (source, target) of all terms, or None when the element is zero or not parallel."""
        ends = {(p.source, p.target) for p in self._terms}
        return next(iter(ends)) if len(ends) == 1 else None

    def leading(self) -> Tuple[Path, Scalar]:
        """Largest term in the monomial order."""
        if not self._terms:
            raise ValueError('The zero element has no leading term')
        path = max(self._terms, key=deglex_key)
        return path, self._terms[path]

    def _scaled(self, factor: Scalar) -> 'AlgebraElement':
        if not factor:
            return AlgebraElement.zero(self._quiver, self._field)
        return self._make_with_no_checks(
            self._quiver, self._field, {p: c * factor for p, c in self._terms.items()}
        )


class Relation(NamedTuple):
    """Equation ``lhs = rhs`` between path algebra elements, with a human readable label."""

    lhs: AlgebraElement
    rhs: AlgebraElement
    label: str = ''

    @property
    def element(self) -> AlgebraElement:
        return self.lhs - self.rhs


def enumerate_paths(quiver: Quiver, max_len: int) -> List[Path]:
    """
    All paths of length at most 'max_len', ordered by (length, arrow indices); stationary paths by vertex.

    >>> q = Quiver(('1', '2'), (('a', '1', '2'),))
    >>> [q.path_name(p) for p in enumerate_paths(q, 3)]
    ['e1', 'e2', 'a']

    Args:
        quiver:   quiver to walk
        max_len:  maximal path length
    Returns:
        the paths
    """
    if max_len < 0:
        raise ValueError(f'Maximal path length must be non-negative, got {max_len}')
    level = [Path(v, v) for v in range(len(quiver.vertices))]
    result = list(level)
    for _ in range(max_len):
        level = sorted(
            (
                Path(p.source, quiver.arrows[a].target, p.arrows + (a,))
                for p in level
                for a in quiver.outgoing(p.target)
            ),
            key=deglex_key
        )
        if not level:
            break
        result.extend(level)
    return result


def random_path(quiver: Quiver, max_len: int, rng: random.Random) -> Path:
    """
    Random walk from a uniformly chosen vertex, of uniformly chosen length at most 'max_len';
    the walk stops early at a sink.

    >>> q = Quiver(('1', '2'), (('a', '1', '2'),))
    >>> random_path(q, 0, random.Random(0)).is_stationary
    True
    """
    vertex = rng.randrange(len(quiver.vertices))
    path = Path(vertex, vertex)
    for _ in range(rng.randint(0, max_len)):
        outgoing = quiver.outgoing(path.target)
        if not outgoing:
            break
        a = rng.choice(outgoing)
        path = Path(path.source, quiver.arrows[a].target, path.arrows + (a,))
    return path


def arrow_cycles(quiver: Quiver, length: int) -> List[Tuple[int, ...]]:
    """
    Oriented cycles of the given length passing through pairwise distinct vertices.
    Each cycle is listed once, rotated to start at its smallest arrow index; the list is sorted.

    >>> q = Quiver(('1', '2'), (('a', '1', '2'), ('b', '2', '1')))
    >>> arrow_cycles(q, 2)
    [(0, 1)]

    Args:
        quiver:  quiver to search
        length:  number of arrows in each cycle
    Returns:
        the cycles as tuples of arrow indices
    """
    found = set()

    def walk(start: int, vertex: int, visited: Tuple[int, ...], used: Tuple[int, ...]) -> Iterable[Tuple[int, ...]]:
        for a in quiver.outgoing(vertex):
            target = quiver.arrows[a].target
            if len(used) + 1 == length:
                if target == start:
                    yield used + (a,)
            elif target not in visited:
                yield from walk(start, target, visited + (target,), used + (a,))

    for start in range(len(quiver.vertices)):
        for cycle in walk(start, start, (start,), ()):
            pivot = cycle.index(min(cycle))
            found.add(tuple(chain(cycle[pivot:], cycle[:pivot])))
    return sorted(found)
