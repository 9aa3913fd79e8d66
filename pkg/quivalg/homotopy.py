"""
Bounded complexes of projective modules over a quotient algebra and their morphisms up to homotopy.

Conventions:
    * homological grading, the differential dₙ: Xₙ -> Xₙ₋₁ lowers the degree;
    * Xₙ is a direct sum of indecomposable projectives P_v = e_v·A, stored as a tuple of vertices;
    * a map component P_k -> P_j is an element of e_j·A·e_k acting by left multiplication, so composing
      maps multiplies their entries in the order of composition;
    * the shift is X[s]ₙ = Xₙ₋ₛ with differential (-1)^s·dₙ₋ₛ.
"""
import logging
from itertools import product
from typing import Dict, Final, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from quivalg.algebra import FiniteAlgebra
from quivalg.analysis import CartanMatrix, gabriel_quiver, span_closure
from quivalg.exceptions import ComplexError, Condition1Failure, Condition2Failure, TiltingFailure
from quivalg.field import Scalar
from quivalg.linalg import (
    SparseVector,
    SpanSolver,
    add_scaled,
    independent_subset,
    matrix_from_columns,
    nullspace
)
from quivalg.presets import PresetParams, spherical
from quivalg.quiver import AlgebraElement, Quiver
from quivalg.rewriting import QuotientAlgebra
from quivalg.settings import TILTING_SHIFTS

__all__: Final = (
    # Classes
    'ChainMap',
    'EndomorphismAlgebra',
    'HomSpace',
    'IdentityResult',
    'PresentationReport',
    'ProjComplex',
    'TiltingReport',

    # Functions
    'build_tilting_generators',
    'build_tilting_T',
    'endomorphism_algebra',
    'euler_hom_dimension',
    'hom_complexes',
    'generator_identities',
    'verify_spherical_presentation',
    'verify_tilting'
)

_logger = logging.getLogger(__name__)

Components = Dict[Tuple[int, int], SparseVector]  # (target summand, source summand) -> entry


def _compose(algebra: FiniteAlgebra, left: Components, right: Components) -> Components:
    by_middle: Dict[int, List[Tuple[int, SparseVector]]] = {}
    for (middle, column), entry in right.items():
        by_middle.setdefault(middle, []).append((column, entry))
    result: Components = {}
    for (row, middle), entry in left.items():
        for column, other in by_middle.get(middle, ()):
            if product_entry := algebra.multiply(entry, other):
                add_scaled(result.setdefault((row, column), {}), product_entry, algebra.field.one)
    return {key: value for key, value in result.items() if value}


def _accumulate(target: Components, source: Components, factor: Scalar) -> Components:
    for key, entry in source.items():
        updated = add_scaled(target.setdefault(key, {}), entry, factor)
        if not updated:
            del target[key]
    return target


class ProjComplex:
    """Bounded complex of finitely generated projective right modules."""

    __slots__ = ('_algebra', '_differentials', '_name', '_terms')

    def __init__(self,
                 algebra: QuotientAlgebra,
                 terms: Mapping[int, Sequence[int]],
                 differentials: Optional[Mapping[int, Components]] = None,
                 name: str = '') -> None:
        """
        Args:
            algebra:        the algebra
            terms:          vertices of the summands of every nonzero degree
            differentials:  entries of dₙ: Xₙ -> Xₙ₋₁ keyed by degree n
            name:           label used in reports
        Raises:
            ComplexError:  if an entry lies outside its block, refers to a missing summand, or d∘d ≠ 0
        """
        self._algebra: Final = algebra
        self._terms: Final = {n: tuple(vs) for n, vs in sorted(terms.items()) if vs}
        self._differentials: Final[Dict[int, Components]] = {}
        self._name: Final = name
        for n, entries in (differentials or {}).items():
            cleaned = {key: dict(entry) for key, entry in entries.items() if entry}
            for (row, column), entry in cleaned.items():
                source, target = self.term(n), self.term(n - 1)
                if column >= len(source) or row >= len(target):
                    raise ComplexError(f'Differential d{n} of {self!r} refers to a missing summand')
                _check_block(algebra, entry, target[row], source[column], f'd{n} of {self!r}')
            if cleaned:
                self._differentials[n] = cleaned
        for n in self._differentials:
            if _compose(algebra, self.differential(n - 1), self.differential(n)):
                raise ComplexError(f'd{n - 1}∘d{n} of {self!r} is not zero')

    def __repr__(self) -> str:
        if self._name:
            return self._name
        parts = ', '.join(
            f'{n}: ' + ' + '.join(f'P{self._algebra.vertices[v]}' for v in vs) for n, vs in self._terms.items()
        )
        return f'ProjComplex({parts})'

    @classmethod
    def stalk(cls, algebra: QuotientAlgebra, vertex: int, degree: int = 0, name: str = '') -> 'ProjComplex':
        return cls(algebra, {degree: (vertex,)}, name=name)

    @property
    def algebra(self) -> QuotientAlgebra:
        return self._algebra

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(self._terms)

    @property
    def name(self) -> str:
        return repr(self)

    def differential(self, n: int) -> Components:
        return self._differentials.get(n, {})

    def identity(self) -> 'ChainMap':
        idempotents = self._algebra.idempotents
        return ChainMap(self, self, {
            n: {(k, k): dict(idempotents[v]) for k, v in enumerate(vs)} for n, vs in self._terms.items()
        })

    def is_stalk(self) -> bool:
        return len(self._terms) == 1 and len(next(iter(self._terms.values()))) == 1

    def shift(self, s: int) -> 'ProjComplex':
        sign = -self._algebra.field.one if s % 2 else self._algebra.field.one
        return ProjComplex(
            self._algebra,
            {n + s: vs for n, vs in self._terms.items()},
            {n + s: _accumulate({}, entries, sign) for n, entries in self._differentials.items()},
            f'{self!r}[{s}]' if s else self._name
        )

    def summands(self) -> List[int]:
        return [v for vs in self._terms.values() for v in vs]

    def term(self, n: int) -> Tuple[int, ...]:
        return self._terms.get(n, ())


def _check_block(algebra: FiniteAlgebra, entry: SparseVector, row_vertex: int, column_vertex: int, where: str) -> None:
    if any(algebra.blocks[u] != (row_vertex, column_vertex) for u in entry):
        raise ComplexError(
            f'Entry of {where} must lie in e{algebra.vertices[row_vertex]}·A·e{algebra.vertices[column_vertex]}'
        )


class ChainMap:
    """Degree-preserving morphism of complexes; components[n] holds the entries of fₙ: Xₙ -> Yₙ."""

    __slots__ = ('_components', '_source', '_target')

    def __init__(self, source: ProjComplex, target: ProjComplex, components: Mapping[int, Components]) -> None:
        self._source: Final = source
        self._target: Final = target
        self._components: Final = {
            n: cleaned for n, entries in sorted(components.items())
            if (cleaned := {key: dict(entry) for key, entry in entries.items() if entry})
        }
        algebra = source.algebra
        for n, entries in self._components.items():
            for (row, column), entry in entries.items():
                if row >= len(target.term(n)) or column >= len(source.term(n)):
                    raise ComplexError(f'Component {n} of a map {source!r} -> {target!r} refers to a missing summand')
                _check_block(algebra, entry, target.term(n)[row], source.term(n)[column], f'a map {source!r} -> {target!r}')

    def __add__(self, other: 'ChainMap') -> 'ChainMap':
        return self.combine(other, self._source.algebra.field.one)

    def __bool__(self) -> bool:
        return bool(self._components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainMap):
            return NotImplemented
        return self._components == other._components

    def __repr__(self) -> str:
        return f'ChainMap({self._source!r} -> {self._target!r})'

    @property
    def components(self) -> Dict[int, Components]:
        return {n: {key: dict(entry) for key, entry in entries.items()} for n, entries in self._components.items()}

    @property
    def source(self) -> ProjComplex:
        return self._source

    @property
    def target(self) -> ProjComplex:
        return self._target

    def check(self) -> None:
        """
        Raises:
            ComplexError:  if fₙ₋₁∘dₙ ≠ dₙ∘fₙ in some degree
        """
        algebra = self._source.algebra
        for n in sorted(set(self._source.degrees) | set(self._target.degrees)):
            left = _compose(algebra, self.component(n - 1), self._source.differential(n))
            right = _compose(algebra, self._target.differential(n), self.component(n))
            if _accumulate(left, right, -algebra.field.one):
                raise ComplexError(f'{self!r} does not commute with the differentials in degree {n}')

    def combine(self, other: 'ChainMap', factor: Scalar) -> 'ChainMap':
        """The map self + factor·other."""
        degrees = set(self._components) | set(other._components)
        return ChainMap(self._source, self._target, {
            n: _accumulate(self.component(n), other._components.get(n, {}), factor) for n in degrees
        })

    def component(self, n: int) -> Components:
        return {key: dict(entry) for key, entry in self._components.get(n, {}).items()}

    def compose(self, other: 'ChainMap') -> 'ChainMap':
        """self∘other, defined when the target of 'other' is the source of self."""
        algebra = self._source.algebra
        return ChainMap(other._source, self._target, {
            n: _compose(algebra, entries, other._components.get(n, {})) for n, entries in self._components.items()
        })


class HomSpace:
    """
    Hom(X, Y) in the homotopy category: chain maps modulo null-homotopic maps, with a fixed complement
    of the null-homotopic maps inside the chain maps as class representatives.
    """

    __slots__ = ('_boundaries', '_complement', '_cycles', '_slot_index', '_slots', '_solver', '_source', '_target')

    def __init__(self, source: ProjComplex, target: ProjComplex) -> None:
        algebra = source.algebra
        one = algebra.field.one
        domain = algebra.field.domain
        self._source: Final = source
        self._target: Final = target
        degrees = sorted(set(source.degrees) | set(target.degrees))
        # coordinates of a chain map: (degree, target summand, source summand, basis element of the block)
        self._slots: Final = [
            (n, row, column, u)
            for n in degrees
            for row, column in product(range(len(target.term(n))), range(len(source.term(n))))
            for u in algebra.block_indices(target.term(n)[row], source.term(n)[column])
        ]
        self._slot_index: Final = {slot: k for k, slot in enumerate(self._slots)}

        equation_index: Dict[Tuple[int, int, int, int], int] = {}
        columns = []
        for n, row, column, u in self._slots:
            unit = {(row, column): {u: one}}
            image: SparseVector = {}
            for degree, entries, sign in (
                (n + 1, _compose(algebra, unit, source.differential(n + 1)), one),
                (n, _compose(algebra, target.differential(n), unit), -one)
            ):
                for (r, c), entry in entries.items():
                    for w, value in entry.items():
                        key = equation_index.setdefault((degree, r, c, w), len(equation_index))
                        add_scaled(image, {key: value}, sign)
            columns.append(image)
        self._cycles: Final = nullspace(matrix_from_columns(columns, len(equation_index), domain)) \
            if self._slots else []

        homotopy_images = []
        for n in degrees:
            for row, column in product(range(len(target.term(n + 1))), range(len(source.term(n)))):
                for u in algebra.block_indices(target.term(n + 1)[row], source.term(n)[column]):
                    unit = {(row, column): {u: one}}
                    image = self._flatten({
                        n: _compose(algebra, target.differential(n + 1), unit),
                        n + 1: _compose(algebra, unit, source.differential(n + 1))
                    })
                    if image:
                        homotopy_images.append(image)
        boundaries = [homotopy_images[i] for i in independent_subset(homotopy_images, len(self._slots), domain)]
        candidates = boundaries + list(self._cycles)
        kept = independent_subset(candidates, len(self._slots), domain)
        self._boundaries: Final = boundaries
        self._complement: Final = [candidates[i] for i in kept if i >= len(boundaries)]
        self._solver: Final = SpanSolver(boundaries + self._complement, len(self._slots), domain)
        _logger.debug('Hom(%r, %r): %d unknowns, %d equations, chain maps %d, null-homotopic %d',
                      source, target, len(self._slots), len(equation_index), len(self._cycles), len(boundaries))

    def __len__(self) -> int:
        return len(self._complement)

    def __repr__(self) -> str:
        return f'HomSpace({self._source!r} -> {self._target!r}, dim={len(self)})'

    @property
    def chain_dimension(self) -> int:
        return len(self._cycles)

    @property
    def dimension(self) -> int:
        return len(self._complement)

    @property
    def null_homotopic_dimension(self) -> int:
        return len(self._boundaries)

    @property
    def source(self) -> ProjComplex:
        return self._source

    @property
    def target(self) -> ProjComplex:
        return self._target

    def basis(self) -> List[ChainMap]:
        """Representatives of a basis of the homotopy classes."""
        return [self._unflatten(vector) for vector in self._complement]

    def class_of(self, morphism: ChainMap) -> List[Scalar]:
        """
        Coordinates of the homotopy class of a chain map in the basis of representatives.

        Raises:
            ComplexError:  if the map is not a chain map
        """
        coordinates = self._solver.coordinates(self._flatten(morphism.components))
        if coordinates is None:
            raise ComplexError(f'{morphism!r} is not a chain map')
        return coordinates[len(self._boundaries):]

    def is_null_homotopic(self, morphism: ChainMap) -> bool:
        return not any(self.class_of(morphism))

    def representative(self, coordinates: Sequence[Scalar]) -> ChainMap:
        vector: SparseVector = {}
        for value, basis_vector in zip(coordinates, self._complement):
            add_scaled(vector, basis_vector, value)
        return self._unflatten(vector)

    def _flatten(self, components: Mapping[int, Components]) -> SparseVector:
        vector: SparseVector = {}
        for n, entries in components.items():
            for (row, column), entry in entries.items():
                for u, value in entry.items():
                    if (key := self._slot_index.get((n, row, column, u))) is None:
                        raise ComplexError(f'Map component in degree {n} lies outside Hom({self._source!r}, {self._target!r})')
                    add_scaled(vector, {key: value}, self._source.algebra.field.one)
        return vector

    def _unflatten(self, vector: SparseVector) -> ChainMap:
        components: Dict[int, Components] = {}
        for key, value in vector.items():
            n, row, column, u = self._slots[key]
            components.setdefault(n, {}).setdefault((row, column), {})[u] = value
        return ChainMap(self._source, self._target, components)


def hom_complexes(source: ProjComplex, target: ProjComplex, shift: int = 0) -> HomSpace:
    """
    Hom(X, Y[shift]) in the homotopy category of projectives.

    Args:
        source:  X
        target:  Y
        shift:   s
    Returns:
        the Hom space with its chain map, null-homotopic and quotient bases
    """
    return HomSpace(source, target.shift(shift))


def euler_hom_dimension(source: ProjComplex, target: ProjComplex, cartan: CartanMatrix) -> int:
    """
    Alternating sum Σ (-1)^{r-s}·dim Hom_A(Xʳ, Yˢ), with dim Hom_A(P_k, P_j) = C[j][k].
    Equals dim Hom(X, Y) when Hom(X, Y[i]) = 0 for every i ≠ 0.
    """
    total = 0
    for r in source.degrees:
        for s in target.degrees:
            sign = -1 if (r - s) % 2 else 1
            total += sign * sum(cartan[j][k] for k in source.term(r) for j in target.term(s))
    return total


def build_tilting_T(algebra: QuotientAlgebra) -> List[ProjComplex]:
    """
    The six summands of the tilting complex over the tetrahedral algebra: the stalks P1, P5, P3, P4, P6
    and T3 = (P2 -> P3 ⊕ P4) in degrees 1 and 0 with differential [-σ; β].

    Args:
        algebra:  the tetrahedral algebra
    Returns:
        T1, ..., T6
    """
    vertex = algebra.quiver.vertex_index
    field = algebra.field
    differential = {
        (0, 0): algebra.scale(algebra.path_vector('sigma'), -field.one),
        (1, 0): algebra.path_vector('beta')
    }
    return [
        ProjComplex.stalk(algebra, vertex('1'), name='T1'),
        ProjComplex.stalk(algebra, vertex('5'), name='T2'),
        ProjComplex(algebra, {1: (vertex('2'),), 0: (vertex('3'), vertex('4'))}, {1: differential}, 'T3'),
        ProjComplex.stalk(algebra, vertex('3'), name='T4'),
        ProjComplex.stalk(algebra, vertex('4'), name='T5'),
        ProjComplex.stalk(algebra, vertex('6'), name='T6')
    ]


class TiltingReport(NamedTuple):
    hom_dimensions: Dict[Tuple[int, int, int], int]  # (i, j, s) -> dim Hom(Tᵢ, Tⱼ[s])
    generated: Tuple[str, ...]  # projectives in the order they were generated
    support: Tuple[int, int]


def verify_tilting(complexes: Sequence[ProjComplex], shifts: Sequence[int] = TILTING_SHIFTS) -> TiltingReport:
    """
    Checks the two tilting conditions: no nonzero maps Tᵢ -> Tⱼ[s] for s ≠ 0 in 'shifts', and generation
    of every indecomposable projective, where a projective counts as generated once it is a stalk summand
    or sits in some Tᵢ all of whose other summands are generated.

    Args:
        complexes:  the summands Tᵢ
        shifts:     nonzero shifts to test
    Returns:
        the Hom dimensions and the generation order
    Raises:
        Condition1Failure:  on the first nonzero Hom(Tᵢ, Tⱼ[s])
        Condition2Failure:  when some projective is never generated
        TiltingFailure:     when the shifts do not cover the degree support
    """
    algebra = complexes[0].algebra
    degrees = [n for t in complexes for n in t.degrees]
    support = (min(degrees), max(degrees))
    width = support[1] - support[0]
    if any(s not in shifts for s in range(-width, width + 1) if s):
        raise TiltingFailure(f'Shifts {tuple(shifts)} do not cover the degree support {support}')
    dimensions = {}
    for (i, x), (j, y) in product(enumerate(complexes), repeat=2):
        for s in shifts:
            if not s:
                continue
            dimension = len(hom_complexes(x, y, s))
            dimensions[i, j, s] = dimension
            if dimension:
                raise Condition1Failure((i, j), s, dimension)
    _logger.info('No maps to nonzero shifts among %d Hom spaces', len(dimensions))

    generated: List[int] = []
    changed = True
    while changed:
        changed = False
        for t in complexes:
            summands = t.summands()
            for position, v in enumerate(summands):
                others = summands[:position] + summands[position + 1:]
                if v not in generated and all(w in generated for w in others):
                    generated.append(v)
                    changed = True
    missing = tuple(algebra.vertices[v] for v in range(len(algebra.vertices)) if v not in generated)
    if missing:
        raise Condition2Failure(missing[0], missing)
    return TiltingReport(dimensions, tuple(algebra.vertices[v] for v in generated), support)


class EndomorphismAlgebra(FiniteAlgebra):
    """End(T) for T = T1 ⊕ … ⊕ Tₙ; the block (i, j) is Hom(Tⱼ, Tᵢ) and x·y = x∘y."""

    __slots__ = ('_complexes', '_hom_spaces', '_offsets')

    def __init__(self, complexes: Sequence[ProjComplex]) -> None:
        field = complexes[0].algebra.field
        n = len(complexes)
        hom_spaces = {(i, j): HomSpace(complexes[j], complexes[i]) for i, j in product(range(n), repeat=2)}
        offsets: Dict[Tuple[int, int], int] = {}
        labels, blocks = [], []
        for (i, j), space in hom_spaces.items():
            offsets[i, j] = len(labels)
            labels.extend(f'{complexes[j]!r}->{complexes[i]!r}:{k}' for k in range(len(space)))
            blocks.extend([(i, j)] * len(space))
        self._complexes: Final = tuple(complexes)
        self._hom_spaces: Final = hom_spaces
        self._offsets: Final = offsets
        representatives = {key: space.basis() for key, space in hom_spaces.items()}
        table: Dict[int, Dict[int, SparseVector]] = {}
        for (i, j), left in representatives.items():
            for k in range(n):
                right = representatives[j, k]
                for a, x in enumerate(left):
                    for b, y in enumerate(right):
                        if product_vector := self._class_vector(x.compose(y), i, k):
                            table.setdefault(offsets[i, j] + a, {})[offsets[j, k] + b] = product_vector
        idempotents = [self._class_vector(t.identity(), i, i) for i, t in enumerate(complexes)]
        super().__init__(field, [repr(t) for t in complexes], labels, blocks, table, idempotents)
        _logger.info('End(T) has dimension %d', len(labels))

    @property
    def complexes(self) -> Tuple[ProjComplex, ...]:
        return self._complexes

    def class_vector(self, morphism: ChainMap) -> SparseVector:
        """Vector of the homotopy class of a chain map Tⱼ -> Tᵢ."""
        i, j = self._complexes.index(morphism.target), self._complexes.index(morphism.source)
        return self._class_vector(morphism, i, j)

    def format(self, vector: SparseVector) -> str:
        if not vector:
            return '0'
        return ' + '.join(f'{self.field.format(c)}*{self.labels[u]}' for u, c in sorted(vector.items()))

    def hom_space(self, i: int, j: int) -> HomSpace:
        """Hom(Tⱼ, Tᵢ)."""
        return self._hom_spaces[i, j]

    def _class_vector(self, morphism: ChainMap, i: int, j: int) -> SparseVector:
        offset = self._offsets[i, j]
        return {offset + k: c for k, c in enumerate(self._hom_spaces[i, j].class_of(morphism)) if c}


def endomorphism_algebra(complexes: Sequence[ProjComplex]) -> EndomorphismAlgebra:
    return EndomorphismAlgebra(complexes)


def build_tilting_generators(complexes: Sequence[ProjComplex], params: PresetParams) -> Dict[str, ChainMap]:
    """
    The eight chain maps between the summands of T matching the arrows of the spherical quiver:
    α̃ = δ, β̃ = [ξ, η + λ(ηγδ)^{m-1}η], γ̃ = [1; 0], σ̃ = α, δ̃ = γ, ϱ̃ = ν, ω̃ = [μ, ω], ν̃ = [0; 1].

    Args:
        complexes:  T1, ..., T6 from ``build_tilting_T``
        params:     degree m and λ
    Returns:
        the maps keyed by the arrow names of the spherical quiver
    Raises:
        ComplexError:  if some map is not a chain map
    """
    t1, t2, t3, t4, t5, t6 = complexes
    algebra = t1.algebra
    vector = algebra.path_vector
    eta = algebra.element('eta')
    twisted = algebra.element_vector(
        eta + algebra.element(*(('eta', 'gamma', 'delta') * (params.m - 1) + ('eta',))) * params.lambda_
    )
    e3, e4 = (dict(algebra.idempotents[algebra.quiver.vertex_index(v)]) for v in ('3', '4'))
    generators = {
        'alpha': ChainMap(t2, t1, {0: {(0, 0): vector('delta')}}),
        'beta': ChainMap(t3, t2, {0: {(0, 0): vector('xi'), (0, 1): twisted}}),
        'gamma': ChainMap(t4, t3, {0: {(0, 0): e3}}),
        'sigma': ChainMap(t1, t4, {0: {(0, 0): vector('alpha')}}),
        'delta': ChainMap(t1, t5, {0: {(0, 0): vector('gamma')}}),
        'rho': ChainMap(t6, t1, {0: {(0, 0): vector('nu')}}),
        'omega': ChainMap(t3, t6, {0: {(0, 0): vector('mu'), (0, 1): vector('omega')}}),
        'nu': ChainMap(t5, t3, {0: {(1, 0): e4}})
    }
    for generator in generators.values():
        generator.check()
    _logger.debug('Generators checked: %s', ', '.join(generators))
    return generators


def generator_identities(quiver: Quiver, params: PresetParams) -> List[Tuple[str, AlgebraElement, AlgebraElement]]:
    """The ten identities among the generators that hold in End(T), as (label, lhs, rhs) over the spherical quiver."""
    field, m = params.field, params.m

    def w(*names: str) -> AlgebraElement:
        return AlgebraElement.from_path(quiver, field, quiver.path(*names))

    def deformed(cycle: Tuple[str, ...], tail: Tuple[str, ...]) -> AlgebraElement:
        return w(*tail) + w(*(cycle * (m - 1) + tail)) * field.lambda_

    zero = AlgebraElement.zero(quiver, field)
    return [
        ('G1', w('alpha', 'beta', 'gamma'), w('rho', 'omega', 'gamma')),
        ('G2', w('sigma', 'alpha', 'beta'), w('sigma', 'rho', 'omega')),
        ('G3', w('gamma', 'sigma', 'rho'), w('nu', 'delta', 'rho')),
        ('G4', w('omega', 'gamma', 'sigma'), w('omega', 'nu', 'delta')),
        ('G5', w('beta', 'nu', 'delta'), deformed(('beta', 'gamma', 'sigma', 'alpha'), ('beta', 'gamma', 'sigma'))),
        ('G6', w('nu', 'delta', 'alpha'), deformed(('gamma', 'sigma', 'alpha', 'beta'), ('gamma', 'sigma', 'alpha'))),
        ('G7', w('delta', 'alpha', 'beta'), deformed(('delta', 'rho', 'omega', 'nu'), ('delta', 'rho', 'omega'))),
        ('G8', w('alpha', 'beta', 'nu'), deformed(('rho', 'omega', 'nu', 'delta'), ('rho', 'omega', 'nu'))),
        ('G9', w(*(('alpha', 'beta', 'gamma', 'sigma') * m + ('alpha',))), zero),
        ('G10', w(*(('gamma', 'sigma', 'alpha', 'beta') * m + ('gamma',))), zero)
    ]


# Role of each relation of the spherical algebra once ϱ is replaced by ϱ* = ϱ + λ(αβγσ)^{m-1}ϱ
_STARRED_LABELS: Final = {
    'R1': 'G5', 'R2': 'G8*', 'R3': 'G6', 'R4': 'G7*', 'R5': 'G2*',
    'R6': 'G4', 'R7': 'G1*', 'R8': 'G3*', 'R9': 'G9', 'R10': 'G10'
}


def _evaluate(algebra: FiniteAlgebra, element: AlgebraElement, images: Mapping[str, SparseVector]) -> SparseVector:
    quiver = element.quiver
    result: SparseVector = {}
    for path, coefficient in element.terms.items():
        value = dict(algebra.idempotents[path.source])
        for a in path.arrows:
            value = algebra.multiply(value, images[quiver.arrows[a].name])
        add_scaled(result, value, coefficient)
    return result


class IdentityResult(NamedTuple):
    label: str
    passed: bool
    residual: str


class PresentationReport(NamedTuple):
    identities: Tuple[IdentityResult, ...]
    starred: Tuple[IdentityResult, ...]
    generated_dimension: int
    expected_dimension: int
    gabriel: List[List[int]]

    @property
    def isomorphic(self) -> bool:
        """Whether the argument closes: every identity holds and the generators span an algebra of full dimension."""
        return all(r.passed for r in self.identities + self.starred) and \
            self.generated_dimension == self.expected_dimension


def verify_spherical_presentation(endomorphisms: EndomorphismAlgebra,
                                  generators: Mapping[str, ChainMap],
                                  params: PresetParams) -> PresentationReport:
    """
    Checks that End(T) is a quotient of the spherical algebra and has its dimension: the identities
    G1-G10 among the generator classes, the ten spherical relations after ϱ -> ϱ*, and the dimension
    of the subalgebra generated by the generators and the idempotents.

    Args:
        endomorphisms:  End(T)
        generators:     chain maps keyed by the arrows of the spherical quiver
        params:         degree m and λ
    Returns:
        the report
    """
    quiver, relations, field = spherical(params)
    m = params.m
    images = {name: endomorphisms.class_vector(morphism) for name, morphism in generators.items()}

    def check(label: str, lhs: AlgebraElement, rhs: AlgebraElement, values: Mapping[str, SparseVector]) -> IdentityResult:
        residual = _evaluate(endomorphisms, lhs - rhs, values)
        return IdentityResult(label, not residual, endomorphisms.format(residual))

    identities = tuple(check(label, lhs, rhs, images) for label, lhs, rhs in generator_identities(quiver, params))
    starred_images = dict(images)
    correction = AlgebraElement.from_path(
        quiver, field, quiver.path(*(('alpha', 'beta', 'gamma', 'sigma') * (m - 1) + ('rho',)))
    ) * params.lambda_
    add_scaled(starred_images['rho'], _evaluate(endomorphisms, correction, images), field.one)
    starred = tuple(
        check(_STARRED_LABELS.get(r.label, r.label), r.lhs, r.rhs, starred_images) for r in relations
    )
    generated = span_closure(endomorphisms, list(images.values()) + list(endomorphisms.idempotents))
    radical = span_closure(endomorphisms, list(images.values()))
    report = PresentationReport(identities, starred, len(generated), 36 * m + 4, gabriel_quiver(endomorphisms, radical))
    _logger.info('Spherical presentation of End(T): %d of %d identities hold, generated dimension %d',
                 sum(r.passed for r in identities + starred), len(identities) + len(starred), len(generated))
    return report
