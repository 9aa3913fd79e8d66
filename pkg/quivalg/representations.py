"""
Right modules over a quotient algebra as quiver representations.

A module M is a space Mᵢ per vertex and, for each arrow a: i -> j, the matrix of m ↦ m·a.
Vectors are rows, so a path a₁…aₖ acts by the product M(a₁)…M(aₖ) in path order.
"""
import logging
from typing import Dict, Final, List, NamedTuple, Optional, Sequence, Tuple

from quivalg.exceptions import ModuleError
from quivalg.functions import first, seeded_then_swept
from quivalg.linalg import (
    SparseVector,
    SpanSolver,
    add_scaled,
    combine,
    independent_subset,
    left_kernel,
    matrix_from_rows,
    nullspace,
    rank,
    vector_times
)
from quivalg.quiver import Path, Relation
from quivalg.rewriting import QuotientAlgebra
from quivalg.settings import DEFAULT_SEED, RANDOM_COEFFICIENT_BOUND, RANDOM_TRIALS, SWEEP_GRID, budgets

__all__: Final = (
    # Classes
    'ModuleMap',
    'OrbitStep',
    'ProjectiveCover',
    'Representation',

    # Functions
    'direct_sum',
    'hom_space',
    'kernel',
    'modules_isomorphic',
    'omega_orbit',
    'projective',
    'projective_cover',
    'simple',
    'syzygy',
    'top_dimensions'
)

_logger = logging.getLogger(__name__)

Matrix = List[SparseVector]  # row k is the image of the k-th basis vector


class Representation:
    """Finite-dimensional right module over a quotient algebra, checked against its defining relations."""

    __slots__ = ('_actions', '_algebra', '_dims')

    def __init__(self,
                 algebra: QuotientAlgebra,
                 dims: Sequence[int],
                 actions: Sequence[Matrix],
                 check: bool = True) -> None:
        """
        Args:
            algebra:  the algebra acting on the right
            dims:     dimension at every vertex
            actions:  one matrix per arrow, in arrow order
            check:    verify shapes and that every defining relation acts by zero
        Raises:
            ModuleError:  if a check fails
        """
        quiver = algebra.quiver
        if len(dims) != len(quiver.vertices) or len(actions) != len(quiver.arrows):
            raise ModuleError(
                f'Representation needs {len(quiver.vertices)} dimensions and {len(quiver.arrows)} matrices, '
                f'got {len(dims)} and {len(actions)}'
            )
        self._algebra: Final = algebra
        self._dims: Final = tuple(dims)
        self._actions: Final = tuple(tuple(dict(row) for row in matrix) for matrix in actions)
        if check:
            self._check()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return self._algebra is other._algebra and self._dims == other._dims and self._actions == other._actions

    def __hash__(self) -> int:
        return hash(self._dims)

    def __repr__(self) -> str:
        return f'Representation(dims={self._dims})'

    @property
    def algebra(self) -> QuotientAlgebra:
        return self._algebra

    @property
    def dimension(self) -> int:
        return sum(self._dims)

    @property
    def dims(self) -> Tuple[int, ...]:
        return self._dims

    def action(self, arrow: int) -> Tuple[SparseVector, ...]:
        return self._actions[arrow]

    def act(self, vector: SparseVector, path: Path) -> SparseVector:
        """The vector m·p for m in M at the source of p."""
        for arrow in path.arrows:
            vector = vector_times(vector, self._actions[arrow])
        return vector

    def radical_images(self, vertex: int) -> List[SparseVector]:
        """Vectors spanning (M·rad A) at the vertex: the images of the arrows ending there."""
        return [row for a in self._algebra.quiver.incoming(vertex) for row in self._actions[a] if row]

    def _check(self) -> None:
        quiver = self._algebra.quiver
        for a, arrow in enumerate(quiver.arrows):
            matrix = self._actions[a]
            if len(matrix) != self._dims[arrow.source] or any(
                    k >= self._dims[arrow.target] or k < 0 for row in matrix for k in row):
                raise ModuleError(
                    f'Matrix of arrow {arrow.name!r} does not map dimension {self._dims[arrow.source]} '
                    f'to dimension {self._dims[arrow.target]}'
                )
        for relation in self._algebra.relations:
            element = relation.element if isinstance(relation, Relation) else relation
            endpoints = element.endpoints()
            if endpoints is None:
                continue
            for k in range(self._dims[endpoints[0]]):
                value: SparseVector = {}
                for path, coefficient in element.terms.items():
                    add_scaled(value, self.act({k: self._algebra.field.one}, path), coefficient)
                if value:
                    label = f' {relation.label!r}' if isinstance(relation, Relation) and relation.label else ''
                    raise ModuleError(f'Relation{label} does not act by zero on the representation')


class ModuleMap(NamedTuple):
    """Module homomorphism given by one matrix per vertex (rows: source basis, columns: target basis)."""

    source: Representation
    target: Representation
    matrices: Tuple[Matrix, ...]

    def apply(self, vertex: int, vector: SparseVector) -> SparseVector:
        return vector_times(vector, self.matrices[vertex])

    def check(self) -> None:
        """
        Raises:
            ModuleError:  if the map does not commute with some arrow
        """
        quiver = self.source.algebra.quiver
        for a, arrow in enumerate(quiver.arrows):
            for k in range(self.source.dims[arrow.source]):
                left = vector_times(self.source.action(a)[k], self.matrices[arrow.target])
                right = vector_times(self.matrices[arrow.source][k], self.target.action(a))
                if left != right:
                    raise ModuleError(f'Module map does not commute with the action of arrow {arrow.name!r}')

    def is_invertible(self) -> bool:
        domain = self.source.algebra.field.domain
        return self.source.dims == self.target.dims and all(
            rank(matrix_from_rows(matrix, d, domain)) == d for matrix, d in zip(self.matrices, self.target.dims)
        )


def _block_positions(algebra: QuotientAlgebra, i: int) -> List[Dict[int, int]]:
    return [{u: k for k, u in enumerate(algebra.block_indices(i, j))} for j in range(len(algebra.vertices))]


def projective(algebra: QuotientAlgebra, vertex: int) -> Representation:
    """
    The indecomposable projective eᵢA, with basis the basis paths starting at i.

    Args:
        algebra:  the algebra
        vertex:   index i
    Returns:
        the representation; its dimension vector is row i of the Cartan matrix
    """
    positions = _block_positions(algebra, vertex)
    dims = [len(p) for p in positions]
    actions = []
    for arrow in algebra.quiver.arrows:
        image = algebra.path_vector(arrow.name)
        target = positions[arrow.target]
        actions.append([
            {target[w]: c for w, c in algebra.multiply({u: algebra.field.one}, image).items()}
            for u in positions[arrow.source]
        ])
    return Representation(algebra, dims, actions)


def simple(algebra: QuotientAlgebra, vertex: int) -> Representation:
    dims = [int(v == vertex) for v in range(len(algebra.vertices))]
    return Representation(algebra, dims, [[{}] * dims[a.source] for a in algebra.quiver.arrows])


def direct_sum(modules: Sequence[Representation], algebra: Optional[QuotientAlgebra] = None) -> Representation:
    """
    Block diagonal sum; summands are stacked in the given order at every vertex.

    Args:
        modules:  the summands
        algebra:  the algebra, needed only when 'modules' is empty
    Returns:
        the sum
    """
    if not modules:
        if algebra is None:
            raise ValueError('The algebra of an empty direct sum must be given')
        return Representation(algebra, [0] * len(algebra.vertices), [[] for _ in algebra.quiver.arrows], False)
    algebra = modules[0].algebra
    n = len(algebra.vertices)
    dims = [sum(m.dims[v] for m in modules) for v in range(n)]
    actions: List[Matrix] = []
    for a, arrow in enumerate(algebra.quiver.arrows):
        matrix: Matrix = []
        target_offset = 0
        for m in modules:
            matrix.extend({target_offset + k: c for k, c in row.items()} for row in m.action(a))
            target_offset += m.dims[arrow.target]
        actions.append(matrix)
    return Representation(algebra, dims, actions, check=False)


def _top_generators(module: Representation) -> List[Tuple[int, SparseVector]]:
    domain = module.algebra.field.domain
    one = module.algebra.field.one
    generators = []
    for v, d in enumerate(module.dims):
        images = module.radical_images(v)
        candidates = images + [{k: one} for k in range(d)]
        generators.extend((v, candidates[i]) for i in independent_subset(candidates, d, domain) if i >= len(images))
    return generators


def top_dimensions(module: Representation) -> List[int]:
    """Dimensions of M / M·rad A at every vertex."""
    counts = [0] * len(module.dims)
    for v, _ in _top_generators(module):
        counts[v] += 1
    return counts


class ProjectiveCover(NamedTuple):
    projective: Representation
    epi: ModuleMap
    summands: Tuple[int, ...]


def projective_cover(module: Representation) -> ProjectiveCover:
    """
    Minimal projective cover: one summand P_v per vector of a basis of the top at v, sent onto that vector.

    Args:
        module:  the module M
    Returns:
        the projective, the epimorphism onto M and the vertex of every summand
    """
    algebra = module.algebra
    generators = _top_generators(module)
    summands = [projective(algebra, v) for v, _ in generators]
    cover = direct_sum(summands, algebra)
    matrices: List[Matrix] = [[] for _ in algebra.vertices]
    for (v, generator), summand in zip(generators, summands):
        for j in range(len(algebra.vertices)):
            for u in algebra.block_indices(v, j):
                matrices[j].append(module.act(generator, algebra.basis_paths[u]))
    epi = ModuleMap(cover, module, tuple(matrices))
    _logger.debug('Projective cover of %r has summands at vertices %s', module, [v for v, _ in generators])
    return ProjectiveCover(cover, epi, tuple(v for v, _ in generators))


def kernel(morphism: ModuleMap) -> Tuple[Representation, ModuleMap]:
    """
    Kernel of a module map as a representation together with its inclusion.

    Raises:
        ModuleError:  if the kernel is not closed under the arrows, i.e. the map does not intertwine
    """
    source = morphism.source
    algebra = source.algebra
    domain = algebra.field.domain
    bases = [
        left_kernel(matrix_from_rows(matrix, d, domain)) if source.dims[v] else []
        for v, (matrix, d) in enumerate(zip(morphism.matrices, morphism.target.dims))
    ]
    solvers = [SpanSolver(basis, source.dims[v], domain) for v, basis in enumerate(bases)]
    actions = []
    for a, arrow in enumerate(algebra.quiver.arrows):
        matrix = []
        for vector in bases[arrow.source]:
            coordinates = solvers[arrow.target].coordinates(vector_times(vector, source.action(a)))
            if coordinates is None:
                raise ModuleError(f'Kernel is not closed under arrow {arrow.name!r}')
            matrix.append({k: c for k, c in enumerate(coordinates) if c})
        actions.append(matrix)
    sub = Representation(algebra, [len(b) for b in bases], actions, check=False)
    return sub, ModuleMap(sub, source, tuple(list(basis) for basis in bases))


def syzygy(module: Representation) -> Representation:
    """Ω(M), the kernel of the projective cover of M."""
    return kernel(projective_cover(module).epi)[0]


def hom_space(source: Representation, target: Representation) -> List[ModuleMap]:
    """
    Basis of Hom_A(M, N) from the linear system M(a)·f_t = f_s·N(a) over all arrows a: s -> t.

    Args:
        source:  M
        target:  N
    Returns:
        the basis
    """
    algebra = source.algebra
    n = len(algebra.vertices)
    offsets = [0] * (n + 1)
    for v in range(n):
        offsets[v + 1] = offsets[v] + source.dims[v] * target.dims[v]

    def unknown(v: int, row: int, column: int) -> int:
        return offsets[v] + row * target.dims[v] + column

    equations: List[SparseVector] = []
    for a, arrow in enumerate(algebra.quiver.arrows):
        s, t = arrow.source, arrow.target
        block: Dict[Tuple[int, int], SparseVector] = {}
        for r, row in enumerate(source.action(a)):
            for k, value in row.items():
                for c in range(target.dims[t]):
                    add_scaled(block.setdefault((r, c), {}), {unknown(t, k, c): value}, algebra.field.one)
        for k, row in enumerate(target.action(a)):
            for c, value in row.items():
                for r in range(source.dims[s]):
                    add_scaled(block.setdefault((r, c), {}), {unknown(s, r, k): value}, -algebra.field.one)
        equations.extend(equation for equation in block.values() if equation)
    solutions = nullspace(matrix_from_rows(equations, offsets[n], algebra.field.domain))
    _logger.debug('Hom space of %r and %r: %d unknowns, %d equations, dimension %d',
                  source, target, offsets[n], len(equations), len(solutions))
    maps = []
    for solution in solutions:
        matrices = []
        for v in range(n):
            rows: Matrix = [{} for _ in range(source.dims[v])]
            for r in range(source.dims[v]):
                for c in range(target.dims[v]):
                    if value := solution.get(unknown(v, r, c)):
                        rows[r][c] = value
            matrices.append(rows)
        maps.append(ModuleMap(source, target, tuple(matrices)))
    return maps


def modules_isomorphic(first_module: Representation,
                       second_module: Representation,
                       seed: int = DEFAULT_SEED,
                       cap: Optional[int] = None) -> Optional[ModuleMap]:
    """
    Looks for an invertible homomorphism: dimension vectors first, then seeded random combinations of
    a Hom basis, then a sweep over small coefficients.

    Args:
        first_module:   M
        second_module:  N
        seed:           seed of the random phase
        cap:            total candidate cap; ``settings.budgets()`` when omitted
    Returns:
        an isomorphism M -> N, or None when the dimension vectors differ or no candidate is invertible
    """
    if first_module.dims != second_module.dims:
        return None
    field = first_module.algebra.field
    basis = hom_space(first_module, second_module)
    cap = budgets().search_candidates if cap is None else cap

    def combination(coefficients: Tuple[int, ...]) -> ModuleMap:
        scalars = [field.convert(c) for c in coefficients]
        matrices = tuple(
            [combine(scalars, (f.matrices[v][r] for f in basis)) for r in range(first_module.dims[v])]
            for v in range(len(first_module.dims))
        )
        return ModuleMap(first_module, second_module, matrices)

    candidates = (
        combination(c) for c in seeded_then_swept(len(basis), seed, RANDOM_TRIALS, RANDOM_COEFFICIENT_BOUND, SWEEP_GRID, cap)
    )
    if not first_module.dimension:
        return ModuleMap(first_module, second_module, tuple([] for _ in first_module.dims))
    tried, witness = first(candidates, ModuleMap.is_invertible)
    if witness is None:
        _logger.warning('No invertible map among %d candidates between modules of dimensions %s',
                        tried, first_module.dims)
    return witness


class OrbitStep(NamedTuple):
    step: int
    dims: Tuple[int, ...]
    isomorphic: Optional[bool]  # None: same dimensions, no witness found


def omega_orbit(algebra: QuotientAlgebra, vertex: int, steps: int, seed: int = DEFAULT_SEED) -> List[OrbitStep]:
    """
    Iterated syzygies of the simple module at a vertex, each compared with the simple itself.

    Args:
        algebra:  the algebra
        vertex:   vertex of the simple module
        steps:    number of syzygies
        seed:     seed of the isomorphism searches
    Returns:
        one entry per step
    """
    if steps < 1:
        raise ValueError(f'Number of steps must be positive, got {steps}')
    start = simple(algebra, vertex)
    current = start
    orbit = []
    for step in range(1, steps + 1):
        current = syzygy(current)
        if current.dims != start.dims:
            isomorphic: Optional[bool] = False
        else:
            isomorphic = True if modules_isomorphic(current, start, seed) is not None else None
        orbit.append(OrbitStep(step, current.dims, isomorphic))
        _logger.info('Omega^%d of the simple at %s has dimension vector %s', step, algebra.vertices[vertex], current.dims)
    return orbit

