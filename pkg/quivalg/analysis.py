"""Structural invariants of finite-dimensional algebras: Cartan matrix, socle, symmetrizing forms, radical layers."""
import logging
import random
from typing import Final, List, NamedTuple, Optional, Sequence, Tuple

from quivalg.algebra import FiniteAlgebra
from quivalg.functions import first, seeded_then_swept
from quivalg.linalg import (
    SparseVector,
    combine,
    independent_subset,
    matrix_from_columns,
    matrix_from_rows,
    nullspace,
    rank
)
from quivalg.quiver import AlgebraElement, Path
from quivalg.rewriting import QuotientAlgebra
from quivalg.settings import (
    DEFAULT_SEED,
    RANDOM_COEFFICIENT_BOUND,
    RANDOM_TRIALS,
    SWEEP_GRID,
    SYMMETRY_SAMPLE_PAIRS,
    SYMMETRY_SAMPLE_SUPPORT,
    budgets
)

__all__: Final = (
    # Classes
    'CartanMatrix',
    'IdentityCheck',
    'SymmetrizingForm',

    # Functions
    'cartan',
    'dimension',
    'find_symmetrizing_form',
    'gabriel_quiver',
    'longest_nonzero_paths',
    'radical_generators',
    'socle_basis',
    'socle_dims',
    'socle_is_path_spanned',
    'span_closure',
    'verify_identity'
)

_logger = logging.getLogger(__name__)


class CartanMatrix:
    """Integer matrix with C[i][j] = dim eᵢ·A·eⱼ."""

    __slots__ = ('_rows', '_vertices')

    def __init__(self, rows: Sequence[Sequence[int]], vertices: Optional[Sequence[str]] = None) -> None:
        """
        >>> CartanMatrix([[2, 1], [1, 2]]).is_symmetric()
        True

        Args:
            rows:      square matrix of non-negative integers
            vertices:  labels of the rows; 1..n when omitted
        Raises:
            ValueError:  if the matrix is not square or has a negative entry
        """
        self._rows: Final = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(self._rows)
        if any(len(row) != n for row in self._rows):
            raise ValueError(f'Cartan matrix must be square, got rows of lengths {[len(r) for r in self._rows]}')
        if any(x < 0 for row in self._rows for x in row):
            raise ValueError('Cartan matrix entries must be non-negative')
        self._vertices: Final = tuple(vertices) if vertices is not None else tuple(str(i + 1) for i in range(n))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CartanMatrix):
            return self._rows == other._rows
        if isinstance(other, (list, tuple)):
            return self._rows == tuple(tuple(row) for row in other)
        return NotImplemented

    def __getitem__(self, index: int) -> Tuple[int, ...]:
        return self._rows[index]

    def __hash__(self) -> int:
        return hash(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def __repr__(self) -> str:
        return f'CartanMatrix({[list(row) for row in self._rows]})'

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return self._rows

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    def column_sums(self) -> List[int]:
        return [sum(column) for column in zip(*self._rows)]

    def is_symmetric(self) -> bool:
        return all(self._rows[i][j] == self._rows[j][i] for i in range(len(self)) for j in range(i))

    def row_sums(self) -> List[int]:
        return [sum(row) for row in self._rows]

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self._rows]

    def total(self) -> int:
        return sum(self.row_sums())


def cartan(algebra: FiniteAlgebra) -> CartanMatrix:
    """
    >>> from quivalg.quiver import Quiver
    >>> from quivalg.rewriting import build_algebra
    >>> cartan(build_algebra(Quiver(('1', '2'), (('a', '1', '2'),)), (), 2))
    CartanMatrix([[1, 1], [0, 1]])
    """
    return CartanMatrix(algebra.cartan_blocks(), algebra.vertices)


def dimension(algebra: FiniteAlgebra) -> int:
    return len(algebra)


class IdentityCheck(NamedTuple):
    passed: bool
    residual: AlgebraElement


def verify_identity(algebra: QuotientAlgebra, lhs: AlgebraElement, rhs: AlgebraElement) -> IdentityCheck:
    """
    Decides ``lhs = rhs`` in the algebra.

    Args:
        algebra:  the quotient algebra
        lhs:      left side, an element of the path algebra
        rhs:      right side
    Returns:
        pass flag and the normal form of lhs - rhs, which is zero exactly on a pass
    """
    residual = algebra.normal_form(lhs - rhs)
    return IdentityCheck(not residual, residual)


def radical_generators(algebra: FiniteAlgebra) -> List[SparseVector]:
    """
    Vectors generating the Jacobson radical as a right ideal: the arrows of a quotient algebra,
    the known radical spanning set otherwise.

    Raises:
        ValueError:  if the algebra carries no radical
    """
    if isinstance(algebra, QuotientAlgebra):
        quiver = algebra.quiver
        return [vector for a in quiver.arrows if (vector := algebra.path_vector(a.name))]
    if algebra.radical is None:
        raise ValueError(f'{algebra!r} has no known radical')
    return list(algebra.radical)


def socle_basis(algebra: FiniteAlgebra, vertex: int) -> List[SparseVector]:
    """
    Basis of the socle of the right module eᵢA: the elements x of eᵢA with x·rad A = 0.

    Args:
        algebra:  the algebra
        vertex:   index i
    Returns:
        vectors of the algebra spanning the socle
    """
    indices = [u for u, (source, _) in enumerate(algebra.blocks) if source == vertex]
    generators = radical_generators(algebra)
    n = len(algebra)
    columns = []
    for u in indices:
        image: SparseVector = {}
        for k, generator in enumerate(generators):
            for w, value in algebra.multiply({u: algebra.field.one}, generator).items():
                image[k * n + w] = value
        columns.append(image)
    matrix = matrix_from_columns(columns, len(generators) * n, algebra.field.domain)
    return [{indices[k]: value for k, value in vector.items()} for vector in nullspace(matrix)]


def socle_dims(algebra: FiniteAlgebra) -> List[int]:
    """
    >>> from quivalg.quiver import Quiver
    >>> from quivalg.rewriting import build_algebra
    >>> socle_dims(build_algebra(Quiver(('1', '2'), ()), (), 0))
    [1, 1]
    """
    return [len(socle_basis(algebra, i)) for i in range(len(algebra.vertices))]


def longest_nonzero_paths(algebra: QuotientAlgebra, vertex: int) -> Tuple[int, List[SparseVector]]:
    """
    Normal forms of the longest paths from a vertex that do not vanish in the algebra.
    A path with zero normal form only has zero extensions, so each layer grows from the previous one.

    >>> from quivalg.quiver import Quiver
    >>> from quivalg.rewriting import build_algebra
    >>> q = Quiver(('1', '2'), (('a', '1', '2'),))
    >>> length, vectors = longest_nonzero_paths(build_algebra(q, (), 1), 0)
    >>> length, [sorted(vector) for vector in vectors]
    (1, [[1]])

    Args:
        algebra:  quotient of a path algebra
        vertex:   start vertex
    Returns:
        the maximal length and the coordinate vectors of the paths of that length
    """
    quiver, field = algebra.quiver, algebra.field
    layer = [(quiver.stationary(vertex), algebra.stationary_vector(vertex))]
    length = 0
    while True:
        extended = []
        for path, _ in layer:
            for a in quiver.outgoing(path.target):
                longer = Path(path.source, quiver.arrows[a].target, path.arrows + (a,))
                vector = algebra.element_vector(AlgebraElement.from_path(quiver, field, longer))
                if vector:
                    extended.append((longer, vector))
        if not extended:
            return length, [vector for _, vector in layer]
        layer = extended
        length += 1


def socle_is_path_spanned(algebra: QuotientAlgebra, vertex: int) -> bool:
    """Whether the socle of eᵢA is one-dimensional and contains every longest nonzero path from i."""
    socle = socle_basis(algebra, vertex)
    if len(socle) != 1:
        return False
    _, vectors = longest_nonzero_paths(algebra, vertex)
    n, domain = len(algebra), algebra.field.domain
    return all(rank(matrix_from_rows([socle[0], vector], n, domain)) == 1 for vector in vectors)


class SymmetrizingForm(NamedTuple):
    """Linear functional φ on the basis whose bilinear form (x, y) = φ(xy) is symmetric and non-degenerate."""

    functional: SparseVector
    gram_rank: int
    candidates_tried: int

    def value(self, x: SparseVector):
        return sum((self.functional[u] * c for u, c in x.items() if u in self.functional), 0)

    def verify(self, algebra: FiniteAlgebra, pairs: int = SYMMETRY_SAMPLE_PAIRS, seed: int = DEFAULT_SEED) -> int:
        """
        Re-checks φ(xy) = φ(yx) on random pairs of elements.

        Args:
            algebra:  the algebra the form belongs to
            pairs:    number of pairs
            seed:     seed of the generator
        Returns:
            the number of failing pairs
        """
        rng = random.Random(seed)
        field = algebra.field
        n = len(algebra)
        support = min(n, SYMMETRY_SAMPLE_SUPPORT)

        def sample() -> SparseVector:
            vector = {u: field.random_element(rng, RANDOM_COEFFICIENT_BOUND) for u in rng.sample(range(n), support)}
            return {u: c for u, c in vector.items() if c}

        failures = 0
        for _ in range(pairs):
            x, y = sample(), sample()
            if self.value(algebra.multiply(x, y)) != self.value(algebra.multiply(y, x)):
                failures += 1
        return failures


def _gram_components(algebra: FiniteAlgebra, functionals: Sequence[SparseVector]) -> List[List[SparseVector]]:
    # components[k][u] is row u of the Gram matrix of the k-th functional
    components = []
    for functional in functionals:
        rows = []
        for u in range(len(algebra)):
            row = {}
            for v in range(len(algebra)):
                value = sum(
                    (functional[w] * c for w, c in algebra.basis_product(u, v).items() if w in functional),
                    algebra.field.zero
                )
                if value:
                    row[v] = value
            rows.append(row)
        components.append(rows)
    return components


def find_symmetrizing_form(algebra: FiniteAlgebra,
                           seed: int = DEFAULT_SEED,
                           trials: int = RANDOM_TRIALS,
                           cap: Optional[int] = None) -> Optional[SymmetrizingForm]:
    """
    Searches the space of functionals vanishing on all commutators for one with a non-degenerate
    Gram matrix: first 'trials' seeded random combinations, then a sweep over small coefficients.

    >>> from quivalg.quiver import Quiver
    >>> from quivalg.rewriting import build_algebra
    >>> find_symmetrizing_form(build_algebra(Quiver(('1', '2'), (('a', '1', '2'),)), (), 2)) is None
    True

    Args:
        algebra:  the algebra
        seed:     seed of the random phase
        trials:   number of random candidates
        cap:      total candidate cap; ``settings.budgets()`` when omitted
    Returns:
        the certificate, or None when no candidate is non-degenerate (which proves nothing)
    """
    field = algebra.field
    n = len(algebra)
    cap = budgets().search_candidates if cap is None else cap
    commutators = []
    for u in range(n):
        for v in range(u + 1, n):
            difference = dict(algebra.basis_product(u, v))
            for w, value in algebra.basis_product(v, u).items():
                updated = difference.get(w, field.zero) - value
                if updated:
                    difference[w] = updated
                else:
                    difference.pop(w, None)
            if difference:
                commutators.append(difference)
    solutions = nullspace(matrix_from_rows(commutators, n, field.domain))
    _logger.debug('Trace functionals of %r form a space of dimension %d', algebra, len(solutions))
    components = _gram_components(algebra, solutions)

    def gram_rank(coefficients: Tuple[int, ...]) -> int:
        scalars = [field.convert(c) for c in coefficients]
        rows = [combine(scalars, (component[u] for component in components)) for u in range(n)]
        return rank(matrix_from_rows(rows, n, field.domain))

    candidates = seeded_then_swept(len(solutions), seed, trials, RANDOM_COEFFICIENT_BOUND, SWEEP_GRID, cap)
    tried, found = first(candidates, lambda coefficients: gram_rank(coefficients) == n)
    if found is None:
        _logger.warning('No non-degenerate symmetric functional among %d candidates for %r', tried, algebra)
        return None
    _logger.info('Symmetrizing form found for %r after %d candidates', algebra, tried)
    functional = combine([field.convert(c) for c in found], solutions)
    return SymmetrizingForm(functional, n, tried)


def span_closure(algebra: FiniteAlgebra, generators: Sequence[SparseVector]) -> List[SparseVector]:
    """
    Basis of the span of all nonempty products of the generators.

    Args:
        algebra:     the algebra
        generators:  vectors of the algebra
    Returns:
        a basis; the independent generators come first
    """
    domain, n = algebra.field.domain, len(algebra)
    generators = [g for g in generators if g]
    basis = [generators[i] for i in independent_subset(generators, n, domain)]
    frontier = list(basis)
    while frontier:
        candidates = basis + [product for x in frontier for g in generators if (product := algebra.multiply(x, g))]
        kept = independent_subset(candidates, n, domain)
        frontier = [candidates[i] for i in kept if i >= len(basis)]
        basis = [candidates[i] for i in kept]
    return basis


def gabriel_quiver(algebra: FiniteAlgebra, radical: Optional[Sequence[SparseVector]] = None) -> List[List[int]]:
    """
    Matrix of dim eᵢ(rad A / rad² A)eⱼ, the arrow counts of the quiver of a basic algebra.

    >>> from quivalg.quiver import Quiver
    >>> from quivalg.rewriting import build_algebra
    >>> gabriel_quiver(build_algebra(Quiver(('1', '2'), (('a', '1', '2'),)), (), 2))
    [[0, 1], [0, 0]]

    Args:
        algebra:  the algebra; its basis must be adapted to the idempotents
        radical:  spanning vectors of rad A; the stored radical when omitted
    Returns:
        the matrix
    """
    if radical is None:
        if algebra.radical is None:
            raise ValueError(f'{algebra!r} has no known radical')
        radical = algebra.radical
    domain = algebra.field.domain
    squared = [product for x in radical for y in radical if (product := algebra.multiply(x, y))]
    size = len(algebra.vertices)
    result = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            block = algebra.block_indices(i, j)
            if not block:
                continue
            position = {u: k for k, u in enumerate(block)}

            def restricted(vectors: Sequence[SparseVector]) -> int:
                rows = [{position[u]: c for u, c in v.items() if u in position} for v in vectors]
                return rank(matrix_from_rows(rows, len(block), domain))

            result[i][j] = restricted(radical) - restricted(squared)
    return result
