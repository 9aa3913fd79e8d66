"""
Exact linear algebra over ``FieldSpec.domain``.

Vectors are sparse ``{index: scalar}`` maps with no zero entries; matrices are sympy ``DomainMatrix`` objects
in the sparse format, so kernels and ranks are computed by exact elimination.
"""
from typing import Dict, Final, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains.domain import Domain
from sympy.polys.matrices import DomainMatrix

from quivalg.field import Scalar

__all__: Final = (
    # Types
    'SparseVector',

    # Classes
    'SpanSolver',

    # Functions
    'add_scaled',
    'combine',
    'independent_subset',
    'left_kernel',
    'matrix_from_columns',
    'matrix_from_rows',
    'nullspace',
    'pivot_columns',
    'rank',
    'rows_of',
    'vector_times'
)

SparseVector = Dict[int, Scalar]


def matrix_from_rows(rows: Sequence[SparseVector], ncols: int, domain: Domain) -> DomainMatrix:
    return DomainMatrix.from_dod({i: dict(row) for i, row in enumerate(rows) if row}, (len(rows), ncols), domain)


def matrix_from_columns(columns: Sequence[SparseVector], nrows: int, domain: Domain) -> DomainMatrix:
    return matrix_from_rows(columns, nrows, domain).transpose()


def rows_of(matrix: DomainMatrix) -> List[SparseVector]:
    """Rows of a matrix as sparse vectors, empty rows included."""
    dod = matrix.to_sparse().to_dod()
    return [dict(dod.get(i, {})) for i in range(matrix.shape[0])]


def pivot_columns(matrix: DomainMatrix) -> Tuple[int, ...]:
    """Pivot columns of the reduced row echelon form; the leftmost maximal independent set of columns."""
    nrows, ncols = matrix.shape
    if not nrows or not ncols:
        return ()
    _, pivots = matrix.rref()
    return tuple(pivots)


def rank(matrix: DomainMatrix) -> int:
    return len(pivot_columns(matrix))


def nullspace(matrix: DomainMatrix) -> List[SparseVector]:
    """
    Basis of {x : matrix·x = 0}.

    >>> from sympy import QQ
    >>> [{j: int(x) for j, x in v.items()} for v in nullspace(matrix_from_rows([{0: QQ(1), 1: QQ(1)}], 2, QQ))]
    [{0: -1, 1: 1}]

    Args:
        matrix:  coefficient matrix of the homogeneous system
    Returns:
        basis vectors, one per free column, in increasing order of the free column
    """
    nrows, ncols = matrix.shape
    if not ncols:
        return []
    if not nrows or matrix.is_zero_matrix:
        one = matrix.domain.one
        return [{j: one} for j in range(ncols)]
    return [row for row in rows_of(matrix.to_sparse().nullspace(divide_last=True)) if row]


def left_kernel(matrix: DomainMatrix) -> List[SparseVector]:
    """Basis of {y : y·matrix = 0}."""
    return nullspace(matrix.transpose())


def independent_subset(vectors: Sequence[SparseVector], dimension: int, domain: Domain) -> Tuple[int, ...]:
    """
    Greedy choice of linearly independent vectors: the i-th vector is kept iff it is not
    in the span of the vectors before it.

    >>> from sympy import QQ
    >>> independent_subset([{0: QQ(1)}, {0: QQ(2)}, {1: QQ(1)}], 2, QQ)
    (0, 2)

    Args:
        vectors:    candidates, in priority order
        dimension:  ambient dimension
        domain:     field of the coordinates
    Returns:
        indices of the kept vectors
    """
    if not vectors:
        return ()
    return pivot_columns(matrix_from_columns(vectors, dimension, domain))


def add_scaled(target: SparseVector, vector: SparseVector, factor: Scalar) -> SparseVector:
    """In place ``target += factor·vector``; entries that cancel are removed."""
    if not factor:
        return target
    for index, value in vector.items():
        updated = target[index] + factor * value if index in target else factor * value
        if updated:
            target[index] = updated
        else:
            target.pop(index, None)
    return target


def combine(coefficients: Iterable[Scalar], vectors: Iterable[SparseVector]) -> SparseVector:
    result: SparseVector = {}
    for coefficient, vector in zip(coefficients, vectors):
        add_scaled(result, vector, coefficient)
    return result


def vector_times(vector: SparseVector, rows: Sequence[SparseVector]) -> SparseVector:
    """Row vector times the matrix whose k-th row is 'rows[k]'."""
    result: SparseVector = {}
    for index, value in vector.items():
        add_scaled(result, rows[index], value)
    return result


class SpanSolver:
    """
    Coordinates with respect to a fixed basis of a subspace.

    The basis is restricted to a set of pivot coordinates on which it is invertible, so each
    query costs one sparse vector-matrix product plus an optional membership check.
    """

    __slots__ = ('_basis', '_domain', '_inverse', '_pivots')

    def __init__(self, basis: Sequence[SparseVector], dimension: int, domain: Domain) -> None:
        """
        >>> from sympy import QQ
        >>> solver = SpanSolver([{0: QQ(1), 1: QQ(1)}, {1: QQ(1)}], 2, QQ)
        >>> [int(c) for c in solver.coordinates({0: QQ(2), 1: QQ(5)})]
        [2, 3]

        Args:
            basis:      linearly independent vectors
            dimension:  ambient dimension
            domain:     field of the coordinates
        Raises:
            ValueError:  if the vectors are dependent
        """
        self._basis: Final = tuple(basis)
        self._domain: Final = domain
        rows = matrix_from_rows(self._basis, dimension, domain)
        self._pivots: Final = pivot_columns(rows)
        if len(self._pivots) != len(self._basis):
            raise ValueError(f'{len(self._basis)} basis vectors span only {len(self._pivots)} dimensions')
        self._inverse: Final = rows_of(
            rows.extract(list(range(len(self._basis))), list(self._pivots)).inv()
        ) if self._basis else []

    def __len__(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> Tuple[SparseVector, ...]:
        return self._basis

    def coordinates(self, vector: SparseVector, check: bool = True) -> Optional[List[Scalar]]:
        """
        Coordinates c with Σ cᵢ·basisᵢ = vector.

        Args:
            vector:  vector to express
            check:   verify membership in the span
        Returns:
            the coordinates, or None if 'check' is set and the vector is outside the span
        """
        zero = self._domain.zero
        coordinates = [zero] * len(self._basis)
        for position, pivot in enumerate(self._pivots):
            if value := vector.get(pivot):
                for index, entry in self._inverse[position].items():
                    coordinates[index] += value * entry
        if check and combine(coordinates, self._basis) != {k: v for k, v in vector.items() if v}:
            return None
        return coordinates
