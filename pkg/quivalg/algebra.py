"""Finite-dimensional basic algebras given by a basis, structure constants and a complete set of idempotents."""
import logging
from itertools import product
from typing import Dict, Final, Iterable, List, Optional, Sequence, Tuple

from quivalg.field import FieldSpec, Scalar
from quivalg.linalg import SparseVector, add_scaled

__all__: Final = (
    'FiniteAlgebra',
)

_logger = logging.getLogger(__name__)

Table = Dict[int, Dict[int, SparseVector]]


class FiniteAlgebra:
    """
    Algebra A with a basis adapted to the decomposition A = ⊕ eᵢAeⱼ.

    Every basis element b lies in exactly one block (i, j), meaning eᵢ·b = b = b·eⱼ,
    and products of basis elements are stored as sparse vectors.
    """

    __slots__ = ('_blocks', '_field', '_idempotents', '_labels', '_radical', '_table', '_vertices')

    def __init__(self,
                 field: FieldSpec,
                 vertices: Sequence[str],
                 labels: Sequence[str],
                 blocks: Sequence[Tuple[int, int]],
                 table: Table,
                 idempotents: Sequence[SparseVector],
                 radical: Optional[Sequence[SparseVector]] = None) -> None:
        """
        Args:
            field:        coefficient field
            vertices:     labels of the idempotents
            labels:       human readable names of the basis elements
            blocks:       block (i, j) of every basis element
            table:        ``table[u][v]`` is the product of basis elements u and v; absent entries are zero
            idempotents:  eᵢ as vectors, one per vertex
            radical:      spanning vectors of the Jacobson radical, when known
        """
        if len(labels) != len(blocks):
            raise ValueError(f'Got {len(labels)} basis labels for {len(blocks)} basis blocks')
        if len(idempotents) != len(vertices):
            raise ValueError(f'Got {len(idempotents)} idempotents for {len(vertices)} vertices')
        self._field: Final = field
        self._vertices: Final = tuple(vertices)
        self._labels: Final = tuple(labels)
        self._blocks: Final = tuple(blocks)
        self._table: Final = table
        self._idempotents: Final = tuple(idempotents)
        self._radical: Final = None if radical is None else tuple(radical)

    def __len__(self) -> int:
        return len(self._labels)

    def __repr__(self) -> str:
        return f'{type(self).__name__}(dim={len(self)}, vertices={len(self._vertices)}, field={self._field.label})'

    @property
    def blocks(self) -> Tuple[Tuple[int, int], ...]:
        return self._blocks

    @property
    def field(self) -> FieldSpec:
        return self._field

    @property
    def idempotents(self) -> Tuple[SparseVector, ...]:
        return self._idempotents

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def radical(self) -> Optional[Tuple[SparseVector, ...]]:
        return self._radical

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    def basis_product(self, u: int, v: int) -> SparseVector:
        return self._table.get(u, {}).get(v, {})

    def block_indices(self, i: int, j: int) -> List[int]:
        """Basis elements of eᵢAeⱼ, in basis order."""
        return [u for u, block in enumerate(self._blocks) if block == (i, j)]

    def cartan_blocks(self) -> List[List[int]]:
        """Matrix of block sizes: entry (i, j) is dim eᵢAeⱼ."""
        n = len(self._vertices)
        sizes = [[0] * n for _ in range(n)]
        for i, j in self._blocks:
            sizes[i][j] += 1
        return sizes

    def check_associativity(self, triples: Optional[Iterable[Tuple[int, int, int]]] = None) -> List[Tuple[int, int, int]]:
        """
        Compares (b_u·b_v)·b_w with b_u·(b_v·b_w).

        Args:
            triples:  basis index triples to test; all composable triples when omitted
        Returns:
            the triples on which associativity fails
        """
        if triples is None:
            triples = (
                (u, v, w)
                for u, v, w in product(range(len(self)), repeat=3)
                if self._blocks[u][1] == self._blocks[v][0] and self._blocks[v][1] == self._blocks[w][0]
            )
        failures = []
        checked = 0
        for u, v, w in triples:
            checked += 1
            left = self.multiply(self.basis_product(u, v), {w: self._field.one})
            right = self.multiply({u: self._field.one}, self.basis_product(v, w))
            if left != right:
                failures.append((u, v, w))
        _logger.debug('Associativity checked on %d triples, %d failures', checked, len(failures))
        return failures

    def multiply(self, x: SparseVector, y: SparseVector) -> SparseVector:
        result: SparseVector = {}
        for u, a in x.items():
            row = self._table.get(u)
            if not row:
                continue
            for v, b in y.items():
                if product_uv := row.get(v):
                    add_scaled(result, product_uv, a * b)
        return result

    def one(self) -> SparseVector:
        result: SparseVector = {}
        for idempotent in self._idempotents:
            add_scaled(result, idempotent, self._field.one)
        return result

    def power(self, x: SparseVector, exponent: int) -> SparseVector:
        result = self.one()
        for _ in range(exponent):
            result = self.multiply(result, x)
        return result

    def scale(self, x: SparseVector, factor: Scalar) -> SparseVector:
        return add_scaled({}, x, factor)
