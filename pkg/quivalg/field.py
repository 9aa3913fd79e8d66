"""
Exact coefficient fields: the rationals and prime fields, with the parameter λ fixed as a nonzero scalar.

Scalars are raw elements of a sympy polys domain (``QQ`` or ``GF(p)``), so arithmetic is exact
and never rounds.
"""
import random
from enum import Enum
from fractions import Fraction
from typing import Any, Final, Optional, Union

from sympy.ntheory import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain

from quivalg.exceptions import DivisionByZero, InvalidParameters
from quivalg.settings import DEFAULT_LAMBDA

__all__: Final = (
    'FieldKind',
    'FieldSpec',
    'Scalar',
    'scalar_arith'
)

Scalar = Any  # an element of ``FieldSpec.domain``


class FieldKind(Enum):
    RATIONALS = 'Q'
    PRIME_FIELD = 'Fp'


class FieldSpec:
    """Ground field K together with the chosen value of λ."""

    __slots__ = ('_characteristic', '_domain', '_lambda')

    def __init__(self, characteristic: int = 0, lambda_: Union[int, str, Fraction, Scalar] = DEFAULT_LAMBDA) -> None:
        """
        >>> FieldSpec()
        FieldSpec(Q, lambda=1)

        >>> FieldSpec(5, 3)
        FieldSpec(F5, lambda=3)

        Args:
            characteristic:  0 for the rationals, otherwise a prime p
            lambda_:         nonzero value of λ; ints, fractions, ``'p/q'`` strings and domain elements are accepted
        Raises:
            InvalidParameters:  if p is not prime or λ is zero in the field
        """
        if characteristic < 0 or (characteristic and not isprime(characteristic)):
            raise InvalidParameters(f'Field characteristic must be 0 or a prime, got {characteristic}')
        self._characteristic: Final = characteristic
        self._domain: Final[Domain] = GF(characteristic) if characteristic else QQ
        lam = self.convert(lambda_)
        if not lam:
            raise InvalidParameters('lambda must be a nonzero element of the field')
        self._lambda: Final = lam

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self._characteristic == other._characteristic and self.format(self._lambda) == other.format(other._lambda)

    def __hash__(self) -> int:
        return hash((self._characteristic, self.format(self._lambda)))

    def __repr__(self) -> str:
        return f'FieldSpec({self.label}, lambda={self.format(self._lambda)})'

    @classmethod
    def parse(cls, text: str, lambda_: Union[int, str, Fraction, Scalar] = DEFAULT_LAMBDA) -> 'FieldSpec':
        """
        Parses the command-line spelling of a field.

        >>> FieldSpec.parse('Q')
        FieldSpec(Q, lambda=1)

        >>> FieldSpec.parse('Fp:7', '-1')
        FieldSpec(F7, lambda=6)

        Args:
            text:     ``Q`` or ``Fp:<p>``
            lambda_:  value of λ
        Returns:
            the field specification
        """
        spelled = text.strip()
        if spelled in ('Q', 'QQ'):
            return cls(0, lambda_)
        if spelled.startswith('Fp:'):
            try:
                p = int(spelled[3:])
            except ValueError:
                raise InvalidParameters(f'Cannot read a prime from field spelling {text!r}') from None
            return cls(p, lambda_)
        raise InvalidParameters(f"Field must be 'Q' or 'Fp:<p>', got {text!r}")

    @property
    def characteristic(self) -> int:
        return self._characteristic

    @property
    def domain(self) -> Domain:
        """Underlying sympy domain, used to build ``DomainMatrix`` objects."""
        return self._domain

    @property
    def kind(self) -> FieldKind:
        return FieldKind.PRIME_FIELD if self._characteristic else FieldKind.RATIONALS

    @property
    def label(self) -> str:
        return f'F{self._characteristic}' if self._characteristic else 'Q'

    @property
    def lambda_(self) -> Scalar:
        return self._lambda

    @property
    def one(self) -> Scalar:
        return self._domain.one

    @property
    def zero(self) -> Scalar:
        return self._domain.zero

    def convert(self, value: Union[int, str, Fraction, Scalar]) -> Scalar:
        """
        Brings ``value`` into the field.

        >>> FieldSpec(5).format(FieldSpec(5).convert('1/2'))
        '3'

        Args:
            value:  int, ``Fraction``, ``'p/q'`` string or an element of the domain
        Returns:
            the corresponding scalar
        Raises:
            DivisionByZero:  if a denominator vanishes in the field
        """
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise InvalidParameters(f'Cannot read a rational number from {value!r}') from None
        if isinstance(value, int):
            return self._domain(value)
        if isinstance(value, Fraction):
            denominator = self._domain(value.denominator)
            if not denominator:
                raise DivisionByZero(f'Denominator {value.denominator} vanishes in {self.label}')
            return self._domain(value.numerator) / denominator
        if self._domain.of_type(value):
            return value
        raise InvalidParameters(f'Cannot convert {value!r} into {self.label}')

    def format(self, value: Scalar) -> str:
        """
        Canonical text form of a scalar: ``p/q`` over Q, the residue in 0..p-1 over F_p.

        >>> FieldSpec(7).format(FieldSpec(7).convert(-1))
        '6'

        Args:
            value:  scalar of this field
        Returns:
            its canonical spelling
        """
        if self._characteristic:
            return str(int(value) % self._characteristic)
        numerator, denominator = int(value.numerator), int(value.denominator)
        return str(numerator) if denominator == 1 else f'{numerator}/{denominator}'

    def inv(self, value: Scalar) -> Scalar:
        if not value:
            raise DivisionByZero(f'Cannot invert zero in {self.label}')
        return self._domain.one / value

    def random_element(self, rng: random.Random, bound: int) -> Scalar:
        """Uniform integer in [-bound, bound] brought into the field."""
        return self._domain(rng.randint(-bound, bound))

    def with_lambda(self, lambda_: Union[int, str, Fraction, Scalar]) -> 'FieldSpec':
        return FieldSpec(self._characteristic, lambda_)


def scalar_arith(field: FieldSpec, op: str, a: Scalar, b: Optional[Scalar] = None) -> Scalar:
    """
    Exact field arithmetic dispatched on an operation name.

    >>> Q = FieldSpec()
    >>> Q.format(scalar_arith(Q, 'add', Q.convert('1/2'), Q.convert('1/3')))
    '5/6'

    >>> F5 = FieldSpec(5)
    >>> F5.format(scalar_arith(F5, 'inv', F5.convert(2)))
    '3'

    Args:
        field:  field the scalars live in
        op:     one of ``add``, ``mul``, ``inv``, ``neg``
        a:      first operand
        b:      second operand, required by ``add`` and ``mul`` only
    Returns:
        the exact result
    Raises:
        DivisionByZero:  on ``inv`` of zero
    """
    if op in ('add', 'mul'):
        if b is None:
            raise InvalidParameters(f'Operation {op!r} needs two operands')
        return a + b if op == 'add' else a * b
    if b is not None:
        raise InvalidParameters(f'Operation {op!r} takes a single operand')
    if op == 'inv':
        return field.inv(a)
    if op == 'neg':
        return -a
    raise InvalidParameters(f'Unknown scalar operation {op!r}')
