"""Exception hierarchy shared by every module of the package."""
from typing import Final, Optional, Tuple

__all__: Final = (
    'QuivalgError',
    'DivisionByZero',
    'InvalidParameters',
    'QuiverError',
    'MalformedRelation',
    'NonParallelRelation',
    'PresentationSyntaxError',
    'BudgetExceeded',
    'CompletionBudgetExceeded',
    'SearchBudgetExceeded',
    'NoFiniteCertificate',
    'StabilizationFailure',
    'ComplexError',
    'TiltingFailure',
    'Condition1Failure',
    'Condition2Failure',
    'ModuleError'
)


class QuivalgError(Exception):
    """Base class of all errors raised by this package."""


class DivisionByZero(QuivalgError, ZeroDivisionError):
    """Inversion of the zero scalar."""


class InvalidParameters(QuivalgError, ValueError):
    """Parameters outside the admissible range (λ = 0, composite p, m < 2, ...)."""


class QuiverError(QuivalgError, ValueError):
    """Inconsistent quiver data: duplicate names, undeclared endpoints, unknown arrows."""


class MalformedRelation(QuivalgError, ValueError):
    """A relation that cannot be oriented into a rewrite rule."""


class NonParallelRelation(MalformedRelation):
    """A relation whose terms do not share source and target."""


class PresentationSyntaxError(QuivalgError, ValueError):
    """Syntax error in a presentation file; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f'{message} (line {line}, column {column})')
        self.line: Final = line
        self.column: Final = column


class BudgetExceeded(QuivalgError):
    """A configurable budget ran out before the computation finished."""


class CompletionBudgetExceeded(BudgetExceeded):
    """Completion created more rules than the budget allows."""


class SearchBudgetExceeded(BudgetExceeded):
    """A candidate search was asked to go beyond its cap."""


class NoFiniteCertificate(QuivalgError):
    """Some path of length ``degree_cap + 1`` does not reduce to zero."""

    def __init__(self, message: str, degree_cap: int) -> None:
        super().__init__(message)
        self.degree_cap: Final = degree_cap


class StabilizationFailure(QuivalgError):
    """Truncated dimensions at two successive truncation degrees disagree."""


class ComplexError(QuivalgError, ValueError):
    """A complex or chain map violates d∘d = 0, commutation, or shape constraints."""


class TiltingFailure(QuivalgError):
    """A candidate tilting complex fails one of the two tilting conditions."""


class Condition1Failure(TiltingFailure):
    """Some Hom(Tᵢ, Tⱼ[s]) with s ≠ 0 is nonzero."""

    def __init__(self, pair: Tuple[int, int], shift: int, dimension: int) -> None:
        super().__init__(
            f'Hom(T{pair[0] + 1}, T{pair[1] + 1}[{shift}]) has dimension {dimension}, expected 0'
        )
        self.pair: Final = pair
        self.shift: Final = shift
        self.dimension: Final = dimension


class Condition2Failure(TiltingFailure):
    """The generation fixpoint does not reach every indecomposable projective."""

    def __init__(self, projective: str, missing: Optional[Tuple[str, ...]] = None) -> None:
        super().__init__(f'P{projective} is not generated by the summands of the complex')
        self.projective: Final = projective
        self.missing: Final = missing if missing is not None else (projective,)


class ModuleError(QuivalgError, ValueError):
    """A representation violates a defining relation, or a module map does not intertwine the arrow actions."""
