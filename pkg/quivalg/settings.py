"""Tunable constants and their environment overrides."""
from os import environ
from typing import Final, NamedTuple, Tuple

from quivalg.exceptions import InvalidParameters

DEFAULT_LAMBDA: Final = 1
DEFAULT_SEED: Final = 0

COMPLETION_RULE_BUDGET: Final = 10_000
SEARCH_CANDIDATE_CAP: Final = 10 ** 6
RANDOM_TRIALS: Final = 20
SWEEP_GRID: Final[Tuple[int, ...]] = (0, 1, -1, 2, -2)
RANDOM_COEFFICIENT_BOUND: Final = 7

# Random re-check of a symmetrizing form
SYMMETRY_SAMPLE_PAIRS: Final = 1000
SYMMETRY_SAMPLE_SUPPORT: Final = 8

# Raised on NoFiniteCertificate
CAP_RAISE_STEP: Final = 4
CAP_RAISE_ATTEMPTS: Final = 3

TILTING_SHIFTS: Final[Tuple[int, ...]] = (-3, -2, -1, 1, 2, 3)
DEFAULT_M_RANGE: Final[Tuple[int, ...]] = (2, 3)

REPORT_SCHEMA_VERSION: Final = '1'
BUDGET_ENV_VAR: Final = 'QUIVALG_BUDGET'


class Budgets(NamedTuple):
    completion_rules: int
    search_candidates: int


def default_degree_cap(m: int) -> int:
    """
    >>> default_degree_cap(2)
    12

    Args:
        m:  degree parameter of the preset
    Returns:
        the starting degree cap 4m + 4
    """
    return 4 * m + 4


def budgets() -> Budgets:
    """
    Reads the budgets, honouring the ``QUIVALG_BUDGET`` override.

    Returns:
        completion rule budget and search candidate cap
    Raises:
        InvalidParameters:  if the variable is set but is not a positive integer
    """
    raw = environ.get(BUDGET_ENV_VAR)
    if raw is None or not raw.strip():
        return Budgets(COMPLETION_RULE_BUDGET, SEARCH_CANDIDATE_CAP)
    try:
        value = int(raw)
    except ValueError:
        raise InvalidParameters(f'{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}') from None
    if value <= 0:
        raise InvalidParameters(f'{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}')
    return Budgets(value, value)
