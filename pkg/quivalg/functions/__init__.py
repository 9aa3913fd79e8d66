"""Small generator helpers shared by the searches and the preset data."""
import random
from inspect import cleandoc
from itertools import chain, islice, product
from types import FunctionType
from typing import Callable, Dict, Final, Generator, Hashable, Iterable, Sequence, Tuple, TypeVar

__all__: Final = (
    'cleandoc_deco',
    'cycles',
    'first',
    'seeded_then_swept'
)

T = TypeVar('T')
H = TypeVar('H', bound=Hashable)


def cleandoc_deco(func: T) -> T:
    """
    Cleans the function docstring.

    >>> def fun(x):        \
            '  DocString '
    >>> fun = cleandoc_deco(fun)
    >>> fun.__doc__
    'DocString '

    Args:
        func:  function whose documentation needs to be cleaned
    Returns:
        resulting function
    """
    if type(func) is FunctionType:
        doc_str = func.__doc__
        if doc_str is not None:
            func.__doc__ = cleandoc(doc_str)
    return func


@cleandoc_deco
def cycles(permutation: Dict[H, H], order: Sequence[H]) -> Generator[Tuple[H, ...], None, None]:
    """
    Splits a permutation into its cycles.
    Each cycle starts at its earliest element with respect to 'order', and cycles come in that order too.

        >>> tuple(cycles({'a': 'b', 'b': 'c', 'c': 'a', 'd': 'd'}, 'abcd'))
        (('a', 'b', 'c'), ('d',))

    Args:
        permutation:  bijection of a finite set onto itself
        order:        enumeration of the same set
    Returns:
        resulting generator
    """
    seen = set()
    for start in order:
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        while (current := permutation[cycle[-1]]) != start:
            if current in seen:
                raise ValueError(f'Mapping is not a permutation: {current!r} has two preimages')
            cycle.append(current)
            seen.add(current)
        yield tuple(cycle)


@cleandoc_deco
def first(iterable: Iterable[T], predicate: Callable[[T], bool]) -> Tuple[int, T]:
    """
    Finds the first item satisfying the predicate together with the number of items inspected.

        >>> first(range(10, 20), lambda x: x % 7 == 0)
        (5, 14)

        >>> first((), bool)
        (0, None)

    Args:
        iterable:   candidates
        predicate:  acceptance test
    Returns:
        pair (inspected count, accepted item or None)
    """
    inspected = 0
    for item in iterable:
        inspected += 1
        if predicate(item):
            return inspected, item
    return inspected, None  # type: ignore


@cleandoc_deco
def seeded_then_swept(dimension: int,
                      seed: int,
                      trials: int,
                      bound: int,
                      grid: Sequence[int],
                      cap: int) -> Generator[Tuple[int, ...], None, None]:
    """
    Yields integer coefficient vectors for a search over a 'dimension'-dimensional solution space.
    First 'trials' vectors drawn uniformly from [-bound, bound] by a generator seeded with 'seed',
    then every nonzero vector over 'grid' in lexicographic order of grid positions.
    No more than 'cap' vectors are yielded in total.

        >>> tuple(seeded_then_swept(1, 0, 0, 1, (0, 1, -1), 10))
        ((1,), (-1,))

        >>> len(tuple(seeded_then_swept(3, 0, 2, 5, (0, 1), 100)))
        9

        >>> tuple(seeded_then_swept(0, 0, 5, 1, (0, 1), 10))
        ()

    Args:
        dimension:  length of each vector
        seed:       seed of the random phase
        trials:     number of random vectors
        bound:      bound of the random coefficients
        grid:       coefficient values of the deterministic sweep
        cap:        total number of vectors
    Returns:
        resulting generator
    """
    if dimension <= 0:
        return
    rng = random.Random(seed)
    randoms = (tuple(rng.randint(-bound, bound) for _ in range(dimension)) for _ in range(trials))
    sweep = (vector for vector in product(grid, repeat=dimension) if any(vector))
    yield from islice(chain(randoms, sweep), cap)
