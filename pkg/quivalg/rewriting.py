"""
From a presentation (quiver, relations) to a concrete finite-dimensional algebra.

Relations are oriented by the degree-lexicographic order (longer is bigger, ties broken lexicographically
on arrow indices, arrows ranked in declaration order), completed by resolving overlaps of leading paths,
and the irreducible paths become the basis of the quotient.
"""
import heapq
import logging
from itertools import count
from typing import Dict, Final, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from quivalg.algebra import FiniteAlgebra
from quivalg.exceptions import (
    CompletionBudgetExceeded,
    MalformedRelation,
    NoFiniteCertificate,
    NonParallelRelation,
    StabilizationFailure
)
from quivalg.field import FieldSpec, Scalar
from quivalg.linalg import SparseVector, add_scaled, independent_subset, matrix_from_rows, rank
from quivalg.quiver import AlgebraElement, Path, Quiver, Relation, deglex_key, enumerate_paths
from quivalg.settings import CAP_RAISE_ATTEMPTS, CAP_RAISE_STEP, budgets

__all__: Final = (
    # Classes
    'RewriteRule',
    'RewritingSystem',
    'QuotientAlgebra',

    # Functions
    'build_algebra',
    'complete',
    'normal_form',
    'orient',
    'verify_by_truncation'
)

_logger = logging.getLogger(__name__)

Terms = Dict[Path, Scalar]
RelationLike = Union[Relation, AlgebraElement]


class RewriteRule(NamedTuple):
    """Rule ``lhs -> rhs``; every path of ``rhs`` is parallel to and smaller than ``lhs``."""

    lhs: Path
    rhs: AlgebraElement

    def format(self) -> str:
        return f'{self.rhs.quiver.path_name(self.lhs)} -> {self.rhs!r}'


def _relation_terms(relation: RelationLike) -> Tuple[Quiver, FieldSpec, Terms]:
    element = relation.element if isinstance(relation, Relation) else relation
    if not element:
        label = f' {relation.label!r}' if isinstance(relation, Relation) and relation.label else ''
        raise MalformedRelation(f'Relation{label} is trivially zero and cannot be oriented')
    if element.endpoints() is None:
        raise NonParallelRelation(f'Terms of the relation {element!r} do not share source and target')
    return element.quiver, element.field, element.terms


def _heap_key(path: Path) -> Tuple[int, Tuple[int, ...], int]:
    # Smallest key for the largest path in the monomial order.
    return -len(path.arrows), tuple(-a for a in path.arrows), path.source


def orient(relations: Sequence[RelationLike]) -> List[RewriteRule]:
    """
    Turns each relation into a rule whose left side is its largest path, with coefficient normalized to 1.

    >>> q = Quiver(('1', '2', '3'), (('a', '1', '2'), ('b', '2', '3'), ('c', '1', '3')))
    >>> K = FieldSpec()
    >>> ab = AlgebraElement.from_path(q, K, q.path('a', 'b'))
    >>> c = AlgebraElement.from_path(q, K, q.path('c'))
    >>> [rule.format() for rule in orient([2 * ab - c])]
    ['a.b -> 1/2*c']

    Args:
        relations:  relations or elements that should vanish
    Returns:
        the rules, in input order
    Raises:
        MalformedRelation:    on a zero relation or a relation led by a stationary path
        NonParallelRelation:  when the terms of a relation are not parallel
    """
    rules = []
    for relation in relations:
        quiver, field, terms = _relation_terms(relation)
        lead = max(terms, key=deglex_key)
        if lead.is_stationary:
            raise MalformedRelation(
                f'Relation {AlgebraElement(quiver, field, terms)!r} is led by a stationary path'
            )
        factor = -field.inv(terms[lead])
        rhs = {path: value * factor for path, value in terms.items() if path != lead}
        rules.append(RewriteRule(lead, AlgebraElement._make_with_no_checks(quiver, field, rhs)))
    return rules


class RewritingSystem:
    """
    Mutable set of rewrite rules over a quiver with memoized normal forms.

    The memo is dropped whenever a rule is added or removed, so a finished system can be shared
    read-only.
    """

    __slots__ = ('_cache', '_field', '_ids', '_lengths', '_next_id', '_quiver', '_rules')

    def __init__(self, quiver: Quiver, field: FieldSpec) -> None:
        self._quiver: Final = quiver
        self._field: Final = field
        # lead arrows -> (rule id, lead, rhs terms)
        self._rules: Final[Dict[Tuple[int, ...], Tuple[int, Path, Terms]]] = {}
        self._lengths: List[int] = []
        self._ids: Final[Dict[int, Tuple[int, ...]]] = {}
        self._cache: Final[Dict[Path, Terms]] = {}
        self._next_id = 0

    def __len__(self) -> int:
        return len(self._rules)

    @property
    def field(self) -> FieldSpec:
        return self._field

    @property
    def quiver(self) -> Quiver:
        return self._quiver

    def complete(self, rules: Iterable[RewriteRule], degree_cap: int, budget: Optional[int] = None) -> None:
        """
        Adds the rules and resolves every overlap of two leading paths whose overlap word has length
        at most 2·degree_cap + 2, adding the non-zero normal forms of their differences as new rules.
        A new rule removes each rule whose leading path contains its own, and the removed relation is
        reduced and inserted again.

        Args:
            rules:       initial rules
            degree_cap:  degree cap of the algebra being built
            budget:      maximal number of rules created; ``settings.budgets()`` when omitted
        Raises:
            CompletionBudgetExceeded:  if more rules than 'budget' are created
            MalformedRelation:         if the ideal turns out to contain a stationary path
        """
        budget = budgets().completion_rules if budget is None else budget
        bound = 2 * degree_cap + 2
        pairs: List[Tuple[int, int, int, int, int]] = []
        order = count()
        processed = 0

        def schedule(rule_id: int) -> None:
            entry = self._rule_by_id(rule_id)
            if entry is None:
                return
            first = entry[1].arrows
            for other_id, other, _ in list(self._rules.values()):
                second = other.arrows
                for left, right, left_id, right_id in (
                    (first, second, rule_id, other_id),
                    (second, first, other_id, rule_id)
                ):
                    for k in range(1, min(len(left), len(right))):
                        if left[-k:] == right[:k] and len(left) + len(right) - k <= bound:
                            heapq.heappush(pairs, (len(left) + len(right) - k, next(order), left_id, right_id, k))
                    if left_id == right_id:
                        break

        def insert_all(pending: List[Terms]) -> None:
            while pending:
                reduced = self.normal_form_terms(pending.pop())
                if not reduced:
                    continue
                if self._next_id >= budget:
                    raise CompletionBudgetExceeded(
                        f'Completion created more than {budget} rules; '
                        'the presentation is likely infinite-dimensional or mistyped'
                    )
                new_id, removed = self._insert(reduced)
                pending.extend(removed)
                schedule(new_id)

        insert_all([self._rule_terms(rule.lhs, rule.rhs.terms) for rule in reversed(list(rules))])
        while pairs:
            _, _, left_id, right_id, k = heapq.heappop(pairs)
            left, right = self._rule_by_id(left_id), self._rule_by_id(right_id)
            if left is None or right is None:
                continue
            processed += 1
            insert_all([self._overlap_difference(left, right, k)])
        self._normalize_right_sides()
        _logger.debug('Completion processed %d overlaps and keeps %d rules', processed, len(self._rules))

    def find(self, arrows: Tuple[int, ...], rightmost: bool = False) -> Optional[Tuple[int, Tuple[int, ...]]]:
        """Leftmost (or rightmost) occurrence of a leading path inside 'arrows'."""
        positions = range(len(arrows) - 1, -1, -1) if rightmost else range(len(arrows))
        for i in positions:
            for length in self._lengths:
                if i + length > len(arrows):
                    break
                if (window := arrows[i:i + length]) in self._rules:
                    return i, window
        return None

    def has_lead_suffix(self, arrows: Tuple[int, ...]) -> bool:
        """Whether some leading path ends at the last arrow; enough for paths with an irreducible prefix."""
        return any(arrows[-length:] in self._rules for length in self._lengths if length <= len(arrows))

    def is_reducible(self, arrows: Tuple[int, ...]) -> bool:
        return self.find(arrows) is not None

    def normal_form_path(self, path: Path) -> Terms:
        if (cached := self._cache.get(path)) is not None:
            return cached
        result = self.normal_form_terms({path: self._field.one})
        self._cache[path] = result
        return result

    def normal_form_terms(self, terms: Terms, rightmost: bool = False) -> Terms:
        """
        Exhaustive rewriting of a linear combination. Terms are processed largest first, so each
        path is rewritten at most once.

        Args:
            terms:      combination of paths
            rightmost:  rewrite at the rightmost occurrence of a leading path instead of the leftmost
        Returns:
            the normal form; only irreducible paths remain
        """
        pending: Terms = {}
        heap: List[Tuple[Tuple[int, Tuple[int, ...], int], Path]] = []
        for path, value in terms.items():
            if value:
                pending[path] = value
                heapq.heappush(heap, (_heap_key(path), path))
        result: Terms = {}
        while heap:
            _, path = heapq.heappop(heap)
            value = pending.pop(path, None)
            if not value:
                continue
            if not rightmost and (cached := self._cache.get(path)) is not None:
                add_scaled(result, cached, value)  # type: ignore[arg-type]
                continue
            if (hit := self.find(path.arrows, rightmost)) is None:
                add_scaled(result, {path: self._field.one}, value)  # type: ignore[arg-type,dict-item]
                continue
            position, window = hit
            _, _, rhs = self._rules[window]
            prefix, suffix = path.arrows[:position], path.arrows[position + len(window):]
            for term, coefficient in rhs.items():
                rewritten = Path(path.source, path.target, prefix + term.arrows + suffix)
                if rewritten in pending:
                    updated = pending[rewritten] + value * coefficient
                    if updated:
                        pending[rewritten] = updated
                    else:
                        del pending[rewritten]
                else:
                    pending[rewritten] = value * coefficient
                    heapq.heappush(heap, (_heap_key(rewritten), rewritten))
        return result

    def rules(self) -> List[RewriteRule]:
        """Current rules sorted by their leading path."""
        return [
            RewriteRule(lead, AlgebraElement._make_with_no_checks(self._quiver, self._field, dict(rhs)))
            for _, lead, rhs in sorted(self._rules.values(), key=lambda entry: deglex_key(entry[1]))
        ]

    def _insert(self, terms: Terms) -> Tuple[int, List[Terms]]:
        lead = max(terms, key=deglex_key)
        if lead.is_stationary:
            raise MalformedRelation(
                f'The ideal contains the stationary path {self._quiver.path_name(lead)}; the quotient degenerates'
            )
        factor = -self._field.inv(terms[lead])
        rhs = {path: value * factor for path, value in terms.items() if path != lead}
        removed = []
        for window in [w for w in self._rules if _contains(w, lead.arrows)]:
            old_id, old_lead, old_rhs = self._rules.pop(window)
            del self._ids[old_id]
            removed.append(self._rule_terms(old_lead, old_rhs))
        rule_id = self._next_id
        self._next_id += 1
        self._rules[lead.arrows] = (rule_id, lead, rhs)
        self._ids[rule_id] = lead.arrows
        self._lengths = sorted({len(w) for w in self._rules})
        self._cache.clear()
        _logger.debug('Rule %d added with a leading path of length %d, %d rules removed',
                      rule_id, len(lead.arrows), len(removed))
        return rule_id, removed

    def _normalize_right_sides(self) -> None:
        for window, (rule_id, lead, rhs) in list(self._rules.items()):
            self._rules[window] = (rule_id, lead, self.normal_form_terms(rhs))
        self._cache.clear()

    def _overlap_difference(self, left: Tuple[int, Path, Terms], right: Tuple[int, Path, Terms], k: int) -> Terms:
        _, left_lead, left_rhs = left
        _, right_lead, right_rhs = right
        tail = right_lead.arrows[k:]
        head = left_lead.arrows[:len(left_lead.arrows) - k]
        difference: Terms = {}
        for term, value in left_rhs.items():
            add_scaled(difference, {Path(left_lead.source, right_lead.target, term.arrows + tail): value}, self._field.one)
        for term, value in right_rhs.items():
            add_scaled(difference, {Path(left_lead.source, right_lead.target, head + term.arrows): value}, -self._field.one)
        return difference

    def _rule_by_id(self, rule_id: int) -> Optional[Tuple[int, Path, Terms]]:
        window = self._ids.get(rule_id)
        return None if window is None else self._rules[window]

    def _rule_terms(self, lead: Path, rhs: Terms) -> Terms:
        terms = {lead: self._field.one}
        add_scaled(terms, rhs, -self._field.one)  # type: ignore[arg-type]
        return terms


def _contains(word: Tuple[int, ...], pattern: Tuple[int, ...]) -> bool:
    n = len(pattern)
    return any(word[i:i + n] == pattern for i in range(len(word) - n + 1))


def complete(rules: Sequence[RewriteRule], degree_cap: int, budget: Optional[int] = None) -> List[RewriteRule]:
    """
    Completed, interreduced rule list for the given rules.

    >>> q = Quiver(('1', '2'), (('a', '1', '2'), ('b', '2', '1')))
    >>> K = FieldSpec()
    >>> zero = AlgebraElement.zero(q, K)
    >>> rules = [RewriteRule(q.path('a', 'b'), zero), RewriteRule(q.path('b', 'a'), zero)]
    >>> [rule.format() for rule in complete(rules, 4)]
    ['a.b -> 0', 'b.a -> 0']

    Args:
        rules:       rules over one quiver
        degree_cap:  degree cap of the algebra
        budget:      maximal number of rules created
    Returns:
        the completed rules, sorted by leading path
    """
    if not rules:
        return []
    system = RewritingSystem(rules[0].rhs.quiver, rules[0].rhs.field)
    system.complete(rules, degree_cap, budget)
    return system.rules()


class QuotientAlgebra(FiniteAlgebra):
    """KQ/I with the irreducible paths as basis."""

    __slots__ = ('_added_rules', '_basis_paths', '_degree_cap', '_path_index', '_quiver', '_relations', '_system')

    def __init__(self,
                 system: RewritingSystem,
                 relations: Sequence[RelationLike],
                 basis_paths: Sequence[Path],
                 table: Dict[int, Dict[int, SparseVector]],
                 degree_cap: int,
                 added_rules: Sequence[RewriteRule]) -> None:
        quiver, field = system.quiver, system.field
        one = field.one
        self._path_index: Final = {path: u for u, path in enumerate(basis_paths)}
        super().__init__(
            field,
            quiver.vertices,
            [quiver.path_name(p) for p in basis_paths],
            [(p.source, p.target) for p in basis_paths],
            table,
            [{self._path_index[Path(v, v)]: one} for v in range(len(quiver.vertices))],
            [{u: one} for u, p in enumerate(basis_paths) if not p.is_stationary]
        )
        self._quiver: Final = quiver
        self._system: Final = system
        self._relations: Final = tuple(relations)
        self._basis_paths: Final = tuple(basis_paths)
        self._degree_cap: Final = degree_cap
        self._added_rules: Final = tuple(added_rules)

    @property
    def added_rules(self) -> Tuple[RewriteRule, ...]:
        """Rules produced by completion whose leading path is not the leading path of a defining relation."""
        return self._added_rules

    @property
    def basis_paths(self) -> Tuple[Path, ...]:
        return self._basis_paths

    @property
    def degree_cap(self) -> int:
        return self._degree_cap

    @property
    def quiver(self) -> Quiver:
        return self._quiver

    @property
    def relations(self) -> Tuple[RelationLike, ...]:
        return self._relations

    @property
    def rules(self) -> List[RewriteRule]:
        return self._system.rules()

    @property
    def system(self) -> RewritingSystem:
        return self._system

    def element(self, *names: str) -> AlgebraElement:
        """Path through the named arrows as an element of the free path algebra."""
        return AlgebraElement.from_path(self._quiver, self.field, self._quiver.path(*names))

    def element_vector(self, x: AlgebraElement) -> SparseVector:
        """Coordinates of the normal form of x in the path basis."""
        vector: SparseVector = {}
        for path, value in x.terms.items():
            for term, coefficient in self._system.normal_form_path(path).items():
                add_scaled(vector, {self._path_index[term]: coefficient}, value)
        return vector

    def normal_form(self, x: AlgebraElement, rightmost: bool = False) -> AlgebraElement:
        terms = self._system.normal_form_terms(x.terms, rightmost)
        return AlgebraElement._make_with_no_checks(self._quiver, self.field, terms)

    def path_vector(self, *names: str) -> SparseVector:
        return self.element_vector(self.element(*names))

    def stationary_vector(self, vertex: int) -> SparseVector:
        return {self._path_index[Path(vertex, vertex)]: self.field.one}

    def vector_element(self, vector: SparseVector) -> AlgebraElement:
        return AlgebraElement(self._quiver, self.field, {self._basis_paths[u]: c for u, c in vector.items()})


def normal_form(x: AlgebraElement, algebra: QuotientAlgebra) -> AlgebraElement:
    """Fixed point of exhaustive rewriting of x in the algebra."""
    return algebra.normal_form(x)


def _irreducible_paths(system: RewritingSystem, degree_cap: int) -> List[Path]:
    quiver = system.quiver
    found = []
    stack = [Path(v, v) for v in reversed(range(len(quiver.vertices)))]
    while stack:
        path = stack.pop()
        found.append(path)
        for a in reversed(quiver.outgoing(path.target)):
            extended = Path(path.source, quiver.arrows[a].target, path.arrows + (a,))
            if system.has_lead_suffix(extended.arrows):
                continue
            if len(extended.arrows) > degree_cap:
                raise NoFiniteCertificate(
                    f'Path {quiver.path_name(extended)} of length {degree_cap + 1} is irreducible',
                    degree_cap
                )
            stack.append(extended)
    return sorted(found, key=lambda p: (p.source, p.target, deglex_key(p)))


def _check_radical_power(system: RewritingSystem,
                         basis_paths: Sequence[Path],
                         path_index: Dict[Path, int],
                         degree_cap: int) -> None:
    quiver, field = system.quiver, system.field
    action: Dict[Tuple[int, int], SparseVector] = {}
    for u, path in enumerate(basis_paths):
        for a in quiver.outgoing(path.target):
            extended = Path(path.source, quiver.arrows[a].target, path.arrows + (a,))
            action[u, a] = {path_index[t]: c for t, c in system.normal_form_path(extended).items()}
    level = [{path_index[Path(v, v)]: field.one} for v in range(len(quiver.vertices))]
    for length in range(1, degree_cap + 2):
        images: List[SparseVector] = []
        for vector in level:
            for a in range(len(quiver.arrows)):
                image: SparseVector = {}
                for u, value in vector.items():
                    if (step := action.get((u, a))) is not None:
                        add_scaled(image, step, value)
                if image:
                    images.append(image)
        level = [images[i] for i in independent_subset(images, len(basis_paths), field.domain)]
        if not level:
            return
    raise NoFiniteCertificate(
        f'Paths of length {degree_cap + 1} span a subspace of dimension {len(level)} in the quotient',
        degree_cap
    )


def _build_once(quiver: Quiver,
                field: FieldSpec,
                relations: Sequence[RelationLike],
                degree_cap: int,
                budget: Optional[int]) -> QuotientAlgebra:
    oriented = orient(relations)
    system = RewritingSystem(quiver, field)
    system.complete(oriented, degree_cap, budget)
    basis_paths = _irreducible_paths(system, degree_cap)
    path_index = {path: u for u, path in enumerate(basis_paths)}
    _check_radical_power(system, basis_paths, path_index, degree_cap)
    table: Dict[int, Dict[int, SparseVector]] = {}
    for u, left in enumerate(basis_paths):
        row: Dict[int, SparseVector] = {}
        for v, right in enumerate(basis_paths):
            if left.target != right.source:
                continue
            joined = Path(left.source, right.target, left.arrows + right.arrows)
            if product := system.normal_form_path(joined):
                row[v] = {path_index[t]: c for t, c in product.items()}
        if row:
            table[u] = row
    input_leads = {rule.lhs for rule in oriented}
    added = [rule for rule in system.rules() if rule.lhs not in input_leads]
    algebra = QuotientAlgebra(system, relations, basis_paths, table, degree_cap, added)
    _logger.info('Built algebra of dimension %d with degree cap %d, %d rules (%d added by completion)',
                 len(algebra), degree_cap, len(system), len(added))
    return algebra


def build_algebra(quiver: Quiver,
                  relations: Sequence[RelationLike],
                  degree_cap: int,
                  field: Optional[FieldSpec] = None,
                  budget: Optional[int] = None,
                  raise_cap: bool = True) -> QuotientAlgebra:
    """
    Builds KQ/I from a presentation.

    >>> q = Quiver(('1', '2'), (('a', '1', '2'),))
    >>> len(build_algebra(q, (), 2))
    3

    Args:
        quiver:      the quiver
        relations:   defining relations
        degree_cap:  length bound for basis paths
        field:       coefficient field, taken from the relations when omitted
        budget:      completion rule budget
        raise_cap:   on a missing finiteness certificate retry with a larger cap a few times
    Returns:
        the algebra
    Raises:
        CompletionBudgetExceeded:  when completion diverges
        NoFiniteCertificate:       when no cap tried certifies finiteness
    """
    if field is None:
        field = _relation_terms(relations[0])[1] if relations else FieldSpec()
    attempts = CAP_RAISE_ATTEMPTS if raise_cap else 0
    while True:
        try:
            return _build_once(quiver, field, relations, degree_cap, budget)
        except NoFiniteCertificate as error:
            if attempts <= 0:
                raise
            attempts -= 1
            _logger.warning('%s; raising the degree cap from %d to %d', error, degree_cap, degree_cap + CAP_RAISE_STEP)
            degree_cap += CAP_RAISE_STEP


def _truncated_dimensions(quiver: Quiver, relations: Sequence[RelationLike], truncation: int) -> List[List[int]]:
    n = len(quiver.vertices)
    paths = enumerate_paths(quiver, truncation)
    columns: Dict[Tuple[int, int], Dict[Path, int]] = {}
    for path in paths:
        block = columns.setdefault((path.source, path.target), {})
        block[path] = len(block)
    ending: Dict[int, List[Path]] = {v: [] for v in range(n)}
    starting: Dict[int, List[Path]] = {v: [] for v in range(n)}
    for path in paths:
        ending[path.target].append(path)
        starting[path.source].append(path)
    rows: Dict[Tuple[int, int], List[SparseVector]] = {}
    for relation in relations:
        _, _, terms = _relation_terms(relation)
        source, target = next(iter(terms)).source, next(iter(terms)).target
        shortest = min(len(p.arrows) for p in terms)
        for left in ending[source]:
            budget_left = truncation - shortest - len(left.arrows)
            if budget_left < 0:
                break
            for right in starting[target]:
                if len(right.arrows) > budget_left:
                    break
                block = (left.source, right.target)
                row: SparseVector = {}
                for term, value in terms.items():
                    arrows = left.arrows + term.arrows + right.arrows
                    if len(arrows) <= truncation:
                        row[columns[block][Path(block[0], block[1], arrows)]] = value
                if row:
                    rows.setdefault(block, []).append(row)
    field = _relation_terms(relations[0])[1] if relations else FieldSpec()
    table = [[0] * n for _ in range(n)]
    for (i, j), block in columns.items():
        table[i][j] = len(block) - rank(matrix_from_rows(rows.get((i, j), []), len(block), field.domain))
    return table


def verify_by_truncation(quiver: Quiver, relations: Sequence[RelationLike], truncation: int) -> List[List[int]]:
    """
    Independent dimension count: dim eᵢ·KQ/(I + J^{L+1})·eⱼ by exact ranks, for L and L + 2.

    >>> q = Quiver(('1', '2'), (('a', '1', '2'), ('b', '2', '1')))
    >>> K = FieldSpec()
    >>> ab = AlgebraElement.from_path(q, K, q.path('a', 'b'))
    >>> ba = AlgebraElement.from_path(q, K, q.path('b', 'a'))
    >>> verify_by_truncation(q, [ab, ba], 3)
    [[1, 1], [1, 1]]

    Args:
        quiver:      the quiver
        relations:   defining relations
        truncation:  truncation degree L
    Returns:
        the table of block dimensions at L
    Raises:
        StabilizationFailure:  if the tables at L and L + 2 differ
    """
    lower = _truncated_dimensions(quiver, relations, truncation)
    upper = _truncated_dimensions(quiver, relations, truncation + 2)
    if lower != upper:
        raise StabilizationFailure(
            f'Truncated dimensions change from {sum(map(sum, lower))} at degree {truncation} '
            f'to {sum(map(sum, upper))} at degree {truncation + 2}'
        )
    return lower
