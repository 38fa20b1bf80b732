"""Decision procedures over finite matrix sets.

``closure_decide`` is the workhorse: a breadth-first enumeration of the
generated monoid by product length with memoization on matrices. It
returns a three-valued :class:`Verdict`. Witness words are sequences of
generator indices and are always length-lexicographically least.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .automaton import DETERMINISTIC, WeightedAutomaton, classify, eval_matrix
from .matrix import (Matrix, MatrixError, has_zero_corner, identity, is_location_synchronizing,
                     is_partial_01, is_synchronizing, is_zero_matrix)
from .semiring import Boolean, ValueBudgetError

log = logging.getLogger(__name__)

SYNC = 'sync'
LOCSYNC = 'locsync'
MORTAL = 'mortal'
ZERO_CORNER = 'zero_corner'

TARGETS = {
    SYNC: is_synchronizing,
    LOCSYNC: is_location_synchronizing,
    MORTAL: is_zero_matrix,
    ZERO_CORNER: has_zero_corner,
}

YES, NO, UNKNOWN = 'Yes', 'No', 'Unknown'

BOOLEAN = Boolean()


class DecideError(ValueError):
    pass


class CapabilityError(DecideError):
    """The semiring lacks a property the requested procedure relies on."""


def target_name(target: str) -> str:
    t = target.replace('-', '_')
    if t not in TARGETS:
        raise DecideError(f'unknown target {target!r}; expected one of {sorted(TARGETS)}')
    return t


def holds(target: str, m: Matrix) -> bool:
    r = TARGETS[target](m)
    return r is not None and r is not False


@dataclass(frozen=True)
class SearchBudget:
    max_word_length: Optional[int] = None
    max_distinct_matrices: Optional[int] = None
    max_products: Optional[int] = None

    def __post_init__(self):
        for name in ('max_word_length', 'max_distinct_matrices', 'max_products'):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise DecideError(f'{name} must be positive, got {v}')

    @property
    def unbounded(self):
        return (self.max_word_length is None and self.max_distinct_matrices is None
                and self.max_products is None)


UNBOUNDED = SearchBudget()


@dataclass
class Verdict:
    outcome: str
    witness: Optional[tuple] = None
    fixpoint_t: Optional[int] = None
    bound: Optional[int] = None
    reason: Optional[str] = None
    matrix: Optional[Matrix] = None
    stats: dict = field(default_factory=dict)
    # all elements of the generated monoid, kept for No verdicts
    closure: Optional[tuple] = field(default=None, repr=False)

    def __bool__(self):
        return self.outcome == YES

    def to_json(self, letters=None):
        witness = None
        if self.witness is not None:
            witness = [letters[i] if letters else i for i in self.witness]
        obj = {'outcome': self.outcome, 'witness': witness,
               'fixpoint_t': self.fixpoint_t, 'bound': self.bound, 'stats': dict(self.stats)}
        if self.reason:
            obj['reason'] = self.reason
        return obj


def _check_set(mats):
    mats = tuple(mats)
    if not mats:
        raise DecideError('need at least one matrix')
    s, n = mats[0].semiring, mats[0].n
    for m in mats:
        if m.semiring != s:
            raise MatrixError('all matrices must share a semiring')
        if m.n != n:
            raise MatrixError('all matrices must share a dimension')
    return mats, s, n


def _word(parent, m):
    out = []
    while parent[m] is not None:
        m, a = parent[m]
        out.append(a)
    return tuple(reversed(out))


def closure_decide(mats, target=SYNC, budget: SearchBudget = UNBOUNDED) -> Verdict:
    """Search the monoid generated by ``mats`` for a product satisfying ``target``.

    Levels are explored by product length; at each level generators are
    tried in input order on representatives ordered by their least word,
    so the first hit is the length-lex least witness. Reaching a level
    with no new matrices is a fixpoint, and the answer is No.
    """
    mats, s, n = _check_set(mats)
    target = target_name(target)
    pred = TARGETS[target]
    unit = identity(s, n)
    parent = {unit: None}
    frontier = [unit]
    t = 0
    products = 0
    max_frontier = 1

    def stats():
        return {'products': products, 'distinct': len(parent), 'max_frontier': max_frontier}

    def unknown(reason):
        log.debug('closure_decide gave up at length %d: %s', t, reason)
        return Verdict(UNKNOWN, bound=t, reason=reason, stats=stats())

    try:
        while frontier:
            if budget.max_word_length is not None and t >= budget.max_word_length:
                return unknown(f'word length bound {budget.max_word_length} reached')
            level = []
            for m in frontier:
                for i, g in enumerate(mats):
                    if budget.max_products is not None and products >= budget.max_products:
                        return unknown(f'product budget {budget.max_products} exhausted')
                    p = m @ g
                    products += 1
                    r = pred(p)
                    if r is not None and r is not False:
                        return Verdict(YES, witness=_word(parent, m) + (i,), matrix=p,
                                       stats=stats())
                    if p not in parent:
                        parent[p] = (m, i)
                        level.append(p)
                        if (budget.max_distinct_matrices is not None
                                and len(parent) > budget.max_distinct_matrices):
                            return unknown(f'distinct-matrix budget '
                                           f'{budget.max_distinct_matrices} exhausted')
            t += 1
            frontier = level
            max_frontier = max(max_frontier, len(level))
    except ValueBudgetError as e:
        return unknown(f'value budget exceeded: {e}')
    # level t produced nothing new, so M^{<=t-1} == M^{<=t}
    return Verdict(NO, fixpoint_t=t - 1, stats=stats(), closure=tuple(parent))


def sigma_project(mats) -> list:
    """Send every nonzero entry to 1 and zero to 0, landing in the Boolean semiring.

    Only a morphism when the source semiring is positive; anything else
    is refused.
    """
    mats, s, n = _check_set(mats)
    if not s.is_positive:
        raise CapabilityError(f'{s.name} is not positive; the zero/nonzero projection '
                              f'is not a semiring morphism there')
    z, eq = s.zero, s.eq
    return [Matrix(BOOLEAN, tuple(tuple(0 if eq(x, z) else 1 for x in row) for row in m.rows),
                   trusted=True) for m in mats]


def locsync_via_boolean(mats, budget: SearchBudget = UNBOUNDED) -> Verdict:
    return closure_decide(sigma_project(mats), SYNC, budget)


def _via_sigma(mats, target, budget):
    mats = tuple(mats)
    if mats and isinstance(mats[0].semiring, Boolean):
        return closure_decide(mats, target, budget)
    return closure_decide(sigma_project(mats), target, budget)


def mortality_via_sigma(mats, budget: SearchBudget = UNBOUNDED) -> Verdict:
    return _via_sigma(mats, MORTAL, budget)


def zero_corner_via_sigma(mats, budget: SearchBudget = UNBOUNDED) -> Verdict:
    return _via_sigma(mats, ZERO_CORNER, budget)


def _transition_table(m: WeightedAutomaton):
    """delta[a][q] = the unique successor of state q on letter a."""
    if classify(m) != DETERMINISTIC:
        raise CapabilityError('classical synchronization needs a deterministic automaton')
    if not all(is_partial_01(t) for t in m.transitions):
        raise CapabilityError('classical synchronization needs 0/1 transition matrices')
    s = m.semiring
    return [[next(j for j, x in enumerate(row) if not s.eq(x, s.zero)) for row in t.rows]
            for t in m.transitions]


def classical_dfa_sync(m: WeightedAutomaton) -> Optional[tuple]:
    """A synchronizing word for a deterministic 0/1 automaton, or None.

    Every pair of states must be mergeable; merging distances come from a
    backward BFS on the pair graph. The word is built by repeatedly
    merging the closest pair of the current state set, which bounds its
    length by O(n^3).
    """
    delta = _transition_table(m)
    n, k = m.n, len(delta)
    if n == 1:
        return (0,)
    preimage = [[[] for _ in range(n)] for _ in range(k)]
    for a in range(k):
        for q in range(n):
            preimage[a][delta[a][q]].append(q)

    # dist[(p, q)] with p < q: length of the shortest word merging p and q;
    # step[(p, q)]: its first letter
    dist, step = {}, {}
    queue = deque((r, r) for r in range(n))
    while queue:
        r, s_ = queue.popleft()
        d = dist.get((r, s_), 0) + 1
        for a in range(k):
            for p in preimage[a][r]:
                for q in preimage[a][s_]:
                    if p == q:
                        continue
                    key = (p, q) if p < q else (q, p)
                    if key not in dist:
                        dist[key] = d
                        step[key] = a
                        queue.append(key)
    if len(dist) < n * (n - 1) // 2:
        return None

    current = set(range(n))
    word = []
    while len(current) > 1:
        states = sorted(current)
        p, q = min(((x, y) for i, x in enumerate(states) for y in states[i + 1:]),
                   key=lambda pq: (dist[pq], pq))
        piece = []
        while p != q:
            a = step[(p, q) if p < q else (q, p)]
            piece.append(a)
            p, q = delta[a][p], delta[a][q]
        for a in piece:
            current = {delta[a][x] for x in current}
        word.extend(piece)
    word = tuple(word)
    if is_synchronizing(eval_matrix(m, word)) is None:
        raise AssertionError(f'pair-merge produced a non-synchronizing word {word}')
    return word


def shortest_word_oracle(mats, target=SYNC, max_len=12):
    """Exhaustive search over all words of length 1..max_len, no deduplication.

    Returns ``(word, length)`` for the length-lex least witness, or None.
    Deliberately independent of :func:`closure_decide`: iterative
    deepening over the full word tree, carrying prefix products.
    """
    if max_len < 1:
        raise DecideError('max_len must be >= 1')
    mats, s, n = _check_set(mats)
    target = target_name(target)
    pred = TARGETS[target]

    def search(prefix, word, remaining):
        for i, g in enumerate(mats):
            p = prefix @ g
            if remaining == 1:
                r = pred(p)
                if r is not None and r is not False:
                    return word + (i,)
            else:
                found = search(p, word + (i,), remaining - 1)
                if found is not None:
                    return found
        return None

    unit = identity(s, n)
    for length in range(1, max_len + 1):
        found = search(unit, (), length)
        if found is not None:
            return found, length
    return None
