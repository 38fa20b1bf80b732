"""Weighted automata: an initial vector, one matrix per letter, a final vector."""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import Matrix, MatrixError, identity, mat_mul
from .semiring import Semiring, semiring_from_json

GENERAL = 'general'
PARTIAL = 'partial'
DETERMINISTIC = 'deterministic'


class AutomatonError(ValueError):
    pass


@dataclass(frozen=True)
class WeightedAutomaton:
    semiring: Semiring
    alpha: tuple
    transitions: tuple
    beta: tuple
    letters: tuple = ()

    def __post_init__(self):
        s = self.semiring
        if not self.transitions:
            raise AutomatonError('an automaton needs at least one letter')
        n = self.transitions[0].n
        for m in self.transitions:
            if m.n != n or m.semiring != s:
                raise AutomatonError('transition matrices must share dimension and semiring')
        if len(self.alpha) != n or len(self.beta) != n:
            raise AutomatonError(f'alpha/beta must have length {n}')
        object.__setattr__(self, 'alpha', tuple(s.coerce(x) for x in self.alpha))
        object.__setattr__(self, 'beta', tuple(s.coerce(x) for x in self.beta))
        letters = tuple(self.letters) or tuple(str(i) for i in range(len(self.transitions)))
        if len(letters) != len(self.transitions) or len(set(letters)) != len(letters):
            raise AutomatonError('need one distinct letter name per transition matrix')
        object.__setattr__(self, 'letters', letters)

    @property
    def n(self):
        return self.transitions[0].n

    def parse_word(self, text):
        """Letter indices for a word given as a string (single-char names) or name list."""
        index = {a: i for i, a in enumerate(self.letters)}
        try:
            return tuple(index[a] for a in text)
        except KeyError as e:
            raise AutomatonError(f'unknown letter {e.args[0]!r}') from None

    def format_word(self, word):
        names = [self.letters[i] for i in word]
        if all(len(a) == 1 for a in self.letters):
            return ''.join(names)
        return names

    def to_json(self):
        s = self.semiring
        return {
            'semiring': s.describe(),
            'n': self.n,
            'alphabet': list(self.letters),
            'alpha': [s.to_json(x) for x in self.alpha],
            'beta': [s.to_json(x) for x in self.beta],
            'transitions': {a: m.to_json(with_semiring=False)['rows']
                            for a, m in zip(self.letters, self.transitions)},
        }

    @classmethod
    def from_json(cls, obj):
        s = semiring_from_json(obj['semiring'])
        letters = list(obj.get('alphabet') or obj['transitions'])
        trans = []
        for a in letters:
            t = obj['transitions'][a]
            rows = t['rows'] if isinstance(t, dict) else t
            trans.append(Matrix.from_json({'rows': rows}, semiring=s))
        aut = cls(s, tuple(s.from_json(x) for x in obj['alpha']), tuple(trans),
                  tuple(s.from_json(x) for x in obj['beta']), tuple(letters))
        if 'n' in obj and obj['n'] != aut.n:
            raise AutomatonError(f'declared n={obj["n"]} but matrices are {aut.n}x{aut.n}')
        return aut


def _check_word(m: WeightedAutomaton, word):
    k = len(m.transitions)
    for a in word:
        if not 0 <= a < k:
            raise AutomatonError(f'letter index {a} out of range for {k} letters')


def eval_matrix(m: WeightedAutomaton, word) -> Matrix:
    _check_word(m, word)
    out = identity(m.semiring, m.n)
    for a in word:
        out = mat_mul(out, m.transitions[a])
    return out


def eval_weight(m: WeightedAutomaton, word):
    """alpha * M_w * beta."""
    s = m.semiring
    mw = eval_matrix(m, word)
    row = tuple(s.dot(m.alpha, col) for col in zip(*mw.rows))
    return s.dot(row, m.beta)


def _nonzero_count(s, xs):
    return sum(1 for x in xs if not s.eq(x, s.zero))


def classify(m: WeightedAutomaton) -> str:
    s = m.semiring
    if _nonzero_count(s, m.alpha) != 1:
        return GENERAL
    counts = [_nonzero_count(s, row) for t in m.transitions for row in t.rows]
    if any(c > 1 for c in counts):
        return GENERAL
    return DETERMINISTIC if all(c == 1 for c in counts) else PARTIAL


def cerny_automaton(s: Semiring, n: int) -> WeightedAutomaton:
    """The n-state Cerny automaton.

    Letter ``0`` rotates states (i -> i+1 mod n); letter ``1`` fixes every
    state except the first, which it sends to the second. The shortest
    synchronizing word has length (n-1)**2.
    """
    if n < 2:
        raise AutomatonError('the Cerny family starts at n = 2')
    z, o = s.zero, s.one
    rotate = Matrix(s, tuple(tuple(o if j == (i + 1) % n else z for j in range(n))
                             for i in range(n)), trusted=True)
    merge = Matrix(s, tuple(tuple(o if j == (1 if i == 0 else i) else z for j in range(n))
                            for i in range(n)), trusted=True)
    alpha = (o,) + (z,) * (n - 1)
    return WeightedAutomaton(s, alpha, (rotate, merge), (o,) * n, ('0', '1'))


def from_matrices(mats, letters=None) -> WeightedAutomaton:
    """Wrap a bare matrix set as an automaton (alpha = e_1, beta = all ones)."""
    mats = tuple(mats)
    if not mats:
        raise MatrixError('empty matrix set')
    s, n = mats[0].semiring, mats[0].n
    return WeightedAutomaton(s, (s.one,) + (s.zero,) * (n - 1), mats, (s.one,) * n,
                             tuple(letters or ()))
