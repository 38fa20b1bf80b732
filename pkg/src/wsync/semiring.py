"""Semirings with declared capability flags.

Every value is stored in a canonical, hashable Python form so that
structural equality coincides with semiring equality:

    boolean       int 0/1
    nat, int      int (arbitrary precision)
    int_mod       int in [0, k)
    fin_lang      tuple of words (str), sorted and deduplicated
    fin_int_set   tuple of ints, sorted and deduplicated
"""

from __future__ import annotations

import json
import operator
import random
from dataclasses import dataclass, field
from functools import reduce

DEFAULT_VALUE_BUDGET = 4096


class SemiringError(ValueError):
    pass


class ValueBudgetError(ArithmeticError):
    """A set-valued product or sum grew past the configured element budget."""


@dataclass(frozen=True)
class Flags:
    is_finite: bool
    is_locally_finite: bool
    is_zero_sum_free: bool
    is_zero_divisor_free: bool

    @property
    def is_positive(self):
        return self.is_zero_sum_free and self.is_zero_divisor_free


class Semiring:
    name: str = ''
    zero = None
    one = None
    flags: Flags

    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def eq(self, x, y):
        return x == y

    def dot(self, xs, ys):
        """Sum of pairwise products; the inner loop of every matrix product."""
        return reduce(self.add, map(self.mul, xs, ys), self.zero)

    def coerce(self, x):
        """Validate ``x`` and return it in canonical form."""
        raise NotImplementedError

    def to_json(self, x):
        return x

    def from_json(self, obj):
        return self.coerce(obj)

    def encode(self, x) -> bytes:
        return json.dumps(self.to_json(x), separators=(',', ':')).encode()

    def decode(self, data: bytes):
        return self.from_json(json.loads(data))

    def sample(self, rng: random.Random):
        """A small random value, for law checks and randomized tests."""
        raise NotImplementedError

    @property
    def is_positive(self):
        return self.flags.is_positive

    def params(self) -> dict:
        return {}

    def describe(self) -> dict:
        return {'name': self.name, **self.params()}

    def _key(self):
        return (self.name, tuple((k, tuple(v) if isinstance(v, list) else v)
                                 for k, v in sorted(self.params().items())))

    def __eq__(self, other):
        return isinstance(other, Semiring) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        ps = ', '.join(f'{k}={v!r}' for k, v in self.params().items())
        return f'{type(self).__name__}({ps})'


class Boolean(Semiring):
    name = 'boolean'
    zero = 0
    one = 1
    flags = Flags(True, True, True, True)

    def add(self, x, y):
        return x | y

    def mul(self, x, y):
        return x & y

    def dot(self, xs, ys):
        return 1 if any(map(operator.and_, xs, ys)) else 0

    def coerce(self, x):
        if x in (0, 1) and not isinstance(x, float):
            return int(x)
        raise SemiringError(f'not a boolean value: {x!r}')

    def sample(self, rng):
        return rng.randint(0, 1)


class Natural(Semiring):
    name = 'nat'
    zero = 0
    one = 1
    flags = Flags(False, False, True, True)

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def dot(self, xs, ys):
        return sum(map(operator.mul, xs, ys))

    def coerce(self, x):
        if isinstance(x, str):
            x = _parse_int(x)
        if isinstance(x, bool) or not isinstance(x, int) or x < 0:
            raise SemiringError(f'not a natural number: {x!r}')
        return x

    def to_json(self, x):
        return str(x)

    def sample(self, rng):
        return rng.randint(0, 5)


class Integer(Semiring):
    name = 'int'
    zero = 0
    one = 1
    flags = Flags(False, False, False, True)

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def dot(self, xs, ys):
        return sum(map(operator.mul, xs, ys))

    def coerce(self, x):
        if isinstance(x, str):
            x = _parse_int(x)
        if isinstance(x, bool) or not isinstance(x, int):
            raise SemiringError(f'not an integer: {x!r}')
        return x

    def to_json(self, x):
        return str(x)

    def sample(self, rng):
        return rng.randint(-5, 5)


class IntegerMod(Semiring):
    name = 'int_mod'
    zero = 0

    def __init__(self, k: int):
        if isinstance(k, bool) or not isinstance(k, int) or k < 1:
            raise SemiringError(f'modulus must be an integer >= 1, got {k!r}')
        self.k = k
        self.one = 1 % k
        prime = k >= 2 and all(k % d for d in range(2, int(k ** 0.5) + 1))
        # k == 1 is the trivial semiring, vacuously positive
        self.flags = Flags(True, True, k == 1, k == 1 or prime)

    def add(self, x, y):
        return (x + y) % self.k

    def mul(self, x, y):
        return (x * y) % self.k

    def dot(self, xs, ys):
        return sum(map(operator.mul, xs, ys)) % self.k

    def coerce(self, x):
        if isinstance(x, dict):
            if x.get('k') != self.k:
                raise SemiringError(f'residue modulus {x.get("k")!r} != {self.k}')
            x = x.get('r')
        if isinstance(x, bool) or not isinstance(x, int):
            raise SemiringError(f'not a residue: {x!r}')
        return x % self.k

    def to_json(self, x):
        return {'k': self.k, 'r': x}

    def sample(self, rng):
        return rng.randrange(self.k)

    def params(self):
        return {'k': self.k}


class _FiniteSets(Semiring):
    """Shared machinery for the two set-valued semirings."""

    zero = ()

    def __init__(self, max_size=DEFAULT_VALUE_BUDGET):
        if max_size is not None and max_size < 1:
            raise SemiringError('value budget must be positive')
        self.max_size = max_size

    def _check(self, xs):
        if self.max_size is not None and len(xs) > self.max_size:
            raise ValueBudgetError(
                f'{self.name} value has {len(xs)} elements, budget is {self.max_size}')
        return xs

    def add(self, x, y):
        if not x:
            return y
        if not y:
            return x
        return self._check(tuple(sorted(set(x).union(y))))

    def mul(self, x, y):
        if not x or not y:
            return ()
        return self._check(tuple(sorted({self._combine(a, b) for a in x for b in y})))

    def _combine(self, a, b):
        raise NotImplementedError

    def to_json(self, x):
        return list(x)

    def params(self):
        return {} if self.max_size == DEFAULT_VALUE_BUDGET else {'max_size': self.max_size}


class FiniteLanguages(_FiniteSets):
    name = 'fin_lang'
    one = ('',)
    flags = Flags(False, False, True, True)

    def __init__(self, alphabet, max_size=DEFAULT_VALUE_BUDGET):
        super().__init__(max_size)
        alphabet = tuple(sorted(set(alphabet)))
        if not alphabet:
            raise SemiringError('fin_lang needs a nonempty alphabet')
        if any(not isinstance(a, str) or len(a) != 1 for a in alphabet):
            raise SemiringError('alphabet symbols must be single characters')
        self.alphabet = alphabet
        self._symbols = frozenset(alphabet)

    def _combine(self, a, b):
        return a + b

    def coerce(self, x):
        if isinstance(x, str):
            raise SemiringError('fin_lang values are collections of words, not a bare string')
        words = set(x)
        for w in words:
            if not isinstance(w, str) or not self._symbols.issuperset(w):
                raise SemiringError(f'word {w!r} is not over alphabet {self.alphabet}')
        return self._check(tuple(sorted(words)))

    def sample(self, rng):
        size = rng.choice([0, 1, 1, 2])
        return self.coerce(
            ''.join(rng.choice(self.alphabet) for _ in range(rng.randint(0, 2)))
            for _ in range(size))

    def params(self):
        return {'alphabet': list(self.alphabet), **super().params()}


class FiniteIntSets(_FiniteSets):
    """Finite sets of integers under union and elementwise (complex) sum."""

    name = 'fin_int_set'
    one = (0,)
    flags = Flags(False, False, True, True)

    def _combine(self, a, b):
        return a + b

    def coerce(self, x):
        xs = set(x)
        if any(isinstance(v, bool) or not isinstance(v, int) for v in xs):
            raise SemiringError(f'not a finite set of integers: {x!r}')
        return self._check(tuple(sorted(xs)))

    def sample(self, rng):
        return self.coerce(rng.randint(-3, 3) for _ in range(rng.choice([0, 1, 1, 2])))


def _parse_int(s):
    try:
        return int(s, 10)
    except ValueError:
        raise SemiringError(f'not a decimal integer: {s!r}') from None


SEMIRING_NAMES = ('boolean', 'nat', 'int', 'int_mod', 'fin_lang', 'fin_int_set')


def make_semiring(name, *, alphabet=None, k=None, max_size=DEFAULT_VALUE_BUDGET) -> Semiring:
    if name == 'boolean':
        return Boolean()
    if name == 'nat':
        return Natural()
    if name == 'int':
        return Integer()
    if name == 'int_mod':
        if k is None:
            raise SemiringError('int_mod requires a modulus k')
        return IntegerMod(k)
    if name == 'fin_lang':
        if not alphabet:
            raise SemiringError('fin_lang requires a nonempty alphabet')
        return FiniteLanguages(alphabet, max_size)
    if name == 'fin_int_set':
        return FiniteIntSets(max_size)
    raise SemiringError(f'unknown semiring {name!r}; expected one of {SEMIRING_NAMES}')


def semiring_from_json(obj) -> Semiring:
    if isinstance(obj, str):
        obj = {'name': obj}
    if not isinstance(obj, dict) or 'name' not in obj:
        raise SemiringError(f'bad semiring descriptor: {obj!r}')
    return make_semiring(obj['name'], alphabet=obj.get('alphabet'), k=obj.get('k'),
                         max_size=obj.get('max_size', DEFAULT_VALUE_BUDGET))


def is_zero(s: Semiring, x) -> bool:
    return s.eq(x, s.zero)


@dataclass
class LawReport:
    semiring: str
    trials: int
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def to_json(self):
        return {'semiring': self.semiring, 'trials': self.trials, 'ok': self.ok,
                'checks': self.checks, 'violations': self.violations}


def _laws(s):
    add, mul, eq, zero, one = s.add, s.mul, s.eq, s.zero, s.one
    return {
        'add_associative': lambda a, b, c: eq(add(add(a, b), c), add(a, add(b, c))),
        'add_commutative': lambda a, b, c: eq(add(a, b), add(b, a)),
        'add_identity': lambda a, b, c: eq(add(a, zero), a) and eq(add(zero, a), a),
        'mul_associative': lambda a, b, c: eq(mul(mul(a, b), c), mul(a, mul(b, c))),
        'mul_identity': lambda a, b, c: eq(mul(a, one), a) and eq(mul(one, a), a),
        'zero_annihilates': lambda a, b, c: eq(mul(a, zero), zero) and eq(mul(zero, a), zero),
        'left_distributive': lambda a, b, c: eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))),
        'right_distributive': lambda a, b, c: eq(mul(add(a, b), c), add(mul(a, c), mul(b, c))),
    }


def law_check(s: Semiring, samples, trials=1000, seed=0) -> LawReport:
    """Test the eight semiring axioms on random triples drawn from ``samples``.

    Violations are collected in the report, one entry per failing
    (law, triple), rather than raised. When the positive flags are set,
    zero-sum-freeness and zero-divisor-freeness are checked as well.
    """
    samples = list(samples)
    if not samples:
        raise SemiringError('law_check needs at least one sample value')
    rng = random.Random(seed)
    laws = _laws(s)
    if s.flags.is_zero_sum_free:
        laws['zero_sum_free'] = lambda a, b, c: (
            not is_zero(s, s.add(a, b)) or (is_zero(s, a) and is_zero(s, b)))
    if s.flags.is_zero_divisor_free:
        laws['zero_divisor_free'] = lambda a, b, c: (
            not is_zero(s, s.mul(a, b)) or is_zero(s, a) or is_zero(s, b))
    report = LawReport(s.name, trials, {name: 0 for name in laws})
    for _ in range(trials):
        a, b, c = (rng.choice(samples) for _ in range(3))
        for name, law in laws.items():
            if law(a, b, c):
                report.checks[name] += 1
            elif not any(v['law'] == name for v in report.violations):
                report.violations.append(
                    {'law': name, 'triple': [s.to_json(a), s.to_json(b), s.to_json(c)]})
    return report


def default_samples(s: Semiring, count=64, seed=0):
    """Sample values for ``s``; exhaustive when the carrier is tiny."""
    if isinstance(s, Boolean):
        return [0, 1]
    if isinstance(s, IntegerMod) and s.k <= count:
        return list(range(s.k))
    rng = random.Random(seed)
    vals = [s.zero, s.one] + [s.sample(rng) for _ in range(count)]
    return list(dict.fromkeys(vals))

