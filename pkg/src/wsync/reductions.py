"""Executable constructions: FPCP and mortality instances as synchronization instances.

Two FPCP variants appear. The 6x6 construction over the naturals fixes the
*first* tile of every solution; the 2x2 construction over finite languages
fixes the *last* one. In both, the fixed tile is ``tiles[0]``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .matrix import Matrix, identity, is_synchronizing, mat_product
from .semiring import FiniteLanguages, Integer, Natural, Semiring

FIRST_TILE_FIXED = 'first_tile_fixed'
LAST_TILE_FIXED = 'last_tile_fixed'

NAT = Natural()
INT = Integer()
BINARY_LANGUAGES = FiniteLanguages('01')


class ReductionError(ValueError):
    pass


class ConventionError(ReductionError):
    pass


def _check_binary(u, what='word'):
    if not isinstance(u, str) or not u:
        raise ReductionError(f'{what} must be a nonempty binary string, got {u!r}')
    if set(u) - {'0', '1'}:
        raise ReductionError(f'{what} {u!r} has symbols outside {{0,1}}')


@dataclass(frozen=True)
class FpcpInstance:
    tiles: tuple
    convention: str = FIRST_TILE_FIXED

    def __post_init__(self):
        tiles = tuple((u, v) for u, v in self.tiles)
        if not tiles:
            raise ReductionError('an FPCP instance needs at least one tile')
        for u, v in tiles:
            _check_binary(u, 'tile word')
            _check_binary(v, 'tile word')
        if self.convention not in (FIRST_TILE_FIXED, LAST_TILE_FIXED):
            raise ReductionError(f'unknown convention {self.convention!r}')
        object.__setattr__(self, 'tiles', tiles)

    @property
    def k(self):
        return len(self.tiles)

    def concat(self, seq):
        """(u_{i1}...u_{it}, v_{i1}...v_{it}) for a 0-based tile index sequence."""
        return (''.join(self.tiles[i][0] for i in seq),
                ''.join(self.tiles[i][1] for i in seq))

    def is_solution(self, seq) -> bool:
        if not seq:
            return False
        fixed = seq[0] if self.convention == FIRST_TILE_FIXED else seq[-1]
        if fixed != 0:
            return False
        u, v = self.concat(seq)
        return u == v

    def to_json(self):
        return {'tiles': [list(t) for t in self.tiles], 'convention': self.convention}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(tuple(tuple(t) for t in obj['tiles']),
                       obj.get('convention', FIRST_TILE_FIXED))
        except (KeyError, TypeError, ValueError) as e:
            raise ReductionError(f'bad FPCP instance: {e}') from None


# Symbol-to-digit maps for the base-3 encoding. With '01' an all-zero word
# encodes to 0 and leading zeros collide (int3('1') == int3('01')), so the
# 6x6 construction is neither complete nor sound on such words. '12' is
# injective and never zero.
PLAIN_DIGITS = '01'
SHIFTED_DIGITS = '12'


def ternary_int(u: str, digits=PLAIN_DIGITS) -> int:
    """Value of a binary word read as base-3 digits, symbol b standing for digits[b]."""
    _check_binary(u)
    if digits not in (PLAIN_DIGITS, SHIFTED_DIGITS):
        raise ReductionError(f'digits must be {PLAIN_DIGITS!r} or {SHIFTED_DIGITS!r}')
    if digits != PLAIN_DIGITS:
        u = u.translate(str.maketrans('01', digits))
    return int(u, 3)


def quaternary_int(u: str) -> int:
    _check_binary(u)
    return int(u, 4)


def word_matrix(u: str, digits=PLAIN_DIGITS) -> Matrix:
    """[[3^|u|, 0], [int3(u), 1]]; multiplicative: M(u)M(v) = M(uv)."""
    return Matrix(NAT, ((3 ** len(u), 0), (ternary_int(u, digits), 1)), trusted=True)


def block_diag(s: Semiring, *blocks) -> Matrix:
    n = sum(b.n for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        for row in b.rows:
            rows.append((s.zero,) * off + tuple(row) + (s.zero,) * (n - off - b.n))
        off += b.n
    return Matrix(s, tuple(rows), trusted=True)


def fpcp_to_nat_sync(inst: FpcpInstance, digits=PLAIN_DIGITS) -> list:
    """The 6x6 natural-number set ``[A_1, ..., A_k, B, C]`` for a first-tile-fixed instance.

    A solution 1, i2, ..., it gives the product B A_{i2} ... A_{it} C,
    whose first column holds int3(u_1 u) four times and int3(v_1 v) twice.
    With ``digits='12'`` the set is synchronizable iff the instance is
    solvable. With the default ``'01'`` that equivalence breaks on words
    whose encoding is zero or differs only by leading zeros.
    """
    if inst.convention != FIRST_TILE_FIXED:
        raise ConventionError('the 6x6 construction needs a first-tile-fixed instance')
    mats = [block_diag(NAT, word_matrix(u, digits), word_matrix(u, digits),
                       word_matrix(v, digits))
            for u, v in inst.tiles]
    u1, v1 = inst.tiles[0]
    a, b = ternary_int(u1, digits), ternary_int(v1, digits)
    mats.append(Matrix(NAT, (
        (a, 1, a, 1, 0, 0),
        (a, 1, a, 1, 0, 0),
        (0, 0, a, 1, 0, 0),
        (0, 0, a, 1, 0, 0),
        (0, 0, 0, 0, b, 1),
        (0, 0, 0, 0, b, 1),
    ), trusted=True))
    mats.append(Matrix(NAT, tuple(
        tuple(1 if (i in (2, 4) and j == 0) else 0 for j in range(6)) for i in range(6)),
        trusted=True))
    return mats


def nat_sync_letters(inst: FpcpInstance):
    return [f'A{i + 1}' for i in range(inst.k)] + ['B', 'C']


def decode_nat_witness(inst: FpcpInstance, word):
    """The 0-based tile sequence (starting with tile 0) spelled by a word
    ``B A_{i2}...A_{it} C`` over ``fpcp_to_nat_sync(inst)``; None for any other shape.
    """
    k = inst.k
    b, c = k, k + 1
    word = tuple(word)
    if len(word) < 2 or word[0] != b or word[-1] != c:
        return None
    middle = word[1:-1]
    if any(x >= k for x in middle):
        return None
    return (0,) + middle


@dataclass
class ClaimsReport:
    samples: int
    checked: dict = field(default_factory=lambda: {'A': 0, 'B': 0, 'C': 0})
    # Claim B probes whose premise (XCY synchronizing) actually held
    b_premises: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def to_json(self):
        return {'samples': self.samples, 'checked': self.checked,
                'b_premises': self.b_premises, 'ok': self.ok, 'violations': self.violations}


def _blocks(m: Matrix):
    """The 3x3 grid of 2x2 blocks of a 6x6 matrix."""
    return [[tuple(tuple(m.rows[2 * bi + r][2 * bj + c] for c in range(2)) for r in range(2))
             for bj in range(3)] for bi in range(3)]


def claim_c_shape(m: Matrix, n: int) -> bool:
    """Whether ``m`` has block shape [[X, nX, 0], [0, X, 0], [0, 0, Y]]."""
    g = _blocks(m)
    zero = ((0, 0), (0, 0))
    x = g[0][0]
    nx = tuple(tuple(n * e for e in row) for row in x)
    return (g[0][1] == nx and g[0][2] == zero and g[1][0] == zero and g[1][1] == x
            and g[1][2] == zero and g[2][0] == zero and g[2][1] == zero)


def verify_claims_abc(inst: FpcpInstance, samples=100, seed=0, max_factors=4,
                      digits=PLAIN_DIGITS) -> ClaimsReport:
    """Probe the three structural claims behind the 6x6 construction on random products.

    A: for any X, XC is zero outside column 1, and that column is the sum
       of columns 3 and 5 of X.
    B: if XCY is synchronizing then so is XC.
    C: every member of A*(B A*)^n has block shape [[X, nX, 0], [0, X, 0], [0, 0, Y]].
    """
    mats = fpcp_to_nat_sync(inst, digits)
    k = inst.k
    a_mats, b_mat, c_mat = mats[:k], mats[k], mats[k + 1]
    rng = random.Random(seed)
    report = ClaimsReport(samples)

    def rand_product(pool, lo=0, hi=max_factors):
        idx = [rng.randrange(len(pool)) for _ in range(rng.randint(lo, hi))]
        return idx, mat_product([pool[i] for i in idx], NAT, 6)

    def fail(claim, detail):
        report.violations.append({'claim': claim, **detail})

    for _ in range(samples):
        idx, x = rand_product(mats)
        xc = x @ c_mat
        col = tuple(x.rows[i][2] + x.rows[i][4] for i in range(6))
        ok = (all(xc.rows[i][j] == 0 for i in range(6) for j in range(1, 6))
              and xc.column(0) == col)
        report.checked['A'] += 1
        if not ok:
            fail('A', {'x_word': idx})

    # Claim B needs premises that can hold: X is drawn half the time from
    # the forward pattern B A... so that XC is often synchronizing.
    for _ in range(samples):
        if rng.random() < 0.5:
            idx, x = rand_product(a_mats)
            idx = [k] + idx
            x = b_mat @ x
        else:
            idx, x = rand_product(mats)
        yidx, y = rand_product(mats)
        xcy = x @ c_mat @ y
        report.checked['B'] += 1
        if is_synchronizing(xcy) is not None:
            report.b_premises += 1
            if is_synchronizing(x @ c_mat) is None:
                fail('B', {'x_word': idx, 'y_word': yidx})

    for _ in range(samples):
        n = rng.randint(0, 3)
        idx, m = rand_product(a_mats, 0, 2)
        for _ in range(n):
            tail_idx, tail = rand_product(a_mats, 0, 2)
            idx = idx + [k] + tail_idx
            m = m @ b_mat @ tail
        report.checked['C'] += 1
        if not claim_c_shape(m, n):
            fail('C', {'n': n, 'word': idx})
    return report


def lang(u: str):
    return (u,)


def free_a(u: str, v: str) -> Matrix:
    """[[u, 0], [0, v]] over finite languages."""
    z = ()
    return Matrix(BINARY_LANGUAGES, ((lang(u), z), (z, lang(v))), trusted=True)


def free_b(u: str, v: str) -> Matrix:
    """[[u, 0], [v, 0]] over finite languages; synchronizing iff u == v."""
    z = ()
    return Matrix(BINARY_LANGUAGES, ((lang(u), z), (lang(v), z)), trusted=True)


def fpcp_to_free_sync(inst: FpcpInstance) -> list:
    """``[A(u_1, v_1), ..., A(u_k, v_k), B(u_1, v_1)]`` for a last-tile-fixed instance."""
    if inst.convention != LAST_TILE_FIXED:
        raise ConventionError('the 2x2 language construction needs a last-tile-fixed instance')
    for u, v in inst.tiles:
        _check_binary(u)
        _check_binary(v)
    u1, v1 = inst.tiles[0]
    return [free_a(u, v) for u, v in inst.tiles] + [free_b(u1, v1)]


def free_sync_letters(inst: FpcpInstance):
    return [f'A{i + 1}' for i in range(inst.k)] + ['B']


def mortality_to_sync(mats) -> list:
    """``[A_0, A_1, ..., A_k]`` of dimension n+1 from an n x n set ``[M_1, ..., M_k]``.

    A_i = [[1, 0], [0, M_i]] and A_0 = [[1, 0], [1, I_n]]. The input set is
    mortal iff the output is synchronizable iff it is location-synchronizable.
    """
    mats = list(mats)
    if not mats:
        raise ReductionError('need at least one matrix')
    s, n = mats[0].semiring, mats[0].n
    if any(m.semiring != s or m.n != n for m in mats):
        raise ReductionError('all matrices must share a semiring and dimension')
    z, o = s.zero, s.one

    def lift(corner_col, m):
        rows = [(o,) + (z,) * n]
        rows += [(corner_col,) + tuple(row) for row in m.rows]
        return Matrix(s, tuple(rows), trusted=True)

    return [lift(o, identity(s, n))] + [lift(z, m) for m in mats]


def z_mortality_embedding(u: str, v: str):
    """``(M(u, v), B)`` over the integers, base-4 encoding.

    M(u, v) = [[4^|u|, 0, 0], [0, 4^|v|, 0], [int4(u), int4(v), 1]] and
    B = (1, -1, 0)^T (1, 0, 1), which is idempotent and satisfies
    B M(u, v) B = (4^|u| + int4(u) - int4(v)) B.
    """
    m = Matrix(INT, (
        (4 ** len(u), 0, 0),
        (0, 4 ** len(v), 0),
        (quaternary_int(u), quaternary_int(v), 1),
    ), trusted=True)
    return m, Z_MORTALITY_B


Z_MORTALITY_B = Matrix(INT, ((1, 0, 1), (-1, 0, -1), (0, 0, 0)), trusted=True)
