"""Square matrices over a semiring, and the synchronization predicates.

Column indices returned by the predicates are 0-based.
"""

from __future__ import annotations

from .semiring import Semiring, semiring_from_json


class MatrixError(ValueError):
    pass


class Matrix:
    """An immutable n x n matrix with entries in ``semiring``.

    Entries are coerced to canonical form on construction, so ``==`` and
    ``hash`` agree with entrywise semiring equality and matrices can be
    used directly as dictionary keys.
    """

    __slots__ = ('semiring', 'rows', '_hash')

    def __init__(self, semiring: Semiring, rows, *, trusted=False):
        if not trusted:
            rows = tuple(tuple(semiring.coerce(x) for x in row) for row in rows)
            n = len(rows)
            if n == 0 or any(len(r) != n for r in rows):
                raise MatrixError(f'expected a nonempty square array, got shape '
                                  f'{n}x{[len(r) for r in rows]}')
        self.semiring = semiring
        self.rows = rows
        self._hash = None

    @property
    def n(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.semiring == other.semiring)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        return f'Matrix({self.semiring!r}, {[list(r) for r in self.rows]})'

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def encode(self) -> bytes:
        """Injective byte encoding: dimension, then length-prefixed entries row-major."""
        parts = [str(self.n).encode()]
        for row in self.rows:
            for x in row:
                e = self.semiring.encode(x)
                parts.append(b'%d:%s' % (len(e), e))
        return b'|'.join(parts)

    def to_json(self, with_semiring=True):
        obj = {'n': self.n,
               'rows': [[self.semiring.to_json(x) for x in row] for row in self.rows]}
        if with_semiring:
            obj['semiring'] = self.semiring.describe()
        return obj

    @classmethod
    def from_json(cls, obj, semiring=None):
        if semiring is None:
            semiring = semiring_from_json(obj['semiring'])
        m = cls(semiring, [[semiring.from_json(x) for x in row] for row in obj['rows']])
        if 'n' in obj and obj['n'] != m.n:
            raise MatrixError(f'declared n={obj["n"]} but rows give {m.n}')
        return m


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.semiring != b.semiring:
        raise MatrixError(f'semiring mismatch: {a.semiring!r} vs {b.semiring!r}')
    if a.n != b.n:
        raise MatrixError(f'dimension mismatch: {a.n} vs {b.n}')
    dot = a.semiring.dot
    cols = tuple(zip(*b.rows))
    return Matrix(a.semiring, tuple(tuple(dot(r, c) for c in cols) for r in a.rows),
                  trusted=True)


def mat_product(mats, semiring: Semiring, n: int) -> Matrix:
    """Left-to-right product; the identity for an empty sequence."""
    out = identity(semiring, n)
    for m in mats:
        out = mat_mul(out, m)
    return out


def identity(s: Semiring, n: int) -> Matrix:
    if n < 1:
        raise MatrixError('dimension must be >= 1')
    return Matrix(s, tuple(tuple(s.one if i == j else s.zero for j in range(n))
                           for i in range(n)), trusted=True)


def zero_matrix(s: Semiring, n: int) -> Matrix:
    if n < 1:
        raise MatrixError('dimension must be >= 1')
    return Matrix(s, tuple((s.zero,) * n for _ in range(n)), trusted=True)


def is_location_synchronizing(m: Matrix):
    """The column i such that exactly column i is nonzero in every row, else None."""
    eq, zero = m.semiring.eq, m.semiring.zero
    col = None
    for row in m.rows:
        nz = [j for j, x in enumerate(row) if not eq(x, zero)]
        if len(nz) != 1 or (col is not None and nz[0] != col):
            return None
        col = nz[0]
    return col


def is_synchronizing(m: Matrix):
    """``(column, value)`` if ``m`` is location-synchronizing with one common value."""
    col = is_location_synchronizing(m)
    if col is None:
        return None
    eq = m.semiring.eq
    first = m.rows[0][col]
    if all(eq(row[col], first) for row in m.rows):
        return col, first
    return None


def is_partial_01(m: Matrix) -> bool:
    s = m.semiring
    for row in m.rows:
        nz = [x for x in row if not s.eq(x, s.zero)]
        if len(nz) > 1 or (nz and not s.eq(nz[0], s.one)):
            return False
    return True


def is_zero_matrix(m: Matrix) -> bool:
    eq, zero = m.semiring.eq, m.semiring.zero
    return all(eq(x, zero) for row in m.rows for x in row)


def has_zero_corner(m: Matrix) -> bool:
    return m.semiring.eq(m.rows[0][0], m.semiring.zero)


def reinterpret(m: Matrix, s: Semiring) -> Matrix:
    """Map a partial 0/1 matrix into ``s`` by sending zero to zero and one to one."""
    src = m.semiring
    if not is_partial_01(m):
        raise MatrixError('only partial 0/1 matrices can be reinterpreted')
    return Matrix(s, tuple(tuple(s.zero if src.eq(x, src.zero) else s.one for x in row)
                           for row in m.rows), trusted=True)
