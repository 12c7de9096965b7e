"""Exact linear algebra over a :class:`~weakmult.field.Field`.

Matrices are immutable row tuples.  Subspaces always store their basis in
reduced row echelon form, so two subspaces are equal exactly when their
bases are entrywise equal.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .field import Field, FieldMismatch


class Matrix:
    __slots__ = ("rows", "field", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], field: Field, ncols: int | None = None):
        rows = tuple(tuple(field(x) for x in row) for row in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def _raw(cls, rows: tuple, field: Field, ncols: int) -> Matrix:
        # Trusted constructor: entries already belong to ``field``.
        m = cls.__new__(cls)
        m.rows = rows
        m.field = field
        m.nrows = len(rows)
        m.ncols = ncols
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field) -> Matrix:
        z = field.zero
        return cls._raw(tuple((z,) * ncols for _ in range(nrows)), field, ncols)

    @classmethod
    def identity(cls, n: int, field: Field) -> Matrix:
        z, o = field.zero, field.one
        return cls._raw(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field, n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], field: Field, nrows: int | None = None) -> Matrix:
        if not cols:
            return cls([], field, 0) if nrows is None else cls.zeros(nrows, 0, field)
        return cls(zip(*cols), field)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> Matrix:
        return Matrix._raw(tuple(zip(*self.rows)) if self.nrows else tuple(() for _ in range(self.ncols)),
                           self.field, self.nrows)

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def _check(self, other: Matrix):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
                           self.field, self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + other.scale(-1)

    def __neg__(self) -> Matrix:
        return self.scale(-1)

    def scale(self, k) -> Matrix:
        k = self.field(k)
        return Matrix._raw(tuple(tuple(k * a for a in r) for r in self.rows), self.field, self.ncols)

    def __matmul__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        z = self.field.zero
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                s = z
                for a, b in zip(r, c):
                    if a and b:
                        s = s + a * b
                row.append(s)
            out.append(tuple(row))
        return Matrix._raw(tuple(out), self.field, other.ncols)

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product ``self @ v`` for a coordinate vector ``v``."""
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        z = self.field.zero
        out = []
        for r in self.rows:
            s = z
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def flatten_columns(self) -> tuple:
        """Column-major flattening: entry (l, j) goes to index ``j*nrows + l``."""
        return tuple(self.rows[l][j] for j in range(self.ncols) for l in range(self.nrows))

    @classmethod
    def unflatten_columns(cls, v: Sequence, n: int, field: Field) -> Matrix:
        if len(v) != n * n:
            raise ValueError(f"expected {n * n} entries")
        return cls(((v[j * n + l] for j in range(n)) for l in range(n)), field)

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols} over {self.field}]({body})"


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    """Reduced row echelon form, pivot columns and rank."""
    rows = [list(r) for r in m.rows]
    pivots = []
    r = 0
    for c in range(m.ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix._raw(tuple(tuple(x) for x in rows), m.field, m.ncols), tuple(pivots), r


def rank(m: Matrix) -> int:
    return rref(m)[2]


class Subspace:
    """A subspace of K^ambient_dim with canonical (RREF) basis rows."""

    __slots__ = ("ambient_dim", "basis", "field")

    def __init__(self, vectors: Iterable[Sequence], ambient_dim: int, field: Field):
        vecs = [tuple(field(x) for x in v) for v in vectors]
        if any(len(v) != ambient_dim for v in vecs):
            raise ValueError("vector length does not match ambient dimension")
        red, _, rk = rref(Matrix._raw(tuple(vecs), field, ambient_dim))
        self.basis = Matrix._raw(red.rows[:rk], field, ambient_dim)
        self.ambient_dim = ambient_dim
        self.field = field

    @classmethod
    def zero(cls, ambient_dim: int, field: Field) -> Subspace:
        return cls([], ambient_dim, field)

    @classmethod
    def full(cls, ambient_dim: int, field: Field) -> Subspace:
        return cls(Matrix.identity(ambient_dim, field).rows, ambient_dim, field)

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def vectors(self) -> list[tuple]:
        return list(self.basis.rows)

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.basis.rows)

    def __contains__(self, v) -> bool:
        return in_span(self, v) is not None

    def __le__(self, other: Subspace) -> bool:
        return all(v in other for v in self.basis.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self.basis.rows == other.basis.rows)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis.rows))

    def __add__(self, other: Subspace) -> Subspace:
        _same_ambient(self, other)
        return Subspace(self.vectors() + other.vectors(), self.ambient_dim, self.field)

    def __and__(self, other: Subspace) -> Subspace:
        return intersection(self, other)

    def orthogonal(self) -> Subspace:
        """Vectors v with <b, v> = 0 for every basis row b (standard pairing)."""
        return nullspace(self.basis)

    def to_strings(self) -> list[list[str]]:
        return self.basis.to_strings()

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={self.to_strings()})"


def _same_ambient(a: Subspace, b: Subspace):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("subspaces live in different ambient spaces")


def nullspace(m: Matrix) -> Subspace:
    """Right kernel {v : m v = 0} as a canonical subspace of K^ncols."""
    red, pivots, rk = rref(m)
    field = m.field
    free = [c for c in range(m.ncols) if c not in pivots]
    vecs = []
    for f in free:
        v = [field.zero] * m.ncols
        v[f] = field.one
        for row, pc in zip(red.rows[:rk], pivots):
            v[pc] = -row[f]
        vecs.append(v)
    return Subspace(vecs, m.ncols, field)


def in_span(s: Subspace, v: Sequence) -> tuple | None:
    """Coordinates of ``v`` in the canonical basis of ``s``, or None if v is not in s."""
    if len(v) != s.ambient_dim:
        raise ValueError("vector length does not match ambient dimension")
    v = [s.field(x) for x in v]
    coords = []
    # RREF basis: the coordinate on row i is the entry of v at that row's pivot.
    for row in s.basis.rows:
        pc = next(j for j, x in enumerate(row) if x)
        coords.append(v[pc])
    residual = list(v)
    for c, row in zip(coords, s.basis.rows):
        if c:
            residual = [a - c * b for a, b in zip(residual, row)]
    if any(residual):
        return None
    return tuple(coords)


def span(vectors: Iterable[Sequence], ambient_dim: int, field: Field) -> Subspace:
    return Subspace(vectors, ambient_dim, field)


def intersection(a: Subspace, b: Subspace) -> Subspace:
    _same_ambient(a, b)
    # (A^perp + B^perp)^perp under the standard non-degenerate pairing.
    perp = a.orthogonal().vectors() + b.orthogonal().vectors()
    return nullspace(Matrix._raw(tuple(perp), a.field, a.ambient_dim)) if perp else Subspace.full(a.ambient_dim, a.field)


def extend_to_complement(s: Subspace) -> Subspace:
    """Greedy complement spanned by standard basis vectors, taken in index order."""
    field = s.field
    n = s.ambient_dim
    current = s.vectors()
    chosen = []
    rk = s.dim
    for i in range(n):
        if rk == n:
            break
        e = tuple(field.one if j == i else field.zero for j in range(n))
        trial = Matrix._raw(tuple(current + [e]), field, n)
        if rank(trial) > rk:
            current.append(e)
            chosen.append(e)
            rk += 1
    return Subspace(chosen, n, field)


def is_direct_complement(s: Subspace, c: Subspace) -> bool:
    _same_ambient(s, c)
    if s.dim + c.dim != s.ambient_dim:
        return False
    return rank(Matrix._raw(tuple(s.vectors() + c.vectors()), s.field, s.ambient_dim)) == s.ambient_dim
