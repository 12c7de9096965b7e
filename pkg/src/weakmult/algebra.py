"""Finite-dimensional algebras given by structure constants.

``c[i][j][k]`` is the coefficient of ``e_k`` in ``e_i e_j``.  Elements are
plain coordinate tuples.  Nothing here assumes associativity unless the
function says so.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Sequence

from .field import QQ, Field, Fp
from .linalg import (Matrix, Subspace, extend_to_complement, in_span, intersection,
                     is_direct_complement, nullspace, rank, rref)


class NotAssociative(ValueError):
    pass


class NotZeropotent(ValueError):
    pass


class WrongDimension(ValueError):
    pass


class NotAComplement(ValueError):
    pass


DEFAULT_LABELS = {1: ["e"], 2: ["e", "f"], 3: ["e", "f", "g"]}


class Algebra:
    __slots__ = ("dim", "labels", "c", "field")

    def __init__(self, table: Sequence, field: Field = QQ, labels: Sequence[str] | None = None):
        """``table[i][j]`` is the coordinate vector of ``e_i e_j``."""
        n = len(table)
        c = tuple(tuple(tuple(field(x) for x in table[i][j]) for j in range(n)) for i in range(n))
        for i in range(n):
            if len(table[i]) != n or any(len(c[i][j]) != n for j in range(n)):
                raise ValueError(f"structure constants must have shape {n}x{n}x{n}")
        if labels is None:
            labels = DEFAULT_LABELS.get(n, [f"e{i + 1}" for i in range(n)])
        if len(labels) != n:
            raise ValueError("one label per basis vector is required")
        self.dim = n
        self.labels = tuple(labels)
        self.c = c
        self.field = field

    def basis_vector(self, i: int) -> tuple:
        z, o = self.field.zero, self.field.one
        return tuple(o if k == i else z for k in range(self.dim))

    def basis(self) -> list[tuple]:
        return [self.basis_vector(i) for i in range(self.dim)]

    def zero(self) -> tuple:
        return (self.field.zero,) * self.dim

    def element(self, coords: Sequence) -> tuple:
        if len(coords) != self.dim:
            raise WrongDimension(f"expected {self.dim} coordinates, got {len(coords)}")
        return tuple(self.field(x) for x in coords)

    def multiply(self, x: Sequence, y: Sequence) -> tuple:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise WrongDimension(f"elements must have {n} coordinates")
        out = [self.field.zero] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                s = x[i] * y[j]
                for k, ck in enumerate(self.c[i][j]):
                    if ck:
                        out[k] = out[k] + s * ck
        return tuple(out)

    def table(self) -> list[list[tuple]]:
        return [[self.c[i][j] for j in range(self.dim)] for i in range(self.dim)]

    def opposite(self) -> Algebra:
        n = self.dim
        return Algebra([[self.c[j][i] for j in range(n)] for i in range(n)], self.field, self.labels)

    def over(self, field: Field) -> Algebra:
        """Rational structure constants reduced into another field."""
        return Algebra([[[field(x) for x in self.c[i][j]] for j in range(self.dim)]
                        for i in range(self.dim)], field, self.labels)

    def left_multiplication_matrix(self, a: Sequence) -> Matrix:
        """Matrix of x -> a x; column j is a e_j."""
        return Matrix.from_columns([self.multiply(a, e) for e in self.basis()], self.field)

    def right_multiplication_matrix(self, a: Sequence) -> Matrix:
        return Matrix.from_columns([self.multiply(e, a) for e in self.basis()], self.field)

    def is_associative(self) -> bool:
        B = self.basis()
        for x, y, z in product(B, repeat=3):
            if self.multiply(self.multiply(x, y), z) != self.multiply(x, self.multiply(y, z)):
                return False
        return True

    def is_commutative(self) -> bool:
        return all(self.c[i][j] == self.c[j][i] for i in range(self.dim) for j in range(self.dim))

    def is_zeropotent(self) -> bool:
        # Basis check suffices: x^2 = 0 for all x iff e_i e_i = 0 and e_i e_j = -e_j e_i.
        n = self.dim
        for i in range(n):
            if any(self.c[i][i]):
                return False
            for j in range(i + 1, n):
                if any(a + b for a, b in zip(self.c[i][j], self.c[j][i])):
                    return False
        return True

    def format_element(self, x: Sequence) -> str:
        terms = []
        for coef, lab in zip(x, self.labels):
            if not coef:
                continue
            s = str(coef.value if isinstance(coef, Fp) else coef)
            if s == "1":
                s = ""
            elif s == "-1":
                s = "-"
            elif "/" in s:
                s = f"({s})"
            terms.append(s + lab)
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.field == other.field and self.c == other.c

    def __hash__(self):
        return hash((self.field, self.c))

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field})"


def multiply(A: Algebra, x: Sequence, y: Sequence) -> tuple:
    return A.multiply(x, y)


def opposite(A: Algebra) -> Algebra:
    return A.opposite()


# -- zeropotent structural matrix ------------------------------------------

def from_structural_matrix(S: Sequence[Sequence], field: Field = QQ, labels=None) -> Algebra:
    """Expand a 3x3 structural matrix (rows: coords of fg, ge, ef) into a zeropotent algebra."""
    if len(S) != 3 or any(len(r) != 3 for r in S):
        raise WrongDimension("structural matrix must be 3x3")
    gamma, beta, alpha = ([field(x) for x in row] for row in S)
    zero = [field.zero] * 3
    neg = lambda v: [-x for x in v]  # noqa: E731
    table = [
        [zero, alpha, neg(beta)],
        [neg(alpha), zero, gamma],
        [beta, neg(gamma), zero],
    ]
    return Algebra(table, field, labels)


def structural_matrix(A: Algebra) -> tuple[Matrix, int]:
    if A.dim != 3:
        raise WrongDimension("structural matrices are defined for dimension 3 only")
    if not A.is_zeropotent():
        raise NotZeropotent("algebra is not zeropotent")
    m = Matrix([A.c[1][2], A.c[2][0], A.c[0][1]], A.field)
    return m, rank(m)


# -- annihilators and friends ---------------------------------------------

def _kernel_of_linear_condition(A: Algebra, rows: list[list]) -> Subspace:
    if not rows:
        return Subspace.full(A.dim, A.field)
    return nullspace(Matrix(rows, A.field))


def left_annihilator(A: Algebra) -> Subspace:
    # a e_j = sum_i a_i c[i][j] = 0 for every j.
    n = A.dim
    rows = [[A.c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    return _kernel_of_linear_condition(A, rows)


def right_annihilator(A: Algebra) -> Subspace:
    n = A.dim
    rows = [[A.c[j][i][k] for i in range(n)] for j in range(n) for k in range(n)]
    return _kernel_of_linear_condition(A, rows)


def two_sided_annihilator(A: Algebra) -> Subspace:
    return intersection(left_annihilator(A), right_annihilator(A))


def product_span(A: Algebra) -> Subspace:
    n = A.dim
    return Subspace([A.c[i][j] for i in range(n) for j in range(n)], n, A.field)


def product_set(A: Algebra) -> set[tuple]:
    """The literal set {xy : x, y in A}; only for algebras over a prime field."""
    elems = all_elements(A)
    return {A.multiply(x, y) for x in elems for y in elems}


def all_elements(A: Algebra) -> list[tuple]:
    if A.field.is_rational:
        raise ValueError("element enumeration requires a finite field")
    F = A.field.elements()
    return [tuple(v) for v in product(F, repeat=A.dim)]


def is_subalgebra(A: Algebra, S: Subspace) -> bool:
    vecs = S.vectors()
    return all(A.multiply(x, y) in S for x in vecs for y in vecs)


def induced_algebra(A: Algebra, S: Subspace) -> Algebra:
    """Structure constants of a subalgebra ``S`` in its canonical basis."""
    if not is_subalgebra(A, S):
        raise ValueError("subspace is not closed under multiplication")
    vecs = S.vectors()
    table = [[list(in_span(S, A.multiply(x, y))) for y in vecs] for x in vecs]
    return Algebra(table, A.field, [A.format_element(v) for v in vecs])


@dataclass(frozen=True)
class NihilDecomposition:
    a0: Subspace
    a1: Subspace
    a1_is_subalgebra: bool
    projection: Matrix  # onto a1 along a0, column convention

    @property
    def embedding_basis(self) -> Matrix:
        """n x d matrix whose columns are the canonical basis of a1."""
        return Matrix.from_columns(self.a1.vectors(), self.a1.field, self.a1.ambient_dim)

    def a1_coordinates(self) -> Matrix:
        """d x n matrix sending x to the a1-coordinates of its a1 component."""
        n = self.a1.ambient_dim
        cols = [in_span(self.a1, self.projection.column(j)) for j in range(n)]
        if not self.a1.dim:
            return Matrix.zeros(0, n, self.a1.field)
        return Matrix.from_columns(cols, self.a1.field)


def projection_along(a1: Subspace, a0: Subspace) -> Matrix:
    """Projection onto a1 along a0 (they must be complementary)."""
    n = a1.ambient_dim
    F = a1.field
    B = a1.vectors() + a0.vectors()
    if not B:
        return Matrix.zeros(0, 0, F)
    basis = Matrix.from_columns(B, F)
    # Solve basis @ coeffs = e_j for each j by row-reducing [basis | I].
    aug = Matrix([list(basis.rows[i]) + list(Matrix.identity(n, F).rows[i]) for i in range(n)], F)
    red, _, _ = rref(aug)
    inv = Matrix([r[n:] for r in red.rows], F)
    keep = Matrix([inv.rows[i] if i < a1.dim else (F.zero,) * n for i in range(n)], F)
    return basis @ keep


def nihil_decomposition(A: Algebra, a1_override: Subspace | None = None) -> NihilDecomposition:
    a0 = two_sided_annihilator(A)
    if a1_override is None:
        a1 = extend_to_complement(a0)
    else:
        if a1_override.ambient_dim != A.dim or not is_direct_complement(a0, a1_override):
            raise NotAComplement("the given A1 is not a direct complement of the annihilator A0")
        a1 = a1_override
    if A.dim == 0:
        proj = Matrix.zeros(0, 0, A.field)
    else:
        proj = projection_along(a1, a0)
    return NihilDecomposition(a0, a1, is_subalgebra(A, a1), proj)


# -- identities and central elements ---------------------------------------

def _solve_affine(A: Algebra, rows: list[list], rhs: list) -> tuple | None:
    n = A.dim
    aug = Matrix([list(r) + [b] for r, b in zip(rows, rhs)], A.field, n + 1)
    red, pivots, rk = rref(aug)
    if n in pivots:
        return None
    x = [A.field.zero] * n
    for row, pc in zip(red.rows[:rk], pivots):
        x[pc] = row[n]
    return tuple(x)


def find_left_identity(A: Algebra) -> tuple | None:
    """Some u with u e_j = e_j for all j (canonical solution: free variables zero)."""
    n = A.dim
    rows, rhs = [], []
    for j in range(n):
        for k in range(n):
            rows.append([A.c[i][j][k] for i in range(n)])
            rhs.append(A.field.one if j == k else A.field.zero)
    return _solve_affine(A, rows, rhs)


def find_right_identity(A: Algebra) -> tuple | None:
    n = A.dim
    rows, rhs = [], []
    for j in range(n):
        for k in range(n):
            rows.append([A.c[j][i][k] for i in range(n)])
            rhs.append(A.field.one if j == k else A.field.zero)
    return _solve_affine(A, rows, rhs)


def find_identity(A: Algebra) -> tuple | None:
    rows, rhs = [], []
    n = A.dim
    for j in range(n):
        for k in range(n):
            rows.append([A.c[i][j][k] for i in range(n)])
            rhs.append(A.field.one if j == k else A.field.zero)
            rows.append([A.c[j][i][k] for i in range(n)])
            rhs.append(A.field.one if j == k else A.field.zero)
    return _solve_affine(A, rows, rhs)


def _require_associative(A: Algebra):
    if not A.is_associative():
        raise NotAssociative("central elements are only defined here for associative algebras")


def left_central_elements(A: Algebra) -> Subspace:
    """Z_l(A) = {a : x a y = a x y for all x, y}."""
    _require_associative(A)
    B = A.basis()
    rows = []
    for x, y in product(B, repeat=2):
        # a -> x (a y) - a (x y) is linear in a; record its matrix rows.
        cols = [tuple(p - q for p, q in zip(A.multiply(x, A.multiply(e, y)), A.multiply(e, A.multiply(x, y))))
                for e in B]
        rows.extend(list(r) for r in zip(*cols))
    return _kernel_of_linear_condition(A, rows)


def right_central_elements(A: Algebra) -> Subspace:
    """Z_r(A) = {a : x a y = x y a for all x, y}."""
    _require_associative(A)
    B = A.basis()
    rows = []
    for x, y in product(B, repeat=2):
        cols = [tuple(p - q for p, q in zip(A.multiply(A.multiply(x, e), y), A.multiply(A.multiply(x, y), e)))
                for e in B]
        rows.extend(list(r) for r in zip(*cols))
    return _kernel_of_linear_condition(A, rows)


def central_elements(A: Algebra) -> Subspace:
    _require_associative(A)
    B = A.basis()
    rows = []
    for x in B:
        cols = [tuple(p - q for p, q in zip(A.multiply(e, x), A.multiply(x, e))) for e in B]
        rows.extend(list(r) for r in zip(*cols))
    return _kernel_of_linear_condition(A, rows)


# -- file format -----------------------------------------------------------

def algebra_to_dict(A: Algebra) -> dict:
    return {
        "field": str(A.field),
        "dim": A.dim,
        "basis": list(A.labels),
        "table": [[[str(x) for x in A.c[i][j]] for j in range(A.dim)] for i in range(A.dim)],
    }


def algebra_from_dict(data: dict, field: Field | None = None, allow_char_2: bool = False) -> Algebra:
    """Build an algebra from the JSON file format.

    ``field`` overrides the file's own field entry.  Entries may be integers
    or exact strings such as ``"-3/2"``.
    """
    if field is None:
        field = Field.parse(data.get("field", "rational"), allow_char_2=allow_char_2)
    labels = data.get("basis")
    if "zeropotent" in data:
        S = [[_scalar(field, x) for x in row] for row in data["zeropotent"]]
        return from_structural_matrix(S, field, labels)
    if "table" not in data:
        raise ValueError("algebra file needs a 'table' or 'zeropotent' entry")
    table = data["table"]
    n = data.get("dim", len(table))
    if len(table) != n:
        raise ValueError(f"table has {len(table)} rows but dim is {n}")
    return Algebra([[[_scalar(field, x) for x in cell] for cell in row] for row in table], field, labels)


def _scalar(field: Field, x):
    if isinstance(x, str) and not field.is_rational and "mod" not in x:
        from fractions import Fraction
        return field(Fraction(x))
    return field(x)


def load_algebra(path: str | Path, field: Field | None = None, allow_char_2: bool = False) -> Algebra:
    with open(path, encoding="utf-8") as fh:
        return algebra_from_dict(json.load(fh), field, allow_char_2)


def save_algebra(A: Algebra, path: str | Path) -> None:
    Path(path).write_text(json.dumps(algebra_to_dict(A), indent=2) + "\n", encoding="utf-8")
