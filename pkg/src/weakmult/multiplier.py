"""Linear (weak) multipliers and the nihil-decomposition description of all multipliers.

A linear map T on an n-dimensional algebra is stored as an n x n matrix whose
column j holds the coordinates of T(e_j).  Spaces of maps are subspaces of
K^(n^2) under column-major flattening, so entry (l, j) of T is coordinate
``j*n + l``.

T is a weak multiplier iff e_i T(e_j) = T(e_i) e_j for all basis pairs, and a
multiplier iff additionally T(e_i e_j) = e_i T(e_j).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Sequence

from .algebra import (Algebra, NihilDecomposition, NotAssociative, find_left_identity,
                      find_right_identity, induced_algebra, left_annihilator,
                      left_central_elements, nihil_decomposition, product_span,
                      right_annihilator, right_central_elements)
from .linalg import Matrix, Subspace, extend_to_complement, in_span, nullspace, rref


class Kind(str, enum.Enum):
    WEAK = "weak"
    FULL = "full"
    WEAK_A1 = "weak_restricted_to_a1"
    FULL_A1 = "full_restricted_to_a1"

    @property
    def is_full(self) -> bool:
        return self in (Kind.FULL, Kind.FULL_A1)


@dataclass(frozen=True)
class MultiplierSpace:
    kind: Kind
    space: Subspace
    algebra: Algebra
    a1: Subspace | None = None

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def n(self) -> int:
        return self.algebra.dim

    def maps(self) -> list[Matrix]:
        return [Matrix.unflatten_columns(v, self.n, self.algebra.field) for v in self.space]

    def __contains__(self, T: Matrix) -> bool:
        return T.flatten_columns() in self.space


def _maps_subspace(maps: Sequence[Matrix], n: int, field) -> Subspace:
    return Subspace([T.flatten_columns() for T in maps], n * n, field)


# -- distinguished maps ----------------------------------------------------

def scalar_multiplication(A: Algebra, a) -> Matrix:
    return Matrix.identity(A.dim, A.field).scale(a)


def left_multiplication(A: Algebra, a: Sequence) -> Matrix:
    return A.left_multiplication_matrix(A.element(a))


def right_multiplication(A: Algebra, a: Sequence) -> Matrix:
    return A.right_multiplication_matrix(A.element(a))


# -- direct checks ---------------------------------------------------------

def check_weak(A: Algebra, T: Matrix) -> bool:
    cols = T.columns()
    B = A.basis()
    for i, j in product(range(A.dim), repeat=2):
        if A.multiply(B[i], cols[j]) != A.multiply(cols[i], B[j]):
            return False
    return True


def check_full(A: Algebra, T: Matrix) -> bool:
    if not check_weak(A, T):
        return False
    cols = T.columns()
    B = A.basis()
    for i, j in product(range(A.dim), repeat=2):
        if T.apply(A.c[i][j]) != A.multiply(B[i], cols[j]):
            return False
    return True


# -- linear systems --------------------------------------------------------

def _idx(n: int, l: int, j: int) -> int:
    return j * n + l


def weak_system(A: Algebra) -> Matrix:
    """Rows: sum_l t_lj c[i][l][m] - sum_l t_li c[l][j][m] = 0 over all (i, j, m)."""
    n, c, F = A.dim, A.c, A.field
    rows = []
    for i, j, m in product(range(n), repeat=3):
        row = [F.zero] * (n * n)
        for l in range(n):
            row[_idx(n, l, j)] += c[i][l][m]
            row[_idx(n, l, i)] -= c[l][j][m]
        rows.append(row)
    return Matrix(rows, F, n * n)


def _product_rows(A: Algebra) -> list[list]:
    # T(e_i e_j)_m - (e_i T(e_j))_m = sum_k c[i][j][k] t_mk - sum_l t_lj c[i][l][m]
    n, c, F = A.dim, A.c, A.field
    rows = []
    for i, j, m in product(range(n), repeat=3):
        row = [F.zero] * (n * n)
        for k in range(n):
            row[_idx(n, m, k)] += c[i][j][k]
        for l in range(n):
            row[_idx(n, l, j)] -= c[i][l][m]
        rows.append(row)
    return rows


def full_system(A: Algebra) -> Matrix:
    """Weak rows followed by the rows for T(e_i e_j) = e_i T(e_j)."""
    return Matrix(list(weak_system(A).rows) + _product_rows(A), A.field, A.dim ** 2)


def _image_and_kernel_rows(A: Algebra, nd: NihilDecomposition) -> list[list]:
    """Constraints T(A) in A1 and T(A0) = 0."""
    n, F = A.dim, A.field
    rows = []
    for phi in nd.a1.orthogonal():
        for j in range(n):
            row = [F.zero] * (n * n)
            for l in range(n):
                row[_idx(n, l, j)] = phi[l]
            rows.append(row)
    for a in nd.a0:
        for l in range(n):
            row = [F.zero] * (n * n)
            for j in range(n):
                row[_idx(n, l, j)] = a[j]
            rows.append(row)
    return rows


def _solve(A: Algebra, rows: list, kind: Kind, a1: Subspace | None = None) -> MultiplierSpace:
    n = A.dim
    system = Matrix(rows, A.field, n * n)
    ms = MultiplierSpace(kind, nullspace(system), A, a1)
    check = check_full if kind.is_full else check_weak
    for T in ms.maps():
        if not check(A, T):
            raise RuntimeError(f"solver produced a non-multiplier for {kind.value}: {T!r}")
    return ms


def solve_linear_weak(A: Algebra) -> MultiplierSpace:
    return _solve(A, list(weak_system(A).rows), Kind.WEAK)


def solve_linear_full(A: Algebra) -> MultiplierSpace:
    return _solve(A, list(full_system(A).rows), Kind.FULL)


def solve_restricted_weak(A: Algebra, nd: NihilDecomposition | None = None) -> MultiplierSpace:
    """M'_1(A): weak multipliers with image in A1 (they automatically kill A0)."""
    nd = nd or nihil_decomposition(A)
    rows = list(weak_system(A).rows) + _image_and_kernel_rows(A, nd)
    return _solve(A, rows, Kind.WEAK_A1, nd.a1)


def solve_restricted_full(A: Algebra, nd: NihilDecomposition | None = None) -> MultiplierSpace:
    """M_1(A): multipliers with image in A1."""
    nd = nd or nihil_decomposition(A)
    rows = list(full_system(A).rows) + _image_and_kernel_rows(A, nd)
    return _solve(A, rows, Kind.FULL_A1, nd.a1)


def maps_into(A: Algebra, target: Subspace) -> Subspace:
    """All linear maps A -> target, as a subspace of K^(n^2)."""
    n = A.dim
    vecs = []
    for j in range(n):
        for v in target:
            T = [[A.field.zero] * n for _ in range(n)]
            for l in range(n):
                T[l][j] = v[l]
            vecs.append(Matrix(T, A.field).flatten_columns())
    return Subspace(vecs, n * n, A.field)


def lift_from_subalgebra(nd: NihilDecomposition, R: Matrix) -> Matrix:
    """Phi(R) = mu . R . pi for a map R on A1 written in A1's canonical basis."""
    return nd.embedding_basis @ R @ nd.a1_coordinates()


# -- closure ---------------------------------------------------------------

@dataclass
class ClosureReport:
    kind: Kind
    pairs_checked: int
    identity_member: bool | None
    violations: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and self.identity_member is not False

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "pairs_checked": self.pairs_checked,
            "identity_member": self.identity_member,
            "violations": list(self.violations),
            "ok": self.ok,
        }


def verify_closure(ms: MultiplierSpace) -> ClosureReport:
    """Products TU (multipliers) or Jordan sums TU + UT (weak multipliers) of basis pairs."""
    maps = ms.maps()
    identity_member = None
    violations = []
    if ms.kind == Kind.FULL:
        identity_member = Matrix.identity(ms.n, ms.algebra.field) in ms
        if not identity_member:
            violations.append("identity map is not in the space")
    count = 0
    for a, T in enumerate(maps):
        for b, U in enumerate(maps):
            count += 1
            W = T @ U if ms.kind.is_full else T @ U + U @ T
            if W not in ms:
                op = "TU" if ms.kind.is_full else "TU+UT"
                violations.append(f"{op} for basis pair ({a}, {b}) leaves the space")
    return ClosureReport(ms.kind, count, identity_member, violations)


# -- description of the full (nonlinear) multiplier sets --------------------

@dataclass(frozen=True)
class FreePart:
    """All maps R: A -> codomain (not necessarily linear), optionally vanishing on a subset.

    ``vanishing_on`` is the span of the product set; a map in the free part must
    send every product xy to 0.
    """

    codomain: Subspace
    vanishing_on: Subspace | None = None

    def to_dict(self) -> dict:
        return {
            "codomain": self.codomain.to_strings(),
            "vanishing_on": None if self.vanishing_on is None else self.vanishing_on.to_strings(),
        }


@dataclass
class MultiplierSetDescription:
    nd: NihilDecomposition
    linear_part: MultiplierSpace            # M'_1(A)
    free_part: FreePart                     # (A0)^A
    product_span: Subspace                  # span of A^2
    admissible: Subspace                    # T1 in M'_1 with linearly consistent forced values, as maps
    full_linear_part: MultiplierSpace       # lifts T1 + L of admissible T1, L forced on A^2
    full_free_part: FreePart                # {R : A -> A0 | R(A^2) = 0}
    obstructions: list[str]
    subalgebra_form: dict | None = None

    @property
    def a0(self) -> Subspace:
        return self.nd.a0

    def linear_full_dim(self) -> int:
        """dim LM(A) implied by this description."""
        n = self.nd.a0.ambient_dim
        return self.admissible.dim + self.nd.a0.dim * (n - self.product_span.dim)

    def linear_weak_dim(self) -> int:
        return self.linear_part.dim + self.nd.a0.dim * self.nd.a0.ambient_dim

    def summary(self, labels: Sequence[str]) -> dict:
        def sp(S: Subspace) -> str:
            return _span_str(S, labels)
        weak = f"M'(A) = M'_1(A) [dim {self.linear_part.dim}] (+) ({sp(self.a0)})^A"
        full = (f"M(A) = {{T1 + L}} [dim {self.full_linear_part.dim}] (+) "
                f"{{R in ({sp(self.a0)})^A : R(A^2) = 0}}, A^2 spans {sp(self.product_span)}")
        return {"weak": weak, "full": full}

    def to_dict(self) -> dict:
        d = {
            "a0": self.nd.a0.to_strings(),
            "a1": self.nd.a1.to_strings(),
            "a1_is_subalgebra": self.nd.a1_is_subalgebra,
            "weak": {
                "linear_part": space_to_dict(self.linear_part),
                "free_part": self.free_part.to_dict(),
            },
            "full": {
                "product_span": self.product_span.to_strings(),
                "admissible_dim": self.admissible.dim,
                "linear_part": space_to_dict(self.full_linear_part),
                "free_part": self.full_free_part.to_dict(),
                "obstructions": list(self.obstructions),
            },
            "implied_linear_dims": [self.linear_weak_dim(), self.linear_full_dim()],
        }
        if self.subalgebra_form is not None:
            d["subalgebra_form"] = {
                "m_a1_dim": self.subalgebra_form["m_a1"].dim,
                "m1_dim": self.subalgebra_form["m1"].dim,
                "phi_matches": self.subalgebra_form["phi_matches"],
            }
        return d


def _span_str(S: Subspace, labels: Sequence[str]) -> str:
    if S.dim == 0:
        return "{0}"
    parts = []
    for v in S:
        terms = []
        for coef, lab in zip(v, labels):
            if not coef:
                continue
            s = str(coef).split(" mod ")[0]
            terms.append(lab if s == "1" else f"-{lab}" if s == "-1" else f"{s}{lab}")
        parts.append("K(" + "+".join(terms).replace("+-", "-") + ")" if len(terms) > 1 else "K" + terms[0])
    return " + ".join(parts)


def _defect(A: Algebra, T: Matrix, x: Sequence, y: Sequence) -> tuple:
    """x T(y) - T(x y): the value a free part must take on the product xy."""
    return tuple(p - q for p, q in zip(A.multiply(x, T.apply(y)), T.apply(A.multiply(x, y))))


def describe_multiplier_sets(A: Algebra, nd: NihilDecomposition | None = None) -> MultiplierSetDescription:
    nd = nd or nihil_decomposition(A)
    F, n = A.field, A.dim
    m1 = solve_restricted_weak(A, nd)
    basis_t1 = m1.maps()
    d = len(basis_t1)
    P = product_span(A)
    a0 = nd.a0.vectors()
    a1 = nd.a1.vectors()
    Pv = P.vectors()

    # Unknowns: q_t (coefficients of T1 in M'_1) then lambda_{s,r} with
    # L(P_s) = sum_r lambda_{s,r} a0_r.  Equations: L(x y) = D_{T1}(x, y)
    # for all basis pairs x, y of A1.
    nl = len(Pv) * len(a0)
    nvars = d + nl
    rows = []
    obstructions = []
    for x, y in product(a1, repeat=2):
        kappa = in_span(P, A.multiply(x, y))
        defects = [_defect(A, T, x, y) for T in basis_t1]
        for m in range(n):
            row = [F.zero] * nvars
            for t in range(d):
                row[t] = -defects[t][m]
            for s, ks in enumerate(kappa):
                if ks:
                    for r, av in enumerate(a0):
                        row[d + s * len(a0) + r] += ks * av[m]
            rows.append(row)
    if nvars == 0:
        sol_vectors = []
    elif rows:
        sol_vectors = nullspace(Matrix(rows, F, nvars)).vectors()
    else:
        sol_vectors = Subspace.full(nvars, F).vectors()

    # Lift each solution to T1 + L^, with L^ zero on a fixed complement of span(A^2).
    P_comp = extend_to_complement(P).vectors()
    lifted, admissible_maps = [], []
    for v in sol_vectors:
        T1 = Matrix.zeros(n, n, F)
        for t in range(d):
            if v[t]:
                T1 = T1 + basis_t1[t].scale(v[t])
        images = []
        for s in range(len(Pv)):
            img = [F.zero] * n
            for r, av in enumerate(a0):
                lam = v[d + s * len(a0) + r]
                if lam:
                    img = [a + lam * b for a, b in zip(img, av)]
            images.append(img)
        src = Pv + P_comp
        dst = images + [[F.zero] * n for _ in P_comp]
        if src:
            Lhat = Matrix.from_columns(dst, F) @ _inverse(Matrix.from_columns(src, F))
        else:
            Lhat = Matrix.zeros(n, n, F)
        admissible_maps.append(T1)
        lifted.append(T1 + Lhat)
    admissible = _maps_subspace(admissible_maps, n, F)
    full_linear = MultiplierSpace(Kind.FULL, _maps_subspace(lifted, n, F), A, nd.a1)
    for T in full_linear.maps():
        if not check_full(A, T):
            raise RuntimeError("lifted map is not a multiplier")

    if admissible.dim < d:
        for t, T in enumerate(basis_t1):
            if T.flatten_columns() in admissible:
                continue
            reason = None
            for (ia, x), (ib, y) in product(enumerate(a1), repeat=2):
                if _defect(A, T, x, y) not in nd.a0:
                    reason = f"forced value on A1 basis pair ({ia}, {ib}) lies outside A0"
                    break
            obstructions.append(f"M'_1 basis map {t}: " + (reason or "forced values are not linear in the product"))

    subalgebra_form = None
    if nd.a1_is_subalgebra and nd.a1.dim:
        B = induced_algebra(A, nd.a1)
        m_a1 = solve_linear_full(B)
        m1_full = solve_restricted_full(A, nd)
        phi_space = _maps_subspace([lift_from_subalgebra(nd, R) for R in m_a1.maps()], n, F)
        weak_a1 = solve_linear_weak(B)
        phi_weak = _maps_subspace([lift_from_subalgebra(nd, R) for R in weak_a1.maps()], n, F)
        subalgebra_form = {
            "m_a1": m_a1,
            "m1": m1_full,
            "phi_matches": phi_space == m1_full.space and phi_weak == m1.space,
        }

    return MultiplierSetDescription(
        nd=nd,
        linear_part=m1,
        free_part=FreePart(nd.a0),
        product_span=P,
        admissible=admissible,
        full_linear_part=full_linear,
        full_free_part=FreePart(nd.a0, P),
        obstructions=obstructions,
        subalgebra_form=subalgebra_form,
    )


def _inverse(M: Matrix) -> Matrix:
    n = M.nrows
    F = M.field
    I = Matrix.identity(n, F)
    red, piv, rk = rref(Matrix([list(M.rows[i]) + list(I.rows[i]) for i in range(n)], F))
    if rk < n or piv[-1] >= n:
        raise ZeroDivisionError("matrix is singular")
    return Matrix([r[n:] for r in red.rows], F)


# -- associative algebras with one-sided identities -----------------------

@dataclass
class IdentityMultipliers:
    central: Subspace          # Z_l (or Z_r)
    annihilator: Subspace      # Ann_l (or Ann_r)
    space: MultiplierSpace     # span of l_a (or r_a), a in central
    matches_solver: bool
    dim_matches: bool


def _via_identity(A: Algebra, side: str) -> IdentityMultipliers | None:
    if not A.is_associative():
        raise NotAssociative("one-sided identity route requires an associative algebra")
    finder = find_left_identity if side == "left" else find_right_identity
    if finder(A) is None:
        return None
    Z = left_central_elements(A) if side == "left" else right_central_elements(A)
    Ann = left_annihilator(A) if side == "left" else right_annihilator(A)
    mult = left_multiplication if side == "left" else right_multiplication
    space = MultiplierSpace(Kind.FULL, _maps_subspace([mult(A, a) for a in Z], A.dim, A.field), A)
    solved = solve_linear_full(A)
    return IdentityMultipliers(Z, Ann, space, space.space == solved.space,
                               space.dim == Z.dim - Ann.dim)


def multipliers_via_left_identity(A: Algebra) -> IdentityMultipliers | None:
    """LM(A) as {l_a : a left central}, whose kernel is Ann_l(A)."""
    return _via_identity(A, "left")


def multipliers_via_right_identity(A: Algebra) -> IdentityMultipliers | None:
    return _via_identity(A, "right")


# -- serialization ---------------------------------------------------------

def space_to_dict(ms: MultiplierSpace) -> dict:
    return {
        "kind": ms.kind.value,
        "dimension": ms.dim,
        "basis": [T.to_strings() for T in ms.maps()],
        "a1": None if ms.a1 is None else ms.a1.to_strings(),
    }
