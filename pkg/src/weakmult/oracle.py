"""Brute-force counts of (weak) multipliers over small prime fields.

Nothing here uses row reduction.  Linear maps are counted over all p^(n^2)
matrices; arbitrary set maps A -> A are counted by depth-first enumeration
with early exit.  The counts are compared with what the solver and the
nihil decomposition predict.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .algebra import Algebra, all_elements
from .linalg import Matrix
from .multiplier import describe_multiplier_sets, solve_linear_full, solve_linear_weak

DEFAULT_MAX_ENUMERATION = 2 ** 30


class EnumerationTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleConfig:
    p: int
    mode: str = "linear"                       # "linear" or "setmaps"
    max_enumeration: int = DEFAULT_MAX_ENUMERATION

    def guard(self, n: int) -> None:
        size = self.p ** (n * n) if self.mode == "linear" else self.p ** (n * self.p ** n)
        if size > self.max_enumeration:
            raise EnumerationTooLarge(
                f"{self.mode} enumeration over F_{self.p} in dimension {n} has {size} candidates "
                f"(limit {self.max_enumeration})")


def _prime(A: Algebra) -> int:
    if A.field.is_rational:
        raise ValueError("the oracle needs an algebra over a prime field")
    return A.field.p


def _int_constants(A: Algebra) -> np.ndarray:
    n = A.dim
    c = np.zeros((n, n, n), dtype=np.int64)
    for i, j, k in product(range(n), repeat=3):
        c[i, j, k] = int(A.c[i][j][k])
    return c


# -- linear maps -----------------------------------------------------------

def _column_contributions(A: Algebra, full: bool) -> list[np.ndarray]:
    """For each column slot k, the residual of every identity when column k is v.

    A matrix T satisfies all identities iff the residuals of its columns sum
    to 0 mod p.  Rows are indexed by the p^n candidate vectors v in
    lexicographic order.
    """
    p, n = _prime(A), A.dim
    c = _int_constants(A)
    V = np.array(list(product(range(p), repeat=n)), dtype=np.int64)      # (p^n, n)
    # left[i] = e_i v, right[j] = v e_j, each (p^n, n)
    left = [V @ c[i, :, :] % p for i in range(n)]
    right = [V @ c[:, j, :] % p for j in range(n)]
    contribs = []
    for k in range(n):
        blocks = []
        for i, j in product(range(n), repeat=2):
            w = np.zeros_like(V)
            if j == k:
                w = w + left[i]
            if i == k:
                w = w - right[j]
            blocks.append(w)
        if full:
            for i, j in product(range(n), repeat=2):
                w = V * c[i, j, k]
                if j == k:
                    w = w - left[i]
                blocks.append(w)
        contribs.append(np.concatenate(blocks, axis=1) % p)
    # Identities that no column can disturb carry no information.
    live = np.zeros(contribs[0].shape[1], dtype=bool)
    for R in contribs:
        live |= R.any(axis=0)
    return [R[:, live] for R in contribs]


def _count_zero_sums(contribs: list[np.ndarray], p: int) -> int:
    """Number of tuples (v_0, ..., v_{n-1}) with sum_k contribs[k][v_k] = 0 mod p."""
    width = contribs[0].shape[1]
    if width == 0:
        return int(np.prod([R.shape[0] for R in contribs], dtype=object))
    left = contribs[0]
    for R in contribs[1:-1]:
        left = ((left[:, None, :] + R[None, :, :]) % p).reshape(-1, width)
    right = (-contribs[-1]) % p if len(contribs) > 1 else np.zeros((1, width), dtype=np.int64)
    if len(contribs) == 1:
        left, right = right, left
    lk = np.ascontiguousarray(left.astype(np.uint8)).view(np.dtype((np.void, width))).ravel()
    rk = np.ascontiguousarray(right.astype(np.uint8)).view(np.dtype((np.void, width))).ravel()
    lu, lc = np.unique(lk, return_counts=True)
    ru, rc = np.unique(rk, return_counts=True)
    _, li, ri = np.intersect1d(lu, ru, assume_unique=True, return_indices=True)
    return int(sum(int(a) * int(b) for a, b in zip(lc[li], rc[ri])))


def count_linear_weak(A: Algebra, max_enumeration: int = DEFAULT_MAX_ENUMERATION) -> int:
    p = _prime(A)
    OracleConfig(p, "linear", max_enumeration).guard(A.dim)
    return _count_zero_sums(_column_contributions(A, full=False), p)


def count_linear_full(A: Algebra, max_enumeration: int = DEFAULT_MAX_ENUMERATION) -> int:
    p = _prime(A)
    OracleConfig(p, "linear", max_enumeration).guard(A.dim)
    return _count_zero_sums(_column_contributions(A, full=True), p)


# -- arbitrary set maps ----------------------------------------------------

def _product_table(A: Algebra) -> tuple[list[tuple], list[list[int]]]:
    elems = all_elements(A)
    index = {x: i for i, x in enumerate(elems)}
    mul = [[index[A.multiply(x, y)] for y in elems] for x in elems]
    return elems, mul


def _count_setmaps(A: Algebra, full: bool, max_enumeration: int) -> int:
    p = _prime(A)
    OracleConfig(p, "setmaps", max_enumeration).guard(A.dim)
    elems, mul = _product_table(A)
    N = len(elems)
    row_const = [len(set(mul[x])) == 1 for x in range(N)]
    col_const = [len({mul[v][y] for v in range(N)}) == 1 for y in range(N)]

    # A constraint is (deps, check) where check(T) reads T only at deps.
    constraints = []
    for x, y in product(range(N), repeat=2):
        deps = set()
        if not row_const[x]:
            deps.add(y)
        if not col_const[y]:
            deps.add(x)
        if deps:
            constraints.append((deps, ("weak", x, y)))
        elif mul[x][0] != mul[0][y]:
            return 0
        if full:
            deps = {mul[x][y]}
            if not row_const[x]:
                deps.add(y)
            constraints.append((deps, ("full", x, y)))

    involved = sorted(set().union(*(d for d, _ in constraints))) if constraints else []
    position = {x: i for i, x in enumerate(involved)}
    # Check each constraint as soon as its last dependency is assigned.
    due = [[] for _ in involved]
    for deps, con in constraints:
        due[max(position[d] for d in deps)].append(con)

    T = [0] * N
    free = N - len(involved)

    def ok(con):
        kind, x, y = con
        if kind == "weak":
            return mul[x][T[y]] == mul[T[x]][y]
        return T[mul[x][y]] == mul[x][T[y]]

    def search(level: int) -> int:
        if level == len(involved):
            return 1
        x = involved[level]
        total = 0
        checks = due[level]
        for v in range(N):
            T[x] = v
            if all(ok(con) for con in checks):
                total += search(level + 1)
        return total

    return search(0) * N ** free


def count_setmap_weak(A: Algebra, max_enumeration: int = DEFAULT_MAX_ENUMERATION) -> int:
    """Number of maps T: A -> A with x T(y) = T(x) y for all x, y."""
    return _count_setmaps(A, False, max_enumeration)


def count_setmap_full(A: Algebra, max_enumeration: int = DEFAULT_MAX_ENUMERATION) -> int:
    """Number of maps T: A -> A with x T(y) = T(xy) = T(x) y for all x, y."""
    return _count_setmaps(A, True, max_enumeration)


# -- predictions -----------------------------------------------------------

def predicted_setmap_weak(A: Algebra) -> int:
    """|M'_1(A)| * |A0|^|A|."""
    p = _prime(A)
    d = describe_multiplier_sets(A)
    return p ** d.linear_part.dim * (p ** d.a0.dim) ** (p ** A.dim)


def _span_elements(A: Algebra, vectors: list[tuple]) -> list[tuple]:
    F = A.field
    out = []
    for coeffs in product(F.elements(), repeat=len(vectors)):
        x = A.zero()
        for c, v in zip(coeffs, vectors):
            if c:
                x = tuple(a + c * b for a, b in zip(x, v))
        out.append(x)
    return out


def predicted_setmap_full(A: Algebra) -> int:
    """Sum over T1 in M'_1(A) of |A0|^(|A| - |A^2|), counting T1 only when the
    forced values R(x1 y1) = x1 T1(y1) - T1(x1 y1) are well defined and lie in A0."""
    p = _prime(A)
    d = describe_multiplier_sets(A)
    a1_elems = _span_elements(A, d.nd.a1.vectors())
    products = {A.multiply(x, y) for x in a1_elems for y in a1_elems}
    free_part = (p ** d.a0.dim) ** (p ** A.dim - len(products))
    total = 0
    for T1 in _span_maps(A, d.linear_part.maps()):
        forced: dict[tuple, tuple] = {}
        good = True
        for x, y in product(a1_elems, repeat=2):
            xy = A.multiply(x, y)
            val = tuple(a - b for a, b in zip(A.multiply(x, T1.apply(y)), T1.apply(xy)))
            if forced.setdefault(xy, val) != val or val not in d.a0:
                good = False
                break
        if good:
            total += free_part
    return total


def _span_maps(A: Algebra, basis: list[Matrix]):
    for coeffs in product(A.field.elements(), repeat=len(basis)):
        T = Matrix.zeros(A.dim, A.dim, A.field)
        for c, B in zip(coeffs, basis):
            if c:
                T = T + B.scale(c)
        yield T


# -- reports ---------------------------------------------------------------

def linear_report(A: Algebra, max_enumeration: int = DEFAULT_MAX_ENUMERATION) -> dict:
    p = _prime(A)
    count = {"weak": count_linear_weak(A, max_enumeration), "full": count_linear_full(A, max_enumeration)}
    predicted = {"weak": p ** solve_linear_weak(A).dim, "full": p ** solve_linear_full(A).dim}
    return {"p": p, "mode": "linear", "count": count, "predicted": predicted, "match": count == predicted}


def setmap_report(A: Algebra, max_enumeration: int = DEFAULT_MAX_ENUMERATION) -> dict:
    p = _prime(A)
    count = {"weak": count_setmap_weak(A, max_enumeration), "full": count_setmap_full(A, max_enumeration)}
    predicted = {"weak": predicted_setmap_weak(A), "full": predicted_setmap_full(A)}
    return {"p": p, "mode": "setmaps", "count": count, "predicted": predicted, "match": count == predicted}


def characteristic_discrepancies(instances, primes=(5, 7)) -> list[dict]:
    """Catalog instances whose multiplier dimensions over F_p differ from those over Q."""
    from .catalog import catalog_get, instance_label
    from .field import Field
    found = []
    for name, params in instances:
        A = catalog_get(name, params)
        q_dims = (solve_linear_weak(A).dim, solve_linear_full(A).dim)
        for p in primes:
            Ap = catalog_get(name, params, Field.prime(p))
            p_dims = (solve_linear_weak(Ap).dim, solve_linear_full(Ap).dim)
            if p_dims != q_dims:
                found.append({"entry": instance_label(name, params), "p": p,
                              "rational": list(q_dims), "prime": list(p_dims)})
    return found
