import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weakmult import catalog
from weakmult.algebra import (NotAssociative, find_identity, from_structural_matrix,
                              left_annihilator, left_central_elements, nihil_decomposition,
                              opposite, right_annihilator, structural_matrix, two_sided_annihilator)
from weakmult.catalog import pattern_space
from weakmult.field import QQ
from weakmult.linalg import Matrix, Subspace, rank
from weakmult.multiplier import (Kind, check_full, check_weak, describe_multiplier_sets,
                                 full_system, left_multiplication, lift_from_subalgebra, maps_into,
                                 multipliers_via_left_identity, multipliers_via_right_identity,
                                 right_multiplication, scalar_multiplication, solve_linear_full,
                                 solve_linear_weak, solve_restricted_full, solve_restricted_weak,
                                 verify_closure, weak_system)

from conftest import F7


def get(name, field=QQ, **params):
    return catalog.catalog_get(name, params, field)


def I3(field=QQ):
    return Matrix.identity(3, field)


def in_pattern(ms, pattern):
    pat = pattern_space(pattern, ms.algebra.field)
    return ms.space <= pat and pat.dim == ms.dim


def test_basic_maps():
    A = get("C3")
    assert scalar_multiplication(A, 5) == I3().scale(5)
    assert left_multiplication(A, (0, 0, 1)) == I3()
    assert left_multiplication(get("C0"), (1, 0, 0)).is_zero()
    assert right_multiplication(get("C4"), (0, 0, 1)) == I3()


def test_system_shapes_and_ranks():
    assert weak_system(get("C0")).is_zero() and full_system(get("C0")).is_zero()
    assert weak_system(get("C2")).shape == (27, 9)
    assert rank(weak_system(get("C2"))) == 8
    assert rank(weak_system(get("S1"))) == 4
    assert solve_linear_full(get("C1")).dim == 3
    assert solve_linear_full(get("W1")).dim == 5


def test_solver_examples():
    C2 = get("C2")
    weak, full = solve_linear_weak(C2), solve_linear_full(C2)
    assert weak.space == full.space == Subspace([I3().flatten_columns()], 9, QQ)
    S1 = get("S1")
    assert in_pattern(solve_linear_weak(S1), [["a", "0", "0"], ["p", "a", "0"], ["s", "t", "u"]])
    assert in_pattern(solve_linear_full(S1), [["a", "0", "0"], ["p", "a", "0"], ["s", "p", "a"]])
    W9 = get("W9")
    pat = [["a", "b", "0"], ["0", "a", "0"], ["0", "0", "a"]]
    assert in_pattern(solve_linear_weak(W9), pat) and in_pattern(solve_linear_full(W9), pat)


def test_restricted_examples():
    m = solve_restricted_weak(get("C1"))
    assert in_pattern(m, [["0", "0", "0"], ["0", "q", "0"], ["0", "0", "q"]])
    m = solve_restricted_weak(get("Z2"))
    assert in_pattern(m, [["q", "0", "-q"], ["0", "q", "0"], ["0", "0", "0"]])
    assert solve_restricted_weak(get("C0")).dim == 0


def test_check_examples():
    for name in ("C1", "W4", "Z5"):
        assert check_weak(get(name), I3())
    assert check_full(get("W2"), I3().scale(Fraction(7, 3)))
    b = Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]], QQ)
    assert not check_weak(get("C2"), b)


def test_closure_examples():
    rep = verify_closure(solve_linear_full(get("S1")))
    assert rep.ok and rep.identity_member and rep.pairs_checked == 9
    rep = verify_closure(solve_linear_weak(get("W4")))
    assert rep.ok and rep.pairs_checked == 49
    assert verify_closure(solve_linear_full(get("Z5"))).ok


def test_closure_detects_violation():
    A = get("C0")
    ms = solve_linear_weak(A)
    bad = type(ms)(Kind.FULL, Subspace([Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]], QQ).flatten_columns()], 9, QQ), A)
    rep = verify_closure(bad)
    assert not rep.ok and rep.identity_member is False


def test_describe_c1():
    d = describe_multiplier_sets(get("C1"))
    assert d.linear_part.dim == 1
    assert d.free_part.codomain == Subspace([[1, 0, 0]], 3, QQ)
    assert d.product_span == Subspace([[1, 0, 0]], 3, QQ)
    assert d.full_free_part.vanishing_on == d.product_span
    assert d.full_linear_part.space <= solve_linear_full(get("C1")).space
    assert d.linear_full_dim() == 3 and d.linear_weak_dim() == 4
    assert not d.obstructions


def test_describe_s3_subalgebra_form():
    A = get("S3")
    d = describe_multiplier_sets(A)
    assert d.nd.a1_is_subalgebra
    form = d.subalgebra_form
    assert form["phi_matches"] and form["m_a1"].dim == 2 and form["m1"].dim == 2
    assert d.full_free_part.vanishing_on == Subspace([[1, 0, 0], [0, 1, 0]], 3, QQ)
    assert d.to_dict()["subalgebra_form"]["phi_matches"] is True


def test_describe_zero_algebra():
    d = describe_multiplier_sets(get("C0"))
    assert d.linear_part.dim == 0
    assert d.free_part.codomain == Subspace.full(3, QQ)
    assert d.full_free_part.vanishing_on.dim == 0
    assert d.linear_full_dim() == d.linear_weak_dim() == 9


def test_describe_w3_zero_obstruction():
    d = describe_multiplier_sets(get("W3", k=0))
    assert d.linear_part.dim > d.admissible.dim
    assert d.obstructions


def test_phi_lift_on_s3():
    A = get("S3")
    nd = nihil_decomposition(A)
    R = Matrix([[2, 0], [0, 5]], QQ)
    T = lift_from_subalgebra(nd, R)
    assert T == Matrix([[2, 0, 0], [0, 5, 0], [0, 0, 0]], QQ)
    assert check_full(A, T)


def test_via_identity_examples():
    r = multipliers_via_left_identity(get("C3"))
    assert (r.central.dim, r.annihilator.dim, r.space.dim) == (3, 2, 1)
    assert r.matches_solver and r.dim_matches
    r = multipliers_via_left_identity(get("U1"))
    assert r.space.dim == 1 and r.matches_solver
    r = multipliers_via_left_identity(get("U2"))
    assert r.space.dim == 3 and r.matches_solver
    assert multipliers_via_left_identity(get("C4")) is None
    assert multipliers_via_right_identity(get("C4")).matches_solver
    with pytest.raises(NotAssociative):
        multipliers_via_left_identity(get("Z3"))


# -- invariants over the whole catalog ------------------------------------

INSTANCES = catalog.instances()
IDS = [catalog.instance_label(n, p) for n, p in INSTANCES]


@pytest.mark.parametrize("name,params", INSTANCES, ids=IDS)
def test_structural_invariants(name, params, field):
    A = catalog.catalog_get(name, params, field)
    weak, full = solve_linear_weak(A), solve_linear_full(A)
    assert full.space <= weak.space
    assert I3(field) in full
    assert all(check_weak(A, T) for T in weak.maps())
    assert all(check_full(A, T) for T in full.maps())
    assert verify_closure(weak).ok and verify_closure(full).ok
    op = opposite(A)
    assert solve_linear_weak(op).space == weak.space
    assert solve_linear_full(op).space == full.space
    for T in weak.maps():
        for sub in (left_annihilator(A), right_annihilator(A), two_sided_annihilator(A)):
            assert all(T.apply(v) in sub for v in sub)


@pytest.mark.parametrize("name,params", INSTANCES, ids=IDS)
def test_nihil_splitting(name, params, field):
    A = catalog.catalog_get(name, params, field)
    nd = nihil_decomposition(A)
    weak = solve_linear_weak(A)
    m1 = solve_restricted_weak(A, nd)
    into_a0 = maps_into(A, nd.a0)
    assert m1.space <= weak.space and into_a0 <= weak.space
    assert (m1.space & into_a0).dim == 0
    assert (m1.space + into_a0) == weak.space
    assert weak.dim == m1.dim + A.dim * nd.a0.dim
    for T in m1.maps():
        assert all(x in nd.a1 for x in T.columns())
        assert all(not any(T.apply(v)) for v in nd.a0)
    d = describe_multiplier_sets(A, nd)
    assert d.linear_weak_dim() == weak.dim
    assert d.linear_full_dim() == solve_linear_full(A).dim
    assert solve_restricted_full(A, nd).space <= m1.space
    if d.subalgebra_form is not None:
        assert d.subalgebra_form["phi_matches"]


def test_restricted_dim_independent_of_complement():
    A = get("S1")
    base = solve_restricted_weak(A).dim
    other = nihil_decomposition(A, Subspace([[1, 0, 1], [0, 1, 3]], 3, QQ))
    assert solve_restricted_weak(A, other).dim == base
    assert describe_multiplier_sets(A, other).linear_full_dim() == solve_linear_full(A).dim


ASSOCIATIVE = [(n, p) for n, p in INSTANCES if catalog.catalog_get(n, p).is_associative()]


@pytest.mark.parametrize("name,params", ASSOCIATIVE, ids=[catalog.instance_label(*x) for x in ASSOCIATIVE])
def test_associative_specializations(name, params):
    A = catalog.catalog_get(name, params)
    if two_sided_annihilator(A).dim == 0:
        assert solve_linear_weak(A).space == solve_linear_full(A).space
    Zl = left_central_elements(A)
    rng = random.Random(name)
    samples = [A.basis_vector(i) for i in range(3)] + [
        tuple(Fraction(rng.randint(-3, 3)) for _ in range(3)) for _ in range(4)]
    samples += list(Zl)
    for a in samples:
        la = left_multiplication(A, a)
        assert check_weak(A, la) == check_full(A, la) == (a in Zl)
    for side, fn in (("left", multipliers_via_left_identity), ("right", multipliers_via_right_identity)):
        r = fn(A)
        if r is not None:
            assert r.matches_solver and r.dim_matches, side


def test_prop_5_1_witnesses():
    for name in ("C2", "W7", "W8", "W9", "W10"):
        A = get(name)
        assert two_sided_annihilator(A).dim == 0
        assert solve_linear_weak(A).space == solve_linear_full(A).space


@pytest.mark.parametrize("name", ["U0", "U1", "U2", "U3", "U4", "C3"])
def test_left_identity_dimension_formula(name):
    A = get(name)
    r = multipliers_via_left_identity(A)
    assert solve_linear_full(A).dim == r.central.dim - r.annihilator.dim


def test_unital_has_scalars_via_identity():
    A = get("U3")
    assert find_identity(A) is not None
    assert multipliers_via_left_identity(A).space.space == solve_linear_full(A).space


def _random_rank2(seed, count, p=7):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        m = [[rng.randrange(p) for _ in range(3)] for _ in range(3)]
        A = from_structural_matrix(m, F7)
        if structural_matrix(A)[1] >= 2:
            out.append(A)
    return out


def test_rank_two_zeropotent_sweep():
    scalars = Subspace([I3(F7).flatten_columns()], 9, F7)
    for A in _random_rank2(20261015, 100):
        assert solve_linear_weak(A).space == scalars
        assert solve_linear_full(A).space == scalars


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3))
def test_zeropotent_rank_dichotomy(m):
    A = from_structural_matrix(m)
    rk = structural_matrix(A)[1]
    weak = solve_linear_weak(A)
    if rk >= 2:
        assert weak.dim == 1
    else:
        assert weak.dim > 1
