"""JSON-ready analysis reports (all exact scalars become strings)."""

from __future__ import annotations

from .algebra import (Algebra, NotAssociative, algebra_to_dict, central_elements,
                      find_identity, find_left_identity, find_right_identity,
                      left_annihilator, left_central_elements, nihil_decomposition,
                      product_span, right_annihilator, right_central_elements,
                      structural_matrix, two_sided_annihilator)
from .linalg import Subspace
from .multiplier import (describe_multiplier_sets, multipliers_via_left_identity,
                         multipliers_via_right_identity, solve_linear_full, solve_linear_weak,
                         solve_restricted_full, solve_restricted_weak, space_to_dict, verify_closure)


def _vec(v):
    return None if v is None else [str(x) for x in v]


def analyze(A: Algebra, a1: Subspace | None = None) -> dict:
    nd = nihil_decomposition(A, a1)
    weak = solve_linear_weak(A)
    full = solve_linear_full(A)
    restricted = solve_restricted_weak(A, nd)
    restricted_full = solve_restricted_full(A, nd)
    desc = describe_multiplier_sets(A, nd)
    associative = A.is_associative()
    zeropotent = A.is_zeropotent()
    lid, rid, uid = find_left_identity(A), find_right_identity(A), find_identity(A)

    summary = [
        f"dim {A.dim} over {A.field}; associative={associative}, zeropotent={zeropotent}",
        f"A0 dim {nd.a0.dim}, A1 dim {nd.a1.dim} (subalgebra: {nd.a1_is_subalgebra})",
        f"LM'(A) dim {weak.dim}, LM(A) dim {full.dim}, M'_1(A) dim {restricted.dim}",
    ]
    if full.dim == A.dim ** 2 and weak.dim == A.dim ** 2:
        summary.append("every linear map is a multiplier")
    labels = A.labels
    summary.extend(desc.summary(labels).values())

    structural = None
    if A.dim == 3 and zeropotent:
        S, rk = structural_matrix(A)
        scalars_only = weak.dim == 1 and full.dim == 1
        structural = {"matrix": S.to_strings(), "rank": rk, "scalars_only": scalars_only}
        summary.append(f"structural matrix rank {rk}" + (", scalars only" if scalars_only else ""))

    central = None
    identity_route = None
    if associative:
        central = {
            "left": left_central_elements(A).to_strings(),
            "right": right_central_elements(A).to_strings(),
            "center": central_elements(A).to_strings(),
        }
        routes = {}
        for side, fn in (("left", multipliers_via_left_identity), ("right", multipliers_via_right_identity)):
            res = fn(A)
            if res is not None:
                routes[side] = {
                    "central_dim": res.central.dim,
                    "annihilator_dim": res.annihilator.dim,
                    "multiplier_dim": res.space.dim,
                    "matches_solver": res.matches_solver,
                    "dim_matches": res.dim_matches,
                }
        identity_route = routes or None

    return {
        "algebra": algebra_to_dict(A),
        "flags": {
            "associative": associative,
            "commutative": A.is_commutative(),
            "zeropotent": zeropotent,
            "unital": uid is not None,
            "left_identity": lid is not None,
            "right_identity": rid is not None,
        },
        "identities": {"left": _vec(lid), "right": _vec(rid), "two_sided": _vec(uid)},
        "annihilators": {
            "left": left_annihilator(A).to_strings(),
            "right": right_annihilator(A).to_strings(),
            "two_sided": two_sided_annihilator(A).to_strings(),
        },
        "product_span": product_span(A).to_strings(),
        "nihil_decomposition": {
            "a0": nd.a0.to_strings(),
            "a1": nd.a1.to_strings(),
            "a1_is_subalgebra": nd.a1_is_subalgebra,
            "projection": nd.projection.to_strings(),
        },
        "structural": structural,
        "central": central,
        "identity_route": identity_route,
        "multipliers": {
            "weak": space_to_dict(weak),
            "full": space_to_dict(full),
            "weak_restricted": space_to_dict(restricted),
            "full_restricted": space_to_dict(restricted_full),
        },
        "closure": {"weak": verify_closure(weak).to_dict(), "full": verify_closure(full).to_dict()},
        "decomposition": desc.to_dict(),
        "summary": summary,
    }


SOLVERS = {
    "weak": lambda A, nd: solve_linear_weak(A),
    "full": lambda A, nd: solve_linear_full(A),
    "restricted-weak": solve_restricted_weak,
    "restricted-full": solve_restricted_full,
}


def solve(A: Algebra, kinds: list[str], a1: Subspace | None = None) -> dict:
    nd = nihil_decomposition(A, a1)
    out = {}
    for kind in kinds:
        ms = SOLVERS[kind](A, nd)
        d = space_to_dict(ms)
        if kind in ("weak", "full"):
            d["closure"] = verify_closure(ms).to_dict()
        out[kind] = d
    return {"field": str(A.field), "dim": A.dim, "a1": nd.a1.to_strings(), "spaces": out}
