from fractions import Fraction

import pytest

from weakmult import catalog
from weakmult.algebra import find_identity, opposite, structural_matrix
from weakmult.catalog import MissingParameter, UnknownEntry, parse_linear
from weakmult.field import QQ
from weakmult.linalg import Matrix
from weakmult.multiplier import solve_linear_full, solve_linear_weak

from conftest import F2, F5, F7

# expected (dim LM', dim LM) for every family, transcribed independently of the catalog module
TABLE = {
    "C0": (9, 9), "U0": (3, 3), "U1": (1, 1), "U2": (3, 3), "U3": (3, 3), "U4": (3, 3),
    "C1": (4, 3), "C2": (1, 1), "C3": (1, 1), "C4": (1, 1),
    "S1": (5, 3), "S2": (5, 3), "S3": (5, 3), "S4": (5, 3),
    "W1": (7, 5), "W2": (4, 3), "W4": (7, 5), "W5": (4, 2), "W6": (4, 2),
    "W7": (2, 2), "W8": (2, 2), "W9": (2, 2), "W10": (2, 2),
    "Z0": (9, 9), "Z1": (4, 3), "Z2": (4, 3), "Z3": (1, 1), "Z4": (1, 1), "Z5": (1, 1),
    "Z6": (1, 1), "Z7": (1, 1), "Z8": (1, 1), "Z9": (1, 1),
}


def table_dims(name, params):
    if name == "W3":
        return (6, 3) if params["k"] == 0 else (4, 3)
    return TABLE[name]


def test_catalog_get_examples():
    A = catalog.catalog_get("C1")
    e, f, g, o = (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0)
    assert A.table() == [[o, o, o], [o, o, e], [o, (-1, 0, 0), o]]
    Z = catalog.catalog_get("Z4", {"a": 0})
    assert structural_matrix(Z)[0] == Matrix([[0, 0, 0], [0, 1, 0], [0, 0, 1]], QQ)
    U3 = catalog.catalog_get("U3")
    assert U3.table() == [[e, o, o], [o, f, g], [o, g, o]]


def test_expected_dims_examples():
    assert catalog.expected_dims("S1") == (5, 3)
    assert catalog.expected_dims("W3", {"k": 0}) == (6, 3)
    assert catalog.expected_dims("W3", {"k": 1}) == (4, 3)
    assert catalog.expected_dims("Z2") == (4, 3)


def test_errors():
    with pytest.raises(UnknownEntry):
        catalog.entry("Q7")
    with pytest.raises(MissingParameter):
        catalog.catalog_get("W3")
    with pytest.raises(MissingParameter):
        catalog.catalog_get("Z7", {})


def test_names_cover_all_families():
    names = set(catalog.names())
    assert names == set(TABLE) | {"W3"}
    assert len(catalog.instances()) >= 30


@pytest.mark.parametrize("name", ["C2", "W5", "Z0"])
def test_verify_entry_examples(name):
    rep = catalog.verify_entry(name)
    assert rep.passed, rep.to_dict()
    assert rep.dims == TABLE[name]


INSTANCES = catalog.instances()
IDS = [catalog.instance_label(n, p) for n, p in INSTANCES]


@pytest.mark.parametrize("name,params", INSTANCES, ids=IDS)
@pytest.mark.parametrize("fld", [QQ, F5, F7], ids=["Q", "F5", "F7"])
def test_every_entry_verifies(name, params, fld):
    rep = catalog.verify_entry(name, params, fld)
    assert rep.passed, [c for c in rep.checks if not c[1]]
    assert rep.dims == table_dims(name, params)


@pytest.mark.parametrize("name,params", INSTANCES, ids=IDS)
def test_family_flags(name, params):
    A = catalog.catalog_get(name, params)
    if name.startswith("Z"):
        assert A.is_zeropotent()
    else:
        assert A.is_associative()
    if name.startswith("U"):
        assert find_identity(A) is not None


@pytest.mark.parametrize("a,b", catalog.OPPOSITE_PAIRS)
def test_opposite_pairs(a, b):
    A, B = catalog.catalog_get(a), catalog.catalog_get(b)
    assert opposite(A) == B
    assert solve_linear_weak(A).space == solve_linear_weak(B).space
    assert solve_linear_full(A).space == solve_linear_full(B).space


def test_w3_branches_and_negated_parameter():
    for k in (Fraction(1), Fraction(2), Fraction(-3, 2)):
        assert catalog.verify_entry("W3", {"k": k}).passed
    assert catalog.verify_entry("W3", {"k": 0}).dims == (6, 3)


def test_char_two_skips_dimension_checks():
    rep = catalog.verify_entry("C1", {}, F2)
    assert rep.passed
    assert rep.dims == (6, 3)
    assert all(not w.startswith(("dims", "pattern")) for w, _, _ in rep.checks)


def test_parse_linear():
    assert parse_linear("a+s") == {"a": 1, "s": 1}
    assert parse_linear("-a+u") == {"a": -1, "u": 1}
    assert parse_linear("0") == {}
    assert parse_linear("2q-b") == {"q": 2, "b": -1}
