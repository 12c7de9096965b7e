"""The 3-dimensional associative and zeropotent algebras, with their known multiplier spaces.

Each entry stores the multiplication table (or zeropotent structural matrix),
the expected dimensions of LM'(A) and LM(A), parameterized matrix patterns
for both spaces, the expected two-sided annihilator and a few structural
flags.  Patterns are grids of linear expressions in free parameters; a map
belongs to the pattern iff it lies in the span those parameters sweep out.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable

from .algebra import (Algebra, find_identity, find_left_identity, find_right_identity,
                      from_structural_matrix, two_sided_annihilator)
from .field import Field, QQ
from .linalg import Matrix, Subspace
from .multiplier import solve_linear_full, solve_linear_weak


class UnknownEntry(KeyError):
    pass


class MissingParameter(ValueError):
    pass


E, F_, G, O = (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0)


def _neg(v):
    return tuple(-x for x in v)


def _scaled(k, v):
    return tuple(k * x for x in v)


# -- patterns --------------------------------------------------------------

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*([a-z]\w*)?")


def parse_linear(expr: str) -> dict[str, int]:
    """Parse an expression such as ``"-a+u"`` or ``"2p"`` into {symbol: coefficient}."""
    expr = expr.replace(" ", "")
    if expr in ("0", ""):
        return {}
    out: dict[str, int] = {}
    pos = 0
    while pos < len(expr):
        m = _TERM.match(expr, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse pattern entry {expr!r}")
        sign, num, sym = m.groups()
        coef = int(num) if num else 1
        if sign == "-":
            coef = -coef
        if sym is None:
            if coef != 0:
                raise ValueError(f"patterns must be homogeneous, got constant in {expr!r}")
        else:
            out[sym] = out.get(sym, 0) + coef
        pos = m.end()
    return out


def pattern_space(pattern: list[list[str]], field: Field) -> Subspace:
    """The span of all matrices matching ``pattern`` (flattened column-major)."""
    n = len(pattern)
    parsed = [[parse_linear(x) for x in row] for row in pattern]
    symbols = sorted({s for row in parsed for cell in row for s in cell})
    vecs = []
    for s in symbols:
        T = [[cell.get(s, 0) for cell in row] for row in parsed]
        vecs.append(Matrix(T, field).flatten_columns())
    return Subspace(vecs, n * n, field)


SCALARS = [["a", "0", "0"], ["0", "a", "0"], ["0", "0", "a"]]
ALL_MAPS = [["a", "b", "c"], ["p", "q", "r"], ["s", "t", "u"]]


@dataclass
class Expected:
    dims: tuple[int, int]
    weak_pattern: list[list[str]]
    full_pattern: list[list[str]]
    a0: list[tuple]
    flags: dict[str, bool]
    pattern_source: str = "listed"   # "listed" = transcribed family; "derived" = worked out here
    notes: list[str] = dc_field(default_factory=list)


@dataclass
class CatalogEntry:
    name: str
    family: str
    params: tuple[str, ...]
    _build: Callable[[dict], dict]
    _expected: Callable[[dict], Expected]
    description: str = ""

    def _params(self, params: dict | None) -> dict:
        params = dict(params or {})
        missing = [p for p in self.params if p not in params]
        if missing:
            raise MissingParameter(f"{self.name} needs parameter(s) {', '.join(missing)}")
        extra = set(params) - set(self.params)
        if extra:
            raise ValueError(f"{self.name} does not take parameter(s) {', '.join(sorted(extra))}")
        return {k: Fraction(v) if not isinstance(v, Fraction) else v for k, v in params.items()}

    def build(self, params: dict | None = None, field: Field = QQ) -> Algebra:
        data = self._build(self._params(params))
        if "zeropotent" in data:
            return from_structural_matrix(data["zeropotent"], field)
        return Algebra(data["table"], field)

    def structure(self, params: dict | None = None) -> dict:
        return self._build(self._params(params))

    def expected(self, params: dict | None = None) -> Expected:
        return self._expected(self._params(params))

    @property
    def test_params(self) -> list[dict]:
        """Parameter instantiations exercised by the regression suite."""
        if not self.params:
            return [{}]
        values = (0, 1, 2, 3) if self.family == "Z" else (0, 1, 2)
        return [{self.params[0]: v} for v in values]


def _flags(associative, zeropotent=False, unital=False, left=False, right=False):
    return {"associative": associative, "zeropotent": zeropotent, "unital": unital,
            "left_identity": left or unital, "right_identity": right or unital}


ASSOC = _flags(True)
UNITAL = _flags(True, unital=True)

_ENTRIES: dict[str, CatalogEntry] = {}


def _add(name, family, table=None, zeropotent=None, expected=None, params=(), description=""):
    if table is not None:
        build = table if callable(table) else (lambda p, t=table: {"table": t})
    else:
        build = zeropotent if callable(zeropotent) else (lambda p, z=zeropotent: {"zeropotent": z})
    exp = expected if callable(expected) else (lambda p, e=expected: e)
    _ENTRIES[name] = CatalogEntry(name, family, tuple(params), build, exp, description)


# -- unital ----------------------------------------------------------------

_add("U0", "U", [[E, F_, G], [F_, O, O], [G, O, O]],
     expected=Expected((3, 3), [["a", "0", "0"], ["b", "a", "0"], ["c", "0", "a"]],
                       [["a", "0", "0"], ["b", "a", "0"], ["c", "0", "a"]], [], UNITAL, "derived",
                       ["multipliers are the left multiplications l_x"]))
_add("U1", "U", [[E, F_, G], [F_, O, F_], [G, _neg(F_), E]],
     expected=Expected((1, 1), SCALARS, SCALARS, [], UNITAL, "derived", ["M(A) is the centre Ke"]))
_add("U2", "U", [[E, O, O], [O, F_, O], [O, O, G]],
     expected=Expected((3, 3), [["a", "0", "0"], ["0", "b", "0"], ["0", "0", "c"]],
                       [["a", "0", "0"], ["0", "b", "0"], ["0", "0", "c"]], [], UNITAL, "derived"))
_add("U3", "U", [[E, O, O], [O, F_, G], [O, G, O]],
     expected=Expected((3, 3), [["a", "0", "0"], ["0", "b", "0"], ["0", "c", "b"]],
                       [["a", "0", "0"], ["0", "b", "0"], ["0", "c", "b"]], [], UNITAL, "derived"))
_add("U4", "U", [[E, F_, G], [F_, G, O], [G, O, O]],
     expected=Expected((3, 3), [["a", "0", "0"], ["b", "a", "0"], ["c", "b", "a"]],
                       [["a", "0", "0"], ["b", "a", "0"], ["c", "b", "a"]], [], UNITAL, "derived"))

# -- curled ----------------------------------------------------------------

_ZERO_TABLE = [[O, O, O], [O, O, O], [O, O, O]]
_FULL = [E, F_, G]

_add("C0", "C", _ZERO_TABLE,
     expected=Expected((9, 9), ALL_MAPS, ALL_MAPS, _FULL, _flags(True, zeropotent=True)))
_add("C1", "C", [[O, O, O], [O, O, E], [O, _neg(E), O]],
     expected=Expected((4, 3), [["a", "b", "c"], ["0", "q", "0"], ["0", "0", "q"]],
                       [["a", "b", "c"], ["0", "a", "0"], ["0", "0", "a"]], [E],
                       _flags(True, zeropotent=True)))
_add("C2", "C", [[O, O, O], [E, F_, O], [O, G, O]],
     expected=Expected((1, 1), SCALARS, SCALARS, [], ASSOC))
_add("C3", "C", [[O, O, O], [O, O, O], [E, F_, G]],
     expected=Expected((1, 1), SCALARS, SCALARS, [], _flags(True, left=True)))
_add("C4", "C", [[O, O, E], [O, O, F_], [O, O, G]],
     expected=Expected((1, 1), SCALARS, SCALARS, [], _flags(True, right=True)))

# -- straight --------------------------------------------------------------

_add("S1", "S", [[F_, G, O], [G, O, O], [O, O, O]],
     expected=Expected((5, 3), [["a", "0", "0"], ["p", "a", "0"], ["s", "t", "u"]],
                       [["a", "0", "0"], ["p", "a", "0"], ["s", "p", "a"]], [G], ASSOC))
_add("S2", "S", [[E, O, O], [O, G, O], [O, O, O]],
     expected=Expected((5, 3), [["a", "0", "0"], ["0", "q", "0"], ["s", "t", "u"]],
                       [["a", "0", "0"], ["0", "p", "0"], ["0", "t", "p"]], [G], ASSOC, "listed",
                       ["the (3,3) entry of LM equals p, so the identity map is included"]))
_add("S3", "S", [[E, O, O], [O, F_, O], [O, O, O]],
     expected=Expected((5, 3), [["a", "0", "0"], ["0", "b", "0"], ["s", "t", "u"]],
                       [["a", "0", "0"], ["0", "b", "0"], ["0", "0", "u"]], [G], ASSOC))
_add("S4", "S", [[E, F_, O], [F_, O, O], [O, O, O]],
     expected=Expected((5, 3), [["a", "0", "0"], ["b", "a", "0"], ["s", "t", "u"]],
                       [["a", "0", "0"], ["b", "a", "0"], ["0", "0", "u"]], [G], ASSOC))

# -- waved -----------------------------------------------------------------

_W_WEAK_ABCQ = [["a", "b", "c"], ["0", "q", "0"], ["0", "0", "q"]]
_W_FULL_ABC = [["a", "b", "c"], ["0", "a", "0"], ["0", "0", "a"]]
_DIAG_AQQ = [["a", "0", "0"], ["0", "q", "0"], ["0", "0", "q"]]
_W9 = [["a", "b", "0"], ["0", "a", "0"], ["0", "0", "a"]]

_add("W1", "W", [[O, O, O], [O, O, O], [O, O, E]],
     expected=Expected((7, 5), [["a", "b", "c"], ["p", "q", "r"], ["0", "0", "u"]],
                       [["a", "b", "c"], ["0", "q", "r"], ["0", "0", "a"]], [E, F_], ASSOC))
_add("W2", "W", [[O, O, O], [O, O, O], [O, E, O]],
     expected=Expected((4, 3), _W_WEAK_ABCQ, _W_FULL_ABC, [E], ASSOC))
_add("W4", "W", [[E, O, O], [O, O, O], [O, O, O]],
     expected=Expected((7, 5), [["a", "0", "0"], ["p", "q", "r"], ["s", "t", "u"]],
                       [["a", "0", "0"], ["0", "q", "r"], ["0", "t", "u"]], [F_, G], ASSOC))
_add("W5", "W", [[O, O, O], [O, O, O], [O, F_, G]],
     expected=Expected((4, 2), _W_WEAK_ABCQ, _DIAG_AQQ, [E], ASSOC))
_add("W6", "W", [[O, O, O], [O, O, F_], [O, O, G]],
     expected=Expected((4, 2), _W_WEAK_ABCQ, _DIAG_AQQ, [E], ASSOC, "derived",
                       ["opposite of W5; same multipliers"]))
_add("W7", "W", [[E, O, O], [O, O, O], [O, F_, G]],
     expected=Expected((2, 2), _DIAG_AQQ, _DIAG_AQQ, [], _flags(True, left=True)))
_add("W8", "W", [[E, O, O], [O, O, F_], [O, O, G]],
     expected=Expected((2, 2), _DIAG_AQQ, _DIAG_AQQ, [], _flags(True, right=True), "derived",
                       ["opposite of W7"]))
_add("W9", "W", [[O, E, O], [E, F_, O], [O, G, O]],
     expected=Expected((2, 2), _W9, _W9, [], _flags(True, right=True)))
_add("W10", "W", [[O, E, O], [E, F_, G], [O, O, O]],
     expected=Expected((2, 2), _W9, _W9, [], _flags(True, left=True), "derived", ["opposite of W9"]))


def _w3_table(p):
    k = p["k"]
    return {"table": [[O, O, O], [O, E, O], [O, _scaled(k, E), E]]}


def _w3_expected(p):
    if p["k"] == 0:
        weak, dims = [["a", "b", "c"], ["0", "q", "r"], ["0", "r", "u"]], (6, 3)
    else:
        weak, dims = _W_WEAK_ABCQ, (4, 3)
    return Expected(dims, weak, _W_FULL_ABC, [E], ASSOC)


_add("W3", "W", _w3_table, expected=_w3_expected, params=("k",))

# -- zeropotent ------------------------------------------------------------

_ZP = _flags(False, zeropotent=True)
_ZP_ASSOC = _flags(True, zeropotent=True)

_add("Z0", "Z", zeropotent=[[0, 0, 0], [0, 0, 0], [0, 0, 0]],
     expected=Expected((9, 9), ALL_MAPS, ALL_MAPS, _FULL, _ZP_ASSOC))
_add("Z1", "Z", zeropotent=[[0, 0, 0], [0, 0, 0], [0, 0, 1]],
     expected=Expected((4, 3), [["q", "0", "0"], ["0", "q", "0"], ["s", "t", "u"]],
                       [["a", "0", "0"], ["0", "a", "0"], ["s", "t", "a"]], [G], _ZP_ASSOC, "derived",
                       ["isomorphic to C1"]))
_add("Z2", "Z", zeropotent=[[0, 0, 1], [0, 0, 0], [0, 0, 1]],
     expected=Expected((4, 3), [["a+s", "t", "-a+u"], ["0", "a", "0"], ["s", "t", "u"]],
                       [["a+s", "t", "0"], ["0", "a", "0"], ["s", "t", "a"]], [(1, 0, 1)], _ZP, "listed",
                       ["the free part of the weak decomposition takes values in the annihilator K(e+g)"]))
_add("Z3", "Z", zeropotent=[[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
     expected=Expected((1, 1), SCALARS, SCALARS, [], _ZP))
_add("Z4", "Z", zeropotent=lambda p: {"zeropotent": [[0, 0, 0], [0, 1, p["a"]], [0, 0, 1]]},
     expected=Expected((1, 1), SCALARS, SCALARS, [], _ZP), params=("a",))
_add("Z5", "Z", zeropotent=[[0, 1, 0], [0, 0, 0], [0, 0, 1]],
     expected=Expected((1, 1), SCALARS, SCALARS, [], _ZP))
_add("Z6", "Z", zeropotent=[[0, 1, 1], [0, 0, 1], [0, 0, 1]],
     expected=Expected((1, 1), SCALARS, SCALARS, [], _ZP))
_add("Z7", "Z", zeropotent=lambda p: {"zeropotent": [[1, p["a"], 0], [0, 1, 0], [0, 0, 1]]},
     expected=Expected((1, 1), SCALARS, SCALARS, [], _ZP), params=("a",))
_add("Z8", "Z", zeropotent=[[1, 2, 2], [0, 1, 2], [0, 0, 1]],
     expected=Expected((1, 1), SCALARS, SCALARS, [], _ZP))
_add("Z9", "Z", zeropotent=[[1, 3, 3], [0, 1, 3], [0, 0, 1]],
     expected=Expected((1, 1), SCALARS, SCALARS, [], _ZP))

OPPOSITE_PAIRS = [("C3", "C4"), ("W5", "W6"), ("W7", "W8"), ("W9", "W10")]


def names() -> list[str]:
    return list(_ENTRIES)


def entry(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise UnknownEntry(f"unknown catalog entry {name!r}") from None


def catalog_get(name: str, params: dict | None = None, field: Field = QQ) -> Algebra:
    return entry(name).build(params, field)


def expected_dims(name: str, params: dict | None = None) -> tuple[int, int]:
    return entry(name).expected(params).dims


def instances() -> list[tuple[str, dict]]:
    """Every (name, params) pair the regression suite runs."""
    return [(e.name, p) for e in _ENTRIES.values() for p in e.test_params]


def instance_label(name: str, params: dict) -> str:
    if not params:
        return name
    return name + "(" + ",".join(f"{k}={v}" for k, v in params.items()) + ")"


# -- verification ----------------------------------------------------------

@dataclass
class EntryReport:
    name: str
    params: dict
    field: Field
    dims: tuple[int, int] | None = None
    expected_dims: tuple[int, int] | None = None
    checks: list[tuple[str, bool, str]] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def add(self, what: str, ok: bool, detail: str = ""):
        self.checks.append((what, bool(ok), detail))

    def to_dict(self) -> dict:
        return {
            "entry": instance_label(self.name, self.params),
            "field": str(self.field),
            "dims": list(self.dims) if self.dims else None,
            "expected_dims": list(self.expected_dims) if self.expected_dims else None,
            "pass": self.passed,
            "checks": [{"check": w, "pass": ok, "detail": d} for w, ok, d in self.checks],
        }


def verify_entry(name: str, params: dict | None = None, field: Field = QQ) -> EntryReport:
    e = entry(name)
    params = dict(params or {})
    report = EntryReport(name, params, field)
    try:
        A = e.build(params, field)
        exp = e.expected(params)
    except Exception as exc:  # noqa: BLE001 - every failure becomes a report line
        report.add("build", False, f"{type(exc).__name__}: {exc}")
        return report

    actual_flags = {
        "associative": A.is_associative(),
        "zeropotent": A.is_zeropotent(),
        "unital": find_identity(A) is not None,
        "left_identity": find_left_identity(A) is not None,
        "right_identity": find_right_identity(A) is not None,
    }
    for flag, want in exp.flags.items():
        report.add(f"flag:{flag}", actual_flags[flag] == want, f"expected {want}, got {actual_flags[flag]}")

    a0 = two_sided_annihilator(A)
    want_a0 = Subspace(exp.a0, A.dim, field)
    report.add("annihilator", a0 == want_a0, f"A0 basis {a0.to_strings()}")

    weak = solve_linear_weak(A)
    full = solve_linear_full(A)
    report.dims = (weak.dim, full.dim)
    report.expected_dims = exp.dims
    if field.characteristic == 2:
        # the expected answers assume characteristic other than 2
        return report
    report.add("dims", report.dims == exp.dims, f"got {report.dims}, expected {exp.dims}")
    for label, ms, pattern in (("weak", weak, exp.weak_pattern), ("full", full, exp.full_pattern)):
        pat = pattern_space(pattern, field)
        members = all(v in pat for v in ms.space)
        report.add(f"pattern:{label}", members and pat.dim == ms.dim,
                   f"basis in pattern: {members}; pattern dim {pat.dim}, solved dim {ms.dim}")
    return report
