"""Builders for the example families and the algebra file format.

Groups are given by explicit multiplication tables (no presentations, no
word problem).  The algebra interchange format is a JSON document with
sparse structure-constant triples and exact scalar strings, so files
round-trip bit-exactly and diff cleanly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations

from .hopf import HopfAlgebra, compute_antipode
from .linalg import Matrix, Tensor3
from .scalars import RATIONAL, FieldSpec, Scalar, ScalarSyntaxError, cyclotomic_field


class GroupTableError(ValueError):
    """A multiplication table that is not a group."""


class AlgebraFileSyntaxError(ValueError):
    """Malformed file: JSON syntax, bad scalar literal, or wrong shape."""


class AlgebraFileSemanticError(ValueError):
    """Well-formed file with impossible content (dangling index, non-bialgebra)."""


@dataclass(frozen=True)
class GroupPresentation:
    """A finite group as an order x order index table; table[i][j] = i*j."""

    order: int
    table: tuple
    identity: int

    @classmethod
    def from_table(cls, table, identity=None) -> "GroupPresentation":
        n = len(table)
        rows = tuple(tuple(row) for row in table)
        if any(len(r) != n for r in rows):
            raise GroupTableError("table must be square")
        for r in rows:
            for x in r:
                if not isinstance(x, int) or not 0 <= x < n:
                    raise GroupTableError(f"table entry {x!r} out of range")
        if identity is None:
            identity = next(
                (e for e in range(n)
                 if all(rows[e][j] == j and rows[j][e] == j for j in range(n))),
                None,
            )
            if identity is None:
                raise GroupTableError("table has no identity element")
        g = cls(n, rows, identity)
        g._validate()
        return g

    def _validate(self):
        n, t, e = self.order, self.table, self.identity
        for j in range(n):
            if t[e][j] != j or t[j][e] != j:
                raise GroupTableError(f"element {e} is not an identity")
        for i in range(n):
            if e not in t[i]:
                raise GroupTableError(f"element {i} has no inverse")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if t[t[i][j]][k] != t[i][t[j][k]]:
                        raise GroupTableError(f"table is not associative at ({i},{j},{k})")

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self.table[i].index(self.identity)


def cyclic_group(n: int) -> GroupPresentation:
    if n < 1:
        raise GroupTableError("cyclic group order must be >= 1")
    return GroupPresentation.from_table([[(i + j) % n for j in range(n)] for i in range(n)], 0)


def symmetric_group(n: int) -> GroupPresentation:
    """S_n on n symbols; element order is lexicographic on the permutation
    tuples, so the identity is element 0."""
    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[s]] for s in range(n))] for q in perms]
        for p in perms
    ]
    return GroupPresentation.from_table(table, 0)


def read_group_table(path) -> GroupPresentation:
    """Group table file: {"order": n, "identity": e, "table": [[...]]}"""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise AlgebraFileSyntaxError(f"{path}: line {exc.lineno} col {exc.colno}: {exc.msg}") from exc
    try:
        return GroupPresentation.from_table(doc["table"], doc.get("identity"))
    except (KeyError, TypeError) as exc:
        raise AlgebraFileSyntaxError(f"{path}: not a group table file: {exc}") from exc


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def build_group_algebra(group: GroupPresentation, name: str = "group-algebra") -> HopfAlgebra:
    """The group algebra kG: basis e_g, product from the table, every basis
    element group-like, antipode from inversion."""
    n = group.order
    field = RATIONAL
    one = field.one()
    mul = Tensor3.from_dict(field, n, {(i, j, group.mul(i, j)): one
                                       for i in range(n) for j in range(n)})
    comul = Tensor3.from_dict(field, n, {(i, i, i): one for i in range(n)})
    unit = [one if i == group.identity else field.zero() for i in range(n)]
    counit = [one] * n
    z = field.zero()
    s_rows = [[one if i == group.inverse(j) else z for j in range(n)] for i in range(n)]
    return HopfAlgebra(field, [f"e{i}" for i in range(n)], mul, unit, comul, counit,
                       Matrix(field, s_rows), name=name)


def build_function_algebra(group: GroupPresentation, name: str = "function-algebra") -> HopfAlgebra:
    """Functions on a finite group: pointwise product of delta functions,
    coproduct dual to the group law.  Equals the dual of the group algebra
    under the canonical basis matching."""
    n = group.order
    field = RATIONAL
    one = field.one()
    z = field.zero()
    mul = Tensor3.from_dict(field, n, {(i, i, i): one for i in range(n)})
    comul = Tensor3.from_dict(
        field, n,
        {(group.mul(q, r), q, r): one for q in range(n) for r in range(n)},
    )
    unit = [one] * n
    counit = [one if i == group.identity else z for i in range(n)]
    s_rows = [[one if i == group.inverse(j) else z for j in range(n)] for i in range(n)]
    return HopfAlgebra(field, [f"d{i}" for i in range(n)], mul, unit, comul, counit,
                       Matrix(field, s_rows), name=name)


def _monomial_name(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("g" if a == 1 else f"g^{a}")
    if b:
        parts.append("x" if b == 1 else f"x^{b}")
    return "*".join(parts) if parts else "1"


def _build_skew_primitive(field: FieldSpec, q: Scalar, n: int, name: str) -> HopfAlgebra:
    """Common construction behind the Sweedler and Taft families.

    Generators: a group-like g with g^n = 1 and a skew-primitive x with
    x^n = 0, x*g = q*g*x, coproduct(x) = x (x) 1 + g (x) x.  Basis is the
    monomials g^a x^b with index a*n + b.
    """
    dim = n * n
    zero, one = field.zero(), field.one()

    def idx(a, b):
        return a * n + b

    mul_triples = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if b + d >= n:
                        continue
                    # x^b g^c = q^(b*c) g^c x^b
                    mul_triples[(idx(a, b), idx(c, d), idx((a + c) % n, b + d))] = q ** (b * c)
    mul = Tensor3.from_dict(field, dim, mul_triples)

    def prod_pair(i, j):
        a, b = divmod(i, n)
        c, d = divmod(j, n)
        if b + d >= n:
            return None
        return idx((a + c) % n, b + d), q ** (b * c)

    def tsq_mul(xdict, ydict):
        out = {}
        for (p1, p2), cx in xdict.items():
            for (r1, r2), cy in ydict.items():
                t1 = prod_pair(p1, r1)
                t2 = prod_pair(p2, r2)
                if t1 is None or t2 is None:
                    continue
                key = (t1[0], t2[0])
                val = cx * cy * t1[1] * t2[1]
                out[key] = out.get(key, zero) + val
        return {k: v for k, v in out.items() if not v.is_zero()}

    dg = {(idx(1, 0), idx(1, 0)): one}
    dx = {(idx(0, 1), idx(0, 0)): one, (idx(1, 0), idx(0, 1)): one}
    comul_triples = {}
    for a in range(n):
        for b in range(n):
            term = {(idx(0, 0), idx(0, 0)): one}
            for _ in range(a):
                term = tsq_mul(term, dg)
            for _ in range(b):
                term = tsq_mul(term, dx)
            for (j, k), c in term.items():
                comul_triples[(idx(a, b), j, k)] = c
    comul = Tensor3.from_dict(field, dim, comul_triples)

    unit = [one if i == idx(0, 0) else zero for i in range(dim)]
    counit = [one if i % n == 0 else zero for i in range(dim)]

    def col_mul(x, y):
        out = {}
        for i, cx in x.items():
            for j, cy in y.items():
                t = prod_pair(i, j)
                if t is None:
                    continue
                out[t[0]] = out.get(t[0], zero) + cx * cy * t[1]
        return {k: v for k, v in out.items() if not v.is_zero()}

    # antipode on generators, extended anti-multiplicatively:
    # S(g^a x^b) = S(x)^b * S(g)^a
    sg = {idx(n - 1, 0): one}
    sx = col_mul({idx(n - 1, 0): one}, {idx(0, 1): one})
    sx = {k: -v for k, v in sx.items()}
    s_cols = []
    for a in range(n):
        for b in range(n):
            col = {idx(0, 0): one}
            for _ in range(b):
                col = col_mul(col, sx)
            for _ in range(a):
                col = col_mul(col, sg)
            dense = [zero] * dim
            for k, v in col.items():
                dense[k] = v
            s_cols.append(dense)
    antipode = Matrix.from_columns(field, s_cols)

    names = [_monomial_name(a, b) for a in range(n) for b in range(n)]
    return HopfAlgebra(field, names, mul, unit, comul, counit, antipode, name=name)


def build_sweedler() -> HopfAlgebra:
    """The 4-dimensional algebra with g^2 = 1, x^2 = 0, x*g = -g*x over Q."""
    return _build_skew_primitive(RATIONAL, RATIONAL.scalar(-1), 2, "sweedler")


def build_taft(n: int) -> HopfAlgebra:
    """The n^2-dimensional family over Q(zeta_n); its antipode has order 2n."""
    if n < 2:
        raise ValueError("taft builder needs n >= 2")
    field = cyclotomic_field(n)
    return _build_skew_primitive(field, field.generator(), n, f"taft-{n}")


def build_nongroup_monoid_bialgebra() -> HopfAlgebra:
    """Bialgebra of the two-element monoid {1, z | z^2 = z}: a valid
    bialgebra with group-like basis that has no antipode.  Negative fixture
    for regularity and antipode-synthesis checks."""
    field = RATIONAL
    one = field.one()
    mul = Tensor3.from_dict(field, 2, {(0, 0, 0): one, (0, 1, 1): one,
                                       (1, 0, 1): one, (1, 1, 1): one})
    comul = Tensor3.from_dict(field, 2, {(0, 0, 0): one, (1, 1, 1): one})
    return HopfAlgebra(field, ["1", "z"], mul, [one, field.zero()], comul,
                       [one, one], None, name="idempotent-monoid")


BUILTIN_BUILDERS = {
    "group-z2": lambda: build_group_algebra(cyclic_group(2), "group-z2"),
    "group-z6": lambda: build_group_algebra(cyclic_group(6), "group-z6"),
    "group-s3": lambda: build_group_algebra(symmetric_group(3), "group-s3"),
    "functions-z2": lambda: build_function_algebra(cyclic_group(2), "functions-z2"),
    "functions-z6": lambda: build_function_algebra(cyclic_group(6), "functions-z6"),
    "functions-s3": lambda: build_function_algebra(symmetric_group(3), "functions-s3"),
    "sweedler": build_sweedler,
    "taft-2": lambda: build_taft(2),
    "taft-3": lambda: build_taft(3),
    "taft-4": lambda: build_taft(4),
}


def builtin(name: str) -> HopfAlgebra:
    try:
        return BUILTIN_BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; have {sorted(BUILTIN_BUILDERS)}") from None


# ---------------------------------------------------------------------------
# algebra files
# ---------------------------------------------------------------------------

def _field_to_json(field: FieldSpec):
    if field.kind == "rational":
        return {"kind": "rational"}
    return {"kind": "cyclotomic", "order": field.order}


def _field_from_json(doc) -> FieldSpec:
    kind = doc.get("kind")
    if kind == "rational":
        return RATIONAL
    if kind == "cyclotomic":
        order = doc.get("order")
        if not isinstance(order, int) or order < 1:
            raise AlgebraFileSyntaxError(f"bad cyclotomic order {order!r}")
        return cyclotomic_field(order)
    raise AlgebraFileSyntaxError(f"unknown field kind {kind!r}")


def algebra_to_json(h: HopfAlgebra) -> dict:
    mul = [[i, j, k, str(v)] for i, j, k, v in h.mul.nonzero()]
    comul = [[i, j, k, str(v)] for i, j, k, v in h.comul.nonzero()]
    doc = {
        "name": h.name,
        "field": _field_to_json(h.field),
        "dim": h.dim,
        "basis": list(h.basis_names),
        "mul": mul,
        "comul": comul,
        "counit": [str(c) for c in h.counit],
        "unit": [str(c) for c in h.unit],
    }
    if h.antipode is not None:
        doc["antipode"] = [
            [i, j, str(x)]
            for i, row in enumerate(h.antipode.data)
            for j, x in enumerate(row)
            if not x.is_zero()
        ]
    return doc


def write_algebra(h: HopfAlgebra, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(algebra_to_json(h), fh, indent=1)
        fh.write("\n")


def algebra_from_json(doc, synthesize_antipode: bool = True) -> HopfAlgebra:
    if not isinstance(doc, dict):
        raise AlgebraFileSyntaxError("algebra file must be a JSON object")
    try:
        field = _field_from_json(doc["field"])
        dim = doc["dim"]
        basis = doc["basis"]
        mul_triples = doc["mul"]
        comul_triples = doc["comul"]
        counit = doc["counit"]
        unit = doc["unit"]
    except KeyError as exc:
        raise AlgebraFileSyntaxError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(dim, int) or dim < 1:
        raise AlgebraFileSyntaxError(f"bad dimension {dim!r}")
    if len(basis) != dim:
        raise AlgebraFileSemanticError(f"basis has {len(basis)} names for dim {dim}")
    if len(counit) != dim or len(unit) != dim:
        raise AlgebraFileSemanticError("counit/unit must list one scalar per basis element")

    def parse_scalar(text, where):
        try:
            return field.parse(text)
        except (ScalarSyntaxError, TypeError) as exc:
            raise AlgebraFileSyntaxError(f"{where}: {exc}") from None

    def check_index(i, where):
        if not isinstance(i, int) or not 0 <= i < dim:
            raise AlgebraFileSemanticError(f"{where}: index {i!r} out of range for dim {dim}")
        return i

    def tensor_from(triples, label):
        out = {}
        for pos, item in enumerate(triples):
            where = f"{label}[{pos}]"
            if len(item) != 4:
                raise AlgebraFileSyntaxError(f"{where}: expected [i, j, k, scalar]")
            i, j, k = (check_index(item[t], where) for t in range(3))
            out[(i, j, k)] = parse_scalar(item[3], where)
        return Tensor3.from_dict(field, dim, out)

    mul = tensor_from(mul_triples, "mul")
    comul = tensor_from(comul_triples, "comul")
    counit_row = [parse_scalar(c, f"counit[{i}]") for i, c in enumerate(counit)]
    unit_col = [parse_scalar(c, f"unit[{i}]") for i, c in enumerate(unit)]

    antipode = None
    if "antipode" in doc:
        zero = field.zero()
        rows = [[zero] * dim for _ in range(dim)]
        for pos, item in enumerate(doc["antipode"]):
            where = f"antipode[{pos}]"
            if len(item) != 3:
                raise AlgebraFileSyntaxError(f"{where}: expected [i, j, scalar]")
            i = check_index(item[0], where)
            j = check_index(item[1], where)
            rows[i][j] = parse_scalar(item[2], where)
        antipode = Matrix(field, rows)

    h = HopfAlgebra(field, basis, mul, unit_col, comul, counit_row, antipode,
                    name=doc.get("name", "unnamed"))
    if antipode is None and synthesize_antipode:
        bialgebra_checks = [c for c in h.validate().checks if not c.name.startswith("antipode")]
        bad = [c.name for c in bialgebra_checks if not c.passed]
        if bad:
            raise AlgebraFileSemanticError(
                f"{h.name}: cannot synthesize an antipode, bialgebra axioms fail: {', '.join(bad)}")
        s = compute_antipode(h)
        h = HopfAlgebra(field, basis, mul, unit_col, comul, counit_row, s, name=h.name)
    return h


def read_algebra(path, synthesize_antipode: bool = True) -> HopfAlgebra:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise AlgebraFileSyntaxError(
            f"{path}: line {exc.lineno} col {exc.colno}: {exc.msg}") from exc
    return algebra_from_json(doc, synthesize_antipode=synthesize_antipode)
