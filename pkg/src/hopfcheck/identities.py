"""Parser and evaluator for identities written in Sweedler leg notation.

An identity file entry such as

    radford: forall a in A . S(S(S(S(a)))) = deltainv * lacthat(dhat, racthat(a, dhatinv)) * delta

compiles to a small AST and is checked against a PairedSystem by exhausting
all assignments of the free variables to basis elements (of the algebra for
sort A, of its dual for sort Ahat) and comparing both sides exactly.

Variables carry optional coproduct legs: a(1), a(2), ... expand through the
iterated coproduct, and the implicit Sweedler summation is performed per
side.  Quantifying over basis elements suffices because every corpus
identity is linear in each variable; a variable used twice without legs
denotes the same basis element on both occurrences, so such an identity is
only asserted on the basis (the bundled corpus uses this solely where the
general statement follows by linearity).  In finite dimension the leg
notation is unconditional: every iterated coproduct is a finite sum of
basis tensors, so no bracketing or coverage side conditions ever arise and
none are modeled.

Grammar (informally):
    identity := name ":" "forall" decl ("," decl)* "." expr "=" expr
    decl     := var "in" ("A" | "Ahat")
    expr     := factor (("*" factor) | factor)*          juxtaposition = "*"
    factor   := int["/"int] | var["(" leg ")"] | fn "(" expr {"," expr} ")"
              | "<" expr "," expr ">" | "(" expr ")" | const
    fn       := S | Sinv | S2 | Sinv2 | sigma | sigmainv | sigmap
              | sigmapinv | eps | phi | psi | lact | ract | lacthat | racthat
    const    := one | delta | deltainv | dhat | dhatinv | tau

The unary operators and the integrals act on either sort (on Ahat they mean
the dual's antipode, modular automorphisms, and integrals).  The pairing
takes an A term on the left and an Ahat term on the right.  lact/ract are
the algebra acting on its dual, lacthat/racthat the dual acting on the
algebra, arguments in reading order of the harpoon expression.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian

from .duality import PairedSystem, pairing_value
from .linalg import invert


class DslSyntaxError(ValueError):
    """Tokenizer or parser rejection, with source position."""


class DslSortError(ValueError):
    """Well-formed syntax with an ill-sorted subterm."""


class DslLegError(ValueError):
    """Sweedler legs that are non-contiguous or mixed with bare uses."""


UNARY_FNS = ("S", "Sinv", "S2", "Sinv2", "sigma", "sigmainv", "sigmap", "sigmapinv")
SCALAR_FNS = ("eps", "phi", "psi")
ACTION_FNS = ("lact", "ract", "lacthat", "racthat")
FN_NAMES = UNARY_FNS + SCALAR_FNS + ACTION_FNS
CONST_NAMES = ("one", "delta", "deltainv", "dhat", "dhatinv", "tau")
KEYWORDS = ("forall", "in", "A", "Ahat") + FN_NAMES + CONST_NAMES


# -- AST --------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str
    leg: int | None = None


@dataclass(frozen=True)
class Const:
    kind: str


@dataclass(frozen=True)
class ScalarLit:
    value: Fraction


@dataclass(frozen=True)
class Apply:
    fn: str
    args: tuple


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Pairing:
    left: object
    right: object


@dataclass(frozen=True)
class IdentityProgram:
    name: str
    decls: tuple          # ((var, "A"|"Ahat"), ...)
    lhs: object
    rhs: object
    sort: str             # common sort of both sides

    def pretty(self) -> str:
        decls = ", ".join(f"{v} in {s}" for v, s in self.decls)
        return f"{self.name}: forall {decls} . {pretty(self.lhs)} = {pretty(self.rhs)}"


@dataclass(frozen=True)
class IdentityOutcome:
    identity: str
    algebra: str
    passed: bool
    counterexample: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" {self.counterexample}" if (self.counterexample and not self.passed) else ""
        return f"{self.identity} {self.algebra} {status}{tail}"


def pretty(node) -> str:
    if isinstance(node, Var):
        return node.name if node.leg is None else f"{node.name}({node.leg})"
    if isinstance(node, Const):
        return node.kind
    if isinstance(node, ScalarLit):
        return str(node.value)
    if isinstance(node, Apply):
        return f"{node.fn}(" + ", ".join(pretty(a) for a in node.args) + ")"
    if isinstance(node, Product):
        return " * ".join(
            f"({pretty(f)})" if isinstance(f, Product) else pretty(f)
            for f in node.factors
        )
    if isinstance(node, Pairing):
        return f"<{pretty(node.left)}, {pretty(node.right)}>"
    raise TypeError(f"not an AST node: {node!r}")


# -- tokenizer and parser ----------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>[:.,*()<>=/]))")


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m or m.end() == pos:
            if src[pos:].strip() == "":
                break
            raise DslSyntaxError(f"position {pos}: cannot read {src[pos:pos+10]!r}")
        if m.group("name"):
            tokens.append(("name", m.group("name"), m.start("name")))
        elif m.group("int"):
            tokens.append(("int", m.group("int"), m.start("int")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            raise DslSyntaxError(f"position {tok[2]}: expected {want!r}, found {tok[1]!r}")
        return tok

    def parse_identity(self) -> IdentityProgram:
        name = self.expect("name")[1]
        self.expect("op", ":")
        self.expect("name", "forall")
        decls = [self.parse_decl()]
        while self.peek()[:2] == ("op", ","):
            self.next()
            decls.append(self.parse_decl())
        self.expect("op", ".")
        lhs = self.parse_expr()
        self.expect("op", "=")
        rhs = self.parse_expr()
        self.expect("end")
        seen = set()
        for v, _ in decls:
            if v in seen:
                raise DslSyntaxError(f"variable {v!r} declared twice")
            seen.add(v)
        return _sort_check(IdentityProgramBuilder(name, tuple(decls), lhs, rhs))

    def parse_decl(self):
        tok = self.expect("name")
        var = tok[1]
        if var in KEYWORDS:
            raise DslSyntaxError(f"position {tok[2]}: {var!r} is reserved")
        self.expect("name", "in")
        sort_tok = self.expect("name")
        if sort_tok[1] not in ("A", "Ahat"):
            raise DslSyntaxError(f"position {sort_tok[2]}: sort must be A or Ahat")
        return (var, sort_tok[1])

    def parse_expr(self):
        factors = [self.parse_factor()]
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.next()
                factors.append(self.parse_factor())
            elif kind in ("name", "int") or (kind == "op" and value in ("(", "<")):
                factors.append(self.parse_factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def parse_factor(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.next()
            if self.peek()[:2] == ("op", "/"):
                self.next()
                den = self.expect("int")[1]
                return ScalarLit(Fraction(int(value), int(den)))
            return ScalarLit(Fraction(int(value)))
        if kind == "op" and value == "(":
            self.next()
            inner = self.parse_expr()
            self.expect("op", ")")
            return inner
        if kind == "op" and value == "<":
            self.next()
            left = self.parse_expr()
            self.expect("op", ",")
            right = self.parse_expr()
            self.expect("op", ">")
            return Pairing(left, right)
        if kind == "name":
            self.next()
            if value in CONST_NAMES:
                return Const(value)
            if value in FN_NAMES:
                self.expect("op", "(")
                args = [self.parse_expr()]
                while self.peek()[:2] == ("op", ","):
                    self.next()
                    args.append(self.parse_expr())
                self.expect("op", ")")
                expected = 2 if value in ACTION_FNS else 1
                if len(args) != expected:
                    raise DslSyntaxError(
                        f"position {pos}: {value} takes {expected} argument(s), got {len(args)}")
                return Apply(value, tuple(args))
            # variable, possibly with a Sweedler leg
            if self.peek()[:2] == ("op", "("):
                save = self.i
                self.next()
                if self.peek()[0] == "int":
                    leg = int(self.next()[1])
                    self.expect("op", ")")
                    return Var(value, leg)
                self.i = save
            return Var(value)
        raise DslSyntaxError(f"position {pos}: unexpected {value!r}")


@dataclass(frozen=True)
class IdentityProgramBuilder:
    name: str
    decls: tuple
    lhs: object
    rhs: object


# -- sort checking ------------------------------------------------------------

def _infer_sort(node, env) -> str:
    if isinstance(node, Var):
        if node.name not in env:
            raise DslSortError(f"undeclared variable {node.name!r}")
        return env[node.name]
    if isinstance(node, ScalarLit):
        return "scalar"
    if isinstance(node, Const):
        return {"one": "A", "delta": "A", "deltainv": "A",
                "dhat": "Ahat", "dhatinv": "Ahat", "tau": "scalar"}[node.kind]
    if isinstance(node, Pairing):
        ls = _infer_sort(node.left, env)
        rs = _infer_sort(node.right, env)
        if ls != "A" or rs != "Ahat":
            raise DslSortError(
                f"pairing needs an A term then an Ahat term, got <{ls}, {rs}> in {pretty(node)}")
        return "scalar"
    if isinstance(node, Apply):
        arg_sorts = [_infer_sort(a, env) for a in node.args]
        if node.fn in UNARY_FNS:
            if arg_sorts[0] == "scalar":
                raise DslSortError(f"{node.fn} cannot act on a scalar in {pretty(node)}")
            return arg_sorts[0]
        if node.fn in SCALAR_FNS:
            if arg_sorts[0] == "scalar":
                raise DslSortError(f"{node.fn} cannot act on a scalar in {pretty(node)}")
            return "scalar"
        expected = {"lact": ("A", "Ahat", "Ahat"), "ract": ("Ahat", "A", "Ahat"),
                    "lacthat": ("Ahat", "A", "A"), "racthat": ("A", "Ahat", "A")}[node.fn]
        if tuple(arg_sorts) != expected[:2]:
            raise DslSortError(
                f"{node.fn} expects sorts {expected[:2]}, got {tuple(arg_sorts)} in {pretty(node)}")
        return expected[2]
    if isinstance(node, Product):
        sort = "scalar"
        for f in node.factors:
            s = _infer_sort(f, env)
            if s == "scalar":
                continue
            if sort == "scalar":
                sort = s
            elif sort != s:
                raise DslSortError(f"cannot multiply {sort} by {s} in {pretty(node)}")
        return sort
    raise TypeError(f"not an AST node: {node!r}")


def _free_vars(node, out):
    if isinstance(node, Var):
        out.add(node.name)
    elif isinstance(node, Apply):
        for a in node.args:
            _free_vars(a, out)
    elif isinstance(node, Product):
        for f in node.factors:
            _free_vars(f, out)
    elif isinstance(node, Pairing):
        _free_vars(node.left, out)
        _free_vars(node.right, out)
    return out


def _leg_usage(node, out):
    """out[var] = set of legs used, with None recording a bare use."""
    if isinstance(node, Var):
        out.setdefault(node.name, set()).add(node.leg)
    elif isinstance(node, Apply):
        for a in node.args:
            _leg_usage(a, out)
    elif isinstance(node, Product):
        for f in node.factors:
            _leg_usage(f, out)
    elif isinstance(node, Pairing):
        _leg_usage(node.left, out)
        _leg_usage(node.right, out)
    return out


def _check_legs(name, side_label, node):
    usage = _leg_usage(node, {})
    legs = {}
    for var, used in usage.items():
        if None in used and len(used) > 1:
            raise DslLegError(
                f"{name}: {var!r} is used both bare and with legs on the {side_label}")
        numbered = sorted(u for u in used if u is not None)
        if numbered:
            if numbered != list(range(1, len(numbered) + 1)):
                raise DslLegError(
                    f"{name}: legs of {var!r} on the {side_label} must be 1..k, got {numbered}")
            legs[var] = len(numbered)
    return legs


def _sort_check(b: IdentityProgramBuilder) -> IdentityProgram:
    env = dict(b.decls)
    lhs_sort = _infer_sort(b.lhs, env)
    rhs_sort = _infer_sort(b.rhs, env)
    if lhs_sort != rhs_sort:
        raise DslSortError(f"{b.name}: sides have sorts {lhs_sort} and {rhs_sort}")
    lhs_vars = _free_vars(b.lhs, set())
    rhs_vars = _free_vars(b.rhs, set())
    declared = set(env)
    if (lhs_vars | rhs_vars) - declared:
        raise DslSortError(f"{b.name}: undeclared variables {sorted((lhs_vars | rhs_vars) - declared)}")
    if lhs_vars != rhs_vars:
        raise DslSortError(
            f"{b.name}: sides use different free variables {sorted(lhs_vars)} vs {sorted(rhs_vars)}")
    _check_legs(b.name, "left side", b.lhs)
    _check_legs(b.name, "right side", b.rhs)
    return IdentityProgram(b.name, b.decls, b.lhs, b.rhs, lhs_sort)


def parse_identity(source: str) -> IdentityProgram:
    return _Parser(source).parse_identity()


def parse_corpus(text: str):
    """Identity files: '#' comments, one identity per blank-line block
    (long identities may wrap onto continuation lines)."""
    programs = []
    block = []
    for raw in text.splitlines() + [""]:
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            block.append(line.strip())
        elif block:
            programs.append(parse_identity(" ".join(block)))
            block = []
    names = [p.name for p in programs]
    dupes = {n for n in names if names.count(n) > 1}
    if dupes:
        raise DslSyntaxError(f"duplicate identity names: {sorted(dupes)}")
    return programs


def load_corpus(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_corpus(fh.read())


# -- evaluation ---------------------------------------------------------------

class _EvalContext:
    """Per-system caches: operator matrices, integrals, named constants."""

    def __init__(self, sys: PairedSystem):
        self.sys = sys
        self._ops = {}

    def algebra(self, sort):
        return self.sys.primal if sort == "A" else self.sys.dual

    def modular(self, sort):
        return self.sys.primal_modular if sort == "A" else self.sys.dual_modular

    def op_matrix(self, fn, sort):
        key = (fn, sort)
        m = self._ops.get(key)
        if m is None:
            alg = self.algebra(sort)
            md = self.modular(sort)
            if fn == "S":
                m = alg.antipode
            elif fn == "Sinv":
                m = invert(alg.antipode)
            elif fn == "S2":
                m = alg.antipode.pow(2)
            elif fn == "Sinv2":
                m = invert(alg.antipode).pow(2)
            elif fn == "sigma":
                m = md.sigma
            elif fn == "sigmainv":
                m = invert(md.sigma)
            elif fn == "sigmap":
                m = md.sigma_prime
            elif fn == "sigmapinv":
                m = invert(md.sigma_prime)
            else:
                raise AssertionError(fn)
            self._ops[key] = m
        return m

    def constant(self, kind):
        sys = self.sys
        if kind == "one":
            return ("A", sys.primal.unit_column())
        if kind == "delta":
            return ("A", list(sys.primal_modular.delta))
        if kind == "deltainv":
            return ("A", list(sys.primal_modular.delta_inv))
        if kind == "dhat":
            return ("Ahat", list(sys.dual_modular.delta))
        if kind == "dhatinv":
            return ("Ahat", list(sys.dual_modular.delta_inv))
        if kind == "tau":
            return ("scalar", sys.primal_modular.tau)
        raise AssertionError(kind)


def _eval_expr(ctx: _EvalContext, node, env, assignment, legs):
    """assignment: var -> (sort, column); legs: var -> tuple of basis indices."""
    if isinstance(node, Var):
        sort = env[node.name]
        if node.leg is None:
            return (sort, assignment[node.name])
        return (sort, ctx.algebra(sort).basis_column(legs[node.name][node.leg - 1]))
    if isinstance(node, ScalarLit):
        return ("scalar", ctx.sys.primal.field.scalar(node.value))
    if isinstance(node, Const):
        return ctx.constant(node.kind)
    if isinstance(node, Pairing):
        _, a = _eval_expr(ctx, node.left, env, assignment, legs)
        _, y = _eval_expr(ctx, node.right, env, assignment, legs)
        return ("scalar", pairing_value(a, y))
    if isinstance(node, Apply):
        vals = [_eval_expr(ctx, a, env, assignment, legs) for a in node.args]
        if node.fn in UNARY_FNS:
            sort, col = vals[0]
            return (sort, ctx.op_matrix(node.fn, sort).apply(col))
        if node.fn == "eps":
            sort, col = vals[0]
            return ("scalar", ctx.algebra(sort).counit_of(col))
        if node.fn in ("phi", "psi"):
            sort, col = vals[0]
            md = ctx.modular(sort)
            functional = md.phi if node.fn == "phi" else md.psi
            return ("scalar", functional(col))
        sys = ctx.sys
        if node.fn == "lact":
            return ("Ahat", sys.primal_acts_left(vals[0][1], vals[1][1]))
        if node.fn == "ract":
            return ("Ahat", sys.primal_acts_right(vals[0][1], vals[1][1]))
        if node.fn == "lacthat":
            return ("A", sys.dual_acts_left(vals[0][1], vals[1][1]))
        if node.fn == "racthat":
            return ("A", sys.dual_acts_right(vals[0][1], vals[1][1]))
        raise AssertionError(node.fn)
    if isinstance(node, Product):
        acc = None
        for f in node.factors:
            val = _eval_expr(ctx, f, env, assignment, legs)
            acc = val if acc is None else _combine(ctx, acc, val)
        return acc
    raise TypeError(f"not an AST node: {node!r}")


def _combine(ctx, v1, v2):
    s1, p1 = v1
    s2, p2 = v2
    if s1 == "scalar" and s2 == "scalar":
        return ("scalar", p1 * p2)
    if s1 == "scalar":
        return (s2, [p1 * c for c in p2])
    if s2 == "scalar":
        return (s1, [c * p2 for c in p1])
    if s1 != s2:
        raise AssertionError("ill-sorted product survived sort checking")
    return (s1, ctx.algebra(s1).multiply(p1, p2))


def _value_add(v1, v2):
    if v1 is None:
        return v2
    s1, p1 = v1
    _, p2 = v2
    if s1 == "scalar":
        return (s1, p1 + p2)
    return (s1, [a + b for a, b in zip(p1, p2)])


def _value_scale(v, c):
    s, p = v
    if s == "scalar":
        return (s, c * p)
    return (s, [c * x for x in p])


def evaluate_side(ctx: _EvalContext, prog: IdentityProgram, node, assignment,
                  leg_counts=None):
    """Evaluate one side under an assignment of coordinate columns.

    Performs the implicit Sweedler summation: every legged variable is
    expanded through the iterated coproduct of its assigned element, and the
    results are summed with the expansion coefficients.
    """
    env = dict(prog.decls)
    if leg_counts is None:
        leg_counts = _check_legs(prog.name, "side", node)
    if not leg_counts:
        return _eval_expr(ctx, node, env, assignment, {})
    expansions = []
    for var, k in leg_counts.items():
        alg = ctx.algebra(env[var])
        column = assignment[var]
        terms = []
        for i, coeff in enumerate(column):
            if coeff.is_zero():
                continue
            for c, idxs in alg.iterated_coproduct(i, k):
                terms.append((coeff * c, idxs))
        expansions.append((var, terms))
    total = None
    for combo in cartesian(*[terms for _, terms in expansions]):
        coeff = None
        legs = {}
        for (var, _), (c, idxs) in zip(expansions, combo):
            coeff = c if coeff is None else coeff * c
            legs[var] = idxs
        val = _eval_expr(ctx, node, env, assignment, legs)
        total = _value_add(total, _value_scale(val, coeff))
    if total is None:
        # every coproduct expansion vanished; the side is zero
        zero_sort = prog.sort
        if zero_sort == "scalar":
            return ("scalar", ctx.sys.primal.field.zero())
        return (zero_sort, ctx.algebra(zero_sort).zero_column())
    return total


def _format_value(ctx, value):
    sort, payload = value
    if sort == "scalar":
        return str(payload)
    return ctx.algebra(sort).format_element(payload)


def evaluate(prog: IdentityProgram, sys: PairedSystem) -> IdentityOutcome:
    """Check the identity for every basis assignment of its free variables."""
    ctx = _EvalContext(sys)
    dims = [ctx.algebra(sort).dim for _, sort in prog.decls]
    lhs_legs = _check_legs(prog.name, "left side", prog.lhs)
    rhs_legs = _check_legs(prog.name, "right side", prog.rhs)
    for combo in cartesian(*[range(d) for d in dims]):
        assignment = {
            var: ctx.algebra(sort).basis_column(idx)
            for (var, sort), idx in zip(prog.decls, combo)
        }
        lhs = evaluate_side(ctx, prog, prog.lhs, assignment, lhs_legs)
        rhs = evaluate_side(ctx, prog, prog.rhs, assignment, rhs_legs)
        if lhs != rhs:
            names = ", ".join(
                f"{var}={ctx.algebra(sort).basis_names[idx]}"
                for (var, sort), idx in zip(prog.decls, combo)
            )
            return IdentityOutcome(
                prog.name, sys.primal.name, False,
                f"at {names}: lhs={_format_value(ctx, lhs)} rhs={_format_value(ctx, rhs)}")
    return IdentityOutcome(prog.name, sys.primal.name, True)


def evaluation_context(sys: PairedSystem) -> _EvalContext:
    """Context for evaluate_side: lets callers evaluate one side of an
    identity on arbitrary coordinate assignments (not just basis elements)."""
    return _EvalContext(sys)


def evaluate_corpus(programs, sys: PairedSystem):
    return [evaluate(p, sys) for p in programs]
