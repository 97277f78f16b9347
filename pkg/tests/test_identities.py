from fractions import Fraction
from importlib import resources

import pytest

from hopfcheck.identities import (Apply, DslLegError, DslSortError, DslSyntaxError,
                                  Pairing, Product, ScalarLit, Var, evaluate,
                                  evaluate_corpus, evaluate_side, evaluation_context,
                                  parse_corpus, parse_identity, pretty)

from conftest import BUILTIN_NAMES


def corpus(name="standard.ids"):
    text = resources.files("hopfcheck").joinpath(f"corpus/{name}").read_text("utf-8")
    return parse_corpus(text)


def test_parse_kms_entry():
    p = parse_identity("kms: forall a in A, b in A . phi(a*b) = phi(b*sigma(a))")
    assert p.name == "kms"
    assert p.decls == (("a", "A"), ("b", "A"))
    assert p.sort == "scalar"
    assert p.lhs == Apply("phi", (Product((Var("a"), Var("b"))),))


def test_parse_radford_entry():
    src = ("radford: forall a in A . S(S(S(S(a)))) = "
           "deltainv * lacthat(dhat, racthat(a, dhatinv)) * delta")
    p = parse_identity(src)
    assert p.sort == "A"
    assert pretty(p.lhs) == "S(S(S(S(a))))"


def test_juxtaposition_is_multiplication():
    a = parse_identity("j: forall a in A, b in A . a b = a * b")
    assert a.lhs == a.rhs == Product((Var("a"), Var("b")))
    inner = parse_identity("k: forall a in A, b in A, y in Ahat . <a b, y> = <a * b, y>")
    assert inner.lhs == inner.rhs


def test_scalar_literals():
    p = parse_identity("s: forall a in A . 1/2 * a = 1/2 a")
    assert p.lhs == Product((ScalarLit(Fraction(1, 2)), Var("a")))
    assert p.lhs == p.rhs


def test_legs_parse_and_print():
    p = parse_identity("c: forall a in A . eps(a(1)) * a(2) = a")
    assert p.lhs == Product((Apply("eps", (Var("a", 1),)), Var("a", 2)))
    assert p.rhs == Var("a")
    q = parse_identity(p.pretty())
    assert (q.lhs, q.rhs) == (p.lhs, p.rhs)


def test_pretty_roundtrip_on_corpus():
    for p in corpus():
        q = parse_identity(p.pretty())
        assert (q.name, q.decls, q.lhs, q.rhs) == (p.name, p.decls, p.lhs, p.rhs)


def test_pairing_sort_error():
    with pytest.raises(DslSortError):
        parse_identity("bad: forall a in A . <a, a> = one")


def test_mixed_product_sort_error():
    with pytest.raises(DslSortError):
        parse_identity("bad: forall a in A, y in Ahat . a * y = a")


def test_sides_must_share_free_variables():
    with pytest.raises(DslSortError):
        parse_identity("bad: forall a in A, b in A . a = b")


def test_sides_must_share_sort():
    with pytest.raises(DslSortError):
        parse_identity("bad: forall a in A . phi(a) = a")


def test_undeclared_variable_rejected():
    with pytest.raises(DslSortError):
        parse_identity("bad: forall a in A . a * c = c * a")


def test_action_sort_checking():
    with pytest.raises(DslSortError):
        parse_identity("bad: forall a in A, b in A . lacthat(a, b) = a")
    ok = parse_identity("ok: forall a in A, y in Ahat . lacthat(y, a) = lacthat(y, a)")
    assert ok.sort == "A"


def test_noncontiguous_legs_rejected():
    with pytest.raises(DslLegError):
        parse_identity("bad: forall a in A . eps(a(1)) * a(3) = a")


def test_mixed_bare_and_legged_rejected():
    with pytest.raises(DslLegError):
        parse_identity("bad: forall a in A . a * eps(a(1)) = a")


def test_syntax_errors_carry_position():
    with pytest.raises(DslSyntaxError) as err:
        parse_identity("oops: forall a in A . a = ")
    assert "position" in str(err.value)
    with pytest.raises(DslSyntaxError):
        parse_identity("dup: forall a in A, a in A . a = a")
    with pytest.raises(DslSyntaxError):
        parse_identity("res: forall sigma in A . sigma = sigma")


def test_reserved_arity_checked():
    with pytest.raises(DslSyntaxError):
        parse_identity("bad: forall a in A . S(a, a) = a")
    with pytest.raises(DslSyntaxError):
        parse_identity("bad: forall a in A, y in Ahat . lacthat(y) = a")


def test_corpus_parses_with_comments_and_blocks():
    programs = corpus()
    names = [p.name for p in programs]
    assert "radford" in names and "kms_phi" in names and len(names) >= 25
    assert len(set(names)) == len(names)


def test_counit_law_passes_everywhere(paired):
    prog = parse_identity("counit_left: forall a in A . eps(a(1)) * a(2) = a")
    for name in BUILTIN_NAMES:
        outcome = evaluate(prog, paired(name))
        assert outcome.passed, outcome.line()


def test_full_corpus_passes_on_representatives(paired):
    programs = corpus()
    for name in ("group-s3", "functions-z6", "sweedler", "taft-3"):
        for outcome in evaluate_corpus(programs, paired(name)):
            assert outcome.passed, outcome.line()


def test_swapped_radford_fails_on_taft3_with_counterexample(paired):
    trap = next(p for p in corpus("convention_traps.ids") if p.name == "radford_swapped")
    outcome = evaluate(trap, paired("taft-3"))
    assert not outcome.passed
    assert "a=x" in outcome.counterexample
    assert "lhs=" in outcome.counterexample and "rhs=" in outcome.counterexample
    # the same trap is invisible on sweedler, where dhat has order two
    assert evaluate(trap, paired("sweedler")).passed


def test_scalar_identity_with_literals(paired):
    prog = parse_identity("two: forall a in A . 2 * phi(a) = phi(2 * a)")
    assert evaluate(prog, paired("group-z2")).passed


def test_evaluation_is_multilinear(paired):
    sys = paired("sweedler")
    h = sys.primal
    ctx = evaluation_context(sys)
    prog = parse_identity("lin: forall a in A . eps(a(1)) * a(2) = a")
    two, five = h.field.scalar(2), h.field.scalar(5)
    e1, e3 = h.basis_column(1), h.basis_column(3)
    combo = [two * x + five * y for x, y in zip(e1, e3)]
    sort1, v1 = evaluate_side(ctx, prog, prog.lhs, {"a": e1})
    sort3, v3 = evaluate_side(ctx, prog, prog.lhs, {"a": e3})
    sortc, vc = evaluate_side(ctx, prog, prog.lhs, {"a": combo})
    assert sort1 == sort3 == sortc == "A"
    assert vc == [two * x + five * y for x, y in zip(v1, v3)]


def test_outcome_lines_are_machine_readable(paired):
    prog = parse_identity("counit_left: forall a in A . eps(a(1)) * a(2) = a")
    outcome = evaluate(prog, paired("group-z2"))
    assert outcome.line() == "counit_left group-z2 PASS"
