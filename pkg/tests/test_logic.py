import random

import pytest

from critex.automaton import Dfa, language_equal
from critex.logic import (
    Add,
    And,
    CompilationEnv,
    Cmp,
    Const,
    Exists,
    Forall,
    FormulaError,
    FormulaSyntaxError,
    Implies,
    Not,
    Or,
    SeqConst,
    SeqEq,
    Var,
    compile_formula,
    evaluate_sentence,
    free_vars,
    interpret,
    parse,
)
from critex.numeral import RadixContext

from test_arith import encode_tuple


@pytest.fixture(scope="module")
def ctx():
    return RadixContext(2)


def env_for(tm, ctx, *names):
    return CompilationEnv(tuple(names), tm, ctx)


# ------------------------------------------------------------- parsing


def test_parse_exists_atom():
    f = parse("E i . seq[i] = 1")
    assert isinstance(f, Exists)
    assert isinstance(f.body, SeqConst)
    assert free_vars(f) == set()


def test_parse_forall_implies_tree():
    f = parse("A j . j < q -> seq[i+j] = seq[i+p+j]")
    assert isinstance(f, Forall)
    assert isinstance(f.body, Implies)
    assert free_vars(f) == {"i", "p", "q"}


def test_parse_error_position():
    with pytest.raises(FormulaSyntaxError) as err:
        parse("E i .")
    assert "position" in str(err.value)


def test_parse_reserved_and_unknown_chars():
    with pytest.raises(FormulaSyntaxError):
        parse("E seq . seq[seq] = 1")
    with pytest.raises(FormulaSyntaxError):
        parse("x % y = 1")


def test_parse_precedence():
    f = parse("~ x = 0 & y = 0 | z = 0 -> w = 0")
    # -> binds loosest: (((~x=0) & y=0) | z=0) -> w=0
    assert isinstance(f, Implies)
    assert isinstance(f.left, Or)
    assert isinstance(f.left.left, And)
    assert isinstance(f.left.left.left, Not)


def test_parse_bounded_quantifier_sugar():
    fe = parse("E j < t . seq[j] = 1")
    assert isinstance(fe, Exists) and isinstance(fe.body, And)
    fa = parse("A j < t . seq[j] = 1")
    assert isinstance(fa, Forall) and isinstance(fa.body, Implies)


def test_quantifier_extends_maximally_right():
    f = parse("x = 0 & E j . j = x | j = 1")
    assert isinstance(f, And)
    assert isinstance(f.right, Exists)
    assert isinstance(f.right.body, Or)


def test_shadowing_rejected():
    with pytest.raises(FormulaError):
        parse("E i . E i . i = 0")
    with pytest.raises(FormulaError):
        parse("i = 0 & E i . i = 1")


def test_sibling_scopes_may_reuse_names():
    f = parse("(E i . i = 0) & (E i . i = 1)")
    assert free_vars(f) == set()


# ------------------------------------------------------------- compilation


def test_compile_seq_const(tm, ctx):
    m = compile_formula(parse("seq[x] = 1"), env_for(tm, ctx, "x"))
    assert isinstance(m, Dfa)
    assert m.accepts(encode_tuple((1,), 2))
    assert m.accepts(encode_tuple((2,), 2))
    assert not m.accepts(encode_tuple((0,), 2))


def test_compile_sentence_true(tm, ctx):
    assert compile_formula(parse("E x . seq[x] = 1"), env_for(tm, ctx)) is True


def test_compile_tautology(tm, ctx):
    m = compile_formula(parse("x = x"), env_for(tm, ctx, "x"))
    for v in range(16):
        assert m.accepts(encode_tuple((v,), 2, width=5))


def test_sentences(tm, ctx):
    assert evaluate_sentence(parse("E i . seq[i] = 1"), env_for(tm, ctx)) is True
    assert evaluate_sentence(parse("A i . seq[i] = 0"), env_for(tm, ctx)) is False
    assert evaluate_sentence(parse("A i . i = i"), env_for(tm, ctx)) is True


def test_evaluate_sentence_rejects_free_vars(tm, ctx):
    with pytest.raises(FormulaError):
        evaluate_sentence(parse("seq[x] = 1"), env_for(tm, ctx))


def test_env_free_var_mismatch(tm, ctx):
    with pytest.raises(FormulaError):
        compile_formula(parse("seq[x] = 1"), env_for(tm, ctx, "x", "y"))
    with pytest.raises(FormulaError):
        compile_formula(parse("x + y = 3"), env_for(tm, ctx, "x"))


def test_track_order_follows_declaration(tm, ctx):
    f = parse("x < y")
    m_xy = compile_formula(f, env_for(tm, ctx, "x", "y"))
    m_yx = compile_formula(f, env_for(tm, ctx, "y", "x"))
    w_12 = encode_tuple((1, 2), 2)
    assert m_xy.accepts(w_12)  # tracks (x, y) = (1, 2)
    assert not m_yx.accepts(w_12)  # tracks (y, x) = (1, 2) means x=2, y=1
    assert m_yx.accepts(encode_tuple((2, 1), 2))


def test_double_negation(tm, ctx):
    f = parse("seq[x] = seq[y] & x < y")
    m1 = compile_formula(f, env_for(tm, ctx, "x", "y"))
    m2 = compile_formula(Not(Not(f)), env_for(tm, ctx, "x", "y"))
    assert language_equal(m1, m2)


def test_quantifier_exchange(tm, ctx):
    inner = parse("x + y = z & seq[x] = seq[y]")
    f1 = Exists("x", Exists("y", inner))
    f2 = Exists("y", Exists("x", inner))
    m1 = compile_formula(f1, env_for(tm, ctx, "z"))
    m2 = compile_formula(f2, env_for(tm, ctx, "z"))
    assert language_equal(m1, m2)


def test_compiled_machines_zero_invariant(tm, ctx):
    from helpers import all_words_upto
    from critex.numeral import DigitWord

    m = compile_formula(parse("E j . x = j + j & seq[j] = 1"), env_for(tm, ctx, "x"))
    assert m.zero_invariant
    for w in all_words_upto(2, 1, 6):
        padded = DigitWord(2, 1, ((0,),) + w.symbols)
        assert m.accepts(w) == m.accepts(padded)


def _random_qf_formula(rng, names):
    def term(depth):
        r = rng.random()
        if depth <= 0 or r < 0.5:
            return Var(rng.choice(names)) if rng.random() < 0.8 else Const(rng.randrange(0, 4))
        return Add(term(depth - 1), term(depth - 1))

    def atom():
        r = rng.random()
        if r < 0.45:
            op = rng.choice(["==", "!=", "<", "<=", ">", ">="])
            return Cmp(op, term(1), term(1))
        if r < 0.8:
            return SeqEq(term(1), term(1))
        return SeqConst(term(1), rng.choice(["0", "1"]))

    def formula(depth):
        r = rng.random()
        if depth <= 0 or r < 0.4:
            return atom()
        if r < 0.55:
            return Not(formula(depth - 1))
        ctor = rng.choice([And, Or, Implies])
        return ctor(formula(depth - 1), formula(depth - 1))

    return formula(2)


def test_quantifier_free_soundness_fuzz(tm, ctx):
    rng = random.Random(3100)
    names = ["x", "y", "z"]
    seq_value = lambda n: tm.value(n)
    checked = 0
    for _ in range(25):
        f = _random_qf_formula(rng, names)
        used = tuple(sorted(free_vars(f)))
        if not used:
            continue
        m = compile_formula(f, CompilationEnv(used, tm, ctx))
        for _ in range(40):
            assignment = {v: rng.randrange(0, 64) for v in used}
            word = encode_tuple(tuple(assignment[v] for v in used), 2)
            expected = interpret(f, assignment, seq_value)
            assert m.accepts(word) == expected, (f, assignment)
            checked += 1
    assert checked >= 600


def test_bounded_quantifier_one_sided_fuzz(tm, ctx):
    # a bounded-box witness for E implies compiled truth; compiled A implies
    # the bounded-box restriction
    rng = random.Random(3101)
    seq_value = lambda n: tm.value(n)
    for _ in range(15):
        body = _random_qf_formula(rng, ["x", "y"])
        if free_vars(body) != {"x", "y"}:
            continue
        fe = Exists("x", Exists("y", body))
        fa = Forall("x", Forall("y", body))
        te = evaluate_sentence(fe, env_for(tm, ctx))
        ta = evaluate_sentence(fa, env_for(tm, ctx))
        box_e = interpret(fe, {}, seq_value, box=32)
        box_a = interpret(fa, {}, seq_value, box=32)
        if box_e:
            assert te
        if ta:
            assert box_a
        if not te:
            assert not box_e
        if not box_a:
            assert not ta
