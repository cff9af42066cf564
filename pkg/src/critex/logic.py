"""First-order predicate compiler over natural-number position variables.

Formulas support addition terms, the six comparisons, sequence-value atoms
over a Dfao, the boolean connectives and E/A quantifiers.  Compilation lowers
terms through the addition relation, turns E into erase+determinize over the
quantified track, A into the double complement, and minimizes after every
step.  The track order of a compiled machine is exactly the declared
free-variable order, never inferred from the formula.

ASCII grammar (parse):

    formula := 'E' var ('<' term)? '.' formula | 'A' var ('<' term)? '.' formula
             | formula '|' formula | formula '&' formula | formula '->' formula
             | '~' formula | '(' formula ')' | atom
    atom    := term ('='|'!='|'<'|'<='|'>'|'>=') term
             | 'seq[' term ']' '=' ( 'seq[' term ']' | const )
    term    := var | const | term '+' term

Precedence: ~ > & > | > ->; quantifiers extend to the right maximally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import arith
from .automaton import (
    Dfa,
    Dfao,
    complement,
    determinize,
    is_empty,
    lift_tracks,
    minimize,
    product,
    project,
    zero_saturate,
)
from .numeral import MSD, RadixContext


class FormulaError(ValueError):
    pass


class FormulaSyntaxError(FormulaError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CompileError(FormulaError):
    pass


# ---------------------------------------------------------------- AST


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


Term = Var | Const | Add


@dataclass(frozen=True)
class Cmp:
    op: str
    left: Term
    right: Term


@dataclass(frozen=True)
class SeqEq:
    left: Term
    right: Term


@dataclass(frozen=True)
class SeqConst:
    term: Term
    symbol: str


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


Formula = Cmp | SeqEq | SeqConst | Not | And | Or | Implies | Exists | Forall


def term_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Const):
        return set()
    return term_vars(t.left) | term_vars(t.right)


def free_vars(f: Formula) -> set[str]:
    if isinstance(f, Cmp):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, SeqEq):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, SeqConst):
        return term_vars(f.term)
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, (And, Or, Implies)):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, (Exists, Forall)):
        return free_vars(f.body) - {f.var}
    raise FormulaError(f"unknown node {f!r}")


def _check_scopes(f: Formula, active: frozenset, free_top: set[str]) -> None:
    if isinstance(f, (Exists, Forall)):
        if f.var in active:
            raise FormulaError(f"variable {f.var!r} shadows an enclosing binding")
        if f.var in free_top:
            raise FormulaError(f"variable {f.var!r} is both bound and free")
        _check_scopes(f.body, active | {f.var}, free_top)
    elif isinstance(f, Not):
        _check_scopes(f.body, active, free_top)
    elif isinstance(f, (And, Or, Implies)):
        _check_scopes(f.left, active, free_top)
        _check_scopes(f.right, active, free_top)


def validate_scopes(f: Formula) -> None:
    """No shadowing and no name both bound and free; sibling scopes may
    reuse a bound name (each binder projects its own track away)."""
    _check_scopes(f, frozenset(), free_vars(f))


# ---------------------------------------------------------------- parser

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<arrow>->)|(?P<le><=)|(?P<ge>>=)|(?P<ne>!=)"
    r"|(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[=<>~&|().\[\]+]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise FormulaSyntaxError(f"unexpected character {rest[0]!r}", pos)
        pos = m.end()
        for kind in ("arrow", "le", "ge", "ne", "num", "ident", "op"):
            val = m.group(kind)
            if val is not None:
                tokens.append((kind, val, m.start(kind)))
                break
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.next()
        if val != value:
            raise FormulaSyntaxError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> Formula:
        f = self.formula()
        kind, val, pos = self.peek()
        if kind != "eof":
            raise FormulaSyntaxError(f"trailing input starting with {val!r}", pos)
        validate_scopes(f)
        return f

    # precedence: -> (lowest, right assoc) < | < & < ~ (highest)
    def formula(self) -> Formula:
        left = self.or_level()
        kind, val, _ = self.peek()
        if kind == "arrow":
            self.next()
            right = self.formula()
            return Implies(left, right)
        return left

    def or_level(self) -> Formula:
        left = self.and_level()
        while True:
            kind, val, _ = self.peek()
            if val == "|":
                self.next()
                left = Or(left, self.and_level())
            else:
                return left

    def and_level(self) -> Formula:
        left = self.unary()
        while True:
            kind, val, _ = self.peek()
            if val == "&":
                self.next()
                left = And(left, self.unary())
            else:
                return left

    def unary(self) -> Formula:
        kind, val, pos = self.peek()
        if val == "~":
            self.next()
            return Not(self.unary())
        if kind == "ident" and val in ("E", "A"):
            return self.quantifier()
        if val == "(":
            # formula or term parenthesis: a '(' here always opens a formula
            self.next()
            f = self.formula()
            self.expect(")")
            return f
        return self.atom()

    def quantifier(self) -> Formula:
        kind, quant, pos = self.next()
        kind, name, pos = self.next()
        if kind != "ident" or name in ("E", "A", "seq") or name.startswith("_"):
            raise FormulaSyntaxError("expected a variable name after quantifier", pos)
        bound_term = None
        k2, v2, _ = self.peek()
        if v2 == "<":
            self.next()
            bound_term = self.term()
        self.expect(".")
        body = self.formula()
        if quant == "E":
            if bound_term is not None:
                body = And(Cmp("<", Var(name), bound_term), body)
            return Exists(name, body)
        if bound_term is not None:
            body = Implies(Cmp("<", Var(name), bound_term), body)
        return Forall(name, body)

    def atom(self) -> Formula:
        kind, val, pos = self.peek()
        if kind == "ident" and val == "seq":
            self.next()
            self.expect("[")
            t = self.term()
            self.expect("]")
            self.expect("=")
            k2, v2, p2 = self.peek()
            if k2 == "ident" and v2 == "seq":
                self.next()
                self.expect("[")
                t2 = self.term()
                self.expect("]")
                return SeqEq(t, t2)
            if k2 == "num":
                self.next()
                return SeqConst(t, v2)
            raise FormulaSyntaxError("expected seq[...] or a constant after 'seq[...] ='", p2)
        left = self.term()
        kind, val, pos = self.next()
        ops = {"=": "==", "!=": "!=", "<": "<", "<=": "<=", ">": ">", ">=": ">="}
        if val not in ops:
            raise FormulaSyntaxError(f"expected a comparison operator, found {val or 'end of input'!r}", pos)
        right = self.term()
        return Cmp(ops[val], left, right)

    def term(self) -> Term:
        left = self.term_atom()
        while True:
            kind, val, _ = self.peek()
            if val == "+":
                self.next()
                left = Add(left, self.term_atom())
            else:
                return left

    def term_atom(self) -> Term:
        kind, val, pos = self.next()
        if kind == "num":
            return Const(int(val))
        if kind == "ident":
            if val in ("E", "A", "seq") or val.startswith("_"):
                raise FormulaSyntaxError(f"{val!r} is reserved", pos)
            return Var(val)
        raise FormulaSyntaxError(f"expected a term, found {val or 'end of input'!r}", pos)


def parse(text: str) -> Formula:
    """Parse DSL text into a Formula; raises FormulaSyntaxError with position."""
    return _Parser(text).parse()


# ---------------------------------------------------------------- compiler


@dataclass
class CompilationEnv:
    """Declared free-variable order (the output track order), subject Dfao, base."""

    free_vars: tuple[str, ...]
    dfao: Dfao | None
    ctx: RadixContext

    def __post_init__(self):
        self.free_vars = tuple(self.free_vars)
        if len(set(self.free_vars)) != len(self.free_vars):
            raise CompileError("duplicate names in the free-variable list")
        if self.dfao is not None and self.dfao.k != self.ctx.k:
            raise CompileError("sequence base does not match the context base")


def bool_dfa(k: int, truth: bool) -> Dfa:
    """0-track machine standing for a closed subformula's truth value."""
    return Dfa(k, 0, [[0]], {0} if truth else set(), 0, MSD, True)


class _Compiler:
    def __init__(self, env: CompilationEnv):
        self.env = env
        self.k = env.ctx.k
        self.counter = 0

    def fresh(self) -> str:
        self.counter += 1
        return f"_t{self.counter}"

    # -- machine alignment -------------------------------------------------

    def lift(self, m: Dfa, mvars: tuple[str, ...], allvars: tuple[str, ...]) -> Dfa:
        positions = [allvars.index(v) for v in mvars]
        return lift_tracks(m, positions, len(allvars))

    def conjoin(self, parts: list[tuple[Dfa, tuple[str, ...]]]) -> tuple[Dfa, tuple[str, ...]]:
        out, vars_out = parts[0]
        for m, mv in parts[1:]:
            allvars = vars_out + tuple(v for v in mv if v not in vars_out)
            out = minimize(product(self.lift(out, vars_out, allvars), self.lift(m, mv, allvars), "and"))
            vars_out = allvars
        return out, vars_out

    def exists_out(self, m: Dfa, mvars: tuple[str, ...], name: str) -> tuple[Dfa, tuple[str, ...]]:
        if name not in mvars:
            return m, mvars
        if len(mvars) == 1:
            return bool_dfa(self.k, not is_empty(m)), ()
        idx = mvars.index(name)
        nfa = zero_saturate(project(m, idx))
        out = minimize(determinize(nfa))
        out = Dfa(out.k, out.tracks, out.trans, out.accept, out.initial, out.order, True)
        return out, mvars[:idx] + mvars[idx + 1 :]

    # -- terms and atoms ----------------------------------------------------

    def lower_term(self, t: Term, parts: list) -> str:
        if isinstance(t, Var):
            return t.name
        if isinstance(t, Const):
            aux = self.fresh()
            parts.append((arith.const_eq_rel(self.env.ctx, t.value), (aux,)))
            return aux
        if isinstance(t, Add):
            v1 = self.lower_term(t.left, parts)
            v2 = self.lower_term(t.right, parts)
            if v2 == v1:
                v2 = self.alias(v1, parts)
            aux = self.fresh()
            parts.append((arith.add_rel(self.env.ctx), (v1, v2, aux)))
            return aux
        raise CompileError(f"unknown term {t!r}")

    def alias(self, name: str, parts: list) -> str:
        aux = self.fresh()
        parts.append((arith.eq_rel(self.env.ctx), (name, aux)))
        return aux

    def atom(self, core: Dfa, slots: tuple[str, ...], parts: list) -> tuple[Dfa, tuple[str, ...]]:
        machine, mvars = self.conjoin([(core, slots)] + parts)
        for _, pv in parts:
            for v in pv:
                if v.startswith("_t"):
                    machine, mvars = self.exists_out(machine, mvars, v)
        return machine, mvars

    def compile(self, f: Formula) -> tuple[Dfa, tuple[str, ...]]:
        env = self.env
        if isinstance(f, Cmp):
            parts: list = []
            v1 = self.lower_term(f.left, parts)
            v2 = self.lower_term(f.right, parts)
            if v2 == v1:
                v2 = self.alias(v1, parts)
            return self.atom(arith.cmp_rel(env.ctx, f.op), (v1, v2), parts)
        if isinstance(f, SeqEq):
            if env.dfao is None:
                raise CompileError("formula uses seq[...] but no sequence was supplied")
            parts = []
            v1 = self.lower_term(f.left, parts)
            v2 = self.lower_term(f.right, parts)
            if v2 == v1:
                v2 = self.alias(v1, parts)
            return self.atom(arith.seq_eq(env.dfao), (v1, v2), parts)
        if isinstance(f, SeqConst):
            if env.dfao is None:
                raise CompileError("formula uses seq[...] but no sequence was supplied")
            parts = []
            v = self.lower_term(f.term, parts)
            return self.atom(arith.seq_const(env.dfao, f.symbol), (v,), parts)
        if isinstance(f, Not):
            m, mv = self.compile(f.body)
            return complement(m), mv
        if isinstance(f, And):
            return self.conjoin([self.compile(f.left), self.compile(f.right)])
        if isinstance(f, Or):
            m1, v1 = self.compile(f.left)
            m2, v2 = self.compile(f.right)
            allvars = v1 + tuple(v for v in v2 if v not in v1)
            out = minimize(product(self.lift(m1, v1, allvars), self.lift(m2, v2, allvars), "or"))
            return out, allvars
        if isinstance(f, Implies):
            return self.compile(Or(Not(f.left), f.right))
        if isinstance(f, Exists):
            m, mv = self.compile(f.body)
            return self.exists_out(m, mv, f.var)
        if isinstance(f, Forall):
            m, mv = self.compile(f.body)
            if f.var not in mv:
                return m, mv
            m, mv = self.exists_out(complement(m), mv, f.var)
            return complement(m), mv
        raise CompileError(f"unknown formula node {f!r}")


def compile_formula(f: Formula, env: CompilationEnv) -> Dfa | bool:
    """Compile to a machine over the declared free-variable tracks.

    A closed formula compiles to its truth value.
    """
    validate_scopes(f)
    fv = free_vars(f)
    if fv != set(env.free_vars):
        raise CompileError(
            f"free variables {sorted(fv)} do not match the declared list {list(env.free_vars)}"
        )
    comp = _Compiler(env)
    m, mvars = comp.compile(f)
    if not env.free_vars:
        if mvars:
            raise CompileError("closed formula left open tracks")
        if isinstance(m, Dfa):
            return not is_empty(m)
        return bool(m)
    if set(mvars) != set(env.free_vars):
        raise CompileError(f"compiled tracks {mvars} do not cover {env.free_vars}")
    m = comp.lift(m, mvars, env.free_vars) if mvars != env.free_vars else m
    m = Dfa(m.k, m.tracks, m.trans, m.accept, m.initial, m.order, True)
    return minimize(m)


def evaluate_sentence(f: Formula, env: CompilationEnv) -> bool:
    if free_vars(f):
        raise CompileError(f"sentence has free variables: {sorted(free_vars(f))}")
    out = compile_formula(f, CompilationEnv((), env.dfao, env.ctx))
    assert isinstance(out, bool)
    return out


# ---------------------------------------------------------------- direct evaluation (test oracle)


def eval_term(t: Term, assignment: dict[str, int]) -> int:
    if isinstance(t, Var):
        return assignment[t.name]
    if isinstance(t, Const):
        return t.value
    return eval_term(t.left, assignment) + eval_term(t.right, assignment)


_OPS = {
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


def interpret(f: Formula, assignment: dict[str, int], seq_value, box: int | None = None) -> bool:
    """Direct recursive evaluation; quantifiers range over 0..box-1.

    With box=None, quantified formulas are rejected, making this an exact
    oracle for quantifier-free bodies.
    """
    if isinstance(f, Cmp):
        return _OPS[f.op](eval_term(f.left, assignment), eval_term(f.right, assignment))
    if isinstance(f, SeqEq):
        return seq_value(eval_term(f.left, assignment)) == seq_value(eval_term(f.right, assignment))
    if isinstance(f, SeqConst):
        return seq_value(eval_term(f.term, assignment)) == f.symbol
    if isinstance(f, Not):
        return not interpret(f.body, assignment, seq_value, box)
    if isinstance(f, And):
        return interpret(f.left, assignment, seq_value, box) and interpret(f.right, assignment, seq_value, box)
    if isinstance(f, Or):
        return interpret(f.left, assignment, seq_value, box) or interpret(f.right, assignment, seq_value, box)
    if isinstance(f, Implies):
        return (not interpret(f.left, assignment, seq_value, box)) or interpret(
            f.right, assignment, seq_value, box
        )
    if isinstance(f, Exists):
        if box is None:
            raise FormulaError("direct evaluation of quantifiers needs a box")
        return any(interpret(f.body, {**assignment, f.var: v}, seq_value, box) for v in range(box))
    if isinstance(f, Forall):
        if box is None:
            raise FormulaError("direct evaluation of quantifiers needs a box")
        return all(interpret(f.body, {**assignment, f.var: v}, seq_value, box) for v in range(box))
    raise FormulaError(f"unknown formula node {f!r}")
