"""Expression parser for field elements and algebra elements.

Grammar (whitespace-insensitive):

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := '-' factor | atom ('^' ['-'] integer)?
    atom    := rational | '1i' | 'a' | monomial | '(' expr ')'
    monomial:= 'z' '^' '{' expr '}'
    rational:= integer ('/' integer)?

The generator of the active field is always written "a"; the imaginary
unit of coefficients is "1i" so it cannot clash with field elements.
Printing emits a canonical fully parenthesized form that reparses to an
equal tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, monomial as make_monomial
from .coeffs import EXACT, GaussRat
from .errors import ParseError
from .numberfield import FieldElement, NumberField

# -- AST -------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Gen:
    pass


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * /
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Mono:
    index: object


def print_ast(node) -> str:
    if isinstance(node, Num):
        q = node.value
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    if isinstance(node, Imag):
        return "1i"
    if isinstance(node, Gen):
        return "a"
    if isinstance(node, Neg):
        return f"(-{print_ast(node.arg)})"
    if isinstance(node, BinOp):
        rhs = print_ast(node.right)
        if node.op == "/" and isinstance(node.right, Num):
            # keep "a/p" from re-lexing as part of a rational literal
            rhs = f"({rhs})"
        return f"({print_ast(node.left)}{node.op}{rhs})"
    if isinstance(node, Pow):
        return f"({print_ast(node.base)}^{node.exponent})"
    if isinstance(node, Mono):
        return f"z^{{{print_ast(node.index)}}}"
    raise TypeError(f"not an AST node: {node!r}")


# -- tokenizer -------------------------------------------------------

_SYMBOLS = set("+-*/^(){}")


def _tokenize(src: str):
    tokens = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            if j < n and src[j] == "i":
                tokens.append(("imag", int(src[i:j]), i))
                i = j + 1
            else:
                tokens.append(("int", int(src[i:j]), i))
                i = j
        elif ch == "a":
            tokens.append(("gen", None, i))
            i += 1
        elif ch == "z":
            tokens.append(("z", None, i))
            i += 1
        elif ch in _SYMBOLS:
            tokens.append((ch, None, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", position=i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(
                f"unexpected token {tok[0]!r}", position=tok[2], expected=kind
            )
        self.pos += 1
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(
                f"trailing input {tok[0]!r}", position=tok[2], expected="end"
            )
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        if self.peek()[0] == "-":
            self.take()
            return Neg(self.factor())
        node = self.atom()
        if self.peek()[0] == "^" and self.tokens[self.pos + 1][0] != "{":
            self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            tok = self.take("int")
            node = Pow(node, sign * tok[1])
        return node

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            if self.peek()[0] == "/" and self.tokens[self.pos + 1][0] == "int":
                # a rational literal p/q binds tighter than division
                self.take()
                den = self.take("int")[1]
                if den == 0:
                    raise ParseError("zero denominator", position=tok[2])
                return Num(Fraction(tok[1], den))
            return Num(Fraction(tok[1]))
        if tok[0] == "imag":
            self.take()
            if tok[1] != 1:
                return BinOp("*", Num(Fraction(tok[1])), Imag())
            return Imag()
        if tok[0] == "gen":
            self.take()
            return Gen()
        if tok[0] == "z":
            self.take()
            self.take("^")
            self.take("{")
            inner = self.expr()
            self.take("}")
            return Mono(inner)
        if tok[0] == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(
            f"unexpected token {tok[0]!r}", position=tok[2],
            expected="rational, a, 1i, z^{...} or (",
        )


def parse_expression(src: str):
    """Source text to AST; raises ParseError with position info."""
    return _Parser(src).parse()


# -- evaluation: field elements --------------------------------------


def eval_element(node, field: NumberField) -> FieldElement:
    if isinstance(node, Num):
        return field.from_rational(node.value)
    if isinstance(node, Gen):
        return field.gen
    if isinstance(node, Imag):
        raise ParseError("1i is a coefficient, not a field element")
    if isinstance(node, Mono):
        raise ParseError("z^{...} is an algebra monomial, not a field element")
    if isinstance(node, Neg):
        return -eval_element(node.arg, field)
    if isinstance(node, Pow):
        base = eval_element(node.base, field)
        if node.exponent < 0:
            return base.inverse() ** (-node.exponent)
        return base ** node.exponent
    if isinstance(node, BinOp):
        a = eval_element(node.left, field)
        b = eval_element(node.right, field)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b.is_zero:
            raise ParseError("division by the zero element")
        return a / b
    raise TypeError(f"not an AST node: {node!r}")


def parse_element(src: str, field: NumberField) -> FieldElement:
    return eval_element(parse_expression(src), field)


# -- evaluation: algebra elements ------------------------------------
#
# Values during evaluation are either scalars (Gaussian rationals) or
# algebra elements.  A scalar mixed additively with an algebra element
# is promoted to its multiple of z^{0}; the product of two algebra
# elements is rejected as ambiguous (Cauchy or Dirichlet must be named
# through the API, not guessed from "*").


def _promote(value, field, mode):
    if isinstance(value, AlgebraElement):
        return value
    return AlgebraElement(field, mode, {field.zero: value})


def eval_algebra(node, field: NumberField, mode: str = EXACT):
    if isinstance(node, Num):
        return GaussRat(node.value)
    if isinstance(node, Imag):
        return GaussRat(Fraction(0), Fraction(1))
    if isinstance(node, Gen):
        raise ParseError("the generator is only meaningful inside z^{...}")
    if isinstance(node, Mono):
        idx = eval_element(node.index, field)
        return make_monomial(idx, 1, mode)
    if isinstance(node, Neg):
        v = eval_algebra(node.arg, field, mode)
        return v.scale(-1) if isinstance(v, AlgebraElement) else -v
    if isinstance(node, Pow):
        v = eval_algebra(node.base, field, mode)
        if isinstance(v, AlgebraElement):
            raise ParseError("powers of algebra elements are ambiguous")
        if node.exponent < 0:
            return _scalar_pow(GaussRat(Fraction(1)) / v, -node.exponent)
        return _scalar_pow(v, node.exponent)
    if isinstance(node, BinOp):
        a = eval_algebra(node.left, field, mode)
        b = eval_algebra(node.right, field, mode)
        a_alg, b_alg = isinstance(a, AlgebraElement), isinstance(b, AlgebraElement)
        if node.op in ("+", "-"):
            if a_alg or b_alg:
                a, b = _promote(a, field, mode), _promote(b, field, mode)
                return a + b if node.op == "+" else a - b
            return a + b if node.op == "+" else a - b
        if node.op == "*":
            if a_alg and b_alg:
                raise ParseError(
                    "product of algebra elements is ambiguous; "
                    "use the cauchy/dirichlet operations"
                )
            if a_alg:
                return a.scale(b)
            if b_alg:
                return b.scale(a)
            return a * b
        # division
        if b_alg:
            raise ParseError("division by an algebra element")
        if b.is_zero:
            raise ParseError("division by zero")
        if a_alg:
            return a.scale(GaussRat(Fraction(1)) / b)
        return a / b
    raise TypeError(f"not an AST node: {node!r}")


def _scalar_pow(v: GaussRat, n: int) -> GaussRat:
    out = GaussRat(Fraction(1))
    for _ in range(n):
        out = out * v
    return out


def parse_algebra(src: str, field: NumberField, mode: str = EXACT) -> AlgebraElement:
    value = eval_algebra(parse_expression(src), field, mode)
    return _promote(value, field, mode)
