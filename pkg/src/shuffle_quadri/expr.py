"""A small expression language over the shuffle quadri-algebra.

Grammar (whitespace is ignored)::

    expr    := ['-'] term (('+' | '-') term)*
    term    := integer '*' factor | factor
    factor  := call | wordlit | integer | '(' expr ')'
    call    := name '(' expr (',' expr)* ')'
    wordlit := one or more alphabet letters

The integer ``1`` is the empty word (so a bare integer ``n`` is ``n`` times
the empty word, and ``0`` is zero).  ``delta``, ``deltap`` and ``deltas``
return tensors; every other operator takes and returns word combinations.
Types are checked while parsing.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .hopf import conc, delta, delta_prime, delta_second, sh
from .quadri import ne, nw, prec, se, star, succ, sw, vee, wedge
from .core import DEFAULT_ALPHABET, Alphabet, Combination
from .errors import (ArityError, ExprSyntaxError, ExprTypeError, UnknownLetter,
                     UnknownOperator)

WORD, TENSOR = "word", "tensor"

# name -> (arity, implementation, result kind)
OPERATORS = {
    "sh": (2, sh, WORD),
    "conc": (2, conc, WORD),
    "ne": (2, ne, WORD),
    "se": (2, se, WORD),
    "sw": (2, sw, WORD),
    "nw": (2, nw, WORD),
    "succ": (2, succ, WORD),
    "prec": (2, prec, WORD),
    "vee": (2, vee, WORD),
    "wedge": (2, wedge, WORD),
    "star": (2, star, WORD),
    "delta": (1, delta, TENSOR),
    "deltap": (1, delta_prime, TENSOR),
    "deltas": (1, delta_second, TENSOR),
}


@dataclass(frozen=True)
class WordLiteral:
    text: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class IntLiteral:
    value: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Add:
    left: object
    right: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sub:
    left: object
    right: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ScalarMul:
    coef: IntLiteral
    expr: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: int = field(default=0, compare=False)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else None

    def expect(self, ch, what=None):
        if self.peek() != ch:
            raise ExprSyntaxError(self.i, what or repr(ch), self.peek())
        self.i += 1

    def expr(self):
        self.skip()
        start = self.i
        if self.peek() == "-":
            self.i += 1
            node = ScalarMul(IntLiteral(-1, start), self.term(), start)
        else:
            node = self.term()
        while self.peek() in ("+", "-"):
            op, pos = self.text[self.i], self.i
            self.i += 1
            right = self.term()
            node = Add(node, right, pos) if op == "+" else Sub(node, right, pos)
        return node

    def term(self):
        if self.peek() is not None and self.peek().isdigit():
            pos = self.i
            value = self.integer()
            if self.peek() == "*":
                self.i += 1
                return ScalarMul(IntLiteral(value, pos), self.factor(), pos)
            return WordLiteral("", pos) if value == 1 else IntLiteral(value, pos)
        return self.factor()

    def integer(self):
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        return int(self.text[start:self.i])

    def factor(self):
        ch = self.peek()
        pos = self.i
        if ch == "(":
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        if ch is not None and ch.isdigit():
            value = self.integer()
            return WordLiteral("", pos) if value == 1 else IntLiteral(value, pos)
        if ch is not None and ch.isalpha():
            start = self.i
            while self.i < len(self.text) and self.text[self.i].isalpha():
                self.i += 1
            name = self.text[start:self.i]
            if self.peek() == "(":
                return self.call(name, start)
            return WordLiteral(name, start)
        raise ExprSyntaxError(pos, "a word, an integer, a call or '('", ch)

    def call(self, name, pos):
        if name not in OPERATORS:
            raise UnknownOperator(name, pos)
        self.expect("(")
        args = [self.expr()]
        while self.peek() == ",":
            self.i += 1
            args.append(self.expr())
        self.expect(")", "',' or ')'")
        arity = OPERATORS[name][0]
        if len(args) != arity:
            raise ArityError(name, arity, len(args), pos)
        return Call(name, tuple(args), pos)


def kind(node) -> str:
    """Static type of an expression: ``"word"`` or ``"tensor"``."""
    if isinstance(node, (WordLiteral, IntLiteral)):
        return WORD
    if isinstance(node, ScalarMul):
        return kind(node.expr)
    if isinstance(node, (Add, Sub)):
        left, right = kind(node.left), kind(node.right)
        if left != right:
            raise ExprTypeError(f"cannot combine a {left} value with a {right} value",
                                node.pos)
        return left
    if isinstance(node, Call):
        for arg in node.args:
            if kind(arg) != WORD:
                raise ExprTypeError(f"{node.name} takes word combinations, "
                                    f"got a tensor argument", getattr(arg, "pos", None))
        return OPERATORS[node.name][2]
    raise TypeError(f"not an expression node: {node!r}")


def parse(text: str):
    """Parse and type-check ``text``; raises an :class:`ExpressionError` subclass."""
    p = _Parser(text)
    node = p.expr()
    if p.peek() is not None:
        raise ExprSyntaxError(p.i, "an operator or end of input", p.peek())
    kind(node)
    return node


def evaluate(node, alphabet: Alphabet = DEFAULT_ALPHABET):
    """Value of a parsed expression: a Combination or a TensorCombination."""
    if isinstance(node, str):
        node = parse(node)
    if isinstance(node, WordLiteral):
        try:
            return Combination.word(alphabet.word(node.text))
        except UnknownLetter as exc:
            raise UnknownLetter(exc.symbol, node.pos + exc.position) from None
    if isinstance(node, IntLiteral):
        return Combination.one().scale(node.value)
    if isinstance(node, ScalarMul):
        return evaluate(node.expr, alphabet).scale(node.coef.value)
    if isinstance(node, Add):
        return evaluate(node.left, alphabet) + evaluate(node.right, alphabet)
    if isinstance(node, Sub):
        return evaluate(node.left, alphabet) - evaluate(node.right, alphabet)
    if isinstance(node, Call):
        _, impl, _ = OPERATORS[node.name]
        return impl(*(evaluate(a, alphabet) for a in node.args))
    raise TypeError(f"not an expression node: {node!r}")


def format_value(value, alphabet: Alphabet = DEFAULT_ALPHABET) -> str:
    return value.format(alphabet)
