"""Expression language: tokens, syntax tree, recursive-descent parser, printer.

Grammar::

    equality := expr ['==' expr]
    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := atom ['^' ['-'] INT]
    atom     := INT | NAME | FUNC '(' args ')' | '(' expr ')' | '-' factor

Multiplication is never implicit.  ``zs`` and ``ws`` may also be written
``z*`` and ``w*`` when the star is directly attached and is not followed by
an operand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

GENERATORS = ("q", "z", "zs", "x", "y", "w", "ws", "v")
FUNCTIONS = ("d", "star", "sigma", "del", "delbar", "deg", "proj",
             "integral", "reduce", "div2")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int, expected=()):
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.expected = tuple(sorted(set(expected)))
        where = f"line {self.line}, column {self.column}"
        hint = f"; expected one of: {' '.join(self.expected)}" if self.expected else ""
        super().__init__(f"{message} at {where}{hint}")


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple["Expr", ...]


@dataclass(frozen=True)
class Eq:
    lhs: "Expr"
    rhs: "Expr"


Expr = Union[Num, Sym, Neg, BinOp, Pow, Call, Eq]


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, OP, END
    text: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(==|[-+*/^(),]))")
_OPERAND_START = re.compile(r"\s*[A-Za-z_0-9(]")


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if not m:
            rest = text[pos:]
            if not rest.strip():
                break
            bad = pos + (len(rest) - len(rest.lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        if m.group(1) is not None:
            tokens.append(Token("INT", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            name, start = m.group(2), m.start(2)
            end = m.end()
            # z* and w* aliases: a directly attached star with no operand after it
            if (name in ("z", "w") and text.startswith("*", end)
                    and not _OPERAND_START.match(text, end + 1)):
                tokens.append(Token("NAME", name + "s", start))
                pos = end + 1
                continue
            tokens.append(Token("NAME", name, start))
        else:
            tokens.append(Token("OP", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(Token("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message: str, expected=()):
        t = self.tok
        found = "end of input" if t.kind == "END" else repr(t.text)
        raise ParseError(f"{message} (found {found})", self.text, t.pos, expected)

    def expect(self, text: str):
        if self.tok.kind == "OP" and self.tok.text == text:
            return self.advance()
        self.error("syntax error", (text,))

    def at(self, *ops: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text in ops

    def parse(self) -> Expr:
        node = self.expr()
        if self.at("=="):
            self.advance()
            node = Eq(node, self.expr())
        if self.tok.kind != "END":
            self.error("unexpected token", ("+", "-", "*", "/", "^", "==", "<end>"))
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.at("+", "-"):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.at("*", "/"):
            op = self.advance().text
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        node = self.atom()
        if self.at("^"):
            self.advance()
            sign = 1
            if self.at("-"):
                self.advance()
                sign = -1
            if self.tok.kind != "INT":
                self.error("exponent must be an integer literal", ("<int>", "-"))
            node = Pow(node, sign * int(self.advance().text))
        return node

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "INT":
            self.advance()
            return Num(int(t.text))
        if t.kind == "NAME":
            self.advance()
            if t.text in FUNCTIONS:
                self.expect("(")
                args = [self.expr()]
                while self.at(","):
                    self.advance()
                    args.append(self.expr())
                self.expect(")")
                return Call(t.text, tuple(args))
            if t.text in GENERATORS:
                return Sym(t.text)
            self.i -= 1
            self.error(f"unknown name {t.text!r}", GENERATORS + FUNCTIONS)
        if self.at("("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if self.at("-"):
            self.advance()
            return Neg(self.factor())
        self.error("syntax error", ("<int>", "<name>", "(", "-"))


def parse(text: str) -> Expr:
    """Parse one expression (optionally an equality) into a syntax tree."""
    return _Parser(text).parse()


def _is_atomic(node: Expr) -> bool:
    return isinstance(node, (Num, Sym, Call))


def to_text(node: Expr) -> str:
    """Print a tree so that ``parse(to_text(t)) == t``."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Call):
        return f"{node.func}({', '.join(to_text(a) for a in node.args)})"
    if isinstance(node, Neg):
        inner = to_text(node.operand)
        if isinstance(node.operand, (BinOp, Eq)):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, Pow):
        base = to_text(node.base)
        if not _is_atomic(node.base):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, BinOp):
        left = to_text(node.left)
        right = to_text(node.right)
        # operators are left-associative; * and / bind tighter than + and -
        if node.op in "*/" and isinstance(node.left, BinOp) and node.left.op in "+-":
            left = f"({left})"
        if isinstance(node.right, BinOp) and (node.op in "*/" or node.right.op in "+-"):
            right = f"({right})"
        return f"{left} {node.op} {right}"
    if isinstance(node, Eq):
        return f"{to_text(node.lhs)} == {to_text(node.rhs)}"
    raise TypeError(f"not an expression node: {node!r}")
