"""Evaluate expression trees to canonical values.

Values are Scalar, DiscElement, OneForm, TwoForm, FormZero (forms of degree
three and up), CircleElement (from ``proj``), int (from ``deg``), bool (from
``==``) and CokernelDecomposition (from ``reduce``).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import calculus, disc, integral
from .calculus import CircleElement, FormZero, OneForm, TwoForm
from .disc import DiscElement, monomial
from .expr import BinOp, Call, Eq, Expr, Neg, Num, Pow, Sym, parse
from .integral import CokernelDecomposition, CotangentFunctional
from .report import align, same_kind
from .scalar import Scalar, ScalarDivisionByZero, q_pow


class EvalError(TypeError):
    """An ill-typed expression."""


class KindMismatch(EvalError):
    """The two sides of an equality have different kinds."""


FORM_KINDS = (Scalar, DiscElement, OneForm, TwoForm, FormZero)


@dataclass
class CheckResult:
    equal: bool
    lhs: object
    rhs: object

    def __str__(self):
        if self.equal:
            return f"true: {self.lhs}"
        return f"false\n  lhs = {self.lhs}\n  rhs = {self.rhs}"


def kind_name(value) -> str:
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, int):
        return "integer"
    return {
        Scalar: "scalar", DiscElement: "algebra element", OneForm: "one-form",
        TwoForm: "two-form", FormZero: "form of degree > 2",
        CircleElement: "circle element",
        CokernelDecomposition: "decomposition",
    }.get(type(value), type(value).__name__)


class Evaluator:
    """Evaluates trees; ``cone_order`` is the N used for the generator y."""

    def __init__(self, cone_order: int = 2):
        self.cone_order = cone_order

    def __call__(self, node: Expr):
        return self.eval(node)

    def eval(self, node: Expr):
        if isinstance(node, Num):
            return Scalar(node.value)
        if isinstance(node, Sym):
            return self._symbol(node.name)
        if isinstance(node, Neg):
            return self._neg(self.eval(node.operand))
        if isinstance(node, BinOp):
            a, b = self.eval(node.left), self.eval(node.right)
            if node.op == "+":
                return self._add(a, b)
            if node.op == "-":
                return self._add(a, self._neg(b))
            if node.op == "*":
                return self._mul(a, b)
            return self._div(a, b)
        if isinstance(node, Pow):
            return self._pow(self.eval(node.base), node.exponent)
        if isinstance(node, Call):
            return self._call(node.func, [self.eval(a) for a in node.args])
        if isinstance(node, Eq):
            return self.check(node).equal
        raise EvalError(f"cannot evaluate {node!r}")

    def check(self, node: Expr) -> CheckResult:
        if not isinstance(node, Eq):
            raise EvalError("check needs an equality 'lhs == rhs'")
        lhs, rhs = self.eval(node.lhs), self.eval(node.rhs)
        if not isinstance(lhs, FORM_KINDS + (CircleElement,)) or \
                not isinstance(rhs, FORM_KINDS + (CircleElement,)):
            raise KindMismatch(f"cannot compare {kind_name(lhs)} with {kind_name(rhs)}")
        if not same_kind(lhs, rhs):
            raise KindMismatch(f"cannot compare {kind_name(lhs)} with {kind_name(rhs)}")
        a, b = align(lhs, rhs)
        return CheckResult(_equal(a, b), lhs, rhs)

    def _symbol(self, name: str):
        table = {
            "q": lambda: q_pow(1),
            "z": lambda: disc.Z,
            "zs": lambda: disc.ZS,
            "x": lambda: disc.X,
            "y": lambda: monomial(0, self.cone_order),
            "w": lambda: calculus.W,
            "ws": lambda: calculus.WS,
            "v": lambda: calculus.V,
        }
        return table[name]()

    @staticmethod
    def _form(value, what: str):
        if not isinstance(value, FORM_KINDS):
            raise EvalError(f"{what} is not defined on a {kind_name(value)}")
        return value

    def _neg(self, a):
        a = self._form(a, "negation")
        return FormZero(a.degree) if isinstance(a, FormZero) else -a

    def _add(self, a, b):
        a, b = self._form(a, "addition"), self._form(b, "addition")
        if isinstance(a, Scalar) and isinstance(b, Scalar):
            return a + b
        a, b = align(a, b)
        if type(a) is not type(b):
            raise EvalError(f"cannot add {kind_name(a)} and {kind_name(b)}")
        if isinstance(a, FormZero):
            return a if a.degree == b.degree else _mixed_zero(a, b)
        return a + b

    def _mul(self, a, b):
        a, b = self._form(a, "multiplication"), self._form(b, "multiplication")
        if isinstance(a, Scalar) and isinstance(b, Scalar):
            return a * b
        if isinstance(a, FormZero) or isinstance(b, FormZero):
            return FormZero(calculus.grade(a) + calculus.grade(b))
        return calculus.product(a, b)

    def _div(self, a, b):
        if not isinstance(b, Scalar):
            raise EvalError(f"can only divide by a scalar, not a {kind_name(b)}")
        if not b:
            raise ScalarDivisionByZero("division by zero")
        return self._mul(self._form(a, "division"), b.inv())

    def _pow(self, a, n: int):
        a = self._form(a, "a power")
        if isinstance(a, Scalar):
            return a ** n
        if isinstance(a, DiscElement):
            if n < 0:
                # z^-n means zs^n, and more generally (z^l)^-n = z^(-l n)
                keys = list(a.terms)
                if len(keys) == 1 and keys[0][0] == 0 and a.terms[keys[0]].is_one():
                    return monomial(0, keys[0][1] * n)
                raise EvalError("negative powers are only defined for powers of z and zs")
            return a ** n
        if n < 0:
            raise EvalError("negative powers of forms are undefined")
        if n == 0:
            return disc.ONE_ELEMENT
        out = a
        for _ in range(n - 1):
            out = self._mul(out, a)
        return out

    def _call(self, func: str, args: list):
        arity = {"sigma": (1, 2), "div2": (2, 2)}.get(func, (1, 1))
        if not arity[0] <= len(args) <= arity[1]:
            raise EvalError(f"{func} takes {arity[0]}..{arity[1]} arguments, got {len(args)}")
        a = args[0]
        if func == "d":
            return calculus.d(self._form(a, "d"))
        if func == "star":
            return calculus.star_any(self._form(a, "star"))
        if func == "sigma":
            p = 1
            if len(args) == 2:
                p = _integer(args[1], "the power of sigma")
            return disc.sigma_pow(self._algebra(a, "sigma"), p)
        if func == "del":
            return disc.partial(self._algebra(a, "del"))
        if func == "delbar":
            return disc.partial_bar(self._algebra(a, "delbar"))
        if func == "deg":
            try:
                return self._degree(a)
            except disc.DegreeError as exc:
                raise EvalError(str(exc)) from None
        if func == "proj":
            return calculus.project_circle(self._algebra(a, "proj"))
        if func == "integral":
            return integral.integral_lambda(self._algebra(a, "integral"))
        if func == "reduce":
            return integral.cokernel_reduce(self._algebra(a, "reduce"))
        if func == "div2":
            f = CotangentFunctional(self._algebra(args[0], "div2"),
                                    self._algebra(args[1], "div2"))
            return integral.divergence(f)
        raise EvalError(f"unknown function {func}")

    def _algebra(self, a, what: str) -> DiscElement:
        if isinstance(a, Scalar):
            return DiscElement.scalar(a)
        if isinstance(a, DiscElement):
            return a
        raise EvalError(f"{what} needs an algebra element, not a {kind_name(a)}")

    def _degree(self, a) -> int:
        if isinstance(a, Scalar):
            a = DiscElement.scalar(a)
        if isinstance(a, DiscElement):
            return disc.deg(a)
        if isinstance(a, OneForm):
            return calculus.oneform_degree(a)
        if isinstance(a, TwoForm):
            return calculus.twoform_degree(a)
        raise EvalError(f"deg is not defined on a {kind_name(a)}")


def _integer(value, what: str) -> int:
    if isinstance(value, Scalar) and value.is_rational():
        f = value.to_fraction()
        if f.denominator == 1:
            return int(f)
    raise EvalError(f"{what} must be an integer")


def _mixed_zero(a: FormZero, b: FormZero):
    raise EvalError(f"cannot add forms of degree {a.degree} and {b.degree}")


def _equal(a, b) -> bool:
    if isinstance(a, FormZero):
        return isinstance(b, FormZero)
    return a == b


def evaluate(text_or_tree, cone_order: int = 2):
    tree = parse(text_or_tree) if isinstance(text_or_tree, str) else text_or_tree
    return Evaluator(cone_order).eval(tree)


def check(text_or_tree, cone_order: int = 2) -> CheckResult:
    tree = parse(text_or_tree) if isinstance(text_or_tree, str) else text_or_tree
    return Evaluator(cone_order).check(tree)


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
