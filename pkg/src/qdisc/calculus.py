"""One- and two-forms on the quantum disc.

One-forms are pairs of left coefficients ``p w + r ws`` (``w`` and ``ws``
freely generate the left module; ``w a = sigma(a) w``).  Two-forms are
``f v`` where ``f`` is a Laurent polynomial in the circle variable: ``x``
kills ``v`` from both sides, so only the image of a coefficient in the
quotient by the ideal generated by ``x`` survives.  Right coefficients are
moved left with ``v a = sigma^2(a) v``.  Forms of degree three and higher
vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from . import disc
from .disc import DiscElement, lift, monomial
from .scalar import ONE, ZERO, Scalar, ScalarLike, q_pow


class CircleElement:
    """Laurent polynomial ``sum c_l t^l`` with Scalar coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[int, ScalarLike] | None = None):
        clean: dict[int, Scalar] = {}
        for l, c in (terms or {}).items():
            c = Scalar.coerce(c)
            if c:
                clean[l] = c
        self.terms = clean
        self._hash = None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, CircleElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return CircleElement({l: -c for l, c in self.terms.items()})

    def __add__(self, other: "CircleElement") -> "CircleElement":
        out = dict(self.terms)
        for l, c in other.terms.items():
            out[l] = out.get(l, ZERO) + c
        return CircleElement(out)

    def __sub__(self, other: "CircleElement") -> "CircleElement":
        return self + (-other)

    def __mul__(self, other) -> "CircleElement":
        if isinstance(other, (Scalar, int)) and not isinstance(other, bool):
            c = Scalar.coerce(other)
            return CircleElement({l: c * v for l, v in self.terms.items()})
        out: dict[int, Scalar] = {}
        for l1, c1 in self.terms.items():
            for l2, c2 in other.terms.items():
                out[l1 + l2] = out.get(l1 + l2, ZERO) + c1 * c2
        return CircleElement(out)

    __rmul__ = __mul__

    def to_disc(self) -> DiscElement:
        """The representative ``sum c_l z^l`` in the disc algebra."""
        return DiscElement({(0, l): c for l, c in self.terms.items()})

    def __repr__(self):
        return f"CircleElement({self})"

    def __str__(self):
        return str(self.to_disc())


def project_circle(a: DiscElement) -> CircleElement:
    """Image of ``a`` in the quotient by the ideal generated by x."""
    return CircleElement({l: c for (k, l), c in a.terms.items() if k == 0})


@dataclass(frozen=True)
class OneForm:
    """``omega * w + omega_star * ws`` with left coefficients."""

    omega: DiscElement = field(default_factory=DiscElement)
    omega_star: DiscElement = field(default_factory=DiscElement)

    def is_zero(self) -> bool:
        return self.omega.is_zero() and self.omega_star.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other: "OneForm") -> "OneForm":
        if not isinstance(other, OneForm):
            return NotImplemented
        return OneForm(self.omega + other.omega, self.omega_star + other.omega_star)

    def __sub__(self, other: "OneForm") -> "OneForm":
        if not isinstance(other, OneForm):
            return NotImplemented
        return OneForm(self.omega - other.omega, self.omega_star - other.omega_star)

    def __neg__(self) -> "OneForm":
        return OneForm(-self.omega, -self.omega_star)

    def scale(self, c: ScalarLike) -> "OneForm":
        return OneForm(self.omega.scale(c), self.omega_star.scale(c))

    def __str__(self):
        parts = []
        for coeff, gen in ((self.omega, "w"), (self.omega_star, "ws")):
            if coeff.is_zero():
                continue
            parts.append(_times(coeff, gen))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


@dataclass(frozen=True)
class TwoForm:
    """``coeff * v`` with ``coeff`` a circle element."""

    coeff: CircleElement = field(default_factory=CircleElement)

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other: "TwoForm") -> "TwoForm":
        if not isinstance(other, TwoForm):
            return NotImplemented
        return TwoForm(self.coeff + other.coeff)

    def __sub__(self, other: "TwoForm") -> "TwoForm":
        if not isinstance(other, TwoForm):
            return NotImplemented
        return TwoForm(self.coeff - other.coeff)

    def __neg__(self) -> "TwoForm":
        return TwoForm(-self.coeff)

    def scale(self, c: ScalarLike) -> "TwoForm":
        return TwoForm(self.coeff * Scalar.coerce(c))

    def __str__(self):
        if self.coeff.is_zero():
            return "0"
        return _times(self.coeff.to_disc(), "v")


def _times(coeff: DiscElement, gen: str) -> str:
    if coeff == 1:
        return gen
    if coeff == -1:
        return f"-{gen}"
    text = str(coeff)
    # a single term prints as a product and needs no brackets
    return f"{text}*{gen}" if len(coeff.terms) == 1 else f"({text})*{gen}"


W = OneForm(disc.ONE_ELEMENT, DiscElement())
WS = OneForm(DiscElement(), disc.ONE_ELEMENT)
V = TwoForm(CircleElement({0: ONE}))


def two_form(a: DiscElement) -> TwoForm:
    """The two-form ``a v``."""
    return TwoForm(project_circle(a))


def d0(a: DiscElement) -> OneForm:
    a = lift(a)
    return OneForm(disc.partial(a), disc.partial_bar(a))


def oneform_right_mul(nu: OneForm, a: DiscElement) -> OneForm:
    s = disc.sigma(lift(a))
    return OneForm(nu.omega * s, nu.omega_star * s)


def oneform_left_mul(a: DiscElement, nu: OneForm) -> OneForm:
    a = lift(a)
    return OneForm(a * nu.omega, a * nu.omega_star)


def star1(nu: OneForm) -> OneForm:
    """(p w + r ws)* = sigma(r*) w + sigma(p*) ws."""
    return OneForm(disc.sigma(disc.star(nu.omega_star)),
                   disc.sigma(disc.star(nu.omega)))


def twoform_left_mul(a: DiscElement, w: TwoForm) -> TwoForm:
    return TwoForm(project_circle(lift(a)) * w.coeff)


def twoform_right_mul(w: TwoForm, a: DiscElement) -> TwoForm:
    return TwoForm(w.coeff * project_circle(disc.sigma_pow(lift(a), 2)))


def star2(w: TwoForm) -> TwoForm:
    """(f v)* = -v f* = -sigma^2(f*) v."""
    return TwoForm(CircleElement(
        {-l: -c * q_pow(-4 * l) for l, c in w.coeff.terms.items()}))


def _basic_products() -> dict[tuple[str, str], TwoForm]:
    ratio = (q_pow(2) - 1) / (q_pow(4) + 1)
    return {
        ("w", "w"): TwoForm(CircleElement({4: q_pow(12) * ratio})),
        ("w", "ws"): TwoForm(CircleElement({0: ONE})),
        ("ws", "w"): TwoForm(CircleElement({0: -q_pow(6)})),
        ("ws", "ws"): TwoForm(CircleElement({-4: q_pow(-4) * ratio})),
    }


# products of the generating one-forms and their differentials in terms of v;
# these six relations define the two-forms
BASIC_PRODUCTS = _basic_products()
D_OMEGA = TwoForm(CircleElement({2: q_pow(8)}))
D_OMEGA_STAR = TwoForm(CircleElement({-2: -ONE}))


def wedge(nu: OneForm, mu: OneForm) -> TwoForm:
    """Product of two one-forms.

    (p w + r ws)(s w + t ws) = p sigma(s) w w + p sigma(t) w ws + ...
    """
    total = TwoForm()
    left = {"w": nu.omega, "ws": nu.omega_star}
    right = {"w": disc.sigma(mu.omega), "ws": disc.sigma(mu.omega_star)}
    for g1, a in left.items():
        if a.is_zero():
            continue
        pa = project_circle(a)
        if pa.is_zero():
            continue
        for g2, b in right.items():
            if b.is_zero():
                continue
            coeff = pa * project_circle(b)
            if coeff:
                total = total + TwoForm(coeff * BASIC_PRODUCTS[g1, g2].coeff)
    return total


def d1(nu: OneForm) -> TwoForm:
    """d(p w + r ws) = dp w + p dw + dr ws + r dws."""
    return (wedge(d0(nu.omega), W)
            + twoform_left_mul(nu.omega, D_OMEGA)
            + wedge(d0(nu.omega_star), WS)
            + twoform_left_mul(nu.omega_star, D_OMEGA_STAR))


def d2(w: TwoForm) -> "FormZero":
    return FormZero(3)


@dataclass(frozen=True)
class FormZero:
    """The zero form of degree > 2."""

    degree: int

    def is_zero(self) -> bool:
        return True

    def __bool__(self):
        return False

    def __str__(self):
        return "0"


def oneform_degree(nu: OneForm) -> int:
    """Z-degree of a homogeneous nonzero one-form (deg w = 2, deg ws = -2)."""
    degrees = {l + 2 for _, l in nu.omega.terms} | {l - 2 for _, l in nu.omega_star.terms}
    if len(degrees) != 1:
        raise disc.DegreeError(f"{nu} has no single degree")
    return degrees.pop()


def twoform_degree(w: TwoForm) -> int:
    degrees = set(w.coeff.terms)
    if len(degrees) != 1:
        raise disc.DegreeError(f"{w} has no single degree")
    return degrees.pop()


def z_pow(l: int) -> DiscElement:
    return monomial(0, l)


def grade(value) -> int:
    """Form degree of a value: 0 for scalars and disc elements."""
    if isinstance(value, (Scalar, int, DiscElement)):
        return 0
    if isinstance(value, OneForm):
        return 1
    if isinstance(value, TwoForm):
        return 2
    if isinstance(value, FormZero):
        return value.degree
    raise TypeError(f"not a form: {value!r}")


def product(a, b):
    """Product of two forms of any degree, dispatching on degree."""
    if isinstance(a, (Scalar, int)) and not isinstance(a, bool):
        return b * a if isinstance(b, (Scalar, int, DiscElement)) else b.scale(a)
    if isinstance(b, (Scalar, int)) and not isinstance(b, bool):
        return a * b if isinstance(a, DiscElement) else a.scale(b)
    ga, gb = grade(a), grade(b)
    if ga + gb > 2:
        return FormZero(ga + gb)
    if ga == 0 and gb == 0:
        return a * b
    if ga == 0:
        return oneform_left_mul(a, b) if gb == 1 else twoform_left_mul(a, b)
    if gb == 0:
        return oneform_right_mul(a, b) if ga == 1 else twoform_right_mul(a, b)
    return wedge(a, b)


def mul_all(*factors):
    """Left-to-right product of several forms."""
    out = factors[0]
    for f in factors[1:]:
        out = product(out, f)
    return out


def d(value):
    """Exterior derivative on a form of any degree."""
    g = grade(value)
    if g == 0:
        return d0(lift(value))
    if g == 1:
        return d1(value)
    return FormZero(g + 1)


def star_any(value):
    """The *-operation on a form of any degree."""
    if isinstance(value, Scalar):
        return value
    g = grade(value)
    if g == 0:
        return disc.star(lift(value))
    if g == 1:
        return star1(value)
    if g == 2:
        return star2(value)
    return value
