"""Quantum cones: the subalgebras of degree divisible by N.

Besides membership tests and the generator relations for ``y = z^N``, this
module produces explicit Bezout certificates showing that ``zs^2 w``,
``z^(N-2) w`` and ``v`` belong to the calculus generated by cone elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import disc
from .calculus import (
    OneForm, TwoForm, V, d0, oneform_left_mul, oneform_right_mul, wedge,
)
from .disc import ONE_ELEMENT, X, DiscElement, monomial
from .report import CheckRecord, Report, compare, run_checks
from .scalar import ONE, ZERO, Scalar, ScalarLike, q_int, q_pow


class ConeError(ValueError):
    pass


@dataclass(frozen=True)
class ConeParams:
    N: int

    def __post_init__(self):
        if self.N < 2:
            raise ConeError(f"cone order must be at least 2, got {self.N}")

    @property
    def y(self) -> DiscElement:
        return monomial(0, self.N)

    @property
    def y_star(self) -> DiscElement:
        return monomial(0, -self.N)


def _params(P) -> ConeParams:
    return P if isinstance(P, ConeParams) else ConeParams(int(P))


class PolyX:
    """Polynomial in x with coefficients in Q(q); ``coeffs[i]`` multiplies x^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[ScalarLike] | Mapping[int, ScalarLike] = ()):
        if isinstance(coeffs, Mapping):
            n = max(coeffs, default=-1) + 1
            coeffs = [coeffs.get(i, ZERO) for i in range(n)]
        out = [Scalar.coerce(c) for c in coeffs]
        while out and not out[-1]:
            out.pop()
        self.coeffs = tuple(out)

    @classmethod
    def from_disc(cls, a: DiscElement, l: int = 0) -> "PolyX":
        """Coefficients of x^k z^l in ``a``; other degrees must be absent."""
        if any(ll != l for _, ll in a.terms):
            raise ConeError(f"{a} is not of the form p(x) z^{l}")
        return cls({k: c for (k, _), c in a.terms.items()})

    @classmethod
    def from_roots_form(cls, exponents: Sequence[int], lead: ScalarLike = 1) -> "PolyX":
        """lead * prod_e (1 - q^e x)."""
        return cls(disc.x_product(tuple(exponents))) * Scalar.coerce(lead)

    def to_disc(self, l: int = 0) -> DiscElement:
        return DiscElement({(k, l): c for k, c in enumerate(self.coeffs)})

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Scalar:
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, PolyX):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "PolyX") -> "PolyX":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return PolyX([u + v for u, v in zip(a, b)])

    def __neg__(self) -> "PolyX":
        return PolyX([-c for c in self.coeffs])

    def __sub__(self, other: "PolyX") -> "PolyX":
        return self + (-other)

    def __mul__(self, other) -> "PolyX":
        if not isinstance(other, PolyX):
            c = Scalar.coerce(other)
            return PolyX([c * a for a in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return PolyX()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return PolyX(out)

    __rmul__ = __mul__

    def divmod(self, other: "PolyX") -> tuple["PolyX", "PolyX"]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        quo = [ZERO] * max(len(rem) - other.degree, 0)
        inv_lead = other.lead.inv()
        while len(rem) - 1 >= other.degree and rem:
            c = rem[-1] * inv_lead
            shift = len(rem) - 1 - other.degree
            quo[shift] = c
            for j, b in enumerate(other.coeffs):
                rem[shift + j] = rem[shift + j] - c * b
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return PolyX(quo), PolyX(rem)

    def monic(self) -> "PolyX":
        return self * self.lead.inv()

    def __call__(self, value: Scalar) -> Scalar:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self):
        return f"PolyX({self.to_disc()})"

    def __str__(self):
        return str(self.to_disc())


def ext_gcd_x(p: PolyX, r: PolyX) -> tuple[PolyX, PolyX, PolyX]:
    """Extended Euclid over Q(q)[x]: returns (g, a, b), g monic, a p + b r = g."""
    if p.is_zero() and r.is_zero():
        raise ConeError("gcd of two zero polynomials is undefined")
    old_r, cur_r = p, r
    old_a, cur_a = PolyX([ONE]), PolyX()
    old_b, cur_b = PolyX(), PolyX([ONE])
    while not cur_r.is_zero():
        quo, rem = old_r.divmod(cur_r)
        old_r, cur_r = cur_r, rem
        old_a, cur_a = cur_a, old_a - quo * cur_a
        old_b, cur_b = cur_b, old_b - quo * cur_b
    inv = old_r.lead.inv()
    return old_r * inv, old_a * inv, old_b * inv


def _degree_ok(l: int, N: int) -> bool:
    return l % N == 0


def is_cone_element(a: DiscElement, P) -> bool:
    N = _params(P).N
    return all(_degree_ok(l, N) for _, l in disc.lift(a).terms)


def is_cone_one_form(nu: OneForm, P) -> bool:
    N = _params(P).N
    return (all(_degree_ok(l + 2, N) for _, l in nu.omega.terms)
            and all(_degree_ok(l - 2, N) for _, l in nu.omega_star.terms))


def is_cone_two_form(w: TwoForm, P) -> bool:
    N = _params(P).N
    return all(_degree_ok(l, N) for l in w.coeff.terms)


def check_cone_relations(P, q_samples: Sequence[Fraction] = ()) -> Report:
    P = _params(P)
    N, y, ys = P.N, P.y, P.y_star

    def rel_xy():
        return compare(f"cone[N={N}].xy", "(cone)", X * y, (y * X).scale(q_pow(2 * N)),
                       q_samples)

    def rel_yys():
        rhs = PolyX.from_roots_form([-2 * l for l in range(N)]).to_disc()
        return compare(f"cone[N={N}].yy*", "(cone)", y * ys, rhs, q_samples)

    def rel_ysy():
        rhs = PolyX.from_roots_form([2 * l for l in range(1, N + 1)]).to_disc()
        return compare(f"cone[N={N}].y*y", "(cone)", ys * y, rhs, q_samples)

    return run_checks(f"cone relations N={N}", [rel_xy, rel_yys, rel_ysy])


def dy_closed_form(P) -> OneForm:
    """([N]_{q^2} - q^{-2N+4} [N]_{q^4} x) z^{N-2} w."""
    N = _params(P).N
    coeff = (ONE_ELEMENT.scale(q_int(N, 2))
             - X.scale(q_pow(-2 * N + 4) * q_int(N, 4))) * monomial(0, N - 2)
    return OneForm(coeff, DiscElement())


def dy_formula(P, q_samples: Sequence[Fraction] = ()) -> tuple[OneForm, CheckRecord]:
    """The closed form of dy together with its check against d(z^N)."""
    P = _params(P)
    closed = dy_closed_form(P)
    record = compare(f"cone[N={P.N}].dy", "(dy)", d0(P.y), closed, q_samples)
    return closed, record


def ystar_dy(P) -> OneForm:
    P = _params(P)
    return oneform_left_mul(P.y_star, d0(P.y))


def dy_ystar(P) -> OneForm:
    P = _params(P)
    return oneform_right_mul(d0(P.y), P.y_star)


def ystar_dy_closed(P) -> PolyX:
    """x-polynomial p with y* dy = p(x) zs^2 w, as displayed in closed form."""
    N = _params(P).N
    ratio = q_int(N, 4) / q_int(N, 2)
    first = PolyX([ONE, -q_pow(4) * ratio]) * q_int(N, 2)
    return first * PolyX.from_roots_form([2 * l for l in range(3, N + 1)])


def dy_ystar_closed(P) -> PolyX:
    N = _params(P).N
    ratio = q_int(N, 4) / q_int(N, 2)
    first = PolyX([ONE, -q_pow(-2 * N + 4) * ratio]) * (q_pow(-2 * N) * q_int(N, 2))
    return first * PolyX.from_roots_form([-2 * l for l in range(0, N - 2)])


def _omega_poly(nu: OneForm, l: int) -> PolyX:
    if nu.omega_star:
        raise ConeError(f"{nu} has a ws component")
    return PolyX.from_disc(nu.omega, l)


@dataclass(frozen=True)
class Witness:
    """x-polynomials a, b with a(x) first + b(x) second = target."""

    a: PolyX
    b: PolyX
    first: OneForm
    second: OneForm
    target: OneForm

    def combination(self) -> OneForm:
        return (oneform_left_mul(self.a.to_disc(), self.first)
                + oneform_left_mul(self.b.to_disc(), self.second))

    def residual(self) -> OneForm:
        return self.combination() - self.target


class WitnessError(AssertionError):
    """A Bezout certificate failed to verify."""


def _bezout(first: OneForm, second: OneForm, target: OneForm, l: int) -> Witness:
    g, a, b = ext_gcd_x(_omega_poly(first, l), _omega_poly(second, l))
    if g != PolyX([ONE]):
        raise WitnessError(f"coefficient polynomials share the factor {g}")
    wit = Witness(a, b, first, second, target)
    if wit.residual():
        raise WitnessError(f"nonzero residual {wit.residual()}")
    return wit


def witness_zstar2_omega(P) -> Witness:
    """a, b with a(x) (y* dy) + b(x) (dy y*) = zs^2 w, verified in one-forms."""
    P = _params(P)
    return _bezout(ystar_dy(P), dy_ystar(P), OneForm(monomial(0, -2), DiscElement()), -2)


def witness_zN2_omega(P) -> Witness:
    """a, b with a(x) (zs^2 w y) + b(x) (y zs^2 w) = z^(N-2) w."""
    P = _params(P)
    base = OneForm(monomial(0, -2), DiscElement())
    first = oneform_right_mul(base, P.y)
    second = oneform_left_mul(P.y, base)
    return _bezout(first, second, OneForm(monomial(0, P.N - 2), DiscElement()), P.N - 2)


def witness_volume(P=None) -> TwoForm:
    """Returns z^2 ws zs^2 w, which must equal -q^2 v."""
    value = wedge(OneForm(DiscElement(), monomial(0, 2)),
                  OneForm(monomial(0, -2), DiscElement()))
    if value != V.scale(-q_pow(2)):
        raise WitnessError(f"z^2 ws zs^2 w = {value}, expected -q^2 v")
    return value


def crit_values(N: int) -> list[tuple[int, Scalar]]:
    """q^{2k}(q^{2N}+1) - (q^2+1) over the admissible k for cone order N."""
    ks = list(range(-2 * N + 2, -N)) + list(range(2, N))
    return [(k, q_pow(2 * k) * (q_pow(2 * N) + 1) - (q_pow(2) + 1)) for k in ks]


def crit_unsolvable(N: int) -> bool:
    return all(v for _, v in crit_values(N))


def verify_cone(P, q_samples: Sequence[Fraction] = ()) -> Report:
    """Every cone check for one N, as a report."""
    P = _params(P)
    N = P.N
    report = check_cone_relations(P, q_samples)

    def dy_check():
        return dy_formula(P, q_samples)[1]

    def ydy_closed():
        lhs = ystar_dy(P)
        rhs = OneForm(ystar_dy_closed(P).to_disc(-2), DiscElement())
        return compare(f"cone[N={N}].y*dy", "(y*dy)", lhs, rhs, q_samples)

    def dyy_closed():
        lhs = dy_ystar(P)
        rhs = OneForm(dy_ystar_closed(P).to_disc(-2), DiscElement())
        return compare(f"cone[N={N}].dyy*", "(dyy*)", lhs, rhs, q_samples)

    def coprime():
        g, _, _ = ext_gcd_x(ystar_dy_closed(P), dy_ystar_closed(P))
        return compare(f"cone[N={N}].coprime", "(crit)", g.to_disc(), ONE_ELEMENT)

    def shifted():
        base = OneForm(monomial(0, -2), DiscElement())
        lhs1 = oneform_right_mul(base, P.y)
        rhs1 = OneForm((PolyX.from_roots_form([2, 4]) * q_pow(2 * N)).to_disc(N - 2),
                       DiscElement())
        lhs2 = oneform_left_mul(P.y, base)
        rhs2 = OneForm(PolyX.from_roots_form([-2 * N + 4, -2 * N + 2]).to_disc(N - 2),
                       DiscElement())
        r1 = compare("", "", lhs1, rhs1, q_samples)
        r2 = compare("", "", lhs2, rhs2, q_samples)
        ok = r1.passed and r2.passed
        return CheckRecord(f"cone[N={N}].zs2w-y", "(cone-shift)", ok,
                           "" if ok else f"{r1.left} / {r2.left}")

    def guarded(name, ref, fn):
        def run():
            try:
                wit = fn(P)
            except WitnessError as exc:
                return CheckRecord(name, ref, False, str(exc))
            return CheckRecord(name, ref, True, f"a = {wit.a}; b = {wit.b}")
        return run

    def volume():
        try:
            witness_volume(P)
        except WitnessError as exc:
            return CheckRecord(f"cone[N={N}].volume", "(o*o1)", False, str(exc))
        member = is_cone_two_form(V, P)
        return CheckRecord(f"cone[N={N}].volume", "(o*o1)", member)

    def crit():
        return CheckRecord(f"cone[N={N}].crit", "(crit)", crit_unsolvable(N))

    extra = run_checks(f"cone N={N}", [
        dy_check, ydy_closed, dyy_closed, coprime, shifted,
        guarded(f"cone[N={N}].witness.zs2w", "(y*dy)/(dyy*)", witness_zstar2_omega),
        guarded(f"cone[N={N}].witness.zN-2w", "(cone-shift)", witness_zN2_omega),
        volume, crit,
    ])
    report.suite = f"cone N={N}"
    report.extend(extra)
    return report
