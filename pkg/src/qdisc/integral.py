"""The divergence of the calculus and its cokernel map (the integral).

``cokernel_reduce`` writes any algebra element as ``c * 1 + div(f)`` with an
explicit functional ``f``, so every value of the integral comes with a
certificate that the remainder lies in the image of the divergence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .cone import ConeError, ConeParams, is_cone_element
from .disc import (
    ONE_ELEMENT, DiscElement, ZS, lift, monomial, partial, partial_bar, star,
)
from .report import CheckRecord, Report, run_checks
from .scalar import ZERO, Scalar, ScalarLike, q_int, q_pow


@dataclass(frozen=True)
class CotangentFunctional:
    """A right-linear map on one-forms, given by its values on w and ws."""

    f_omega: DiscElement = DiscElement()
    f_omega_star: DiscElement = DiscElement()

    def __add__(self, other: "CotangentFunctional") -> "CotangentFunctional":
        return CotangentFunctional(self.f_omega + other.f_omega,
                                   self.f_omega_star + other.f_omega_star)

    def is_zero(self) -> bool:
        return self.f_omega.is_zero() and self.f_omega_star.is_zero()

    def __str__(self):
        return f"f(w) = {self.f_omega}; f(ws) = {self.f_omega_star}"


@dataclass(frozen=True)
class CokernelDecomposition:
    """``element = constant * 1 + divergence(witness)``."""

    element: DiscElement
    constant: Scalar
    witness: CotangentFunctional

    def residual(self) -> DiscElement:
        return self.element - ONE_ELEMENT.scale(self.constant) - divergence(self.witness)

    def __str__(self):
        return f"constant = {self.constant}\nwitness: {self.witness}"


def divergence(f: CotangentFunctional) -> DiscElement:
    """q^4 d(f(w)) + q^-4 dbar(f(ws))."""
    return (partial(f.f_omega).scale(q_pow(4))
            + partial_bar(f.f_omega_star).scale(q_pow(-4)))


@lru_cache(maxsize=None)
def lambda_monomial(k: int, l: int) -> Scalar:
    """Integral of x^k z^l with Lambda(1) = 1."""
    if l != 0:
        return ZERO
    return q_int(k + 1, 2) / q_int(k + 1, 4)


def integral_lambda(a: DiscElement, scale: ScalarLike = 1) -> Scalar:
    """Linear extension of the monomial values; ``scale`` is Lambda(1)."""
    total = ZERO
    for (k, l), c in lift(a).terms.items():
        if l == 0:
            total = total + c * lambda_monomial(k, 0)
    return total * Scalar.coerce(scale)


def cone_integral(a: DiscElement, P) -> Scalar:
    P = P if isinstance(P, ConeParams) else ConeParams(int(P))
    if not is_cone_element(a, P):
        raise ConeError(f"{a} is not in the cone algebra of order {P.N}")
    return integral_lambda(a)


# Preimages.  For a monomial x^k z^l each function returns an element g whose
# image under the matching derivation has x^k z^l as its top x-power term in
# degree l, together with that derivation.

def _preimage(k: int, l: int) -> tuple[DiscElement, Callable[[DiscElement], DiscElement]]:
    if l <= -2:
        # d(x^{k+1} zs^{m-2}) is a multiple of x^k zs^m
        return monomial(k + 1, l + 2), partial
    if l >= 2:
        return monomial(k + 1, l - 2), partial_bar
    if l == -1:
        return _preimage_zs(k), partial
    if l == 1:
        return star(_preimage_zs(k)), partial_bar
    # l == 0, k >= 1: d(x^{k-1} z^2) has top term -[k+1]_{q^4} x^k
    return monomial(k - 1, 2), partial


@lru_cache(maxsize=None)
def _preimage_zs(k: int) -> DiscElement:
    if k == 0:
        # d(zs z^2 - q^4 z^2 zs) = (1 - q^4) zs
        return ZS * monomial(0, 2) - (monomial(0, 2) * ZS).scale(q_pow(4))
    # d(x^{k-1} z^2 zs) has top term x^k zs
    return monomial(k - 1, 2) * ZS


@lru_cache(maxsize=None)
def _reduction_step(k: int, l: int) -> tuple[DiscElement, DiscElement, bool]:
    """(preimage scaled so its image has leading coefficient 1, image, uses dbar)."""
    g, derivation = _preimage(k, l)
    image = derivation(g)
    lead = image.coefficient(k, l)
    if not lead or any(ll != l or kk > k for kk, ll in image.terms):
        raise AssertionError(f"no triangular preimage for x^{k} z^{l}")
    inv = lead.inv()
    return g.scale(inv), image.scale(inv), derivation is partial_bar


def _order(key: tuple[int, int]) -> tuple[int, int]:
    k, l = key
    return (-abs(l), -k)


def cokernel_reduce(a: DiscElement) -> CokernelDecomposition:
    """Split ``a`` as ``c * 1 + div(f)``.

    Terms are eliminated by decreasing |l| and then decreasing power of x.
    Every step subtracts the image of an explicit preimage, so the returned
    witness satisfies the decomposition exactly.
    """
    a = lift(a)
    rest = dict(a.terms)
    f_omega = DiscElement()
    f_omega_star = DiscElement()
    while True:
        pending = [key for key in rest if key != (0, 0)]
        if not pending:
            break
        k, l = min(pending, key=_order)
        c = rest[(k, l)]
        g, image, barred = _reduction_step(k, l)
        for key, v in image.terms.items():
            s = rest.get(key, ZERO) - c * v
            if s:
                rest[key] = s
            else:
                rest.pop(key, None)
        # divergence carries q^4 on d and q^-4 on dbar
        if barred:
            f_omega_star = f_omega_star + g.scale(c * q_pow(4))
        else:
            f_omega = f_omega + g.scale(c * q_pow(-4))
    constant = rest.get((0, 0), ZERO)
    return CokernelDecomposition(a, constant, CotangentFunctional(f_omega, f_omega_star))


def verify_integral_vanishing(max_k: int, max_l: int, jobs: int = 1) -> Report:
    """Lambda vanishes on d(m) and dbar(m) for every basis monomial m in range."""
    if max_k < 1 or max_l < 1:
        raise ValueError("bounds must be at least 1")

    def make(k, l):
        def run():
            m = monomial(k, l)
            v1 = integral_lambda(partial(m))
            v2 = integral_lambda(partial_bar(m))
            ok = not v1 and not v2
            detail = "" if ok else f"Lambda(d m) = {v1}; Lambda(dbar m) = {v2}"
            return CheckRecord(f"vanish[x^{k} z^{l}]", "(int)", ok, detail)
        return run

    return run_checks("integral vanishing",
                      [make(k, l) for k in range(max_k + 1)
                       for l in range(-max_l, max_l + 1)], jobs)


def verify_cokernel(max_k: int, max_l: int, jobs: int = 1) -> Report:
    """Witnessed reduction of every basis monomial in range."""

    def make(k, l):
        def run():
            dec = cokernel_reduce(monomial(k, l))
            res = dec.residual()
            expected = lambda_monomial(k, l)
            ok = res.is_zero() and dec.constant == expected
            detail = "" if ok else (f"constant {dec.constant} (expected {expected}); "
                                    f"residual {res}")
            return CheckRecord(f"reduce[x^{k} z^{l}]", "(int)", ok, detail)
        return run

    return run_checks("cokernel reduction",
                      [make(k, l) for k in range(max_k + 1)
                       for l in range(-max_l, max_l + 1)], jobs)
