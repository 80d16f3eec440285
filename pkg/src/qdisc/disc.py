"""The quantum disc algebra in normal form.

Every element is a finite combination of basis monomials ``x^k z^l`` with
``k >= 0`` and ``l`` any integer; ``z^l`` for ``l < 0`` stands for
``zs^(-l)``.  Here ``x = 1 - z zs`` and the defining relation is
``zs z - q^2 z zs = 1 - q^2``, which amounts to the rewrite rules::

    z  x  -> q^-2 x z
    zs x  -> q^2  x zs
    z  zs -> 1 - x
    zs z  -> 1 - q^2 x

Products of basis monomials are computed from closed forms of these rules
(cached per pair of z-exponents) rather than by rewriting words.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Union

from .scalar import ONE, ZERO, Scalar, ScalarLike, q_pow

Key = tuple[int, int]


class DegreeError(ValueError):
    """Degree requested for zero or for an inhomogeneous element."""


class DiscElement:
    """Element of the quantum disc algebra, stored as ``{(k, l): Scalar}``.

    Instances are treated as immutable; every operation returns a new
    element.  Zero coefficients are never stored, so equality of elements is
    equality of the term mappings.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Key, ScalarLike] | None = None):
        clean: dict[Key, Scalar] = {}
        if terms:
            for (k, l), c in terms.items():
                if k < 0:
                    raise ValueError(f"negative power of x: {k}")
                c = Scalar.coerce(c)
                if c:
                    clean[(k, l)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Key, Scalar]) -> "DiscElement":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def scalar(cls, c: ScalarLike) -> "DiscElement":
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (Scalar, int)) and not isinstance(other, bool):
            other = DiscElement.scalar(other)
        if not isinstance(other, DiscElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __neg__(self) -> "DiscElement":
        return DiscElement._raw({key: -c for key, c in self.terms.items()})

    def __add__(self, other) -> "DiscElement":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, ZERO) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return DiscElement._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "DiscElement":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "DiscElement":
        return _coerce(other) - self

    def scale(self, c: ScalarLike) -> "DiscElement":
        c = Scalar.coerce(c)
        if not c:
            return DiscElement()
        return DiscElement._raw({key: c * v for key, v in self.terms.items()})

    def __mul__(self, other) -> "DiscElement":
        if isinstance(other, (Scalar, int)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, DiscElement):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other) -> "DiscElement":
        if isinstance(other, (Scalar, int)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "DiscElement":
        if n < 0:
            raise ValueError("negative powers of disc elements are undefined")
        result = ONE_ELEMENT
        for _ in range(n):
            result = result * self
        return result

    def coefficient(self, k: int, l: int) -> Scalar:
        return self.terms.get((k, l), ZERO)

    def max_x_power(self) -> int:
        return max(k for k, _ in self.terms) if self.terms else -1

    def __repr__(self):
        return f"DiscElement({self})"

    def __str__(self):
        return format_terms(self.terms, _monomial_name)


def _coerce(value) -> DiscElement | None:
    if isinstance(value, DiscElement):
        return value
    if isinstance(value, (Scalar, int)) and not isinstance(value, bool):
        return DiscElement.scalar(value)
    return None


def _monomial_name(key: Key) -> str:
    k, l = key
    parts = []
    if k:
        parts.append("x" if k == 1 else f"x^{k}")
    if l > 0:
        parts.append("z" if l == 1 else f"z^{l}")
    elif l < 0:
        parts.append("zs" if l == -1 else f"zs^{-l}")
    return "*".join(parts)


def format_terms(terms: Mapping, name) -> str:
    """Render a coefficient mapping as a parseable sum of terms."""
    if not terms:
        return "0"
    pieces: list[str] = []
    for key in sorted(terms):
        c = terms[key]
        mono = name(key)
        if not mono:
            text = str(c)
            if len(c.num.to_mapping()) > 1 or not c.den.is_one():
                text = f"({text})"
        elif c.is_one():
            text = mono
        elif (-c).is_one():
            text = f"-{mono}"
        elif len(c.num.to_mapping()) == 1 and len(c.den.to_mapping()) == 1:
            text = f"{c}*{mono}"
        else:
            text = f"({c})*{mono}"
        pieces.append(text)
    out = pieces[0]
    for p in pieces[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def monomial(k: int, l: int, c: ScalarLike = 1) -> DiscElement:
    """The element ``c * x^k z^l``."""
    if k < 0:
        raise ValueError(f"negative power of x: {k}")
    return DiscElement({(k, l): c})


ONE_ELEMENT = DiscElement._raw({(0, 0): ONE})
Z = monomial(0, 1)
ZS = monomial(0, -1)
X = monomial(1, 0)


@lru_cache(maxsize=None)
def x_product(exponents: tuple[int, ...]) -> tuple[Scalar, ...]:
    """Coefficients (in increasing powers of x) of prod_e (1 - q^e x)."""
    coeffs: list[Scalar] = [ONE]
    for e in exponents:
        factor = -q_pow(e)
        nxt = coeffs + [ZERO]
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + factor * c
        coeffs = nxt
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _zz_product(b: int, d: int) -> tuple[tuple[int, int, Scalar], ...]:
    """Normal form of ``z^b z^d`` as a tuple of (k, l, coefficient)."""
    if b >= 0 and d >= 0 or b <= 0 and d <= 0:
        return ((0, b + d, ONE),)
    if b > 0:
        # z^b zs^m; z^n zs^n = prod_{j=0}^{n-1} (1 - q^{-2j} x)
        m = -d
        n = min(b, m)
        poly = x_product(tuple(-2 * j for j in range(n)))
        rest = b - m
    else:
        # zs^m z^d; zs^n z^n = prod_{j=1}^{n} (1 - q^{2j} x)
        m = -b
        n = min(m, d)
        poly = x_product(tuple(2 * j for j in range(1, n + 1)))
        rest = d - m
    # the leftover power sits on the left when it came from the left factor;
    # z^l P(x) = P(q^{-2l} x) z^l
    leftover_on_left = (b > 0 and b > m) or (b < 0 and m > d)
    out = []
    for j, c in enumerate(poly):
        if c:
            if leftover_on_left:
                c = c * q_pow(-2 * rest * j)
            out.append((j, rest, c))
    return tuple(out)


@lru_cache(maxsize=65536)
def _monomial_product(k1: int, l1: int, k2: int, l2: int) -> tuple[tuple[int, int, Scalar], ...]:
    # x^k1 z^l1 x^k2 z^l2 = q^{-2 l1 k2} x^{k1+k2} z^l1 z^l2
    twist = q_pow(-2 * l1 * k2)
    return tuple((k1 + k2 + j, l, twist * c) for j, l, c in _zz_product(l1, l2))


def mul(a: DiscElement, b: DiscElement) -> DiscElement:
    """Product in the quantum disc algebra, in normal form."""
    out: dict[Key, Scalar] = {}
    for (k1, l1), c1 in a.terms.items():
        for (k2, l2), c2 in b.terms.items():
            c12 = c1 * c2
            for k, l, c in _monomial_product(k1, l1, k2, l2):
                key = (k, l)
                s = out.get(key, ZERO) + c12 * c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return DiscElement._raw(out)


def star(a: DiscElement) -> DiscElement:
    """The adjoint: (c x^k z^l)* = c zs^l x^k = c q^{2kl} x^k z^{-l}."""
    return DiscElement._raw(
        {(k, -l): c * q_pow(2 * k * l) for (k, l), c in a.terms.items()})


def homogeneous_components(a: DiscElement) -> dict[int, DiscElement]:
    parts: dict[int, dict[Key, Scalar]] = {}
    for (k, l), c in a.terms.items():
        parts.setdefault(l, {})[(k, l)] = c
    return {l: DiscElement._raw(t) for l, t in sorted(parts.items())}


def deg(a: DiscElement) -> int:
    """Z-degree of a nonzero homogeneous element."""
    if a.is_zero():
        raise DegreeError("the zero element has no degree")
    degrees = {l for _, l in a.terms}
    if len(degrees) != 1:
        raise DegreeError(f"{a} is not homogeneous (degrees {sorted(degrees)})")
    return degrees.pop()


def is_homogeneous(a: DiscElement) -> bool:
    return len({l for _, l in a.terms}) <= 1


def sigma_pow(a: DiscElement, p: int = 1) -> DiscElement:
    """sigma^p: multiply the degree-l part by q^{2pl}."""
    if p == 0:
        return a
    return DiscElement._raw(
        {(k, l): c * q_pow(2 * p * l) for (k, l), c in a.terms.items()})


def sigma(a: DiscElement) -> DiscElement:
    return sigma_pow(a, 1)


def _linear(table, a: DiscElement) -> DiscElement:
    out: dict[Key, Scalar] = {}
    for (k, l), c in a.terms.items():
        for key, v in table(k, l).terms.items():
            s = out.get(key, ZERO) + c * v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return DiscElement._raw(out)


# d(x) for both derivations, from x = 1 - z zs and the twisted Leibniz rule
_PARTIAL_X = monomial(0, -2, -q_pow(-2))
_PARTIAL_BAR_X = monomial(0, 2, -q_pow(2))


@lru_cache(maxsize=None)
def _partial_basis(k: int, l: int) -> DiscElement:
    if k == 0:
        if l <= 0:
            return DiscElement()
        # d(z z^{l-1}) = d(z) sigma(z^{l-1}) + z d(z^{l-1})
        head = monomial(0, -1, q_pow(2 * (l - 1))) * monomial(0, l - 1)
        return head + Z * _partial_basis(0, l - 1)
    # d(x . x^{k-1} z^l) = d(x) sigma(x^{k-1} z^l) + x d(x^{k-1} z^l)
    head = _PARTIAL_X * monomial(k - 1, l, q_pow(2 * l))
    return head + X * _partial_basis(k - 1, l)


@lru_cache(maxsize=None)
def _partial_bar_basis(k: int, l: int) -> DiscElement:
    if k == 0:
        if l >= 0:
            return DiscElement()
        # dbar(zs zs^{m-1}) = dbar(zs) sigma(zs^{m-1}) + zs dbar(zs^{m-1})
        head = monomial(0, 1, q_pow(2) * q_pow(2 * (l + 1))) * monomial(0, l + 1)
        return head + ZS * _partial_bar_basis(0, l + 1)
    head = _PARTIAL_BAR_X * monomial(k - 1, l, q_pow(2 * l))
    return head + X * _partial_bar_basis(k - 1, l)


def partial(a: DiscElement) -> DiscElement:
    """The sigma-twisted derivation with d(z) = zs, d(zs) = 0."""
    return _linear(_partial_basis, a)


def partial_bar(a: DiscElement) -> DiscElement:
    """The sigma-twisted derivation with d(z) = 0, d(zs) = q^2 z."""
    return _linear(_partial_bar_basis, a)


def basis_monomials(max_k: int, max_l: int) -> Iterable[DiscElement]:
    for k in range(max_k + 1):
        for l in range(-max_l, max_l + 1):
            yield monomial(k, l)


def lift(value: Union[DiscElement, ScalarLike]) -> DiscElement:
    out = _coerce(value)
    if out is None:
        raise TypeError(f"cannot interpret {value!r} as a disc element")
    return out
