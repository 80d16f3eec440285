"""Exact arithmetic in the rational function field Q(q).

Elements are stored as a ratio of integer polynomials kept in a canonical
form, so that two scalars are equal exactly when their stored numerator and
denominator coincide.  The canonical form is:

* numerator and denominator are coprime in Q[q];
* the integer coefficients of numerator and denominator taken together have
  gcd 1;
* the denominator has a positive leading coefficient.

Zero is stored as ``0/1``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd
from typing import Iterable, Union


class ScalarDivisionByZero(ZeroDivisionError):
    """Division by the zero element of Q(q)."""


class PoleError(ArithmeticError):
    """The denominator of a scalar vanishes at the requested point."""


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    """A polynomial in q with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``; trailing zeros are never
    stored, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(list(coeffs))
        self._hash = None

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> "IntPoly":
        if n < 0:
            raise ValueError("IntPoly exponents are non-negative")
        return cls([0] * n + [c])

    @classmethod
    def from_mapping(cls, terms: dict[int, int]) -> "IntPoly":
        if not terms:
            return cls()
        out = [0] * (max(terms) + 1)
        for e, c in terms.items():
            if e < 0:
                raise ValueError("IntPoly exponents are non-negative")
            out[e] += c
        return cls(out)

    def to_mapping(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    @property
    def degree(self) -> int:
        """Maximal exponent; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __eq__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("IntPoly", self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        if min(len(a), len(b)) > _KRONECKER_MIN:
            return IntPoly(_kronecker_mul(a, b))
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    def scale(self, c: int) -> "IntPoly":
        return IntPoly([c * x for x in self.coeffs])

    def exact_div_int(self, c: int) -> "IntPoly":
        out = []
        for x in self.coeffs:
            quo, rem = divmod(x, c)
            if rem:
                raise ArithmeticError("inexact integer division")
            out.append(quo)
        return IntPoly(out)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = igcd(g, c)
            if g == 1:
                break
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lead < 0:
            c = -c
        return self if c == 1 else self.exact_div_int(c)

    def low_order(self) -> int:
        """Largest n with q**n dividing self (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def shift_down(self, n: int) -> "IntPoly":
        return IntPoly(self.coeffs[n:])

    def pseudo_rem(self, other: "IntPoly") -> "IntPoly":
        """Pseudo-remainder of self by other (lc(other)**k * self mod other)."""
        r = list(self.coeffs)
        b = other.coeffs
        db, lb = len(b) - 1, b[-1]
        while len(r) - 1 >= db and r:
            lr = r[-1]
            shift = len(r) - 1 - db
            r = [lb * c for c in r]
            for j, cb in enumerate(b):
                r[shift + j] -= lr * cb
            r = list(_trim(r))
        return IntPoly(r)

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Quotient of an exact division in Z[q]; raises if inexact."""
        if not other.coeffs:
            raise ScalarDivisionByZero("polynomial division by zero")
        if len(other.coeffs) > _KRONECKER_MIN and len(self.coeffs) >= len(other.coeffs):
            quo = _kronecker_div(self.coeffs, other.coeffs)
            if quo is not None:
                return IntPoly(quo)
        r = list(self.coeffs)
        b = other.coeffs
        db, lb = len(b) - 1, b[-1]
        if len(r) - 1 < db:
            if r:
                raise ArithmeticError("inexact polynomial division")
            return IntPoly()
        quo = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c == 0:
                continue
            qc, rem = divmod(c, lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            shift = i - db
            quo[shift] = qc
            for j, cb in enumerate(b):
                r[shift + j] -= qc * cb
        if any(r):
            raise ArithmeticError("inexact polynomial division")
        return IntPoly(quo)

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self.coeffs)


# below this length schoolbook loops beat packing into big integers
_KRONECKER_MIN = 12


def _pack(coeffs: tuple[int, ...], nbytes: int) -> int:
    """Evaluate at 2**(8*nbytes); digits must satisfy |c| < 2**(8*nbytes-1)."""
    pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
    neg = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(value: int, nbytes: int, length: int) -> list[int]:
    """Signed base-2**(8*nbytes) digits of value, at most ``length`` of them."""
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * length, "little")
    raw = (value + offset).to_bytes(nbytes * length, "little")
    return [int.from_bytes(raw[i:i + nbytes], "little") - half
            for i in range(0, nbytes * length, nbytes)]


def _nbytes(bits: int) -> int:
    return bits // 8 + 1


def _kronecker_mul(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    bits = ma.bit_length() + mb.bit_length() + min(len(a), len(b)).bit_length() + 1
    n = _nbytes(bits)
    return _unpack(_pack(a, n) * _pack(b, n), n, len(a) + len(b) - 1)


def _kronecker_div(a: tuple[int, ...], b: tuple[int, ...]) -> list[int] | None:
    """Exact quotient a / b via packed integers; None if not confirmed."""
    bits = max(abs(c) for c in a).bit_length() + len(a).bit_length() + 2
    n = _nbytes(bits)
    length = len(a) - len(b) + 1
    quo, rem = divmod(_pack(a, n), _pack(b, n))
    if rem:
        return None
    try:
        out = _unpack(quo, n, length)
    except OverflowError:
        return None
    # a too-small digit width could alias, so confirm by multiplying back
    if tuple(_trim(_kronecker_mul(tuple(out), b))) != a:
        return None
    return out


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd of a and b, positive leading coefficient.

    The common power of q, by far the most frequent common factor here, is
    split off first.  The rest goes through the heuristic evaluation gcd and
    falls back to the primitive polynomial remainder sequence.
    """
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    shift = min(a.low_order(), b.low_order())
    a = a.shift_down(a.low_order()).primitive()
    b = b.shift_down(b.low_order()).primitive()
    g = _heuristic_gcd(a, b)
    if g is None:
        g = _prs_gcd(a, b)
    return IntPoly.monomial(shift) * g if shift else g


def _heuristic_gcd(a: IntPoly, b: IntPoly) -> IntPoly | None:
    """GCDHEU: gcd of primitive a, b from integer gcds of their values.

    A candidate is accepted only if it divides both inputs exactly, so a
    returned value is always the true primitive gcd; None means give up.
    """
    if a.degree == 0 or b.degree == 0:
        return IntPoly([1])
    bound = max(max(abs(c) for c in a.coeffs), max(abs(c) for c in b.coeffs))
    # evaluation point 2**(8*nbytes) > 2*bound + 2 so packing is evaluation
    nbytes = _nbytes((2 * bound + 2).bit_length())
    for _ in range(6):
        h = igcd(_pack(a.coeffs, nbytes), _pack(b.coeffs, nbytes))
        length = h.bit_length() // (8 * nbytes) + 2
        cand = IntPoly(_unpack(h, nbytes, length)).primitive()
        if cand.degree >= 0:
            try:
                a.exact_div(cand)
                b.exact_div(cand)
                return cand
            except ArithmeticError:
                pass
        nbytes += nbytes // 2 + 1
    return None


def _prs_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    if a.degree < b.degree:
        a, b = b, a
    while b.degree > 0:
        r = a.pseudo_rem(b)
        if r.is_zero():
            break
        a, b = b, r.primitive()
    else:
        if not b.is_zero():
            # b is a nonzero constant: the inputs are coprime
            b = IntPoly([1])
    return b


def format_poly(coeffs: tuple[int, ...], var: str = "q") -> str:
    if not coeffs:
        return "0"
    parts: list[str] = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


ScalarLike = Union["Scalar", int, Fraction]


class Scalar:
    """An element of Q(q) in canonical form.  Immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Union[IntPoly, int, Fraction] = 0,
                 den: Union[IntPoly, int] = 1, _canonical: bool = False):
        if isinstance(num, Fraction):
            num, den = IntPoly([num.numerator]), _as_poly(den) * IntPoly([num.denominator])
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise ScalarDivisionByZero("zero denominator")
        if not _canonical:
            num, den = _canonicalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def coerce(cls, value: ScalarLike) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, int):
            return _int_scalar(value)
        if isinstance(value, Fraction):
            return cls(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Scalar")

    @classmethod
    def q(cls) -> "Scalar":
        return q_pow(1)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_rational(self) -> bool:
        """True iff the scalar does not depend on q."""
        return self.num.degree <= 0 and self.den.degree == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} depends on q")
        return Fraction(self.num.lead if self.num else 0, self.den.lead)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = Scalar.coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Scalar", self.num.coeffs, self.den.coeffs))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def __neg__(self) -> "Scalar":
        return Scalar(-self.num, self.den, _canonical=True)

    def __add__(self, other: ScalarLike) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            if self.den.is_one():
                return Scalar(self.num + other.num, self.den, _canonical=True)
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.is_one():
            return other
        if other.is_one():
            return self
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num * other.num, self.den, _canonical=True)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise ScalarDivisionByZero("inverse of zero")
        return Scalar(self.den, self.num)

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        return Scalar.coerce(other) * self.inv()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inv() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval_at(self, q0) -> Fraction:
        """Exact value at the rational point q = q0."""
        q0 = Fraction(q0)
        d = self.den.evaluate(q0)
        if d == 0:
            raise PoleError(f"{self} has a pole at q = {q0}")
        return Fraction(self.num.evaluate(q0)) / d

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        num = format_poly(self.num.coeffs)
        if self.den.is_one():
            return num
        den = format_poly(self.den.coeffs)
        if len(self.num.to_mapping()) > 1:
            num = f"({num})"
        if len(self.den.to_mapping()) > 1 or self.den.degree > 0 and self.den.lead != 1:
            den = f"({den})"
        return f"{num}/{den}"


def _as_poly(value) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly([value])
    raise TypeError(f"cannot use {type(value).__name__} as a polynomial")


def _canonicalize(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
    if num.is_zero():
        return IntPoly(), IntPoly([1])
    if den.degree > 0:
        g = poly_gcd(num, den)
        if not g.is_one():
            num = num.exact_div(g)
            den = den.exact_div(g)
    c = igcd(num.content(), den.content())
    if den.lead < 0:
        c = -c
    if c != 1:
        num = num.exact_div_int(c)
        den = den.exact_div_int(c)
    return num, den


@lru_cache(maxsize=None)
def _int_scalar(n: int) -> Scalar:
    return Scalar(IntPoly([n]), IntPoly([1]), _canonical=True)


ZERO = Scalar(IntPoly(), IntPoly([1]), _canonical=True)
ONE = Scalar(IntPoly([1]), IntPoly([1]), _canonical=True)


@lru_cache(maxsize=None)
def q_pow(n: int) -> Scalar:
    """q**n for any integer n (negative powers live in the denominator)."""
    if n >= 0:
        return Scalar(IntPoly.monomial(n), IntPoly([1]), _canonical=True)
    return Scalar(IntPoly([1]), IntPoly.monomial(-n), _canonical=True)


@lru_cache(maxsize=None)
def q_int(n: int, m: int) -> Scalar:
    """The q-integer [n]_{q^m} = (q^{mn} - 1)/(q^m - 1), for n >= 1, m != 0."""
    if n < 1:
        raise ValueError("q_int needs n >= 1")
    if m == 0:
        raise ValueError("q_int needs a nonzero base exponent")
    if m > 0:
        return Scalar(IntPoly.from_mapping({m * i: 1 for i in range(n)}), 1)
    # [n]_{q^-a} = q^{-a(n-1)} [n]_{q^a}
    return q_pow(m * (n - 1)) * q_int(n, -m)


def eval_at(a: Scalar, q0) -> Fraction:
    return a.eval_at(q0)
