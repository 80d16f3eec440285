import pytest
from hypothesis import given, settings

from conftest import disc_elements
from qdisc.disc import (
    ONE_ELEMENT, X, Z, ZS, DegreeError, DiscElement, deg, homogeneous_components,
    is_homogeneous, monomial, partial, partial_bar, sigma, sigma_pow, star,
)
from qdisc.scalar import Scalar, q_int, q_pow

q = Scalar.q()


# Oracle: words over {z, s, x} rewritten to fixpoint with
#   z x -> q^-2 x z,  s x -> q^2 x s,  z s -> 1 - x,  s z -> 1 - q^2 x.
# Normal words are x...x followed by only z's or only s's.

def _rewrite_once(word):
    for i in range(len(word) - 1):
        pair = word[i:i + 2]
        head, tail = word[:i], word[i + 2:]
        if pair == "zx":
            return [(q_pow(-2), head + "xz" + tail)]
        if pair == "sx":
            return [(q_pow(2), head + "xs" + tail)]
        if pair == "zs":
            return [(Scalar(1), head + tail), (Scalar(-1), head + "x" + tail)]
        if pair == "sz":
            return [(Scalar(1), head + tail), (-q_pow(2), head + "x" + tail)]
    return None


def word_normal_form(terms):
    """terms: {word: Scalar} -> DiscElement."""
    pending = dict(terms)
    done = DiscElement()
    while pending:
        word, c = pending.popitem()
        step = _rewrite_once(word)
        if step is None:
            k = word.count("x")
            l = word.count("z") - word.count("s")
            done = done + monomial(k, l, c)
            continue
        for factor, new in step:
            pending[new] = pending.get(new, Scalar(0)) + c * factor
    return done


def as_words(a: DiscElement):
    out = {}
    for (k, l), c in a.terms.items():
        out["x" * k + ("z" * l if l > 0 else "s" * -l)] = c
    return out


def oracle_mul(a, b):
    wa, wb = as_words(a), as_words(b)
    return word_normal_form({u + v: c * d for u, c in wa.items() for v, d in wb.items()})


def test_examples():
    assert monomial(0, 0) == ONE_ELEMENT == 1
    assert monomial(1, 0) == X
    assert monomial(0, -2) == ZS * ZS
    assert Z * ZS == 1 - X
    assert ZS * Z == 1 - X.scale(q**2)
    assert monomial(2, 1) * monomial(1, -1) == (monomial(3, 0) - monomial(4, 0)).scale(q_pow(-2))
    assert X * Z == monomial(1, 1)
    assert Z * X == monomial(1, 1, q_pow(-2))


def test_oracle_agrees_on_examples():
    assert oracle_mul(monomial(2, 1), monomial(1, -1)) == \
        (monomial(3, 0) - monomial(4, 0)).scale(q_pow(-2))


@settings(max_examples=60, deadline=None)
@given(disc_elements(), disc_elements())
def test_product_matches_rewriting(a, b):
    assert a * b == oracle_mul(a, b)


@settings(max_examples=40, deadline=None)
@given(disc_elements(max_terms=2), disc_elements(max_terms=2), disc_elements(max_terms=2))
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=40, deadline=None)
@given(disc_elements(), disc_elements(), disc_elements())
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


def test_defining_relation():
    # z* z - q^2 z z* = 1 - q^2
    assert ZS * Z - (Z * ZS).scale(q**2) == DiscElement.scalar(1 - q**2)


def test_star_examples():
    assert star(Z) == ZS
    assert star(X) == X
    assert star(X * Z) == monomial(1, -1, q**2)


@settings(max_examples=50, deadline=None)
@given(disc_elements(), disc_elements())
def test_star_is_antimultiplicative_involution(a, b):
    assert star(star(a)) == a
    assert star(a * b) == star(b) * star(a)
    assert star(a + b) == star(a) + star(b)


def test_grading():
    assert deg(ZS ** 3) == -3
    assert deg(X ** 5) == 0
    assert homogeneous_components(Z + X * ZS) == {1: Z, -1: X * ZS}
    assert not is_homogeneous(Z + ZS)
    with pytest.raises(DegreeError):
        deg(Z + ZS)


@settings(max_examples=40, deadline=None)
@given(disc_elements(max_terms=1), disc_elements(max_terms=1))
def test_degree_is_additive(a, b):
    if a * b:
        assert deg(a * b) == deg(a) + deg(b)


def test_sigma_examples():
    assert sigma_pow(Z, 1) == Z.scale(q**2)
    assert sigma_pow(X, 7) == X
    assert sigma_pow(ZS ** 2, 2) == (ZS ** 2).scale(q_pow(-8))
    assert sigma(ZS) == ZS.scale(q_pow(-2))


@settings(max_examples=40, deadline=None)
@given(disc_elements(), disc_elements())
def test_sigma_is_algebra_map(a, b):
    assert sigma(a * b) == sigma(a) * sigma(b)
    assert sigma_pow(sigma_pow(a, 3), -3) == a


def test_partial_examples():
    assert partial(Z) == ZS
    assert partial_bar(ZS) == Z.scale(q**2)
    assert partial_bar(Z) == 0
    assert partial(ZS) == 0
    assert partial(X) == monomial(0, -2, -q_pow(-2))
    assert partial_bar(X) == monomial(0, 2, -q_pow(2))
    assert partial(Z ** 2) == DiscElement.scalar(q**2 + 1) - X.scale(q**4 + 1)


@pytest.mark.parametrize("k", range(1, 9))
def test_partial_of_x_powers(k):
    expected = monomial(k - 1, -2, -q_pow(-2) * q_int(k, 4))
    assert partial(X ** k) == expected


@settings(max_examples=50, deadline=None)
@given(disc_elements(), disc_elements())
def test_twisted_leibniz(a, b):
    assert partial(a * b) == partial(a) * sigma(b) + a * partial(b)
    assert partial_bar(a * b) == partial_bar(a) * sigma(b) + a * partial_bar(b)


@settings(max_examples=40, deadline=None)
@given(disc_elements())
def test_derivations_and_star(a):
    # d(a*) = sigma((dbar a)*)
    assert partial(star(a)) == sigma(star(partial_bar(a)))


@settings(max_examples=40, deadline=None)
@given(disc_elements())
def test_q_derivation(a):
    assert sigma_pow(partial(sigma(a)), -1) == partial(a).scale(q**4)
    assert sigma_pow(partial_bar(sigma(a)), -1) == partial_bar(a).scale(q_pow(-4))


def test_negative_x_power_rejected():
    with pytest.raises(ValueError):
        monomial(-1, 0)


def test_str():
    assert str(Z * ZS) == "1 - x"
    assert str(ZS * Z) == "1 - q^2*x"
    assert str(DiscElement()) == "0"
