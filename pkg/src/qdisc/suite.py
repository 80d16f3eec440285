"""The full verification suite: identities plus seeded property batteries."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import disc
from .calculus import (
    V, OneForm, d0, d1, oneform_left_mul, oneform_right_mul, product, star1,
    star2, star_any, twoform_left_mul, wedge,
)
from .cone import crit_unsolvable, verify_cone
from .disc import DiscElement, monomial, partial, partial_bar, sigma, sigma_pow
from .integral import verify_cokernel, verify_integral_vanishing
from .relations import verify_disc_relations
from .report import CheckRecord, Report, compare, run_checks
from .scalar import ZERO, q_pow

DEFAULT_Q_SAMPLES = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))
DEFAULT_CONES = (2, 3, 4, 5, 6)


@dataclass
class SuiteOptions:
    max_k: int = 8
    max_l: int = 8
    cones: Sequence[int] = DEFAULT_CONES
    crit_max: int = 10
    q_samples: Sequence[Fraction] = DEFAULT_Q_SAMPLES
    seed: int = 0
    pairs: int = 200
    jobs: int = 1
    tamper: Iterable[str] = field(default_factory=tuple)


def _grid(max_k: int, max_l: int):
    return [(k, l) for k in range(max_k + 1) for l in range(-max_l, max_l + 1)]


def _random_element(rng: random.Random, max_k: int, max_l: int, terms: int = 1) -> DiscElement:
    out = DiscElement()
    for _ in range(terms):
        c = rng.choice([1, -1, 2, 3]) * q_pow(rng.randint(-2, 2))
        out = out + monomial(rng.randint(0, max_k), rng.randint(-max_l, max_l), c)
    return out


def verify_d_squared(max_k: int, max_l: int, q_samples=(), jobs: int = 1) -> Report:
    """d1(d0(x^k z^l)) = 0 on the grid."""

    def make(k, l):
        def run():
            w = d1(d0(monomial(k, l)))
            return compare(f"d2[x^{k} z^{l}]", "(dd)", w, ZERO, q_samples)
        return run

    return run_checks("d squared", [make(k, l) for k, l in _grid(max_k, max_l)], jobs)


def verify_q_deriv(max_k: int, max_l: int, q_samples=(), jobs: int = 1) -> Report:
    """sigma^-1 d sigma = q^4 d and sigma^-1 dbar sigma = q^-4 dbar."""

    def make(k, l):
        def run():
            m = monomial(k, l)
            lhs = (sigma_pow(partial(sigma(m)), -1), sigma_pow(partial_bar(sigma(m)), -1))
            rhs = (partial(m).scale(q_pow(4)), partial_bar(m).scale(q_pow(-4)))
            r1 = compare("", "", lhs[0], rhs[0], q_samples)
            r2 = compare("", "", lhs[1], rhs[1], q_samples)
            rec = CheckRecord(f"q-deriv[x^{k} z^{l}]", "(q-deriv)",
                              r1.passed and r2.passed, "; ".join(
                                  x for x in (r1.detail, r2.detail) if x))
            if not rec.passed:
                bad = r1 if not r1.passed else r2
                rec.left, rec.right = bad.left, bad.right
            return rec
        return run

    return run_checks("q-derivation", [make(k, l) for k, l in _grid(max_k, max_l)], jobs)


def _all_pass(name: str, ref: str, records: list[CheckRecord]) -> CheckRecord:
    bad = [r for r in records if not r.passed]
    rec = CheckRecord(name, ref, not bad, "; ".join(r.detail for r in records if r.detail))
    if bad:
        rec.left, rec.right = bad[0].left, bad[0].right
    return rec


def verify_leibniz(pairs: int = 200, seed: int = 0, max_k: int = 4, max_l: int = 4,
                   q_samples=(), jobs: int = 1) -> Report:
    """Twisted Leibniz for d and dbar, graded Leibniz for d1 on both sides."""
    rng = random.Random(seed)
    cases = []
    for _ in range(pairs):
        a = _random_element(rng, max_k, max_l)
        b = _random_element(rng, max_k, max_l)
        c = _random_element(rng, max_k, max_l)
        cases.append((a, b, OneForm(b, c)))

    def make(i, a, b, nu):
        def run():
            ab = a * b
            checks = [
                compare("", "", partial(ab), partial(a) * sigma(b) + a * partial(b), q_samples),
                compare("", "", partial_bar(ab),
                        partial_bar(a) * sigma(b) + a * partial_bar(b), q_samples),
                # d(a nu) = da ^ nu + a d(nu)
                compare("", "", d1(oneform_left_mul(a, nu)),
                        wedge(d0(a), nu) + twoform_left_mul(a, d1(nu)), q_samples),
                # d(nu a) = d(nu) a - nu ^ da
                compare("", "", d1(oneform_right_mul(nu, a)),
                        product(d1(nu), a) - wedge(nu, d0(a)), q_samples),
            ]
            return _all_pass(f"leibniz[{i}]", "(leibniz)", checks)
        return run

    return run_checks("Leibniz battery",
                      [make(i, *case) for i, case in enumerate(cases)], jobs)


def verify_star(samples: int = 60, seed: int = 0, max_k: int = 4, max_l: int = 4,
                q_samples=(), jobs: int = 1) -> Report:
    """Compatibility of the *-structure with products and d."""
    rng = random.Random(seed + 1)
    cases = []
    for _ in range(samples):
        a = _random_element(rng, max_k, max_l, 2)
        b = _random_element(rng, max_k, max_l, 2)
        nu = OneForm(_random_element(rng, max_k, max_l), _random_element(rng, max_k, max_l))
        mu = OneForm(_random_element(rng, max_k, max_l), _random_element(rng, max_k, max_l))
        cases.append((a, b, nu, mu))

    def make(i, a, b, nu, mu):
        def run():
            st = star_any
            checks = [
                compare("", "", disc.star(a * b), disc.star(b) * disc.star(a), q_samples),
                compare("", "", disc.star(disc.star(a)), a, q_samples),
                compare("", "", star1(d0(a)), d0(disc.star(a)), q_samples),
                compare("", "", star2(d1(nu)), d1(star1(nu)), q_samples),
                compare("", "", st(product(a, nu)), product(st(nu), st(a)), q_samples),
                compare("", "", st(product(nu, a)), product(st(a), st(nu)), q_samples),
                compare("", "", star2(wedge(nu, mu)), -wedge(star1(mu), star1(nu)), q_samples),
                compare("", "", star1(star1(nu)), nu, q_samples),
            ]
            return _all_pass(f"star[{i}]", "(star)", checks)
        return run

    records = [make(i, *case) for i, case in enumerate(cases)]

    def volume():
        return compare("star[v]", "(star)", star2(V), -V, q_samples)

    return run_checks("star structure", records + [volume], jobs)


def verify_crit(max_n: int) -> Report:
    return run_checks("crit", [
        (lambda n=n: CheckRecord(f"crit[N={n}]", "(crit)", crit_unsolvable(n)))
        for n in range(2, max_n + 1)])


def verify_suite(options: SuiteOptions | None = None, **kwargs) -> Report:
    """Run every check family and merge them into one report.

    ``tamper`` names identities (or their equation labels) whose left side
    is deliberately corrupted; it exists to exercise failure reporting.
    """
    opts = options or SuiteOptions(**kwargs)
    qs = tuple(opts.q_samples)
    tamper = set(opts.tamper)
    start = time.perf_counter()
    parts = [
        verify_disc_relations(qs, tamper, opts.jobs),
        verify_d_squared(opts.max_k, opts.max_l, qs, opts.jobs),
        verify_leibniz(opts.pairs, opts.seed, q_samples=qs, jobs=opts.jobs),
        verify_q_deriv(opts.max_k, opts.max_l, qs, opts.jobs),
        verify_star(seed=opts.seed, q_samples=qs, jobs=opts.jobs),
    ]
    for n in opts.cones:
        parts.append(verify_cone(n, qs))
    parts.append(verify_crit(max(opts.crit_max, *opts.cones) if opts.cones else opts.crit_max))
    parts.append(verify_integral_vanishing(opts.max_k, opts.max_l, opts.jobs))
    parts.append(verify_cokernel(opts.max_k, opts.max_l, opts.jobs))

    report = Report("qdisc")
    for part in parts:
        report.checks.extend(part.checks)
    report.elapsed = time.perf_counter() - start
    return report
