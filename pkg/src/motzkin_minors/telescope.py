"""Pointwise verification of telescoping (WZ-style) certificates.

A summand F(m, j) is a signed hypergeometric term normalised so that
sum_j F(m, j) should be 1 for every m.  A certificate R(m, j) is a
rational function such that, with G = R * F,

    F(m+1, j) - F(m, j) = G(m, j+1) - G(m, j).

Terms are evaluated as limits j -> j0 + eps.  Each factor is reduced to
a leading monomial c * eps**d: polynomial zeros give d > 0, and binomials
whose lower index leaves [0, top] vanish to first order through the
reciprocal Gamma function.  This makes G well defined at the upper edge
of the summation range, where a pole of R meets a zero of F.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

from .algebra import X, Y, BiPoly, binomial, catalan


@dataclass(frozen=True)
class Lead:
    """Leading term coef * eps**order of a quantity near eps = 0."""

    order: int
    coef: Fraction

    def __mul__(self, other: "Lead") -> "Lead":
        return Lead(self.order + other.order, self.coef * other.coef)

    def __truediv__(self, other: "Lead") -> "Lead":
        return Lead(self.order - other.order, self.coef / other.coef)

    def value(self) -> Fraction:
        if self.order < 0:
            raise ZeroDivisionError("pole")
        return self.coef if self.order == 0 else Fraction(0)


@lru_cache(maxsize=4096)
def _coeffs_in_j(p: BiPoly, m: int) -> tuple[int, ...]:
    return tuple(p.univariate_y(m))


def poly_lead(p: BiPoly, m: int, j: int) -> Lead:
    """Leading term of p(m, j + eps)."""
    coeffs = _coeffs_in_j(p, m)
    if not coeffs:
        raise ValueError("zero polynomial factor")
    for t in range(len(coeffs)):
        c = sum(ci * binomial(i, t) * j ** (i - t) for i, ci in enumerate(coeffs) if i >= t)
        if c:
            return Lead(t, Fraction(c))
    raise AssertionError("unreachable")


def _recip_gamma_lead(z: int, slope: int) -> Lead:
    """Leading term of 1/Gamma(z + slope*eps) at integer z."""
    if z >= 1:
        return Lead(0, Fraction(1, factorial(z - 1)))
    p = -z
    return Lead(1, Fraction((-1) ** p * factorial(p) * slope))


def binomial_lead(top: BiPoly, bottom: BiPoly, m: int, j: int) -> Lead:
    """Leading term of binom(top, bottom) continued in j; top must not depend on j."""
    a = top.eval(m, 0)
    if a < 0:
        raise ValueError("binomial top must be nonnegative")
    b = bottom.eval(m, j)
    slope = bottom.eval(m, j + 1) - b
    return Lead(0, Fraction(factorial(a))) * _recip_gamma_lead(b + 1, slope) * _recip_gamma_lead(a - b + 1, -slope)


@dataclass(frozen=True)
class Summand:
    tag: str
    num: BiPoly                           # in x = m, y = j
    den: BiPoly
    binomials: tuple[tuple[BiPoly, BiPoly], ...]
    normalizer: Callable[[int], int]
    direct: Callable[[int, int], Fraction] = field(compare=False)
    alternating: bool = True

    def lead(self, m: int, j: int) -> Lead:
        out = poly_lead(self.num, m, j) / poly_lead(self.den, m, j)
        for top, bottom in self.binomials:
            out = out * binomial_lead(top, bottom, m, j)
        sign = -1 if self.alternating and j % 2 else 1
        return out * Lead(0, Fraction(sign, self.normalizer(m)))

    def __call__(self, m: int, j: int) -> Fraction:
        """F(m, j), taken as 0 outside 0 <= j <= m."""
        if j < 0 or j > m:
            return Fraction(0)
        return self.lead(m, j).value()


@dataclass(frozen=True)
class Certificate:
    tag: str
    num: BiPoly
    den: BiPoly
    direct: Callable[[int, int], Fraction] = field(compare=False)
    summand: str = ""

    def lead(self, m: int, j: int) -> Lead:
        return poly_lead(self.num, m, j) / poly_lead(self.den, m, j)

    def __call__(self, m: int, j: int) -> Fraction:
        d = self.den.eval(m, j)
        if d == 0:
            raise ZeroDivisionError(f"{self.tag} has a pole at {(m, j)}")
        return Fraction(self.num.eval(m, j), d)


def _sgn(j: int) -> int:
    return -1 if j % 2 else 1


def _in_range(f):
    def wrapped(m, j):
        return f(m, j) if 0 <= j <= m else Fraction(0)
    return wrapped


m_, j_ = X, Y

SUMMANDS: dict[str, Summand] = {
    "F1": Summand(
        "F1", (2 * j_ + 2) ** 2, (2 * m_ + 2) ** 2,
        ((2 * m_ + 2, m_ - j_),) * 2,
        lambda m: binomial(2 * m + 1, m),
        _in_range(lambda m, j: _sgn(j) * Fraction((2 * j + 2) ** 2 * binomial(2 * m + 2, m - j) ** 2,
                                                  (2 * m + 2) ** 2 * binomial(2 * m + 1, m))),
    ),
    "F2": Summand(
        "F2", (2 * j_ + 2) ** 2, (2 * m_ + 2) * (2 * m_ + 3),
        ((2 * m_ + 3, m_ - j_), (2 * m_ + 3, m_ - j_ + 1)),
        lambda m: binomial(2 * m + 2, m + 1),
        _in_range(lambda m, j: _sgn(j) * Fraction(
            (2 * j + 2) ** 2 * binomial(2 * m + 3, m - j) * binomial(2 * m + 3, m - j + 1),
            (2 * m + 2) * (2 * m + 3) * binomial(2 * m + 2, m + 1))),
    ),
    "F3": Summand(
        "F3", 2 * j_ + 1, 2 * m_ + 1,
        ((2 * m_ + 1, m_ - j_),) * 2,
        lambda m: binomial(2 * m, m),
        _in_range(lambda m, j: _sgn(j) * Fraction((2 * j + 1) * binomial(2 * m + 1, m - j) ** 2,
                                                  (2 * m + 1) * binomial(2 * m, m))),
    ),
    "F4": Summand(
        "F4", (2 * j_ + 2) * (2 * j_ + 3) * (2 * j_ + 4), (2 * m_ + 2) * (2 * m_ + 3) * (2 * m_ + 4) ** 2,
        ((2 * m_ + 4, m_ - j_), (2 * m_ + 4, m_ - j_ + 1)),
        lambda n: catalan(n + 1),
        _in_range(lambda n, k: _sgn(k) * Fraction(
            (2 * k + 2) * (2 * k + 3) * (2 * k + 4) * binomial(2 * n + 4, n - k) * binomial(2 * n + 4, n - k + 1),
            (2 * n + 2) * (2 * n + 3) * (2 * n + 4) ** 2 * catalan(n + 1))),
    ),
    "F5": Summand(
        "F5", (2 * j_ + 2) * (2 * j_ + 3) * (2 * j_ + 4), 2 * (2 * m_ + 2) * (2 * m_ + 3) * (2 * m_ + 6) * (2 * m_ + 7),
        ((2 * m_ + 3, m_ - j_), (2 * m_ + 7, m_ - j_ + 2)),
        lambda n: catalan(n + 1),
        _in_range(lambda n, k: _sgn(k) * Fraction(
            (2 * k + 2) * (2 * k + 3) * (2 * k + 4) * binomial(2 * n + 3, n - k) * binomial(2 * n + 7, n - k + 2),
            2 * (2 * n + 2) * (2 * n + 3) * (2 * n + 6) * (2 * n + 7) * catalan(n + 1))),
    ),
}

CERTIFICATES: dict[str, Certificate] = {
    "R1": Certificate(
        "R1", j_ ** 2 * (j_ + 1) - j_ * (3 * m_ + 5) * (m_ + 1), 2 * (j_ + 1) * (m_ - j_ + 1) ** 2,
        lambda m, j: Fraction(j * j * (j + 1) - j * (3 * m + 5) * (m + 1), 2 * (j + 1) * (m - j + 1) ** 2),
        "F1",
    ),
    "R2": Certificate(
        "R2", j_ ** 2 * (j_ + 1) - j_ * (3 * m_ + 5) * (m_ + 2), 2 * (j_ + 1) * (m_ - j_ + 1) * (m_ - j_ + 2),
        lambda m, j: Fraction(j * j * (j + 1) - j * (3 * m + 5) * (m + 2), 2 * (j + 1) * (m - j + 1) * (m - j + 2)),
        "F2",
    ),
    "R3": Certificate(
        "R3", j_ ** 3 - 3 * j_ * (m_ + 1) ** 2, (2 * j_ + 1) * (m_ - j_ + 1) ** 2,
        lambda m, j: Fraction(j ** 3 - 3 * j * (m + 1) ** 2, (2 * j + 1) * (m - j + 1) ** 2),
        "F3",
    ),
    "R4": Certificate(
        "R4", j_ * (j_ + 1) ** 2 - j_ * (3 * m_ + 7) * (m_ + 2), (2 * j_ + 3) * (m_ - j_ + 1) * (m_ - j_ + 2),
        lambda n, k: Fraction(k * (k + 1) ** 2 - k * (3 * n + 7) * (n + 2), (2 * k + 3) * (n - k + 1) * (n - k + 2)),
        "F4",
    ),
    # doubling the numerator (R5-false) breaks the recurrence
    "R5": Certificate(
        "R5", j_ ** 2 * (j_ + 2) - j_ * (3 * m_ + 7) * (m_ + 3), (2 * j_ + 3) * (m_ - j_ + 1) * (m_ - j_ + 3),
        lambda n, k: Fraction(k * k * (k + 2) - k * (3 * n + 7) * (n + 3), (2 * k + 3) * (n - k + 1) * (n - k + 3)),
        "F5",
    ),
}

FALSE_CERTIFICATES: dict[str, Certificate] = {
    "R5-false": Certificate(
        "R5-false", 2 * j_ ** 2 * (j_ + 2) - 2 * j_ * (3 * m_ + 7) * (m_ + 3),
        (2 * j_ + 3) * (m_ - j_ + 1) * (m_ - j_ + 3),
        lambda n, k: Fraction(2 * k * k * (k + 2) - 2 * k * (3 * n + 7) * (n + 3),
                              (2 * k + 3) * (n - k + 1) * (n - k + 3)),
        "F5",
    ),
}


def get_summand(tag: str) -> Summand:
    try:
        return SUMMANDS[tag.upper()]
    except KeyError:
        raise KeyError(f"unknown summand {tag!r}; choose from {sorted(SUMMANDS)}") from None


def get_certificate(tag: str) -> Certificate:
    cert = CERTIFICATES.get(tag.upper()) or FALSE_CERTIFICATES.get(tag)
    if cert is None:
        raise KeyError(f"unknown certificate {tag!r}; choose from {sorted(CERTIFICATES)}")
    return cert


@dataclass
class TelescopeReport:
    name: str
    max_m: int
    checked: int = 0
    failures: list[tuple] = field(default_factory=list)
    singular: list[tuple[int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and not self.singular

    def to_dict(self, limit: int = 20) -> dict:
        return {
            "check": self.name,
            "max_m": self.max_m,
            "points": self.checked,
            "passed": self.passed,
            "failures": [[str(v) for v in f] for f in self.failures[:limit]],
            "singular": [list(p) for p in self.singular[:limit]],
        }

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        out = f"{verdict} {self.name} m<={self.max_m} points={self.checked}"
        if self.failures:
            out += f" first_failure={self.failures[0][:2]}"
        if self.singular:
            out += f" singular={self.singular[:3]}"
        return out


def g_value(F: Summand, R: Certificate, m: int, j: int) -> Fraction:
    """G(m, j) = R(m, j) F(m, j) as a limit; raises ZeroDivisionError at a true pole."""
    if j < 0:
        return Fraction(0)
    return (R.lead(m, j) * F.lead(m, j)).value()


def wz_check(F: Summand, R: Certificate, max_m: int) -> TelescopeReport:
    """Check the telescoping recurrence for 0 <= m <= max_m, 0 <= j <= m + 1.

    Also requires G(m, 0) = 0 and G(m, m + 2) = 0, so that summing the
    recurrence over j gives sum_j F(m+1, j) = sum_j F(m, j).
    """
    if max_m < 1:
        raise ValueError("max_m must be at least 1")
    rep = TelescopeReport(f"wz {F.tag}/{R.tag}", max_m)

    def f_row(m):
        # limits for j = 0..m+2; F itself is 0 past j = m
        leads = [F.lead(m, j) for j in range(m + 3)]
        return leads, [leads[j].value() if j <= m else Fraction(0) for j in range(m + 3)]

    leads, cur = f_row(0)
    for m in range(max_m + 1):
        next_leads, nxt = f_row(m + 1)
        G = []
        for j in range(m + 3):
            try:
                G.append((R.lead(m, j) * leads[j]).value())
            except ZeroDivisionError:
                rep.singular.append((m, j))
                G.append(None)
        for j in range(m + 2):
            rep.checked += 1
            if G[j] is None or G[j + 1] is None:
                continue
            lhs = nxt[j] - cur[j]
            rhs = G[j + 1] - G[j]
            if lhs != rhs:
                rep.failures.append((m, j, lhs, rhs))
        for j in (0, m + 2):
            if G[j] is not None and G[j] != 0:
                rep.failures.append((m, j, "boundary G", G[j]))
        leads, cur = next_leads, nxt
    return rep


def constant_sum_check(F: Summand, max_m: int) -> TelescopeReport:
    """Sum F(m, j) over 0 <= j <= m directly and require 1."""
    if max_m < 0:
        raise ValueError("max_m must be nonnegative")
    rep = TelescopeReport(f"sum {F.tag}", max_m)
    for m in range(max_m + 1):
        rep.checked += 1
        total = sum((F.direct(m, j) for j in range(m + 1)), Fraction(0))
        if total != 1:
            rep.failures.append((m, total))
    return rep


def summand_agreement(F: Summand, max_m: int) -> TelescopeReport:
    """The limit evaluation and the direct formula agree inside the range."""
    rep = TelescopeReport(f"agree {F.tag}", max_m)
    for m in range(max_m + 1):
        for j in range(m + 1):
            rep.checked += 1
            a, b = F(m, j), F.direct(m, j)
            if a != b:
                rep.failures.append((m, j, a, b))
    return rep


def certificate_dual_eval(R: Certificate, points: int = 10_000, bound: int = 200,
                          seed: int = 0) -> TelescopeReport:
    """Polynomial-form evaluation vs the plain formula at random integer points."""
    rng = random.Random(seed)
    rep = TelescopeReport(f"dual {R.tag}", bound)
    while rep.checked < points:
        m = rng.randint(0, bound)
        j = rng.randint(-bound, bound)
        if R.den.eval(m, j) == 0:
            continue
        rep.checked += 1
        a, b = R(m, j), R.direct(m, j)
        if a != b:
            rep.failures.append((m, j, a, b))
    return rep


__all__ = [
    "Lead",
    "Summand",
    "Certificate",
    "SUMMANDS",
    "CERTIFICATES",
    "FALSE_CERTIFICATES",
    "get_summand",
    "get_certificate",
    "TelescopeReport",
    "g_value",
    "wz_check",
    "constant_sum_check",
    "summand_agreement",
    "certificate_dual_eval",
    "poly_lead",
    "binomial_lead",
]
