"""Truncated power series in t with polynomial (or integer) coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import ONE, X, ZERO, Y, BiPoly, as_integer, binomial, catalan
from .triangle import build_triangle


class SeriesOrderError(ValueError):
    pass


class TruncatedSeries:
    """sum_{n <= order} c_n t^n; nothing is claimed beyond t^order.

    Coefficients may be BiPoly, int or Fraction; the zero of the ring is
    taken from ``zero``.
    """

    __slots__ = ("coeffs", "zero")

    def __init__(self, coeffs: Sequence, order: int | None = None, zero=ZERO):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise SeriesOrderError("series order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.zero = zero

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise SeriesOrderError(
                f"truncation orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], zero=self.zero
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], zero=self.zero
        )

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs], zero=self.zero)
        return series_mul(self, other)

    def shift(self, by: int = 1) -> "TruncatedSeries":
        """Multiply by t**by, dropping what falls past the order."""
        return TruncatedSeries(
            [self.zero] * by + list(self.coeffs[: self.order + 1 - by]),
            order=self.order,
            zero=self.zero,
        )

    def map(self, f: Callable) -> "TruncatedSeries":
        return TruncatedSeries([f(c) for c in self.coeffs], zero=self.zero)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (order + 1 if none)."""
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return n
        return self.order + 1


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product through the common order, skipping leading zeros."""
    a._check(b)
    N = a.order
    va, vb = a.valuation(), b.valuation()
    out = [a.zero] * (N + 1)
    for i in range(va, N + 1 - vb):
        ai = a.coeffs[i]
        if ai == 0:
            continue
        for j in range(vb, N + 1 - i):
            bj = b.coeffs[j]
            if bj == 0:
                continue
            out[i + j] = out[i + j] + ai * bj
    return TruncatedSeries(out, zero=a.zero)


def series_pow(a: TruncatedSeries, e: int) -> TruncatedSeries:
    out = TruncatedSeries([_one_like(a.zero)], order=a.order, zero=a.zero)
    for _ in range(e):
        out = series_mul(out, a)
    return out


def _one_like(zero):
    return ONE if isinstance(zero, BiPoly) else 1


def series_substitute_y_for_x(a: TruncatedSeries) -> TruncatedSeries:
    """Replace x by y in every coefficient: M0(x, y; t) -> M0(y, y; t)."""
    return a.map(lambda c: c.substitute(x=Y))


def series_from_column(k: int, N: int) -> TruncatedSeries:
    """sum_n M[n][k](x, y) t^n through t^N."""
    if N < 0 or k < 0:
        raise ValueError("need N >= 0 and k >= 0")
    tri = build_triangle(N)
    return TruncatedSeries([tri.entry(n, k) for n in range(N + 1)])


@dataclass
class SeriesCheck:
    name: str
    order: int
    passed: bool
    first_failure: int | None = None
    detail: str = ""
    instances: int = 0

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        where = "" if self.first_failure is None else f" first failing degree {self.first_failure}"
        return f"{verdict} {self.name} through t^{self.order}{where} {self.detail}".rstrip()


def _first_mismatch(a: TruncatedSeries, b: TruncatedSeries) -> int | None:
    for n, (p, q) in enumerate(zip(a.coeffs, b.coeffs)):
        if p != q:
            return n
    return None


def verify_functional_equation(N: int, m0: TruncatedSeries | None = None) -> SeriesCheck:
    """Check M0(x,y;t) = 1 + x t M0(x,y;t) + t^2 M0(y,y;t) M0(x,y;t) through t^N."""
    if N < 1:
        raise ValueError("N must be at least 1")
    if m0 is None:
        m0 = series_from_column(0, N)
    m0yy = series_substitute_y_for_x(m0)
    one = TruncatedSeries([ONE], order=N)
    x_term = m0.map(lambda c: X * c).shift(1)
    quad = series_mul(m0yy, m0).shift(2)
    rhs = one + x_term + quad
    bad = _first_mismatch(m0, rhs)
    return SeriesCheck("functional-equation", N, bad is None, bad, instances=N + 1)


def verify_riordan(N: int, k_max: int) -> SeriesCheck:
    """Check M_k(x,y;t) = M0(x,y;t) * (t M0(y,y;t))^k for 1 <= k <= k_max."""
    if k_max > N:
        raise ValueError("need N >= k_max")
    m0 = series_from_column(0, N)
    f = series_substitute_y_for_x(m0).shift(1)
    power = TruncatedSeries([ONE], order=N)
    checked = 0
    for k in range(1, k_max + 1):
        power = series_mul(power, f)
        lhs = series_from_column(k, N)
        rhs = series_mul(m0, power)
        bad = _first_mismatch(lhs, rhs)
        checked += N + 1
        if bad is not None:
            return SeriesCheck("riordan", N, False, bad, f"at k={k}", checked)
    return SeriesCheck("riordan", N, True, None, f"k<={k_max}", checked)


def iterate_quadratic(N: int) -> TruncatedSeries:
    """Solve F = 1 + y t F + t^2 F^2 by fixed-point iteration through t^N.

    Each pass fixes one more coefficient, so N + 1 passes suffice.
    """
    F = TruncatedSeries([ONE], order=N)
    y_t = TruncatedSeries([ZERO, Y], order=N)
    one = TruncatedSeries([ONE], order=N)
    for _ in range(N + 1):
        F = one + series_mul(y_t, F) + series_mul(F, F).shift(2)
    return F


# -- Catalan powers -------------------------------------------------------


def catalan_series(N: int) -> TruncatedSeries:
    """C(t) from C = 1 + t C^2, iterated; independent of the binomial formula."""
    C = TruncatedSeries([1], order=N, zero=0)
    one = TruncatedSeries([1], order=N, zero=0)
    for _ in range(N + 1):
        C = one + series_mul(C, C).shift(1)
    return C


def inverse_sqrt_one_minus_4t(N: int) -> TruncatedSeries:
    """S with S^2 = 1/(1-4t) = sum 4^n t^n, solved coefficient by coefficient."""
    s = [Fraction(1)]
    for n in range(1, N + 1):
        acc = sum(s[i] * s[n - i] for i in range(1, n))
        s.append((Fraction(4) ** n - acc) / 2)
    return TruncatedSeries([as_integer(c, "1/sqrt(1-4t) coefficient") for c in s], zero=0)


def catalan_power_coeff(alpha: int, n: int, sqrt_variant: bool = False) -> int:
    """[t^n] C(t)^alpha, or [t^n] C(t)^alpha / sqrt(1-4t) when sqrt_variant."""
    if alpha < 1 or n < 0:
        raise ValueError("need alpha >= 1 and n >= 0")
    if sqrt_variant:
        return binomial(2 * n + alpha, n)
    return as_integer(Fraction(alpha, 2 * n + alpha) * binomial(2 * n + alpha, n))


def catalan_power_series(alpha: int, N: int, sqrt_variant: bool = False) -> TruncatedSeries:
    """Direct series power of C(t), optionally divided by sqrt(1-4t)."""
    out = series_pow(catalan_series(N), alpha)
    if sqrt_variant:
        out = series_mul(out, inverse_sqrt_one_minus_4t(N))
    return out


def verify_catalan_powers(max_alpha: int, N: int) -> SeriesCheck:
    checked = 0
    for sqrt_variant in (False, True):
        for alpha in range(1, max_alpha + 1):
            s = catalan_power_series(alpha, N, sqrt_variant)
            for n in range(N + 1):
                checked += 1
                if catalan_power_coeff(alpha, n, sqrt_variant) != s[n]:
                    tag = "sqrt" if sqrt_variant else "plain"
                    return SeriesCheck(
                        "catalan-powers", N, False, n, f"alpha={alpha} {tag}", checked
                    )
    return SeriesCheck("catalan-powers", N, True, None, f"alpha<={max_alpha}", checked)


__all__ = [
    "TruncatedSeries",
    "SeriesCheck",
    "SeriesOrderError",
    "series_mul",
    "series_pow",
    "series_substitute_y_for_x",
    "series_from_column",
    "verify_functional_equation",
    "verify_riordan",
    "iterate_quadratic",
    "catalan_series",
    "catalan_power_coeff",
    "catalan_power_series",
    "verify_catalan_powers",
    "catalan",
]
