"""Exact verification of determinant and binomial-sum identities.

Every identity lives in :data:`REGISTRY` under a short tag.  Both sides
are evaluated independently (left side from triangle entries or the
binomial sum, right side from the closed form) and compared exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Sequence

from .algebra import ONE, Y, BiPoly, binomial, catalan, rising_factorial
from .triangle import build_triangle, shapiro_entry, specialized

Point = tuple[int, int]


class UnknownIdentity(KeyError):
    pass


class OutOfDomain(ValueError):
    pass


def det2(a, b, c, d):
    """Determinant of [[a, b], [c, d]]."""
    return a * d - b * c


def det(matrix: Sequence[Sequence]):
    """Exact determinant: Bareiss elimination for integers, cofactors otherwise."""
    size = len(matrix)
    if size == 0:
        return 1
    if all(isinstance(v, int) for row in matrix for v in row):
        return _bareiss([list(row) for row in matrix])
    return _laplace([list(row) for row in matrix])


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign, prev = 1, 1
    for i in range(n - 1):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if a[r][i] != 0), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


def _laplace(a: list[list]):
    if len(a) == 1:
        return a[0][0]
    if len(a) == 2:
        return det2(a[0][0], a[0][1], a[1][0], a[1][1])
    total = 0
    for j, v in enumerate(a[0]):
        if v == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in a[1:]]
        term = v * _laplace(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


# -- reports ------------------------------------------------------------------


@dataclass
class VerificationReport:
    identity: str
    instances: int = 0
    failures: list[tuple] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, params: tuple, lhs, rhs) -> bool:
        self.instances += 1
        if lhs != rhs:
            self.failures.append((params, lhs, rhs))
            return False
        return True

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.instances += other.instances
        self.failures.extend(other.failures)
        return self

    def to_dict(self, limit: int = 20) -> dict:
        return {
            "identity": self.identity,
            "instances": self.instances,
            "passed": self.passed,
            "failures": [
                {"params": list(p), "lhs": str(l), "rhs": str(r)}
                for p, l, r in self.failures[:limit]
            ],
        }

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {self.identity} instances={self.instances} failures={len(self.failures)}"


# -- triangle access ----------------------------------------------------------


def M(n: int, k: int) -> BiPoly:
    if k < 0 or k > n or n < 0:
        return BiPoly()
    return build_triangle(n).entry(n, k)


@lru_cache(maxsize=None)
def M_yy(n: int, k: int) -> BiPoly:
    """M[n][k](y, y), a polynomial in y alone."""
    return M(n, k).substitute(x=Y)


@lru_cache(maxsize=None)
def M_y1y(n: int, k: int) -> BiPoly:
    """M[n][k](y+1, y) by formal substitution x := y + 1."""
    return M(n, k).substitute(x=Y + 1)


@lru_cache(maxsize=None)
def M_y1y_via_bijection(n: int) -> BiPoly:
    """M[n][0](y+1, y) as the weight of the R-visible-up image set."""
    total = BiPoly()
    for ell in range(n + 1):
        total = total + M_yy(n, ell)
    return total


def _entry(n: int, k: int, point: Point | None):
    if point is None:
        return M(n, k)
    return specialized(n, k, *point)


def _entry_yy(n: int, k: int, point: Point | None):
    if point is None:
        return M_yy(n, k)
    y0 = point[1]
    return specialized(n, k, y0, y0)


def _entry_y1y(n: int, point: Point | None):
    if point is None:
        a, b = M_y1y(n, 0), M_y1y_via_bijection(n)
        if a != b:
            raise ArithmeticError(f"M[{n}][0](y+1,y) disagrees between routes: {a} vs {b}")
        return a
    y0 = point[1]
    return specialized(n, 0, y0 + 1, y0)


# -- symbolic determinant sums --------------------------------------------


def minor_sum_lhs(n: int, m: int, r: int, ell: int, point: Point | None = None):
    """sum_{k=0}^{N_r} det[[M(n,k), M(m,k+l+1)], [M(n+r+1,k), M(m+r+1,k+l+1)]]."""
    top = min(n + r + 1, m + r - ell)
    total = 0
    for k in range(top + 1):
        a = _entry(n, k, point)
        b = _entry(m, k + ell + 1, point)
        c = _entry(n + r + 1, k, point)
        d = _entry(m + r + 1, k + ell + 1, point)
        total = total + det2(a, b, c, d)
    return total if point is not None or total != 0 else BiPoly()


def thm32_rhs(n: int, m: int, r: int, ell: int, point: Point | None = None):
    total = 0
    for i in range(r + 1):
        total = total + _entry(n + i, 0, point) * _entry_yy(m + r - i, ell, point)
    return total


def thm32_sum_lhs(n: int, m: int, r: int, point: Point | None = None):
    """Left side summed over every level l = 0..m+r."""
    total = 0
    for ell in range(m + r + 1):
        total = total + minor_sum_lhs(n, m, r, ell, point)
    return total


def thm32_sum_rhs(n: int, m: int, r: int, point: Point | None = None):
    total = 0
    for i in range(r + 1):
        total = total + _entry(n + i, 0, point) * _entry_y1y(m + r - i, point)
    return total


def _check_point(point):
    if point is not None:
        point = tuple(int(v) for v in point)
        if len(point) != 2:
            raise ValueError("point must be a pair (x0, y0)")
    return point


def _eq(a, b) -> bool:
    if isinstance(a, BiPoly) or isinstance(b, BiPoly):
        return BiPoly.coerce(a) == BiPoly.coerce(b)
    return a == b


def _record(rep: VerificationReport, params, lhs, rhs) -> None:
    rep.instances += 1
    if not _eq(lhs, rhs):
        rep.failures.append((params, lhs, rhs))


def verify_thm32(n: int, m: int, r: int, ell: int, mode: str = "symbolic",
                 point: Point | None = None, summed: bool = False) -> VerificationReport:
    """Check the r-shifted minor sum identity for one parameter tuple.

    With ``summed`` the identity summed over all levels is checked instead;
    its right side uses M(y+1, y), produced both by substitution and as the
    image weight of the marked-step bijection.
    """
    if n < 0 or r < 0 or not 0 <= ell <= m:
        raise OutOfDomain(f"need n, r >= 0 and m >= l >= 0, got {(n, m, r, ell)}")
    point = _point_for(mode, point)
    if summed:
        rep = VerificationReport("eq3.1.2")
        _record(rep, (n, m, r), thm32_sum_lhs(n, m, r, point), thm32_sum_rhs(n, m, r, point))
    else:
        rep = VerificationReport("eq3.1.1")
        _record(rep, (n, m, r, ell), minor_sum_lhs(n, m, r, ell, point), thm32_rhs(n, m, r, ell, point))
    return rep


def _point_for(mode: str, point) -> Point | None:
    if mode == "symbolic":
        return None
    if mode == "at-point":
        if point is None:
            raise ValueError("at-point mode needs a point")
        return _check_point(point)
    raise ValueError(f"unknown mode {mode!r}")


def verify_thm33(n: int, m: int, ell: int, mode: str = "symbolic",
                 point: Point | None = None) -> VerificationReport:
    rep = verify_thm32(n, m, 0, ell, mode, point)
    rep.identity = "eq3.2.1"
    return rep


def thm39_lhs(n: int, y0: int | None = None):
    get = (lambda a, b: M_yy(a, b)) if y0 is None else (lambda a, b: specialized(a, b, y0, y0))
    total = 0
    for k in range(n + 1):
        total = total + det2(get(n, k), get(n, k + 1), get(n + 2, k), get(n + 2, k + 1))
    return total


def thm39_rhs(n: int, y0: int | None = None):
    if y0 is None:
        return 2 * M_yy(n, 0) * M_yy(n + 1, 0)
    return 2 * specialized(n, 0, y0, y0) * specialized(n + 1, 0, y0, y0)


def verify_thm39(n: int, y0: int | None = None) -> VerificationReport:
    if n < 0:
        raise OutOfDomain("n must be nonnegative")
    rep = VerificationReport("eq3.10")
    _record(rep, (n,) if y0 is None else (n, y0), thm39_lhs(n, y0), thm39_rhs(n, y0))
    return rep


# -- coefficient polynomials ------------------------------------------------------


@dataclass(frozen=True)
class CoeffPoly:
    """Integer polynomial in (n, k, m, l) stored as coefficient * product terms."""

    name: str
    terms: tuple[tuple[int, Callable[[int, int, int, int], int]], ...]

    def __call__(self, n: int, k: int, m: int, ell: int) -> int:
        return sum(c * f(n, k, m, ell) for c, f in self.terms)

    def mutated(self, index: int, delta: int = 1) -> "CoeffPoly":
        terms = list(self.terms)
        c, f = terms[index]
        terms[index] = (c + delta, f)
        return CoeffPoly(f"{self.name}~{index}", tuple(terms))


ALPHA = CoeffPoly("alpha", (
    (6, lambda n, k, m, l: (m - n) * (n + 1) * (m + 1)),
    (1, lambda n, k, m, l: (l + 1) * (2 * k + l + 2) * (2 * n + 1) * (2 * n + 2)),
    (-2, lambda n, k, m, l: (m - n) * k * (k + 1) * (2 * n + 2 * m + 3)),
))
BETA = CoeffPoly("beta", (
    (6, lambda n, k, m, l: (m - n) * (n + 1) * (m + 1)),
    (1, lambda n, k, m, l: (l + 1) * (2 * k + l + 3) * (2 * n + 2) * (2 * n + 3)),
    (-2, lambda n, k, m, l: (m - n) * k * (k + 2) * (2 * n + 2 * m + 5)),
))
GAMMA = CoeffPoly("gamma", (
    (2, lambda n, k, m, l: (m - n) * (n + 1) * (m + 1)),
    (1, lambda n, k, m, l: (l + 1) * (2 * k + l + 2) * (2 * n + 2) * (2 * n + 3)),
    (-2, lambda n, k, m, l: (m - n) * k * (k + 1) * (2 * n + 2 * m + 5)),
))
LAMBDA = CoeffPoly("lambda", (
    (2, lambda n, k, m, l: (2 * n + 1) * (2 * k + l + 2) * (2 * (k + 1) * (k + l + 1) - (m + 1))),
    (2, lambda n, k, m, l: (m - n) * (k + l + 1) * (2 * k + 1) * (2 * k + 3)),
))
COEFF_POLYS = {p.name: p for p in (ALPHA, BETA, GAMMA, LAMBDA)}


@dataclass(frozen=True)
class Specialization:
    poly: str
    label: str
    args: Callable[[int, int], tuple[int, int]]  # (n, k) -> (m, l)
    expected: Callable[[int, int], int]
    false_form: Callable[[int, int], int] | None = None


# Reductions of the coefficient polynomials at l = 0 and m near n.
# ``false_form`` keeps a plausible-looking factorisation that does not match.
SPECIALIZATIONS = (
    Specialization("alpha", "m=n-1", lambda n, k: (n - 1, 0),
                   lambda n, k: (n + k + 2) * (8 * n * k + 2 * n + 2 * k + 2),
                   lambda n, k: (n + k + 3) * (8 * n * k + 2 * n + 2 * k + 2)),
    Specialization("alpha", "m=n", lambda n, k: (n, 0),
                   lambda n, k: (2 * k + 2) * (2 * n + 1) * (2 * n + 2)),
    Specialization("alpha", "m=n+1", lambda n, k: (n + 1, 0),
                   lambda n, k: (n - k + 1) * (8 * n * k + 14 * n + 10 * k + 16)),
    Specialization("beta", "m=n-1", lambda n, k: (n - 1, 0),
                   lambda n, k: (n + k + 3) * (8 * n * k + 6 * n + 6 * k + 6)),
    Specialization("beta", "m=n", lambda n, k: (n, 0),
                   lambda n, k: (2 * k + 3) * (2 * n + 2) * (2 * n + 3)),
    Specialization("beta", "m=n+1", lambda n, k: (n + 1, 0),
                   lambda n, k: (n - k + 1) * (8 * n * k + 18 * n + 14 * k + 30)),
    Specialization("gamma", "m=n-1", lambda n, k: (n - 1, 0),
                   lambda n, k: (n + k + 2) * (8 * n * k + 6 * n + 6 * k + 6)),
    Specialization("gamma", "m=n", lambda n, k: (n, 0),
                   lambda n, k: (2 * k + 2) * (2 * n + 2) * (2 * n + 3)),
    Specialization("gamma", "m=n+1", lambda n, k: (n + 1, 0),
                   lambda n, k: (n - k + 1) * (8 * n * k + 10 * n + 14 * k + 16),
                   lambda n, k: (n - k + 1) * (8 * n * k + 10 * n + 14 * k + 6)),
    Specialization("lambda", "m=n", lambda n, k: (n, 0),
                   lambda n, k: (2 * n + 1) * (2 * k + 2) * ((2 * k + 1) * (2 * k + 3) - (2 * n + 1))),
)


def check_specializations(max_n: int, use_false_forms: bool = False) -> VerificationReport:
    """Compare each reduction with the general formula for all n, k <= max_n.

    With ``use_false_forms`` the known-bad factorisations are substituted
    where present; that run is expected to fail.
    """
    rep = VerificationReport("coeff-specializations" + ("-false" if use_false_forms else ""))
    for spec in SPECIALIZATIONS:
        poly = COEFF_POLYS[spec.poly]
        want = (spec.false_form if use_false_forms and spec.false_form else spec.expected)
        for n in range(max_n + 1):
            for k in range(max_n + 1):
                m, ell = spec.args(n, k)
                _record(rep, (spec.poly, spec.label, n, k), poly(n, k, m, ell), want(n, k))
    return rep


# -- binomial-sum identities -----------------------------------------------------------

F = Fraction
B = binomial
C = catalan
rf = rising_factorial


def _sum(lo: int, hi: int, term: Callable[[int], Fraction]) -> Fraction:
    total = Fraction(0)
    for k in range(lo, hi + 1):
        total += term(k)
    return total


def motzkin_number(n: int) -> int:
    """M_n = sum_k C(n, 2k) C_k, independent of the path triangle."""
    return sum(binomial(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


# Families in (n, m, l) obtained from the r = 0 minor sum at a special point.

def eq333_lhs(n, m, l):
    return F(l + 1, m + 1) * B(2 * m + 2, m - l) * C(n)


def eq333_rhs(n, m, l, alpha=ALPHA, shift=3):
    # shift=1, i.e. (2k+2l+1), breaks the identity
    den = rf(2 * n + 1, 3) * rf(2 * m + 1, 3)
    return _sum(0, min(n + 1, m - l), lambda k: F(
        (2 * k + 1) * (2 * k + 2 * l + shift) * alpha(n, k, m, l), den)
        * B(2 * n + 3, n - k + 1) * B(2 * m + 3, m - k - l))


def eq342_lhs(n, m, l):
    return F(l + 1, m + 1) * B(2 * m + 2, m - l) * C(n + 1)


def eq342_rhs(n, m, l, beta=BETA):
    den = rf(2 * n + 2, 3) * rf(2 * m + 2, 3)
    return _sum(0, min(n + 1, m - l), lambda k: F(
        (2 * k + 2) * (2 * k + 2 * l + 4) * beta(n, k, m, l), den)
        * B(2 * n + 4, n - k + 1) * B(2 * m + 4, m - k - l))


def eq352_lhs(n, m, l):
    return F(l + 1, m + 1) * B(2 * m + 2, m - l) * B(2 * n + 1, n)


def eq352_rhs(n, m, l, gamma=GAMMA):
    den = rf(2 * n + 2, 2) * rf(2 * m + 2, 2)
    return _sum(0, min(n + 1, m - l), lambda k: F(gamma(n, k, m, l), den)
                * B(2 * n + 3, n - k + 1) * B(2 * m + 3, m - k - l))


def eq362_lhs(n, m, l):
    return F(2 * l + 1, 2 * m + 1) * B(2 * m + 1, m - l) * C(n)


def eq362_rhs(n, m, l, lam=LAMBDA):
    den = rf(2 * n + 1, 2) * rf(2 * m + 1, 2)
    return _sum(0, min(n + 1, m - l), lambda k: F(lam(n, k, m, l), den)
                * B(2 * n + 2, n - k) * B(2 * m + 2, m - k - l))


# Families in (n, l), the m = n case.

def eq371_lhs(n, l):
    return F(1, n + 1) * B(2 * n + 2, n - l) * C(n)


def eq371_rhs(n, l):
    den = (2 * n + 1) * (2 * n + 2) * (2 * n + 3) ** 2
    return _sum(0, n - l, lambda k: F((2 * k + 1) * (2 * k + l + 2) * (2 * k + 2 * l + 3), den)
                * B(2 * n + 3, n - k - l) * B(2 * n + 3, n - k + 1))


def eq372_lhs(n, l):
    return F(1, n + 1) * B(2 * n + 2, n - l) * C(n + 1)


def eq372_rhs(n, l):
    den = (2 * n + 2) * (2 * n + 3) * (2 * n + 4) ** 2
    return _sum(0, n - l, lambda k: F((2 * k + 2) * (2 * k + l + 3) * (2 * k + 2 * l + 4), den)
                * B(2 * n + 4, n - k - l) * B(2 * n + 4, n - k + 1))


def eq373_lhs(n, l):
    return F(1, n + 1) * B(2 * n + 2, n - l) * B(2 * n + 1, n)


def eq373_rhs(n, l):
    den = (2 * n + 2) * (2 * n + 3)
    return _sum(0, n - l, lambda k: F(2 * k + l + 2, den)
                * B(2 * n + 3, n - k - l) * B(2 * n + 3, n - k + 1))


def _single(lhs: Callable[[int], Fraction], rhs: Callable[[int], Fraction]):
    return lhs, rhs


def _p5(n):
    return (2 * n + 1) * (2 * n + 2) * (2 * n + 3) * (2 * n + 4) * (2 * n + 5)


def _q5(n):
    return (2 * n + 2) * (2 * n + 3) * (2 * n + 4) * (2 * n + 5) * (2 * n + 6)


SINGLE: dict[str, tuple[Callable, Callable, str]] = {
    "cor3.4a": (
        lambda n: F(C(n + 1) ** 2),
        lambda n: _sum(0, n, lambda k: F((2 * k + 1) * (2 * k + 3) * (8 * n * k + 2 * n + 10 * k + 4), _p5(n))
                       * B(2 * n + 2, n - k) * B(2 * n + 5, n - k + 2)),
        "C_{n+1}^2 as a sum of (2k+1)(2k+3)(8nk+2n+10k+4) C(2n+2,n-k) C(2n+5,n-k+2)",
    ),
    "eq3.3.4": (
        lambda n: F(C(n) * C(n + 1)),
        lambda n: _sum(0, n, lambda k: F((2 * k + 1) * (2 * k + 2) * (2 * k + 3),
                                         (2 * n + 1) * (2 * n + 2) * (2 * n + 3) ** 2)
                       * B(2 * n + 3, n - k) * B(2 * n + 3, n - k + 1)),
        "C_n C_{n+1} as a sum of (2k+1)(2k+2)(2k+3) C(2n+3,n-k) C(2n+3,n-k+1)",
    ),
    "cor3.4c": (
        lambda n: F(C(n) * C(n + 2)),
        lambda n: _sum(0, n, lambda k: F((2 * k + 1) * (2 * k + 3) * (8 * n * k + 14 * n + 10 * k + 16), _p5(n))
                       * B(2 * n + 2, n - k) * B(2 * n + 5, n - k + 1)),
        "C_n C_{n+2} as a sum of (2k+1)(2k+3)(8nk+14n+10k+16) C(2n+2,n-k) C(2n+5,n-k+1)",
    ),
    "cor3.5a": (
        lambda n: F(C(n + 1) * C(n + 2)),
        lambda n: _sum(0, n, lambda k: F((2 * k + 2) * (2 * k + 4) * (8 * n * k + 6 * n + 14 * k + 12), _q5(n))
                       * B(2 * n + 3, n - k) * B(2 * n + 6, n - k + 2)),
        "C_{n+1} C_{n+2} as a sum of (2k+2)(2k+4)(8nk+6n+14k+12) C(2n+3,n-k) C(2n+6,n-k+2)",
    ),
    "eq3.4.3": (
        lambda n: F(C(n + 1) ** 2),
        lambda n: _sum(0, n, lambda k: F((2 * k + 2) * (2 * k + 3) * (2 * k + 4),
                                         (2 * n + 2) * (2 * n + 3) * (2 * n + 4) ** 2)
                       * B(2 * n + 4, n - k) * B(2 * n + 4, n - k + 1)),
        "C_{n+1}^2 as a sum of (2k+2)(2k+3)(2k+4) C(2n+4,n-k) C(2n+4,n-k+1)",
    ),
    "cor3.5c": (
        lambda n: F(C(n + 1) * C(n + 2)),
        lambda n: _sum(0, n, lambda k: F((2 * k + 2) * (2 * k + 4) * (8 * n * k + 18 * n + 14 * k + 30), _q5(n))
                       * B(2 * n + 3, n - k) * B(2 * n + 6, n - k + 1)),
        "C_{n+1} C_{n+2} as a sum of (2k+2)(2k+4)(8nk+18n+14k+30) C(2n+3,n-k) C(2n+6,n-k+1)",
    ),
    "cor3.6a": (
        lambda n: F(B(2 * n + 3, n + 1) * C(n + 1)),
        lambda n: _sum(0, n, lambda k: F(8 * n * k + 6 * n + 14 * k + 12, (2 * n + 2) * (2 * n + 3) * (2 * n + 4))
                       * B(2 * n + 3, n - k) * B(2 * n + 4, n - k + 2)),
        "C(2n+3,n+1) C_{n+1} as a sum of (8nk+6n+14k+12) C(2n+3,n-k) C(2n+4,n-k+2)",
    ),
    "eq3.5.3": (
        lambda n: F(B(2 * n + 1, n) * C(n + 1)),
        lambda n: _sum(0, n, lambda k: F(2 * k + 2, (2 * n + 2) * (2 * n + 3))
                       * B(2 * n + 3, n - k) * B(2 * n + 3, n - k + 1)),
        "C(2n+1,n) C_{n+1} as a sum of (2k+2) C(2n+3,n-k) C(2n+3,n-k+1)",
    ),
    "cor3.6c": (
        lambda n: F(B(2 * n + 1, n) * C(n + 2)),
        # constant term 16 matches gamma at m = n+1; 6 does not
        lambda n: _sum(0, n, lambda k: F(8 * n * k + 10 * n + 14 * k + 16, (2 * n + 2) * (2 * n + 3) * (2 * n + 4))
                       * B(2 * n + 4, n - k) * B(2 * n + 3, n - k + 1)),
        "C(2n+1,n) C_{n+2} as a sum of (8nk+10n+14k+16) C(2n+4,n-k) C(2n+3,n-k+1)",
    ),
    "eq3.6.3": (
        lambda m: F(C(m) ** 2),
        lambda m: _sum(0, m, lambda k: F((2 * k + 2) * ((2 * k + 1) * (2 * k + 3) - (2 * m + 1)),
                                         (2 * m + 1) * (2 * m + 2) ** 2) * B(2 * m + 2, m - k) ** 2),
        "C_m^2 as a sum of (2k+2)((2k+1)(2k+3)-(2m+1)) C(2m+2,m-k)^2",
    ),
    "eq3.9E": (
        lambda n: _sum(0, n, lambda k: F((2 * k + 1) ** 3, (2 * n + 1) ** 2) * B(2 * n + 1, n - k) ** 2),
        lambda n: F(B(2 * n, n) ** 2),
        "sum of (2k+1)^3/(2n+1)^2 C(2n+1,n-k)^2 equals C(2n,n)^2",
    ),
    "eq3.9F": (
        lambda n: _sum(0, n, lambda k: F((k + 1) ** 3, (n + 1) ** 2) * B(2 * n + 2, n - k) ** 2),
        lambda n: F(B(2 * n, n) * B(2 * n + 1, n)),
        "sum of (k+1)^3/(n+1)^2 C(2n+2,n-k)^2 equals C(2n,n) C(2n+1,n)",
    ),
    "eq3.9G": (
        lambda n: _sum(0, n, lambda k: F(2 * k + 1, 2 * n + 1) * B(2 * n + 1, n - k) ** 2),
        lambda n: F(B(2 * n, n) ** 2),
        "sum of (2k+1)/(2n+1) C(2n+1,n-k)^2 equals C(2n,n)^2",
    ),
    "deng-yan": (
        lambda n: _sum(0, n, lambda k: F((2 * k + 1) ** 2, 2 * n + 1) * B(2 * n + 1, n - k)),
        lambda n: F(4 ** n),
        "sum of (2k+1)^2/(2n+1) C(2n+1,n-k) equals 4^n",
    ),
    "cor3.10": (
        # the sum is half of the m = n+1 minor sum 2 C_{n+1} C_{n+2}
        lambda n: F(C(n + 1) * C(n + 2)),
        lambda n: _sum(0, n, lambda k: F((2 * k + 2) * (2 * k + 3) * (2 * k + 4),
                                         (2 * n + 2) * (2 * n + 3) * (2 * n + 6) * (2 * n + 7))
                       * B(2 * n + 3, n - k) * B(2 * n + 7, n - k + 2)),
        "C_{n+1} C_{n+2} as a sum of (2k+2)(2k+3)(2k+4) C(2n+3,n-k) C(2n+7,n-k+2)",
    ),
    "eq4.2": (
        lambda m: F(C(2 * m + 1)),
        lambda m: _sum(0, m, lambda j: F((2 * j + 2) ** 2, (2 * m + 2) ** 2) * B(2 * m + 2, m - j) ** 2),
        "C_{2m+1} = sum of (2j+2)^2/(2m+2)^2 C(2m+2,m-j)^2",
    ),
    "eq4.3": (
        lambda m: F(C(2 * m + 2)),
        lambda m: _sum(0, m, lambda j: F((2 * j + 2) ** 2, (2 * m + 2) * (2 * m + 3))
                       * B(2 * m + 3, m - j) * B(2 * m + 3, m - j + 1)),
        "C_{2m+2} = sum of (2j+2)^2/((2m+2)(2m+3)) C(2m+3,m-j) C(2m+3,m-j+1)",
    ),
    "eq4.2B": (
        lambda m: _sum(0, m, lambda j: F((2 * j + 1) ** 2, (2 * m + 1) ** 2) * B(2 * m + 1, m - j) ** 2),
        lambda m: F(C(2 * m)),
        "sum of (2j+1)^2/(2m+1)^2 C(2m+1,m-j)^2 equals C_{2m}",
    ),
    "eq4.2C": (
        lambda m: _sum(0, m, lambda j: F(j + 1, m + 1) * B(2 * m + 2, m - j) ** 2),
        lambda m: F(B(2 * m + 1, m) ** 2),
        "sum of (j+1)/(m+1) C(2m+2,m-j)^2 equals C(2m+1,m)^2",
    ),
    "cameron-nkwanta": (
        lambda m: _sum(0, m, lambda j: F((j + 1) ** 2, m + 1) * B(2 * m + 2, m - j)),
        lambda m: F(4 ** m),
        "sum of (j+1)^2/(m+1) C(2m+2,m-j) equals 4^m",
    ),
    "eq4.4": (
        lambda m: F(B(2 * m + 1, m)),
        lambda m: _sum(0, m, lambda j: (-1) ** j * F((2 * j + 2) ** 2, (2 * m + 2) ** 2) * B(2 * m + 2, m - j) ** 2),
        "C(2m+1,m) = alternating sum of (2j+2)^2/(2m+2)^2 C(2m+2,m-j)^2",
    ),
    "eq4.5": (
        lambda m: F(B(2 * m + 2, m + 1)),
        lambda m: _sum(0, m, lambda j: (-1) ** j * F((2 * j + 2) ** 2, (2 * m + 2) * (2 * m + 3))
                       * B(2 * m + 3, m - j) * B(2 * m + 3, m - j + 1)),
        "C(2m+2,m+1) = alternating sum of (2j+2)^2/((2m+2)(2m+3)) C(2m+3,m-j) C(2m+3,m-j+1)",
    ),
    "eq4.6": (
        lambda m: F(B(2 * m, m)),
        lambda m: _sum(0, m, lambda j: (-1) ** j * F(2 * j + 1, 2 * m + 1) * B(2 * m + 1, m - j) ** 2),
        "C(2m,m) = alternating sum of (2j+1)/(2m+1) C(2m+1,m-j)^2",
    ),
    "eq4.7": (
        lambda n: F(C(n + 1)),
        lambda n: _sum(0, n, lambda k: (-1) ** k * F((2 * k + 2) * (2 * k + 3) * (2 * k + 4),
                                                     (2 * n + 2) * (2 * n + 3) * (2 * n + 4) ** 2)
                       * B(2 * n + 4, n - k) * B(2 * n + 4, n - k + 1)),
        "C_{n+1} = alternating sum of (2k+2)(2k+3)(2k+4) C(2n+4,n-k) C(2n+4,n-k+1)",
    ),
    "eq4.8": (
        lambda n: F(2 * C(n + 1)),
        lambda n: _sum(0, n, lambda k: (-1) ** k * F((2 * k + 2) * (2 * k + 3) * (2 * k + 4),
                                                     (2 * n + 2) * (2 * n + 3) * (2 * n + 6) * (2 * n + 7))
                       * B(2 * n + 3, n - k) * B(2 * n + 7, n - k + 2)),
        "2 C_{n+1} = alternating sum of (2k+2)(2k+3)(2k+4) C(2n+3,n-k) C(2n+7,n-k+2)",
    ),
}

# Near-miss variants of the sums above; all fail and serve as negative controls.
FALSE_VARIANTS: dict[str, tuple[Callable, Callable, str]] = {
    "cor3.6c-false": (
        SINGLE["cor3.6c"][0],
        lambda n: _sum(0, n, lambda k: F(8 * n * k + 10 * n + 14 * k + 6, (2 * n + 2) * (2 * n + 3) * (2 * n + 4))
                       * B(2 * n + 4, n - k) * B(2 * n + 3, n - k + 1)),
        "constant term 6 in place of 16",
    ),
    "cor3.10-false": (
        lambda n: F(C(n) * C(n + 1)),
        SINGLE["cor3.10"][1],
        "left side C_n C_{n+1} in place of C_{n+1} C_{n+2}",
    ),
}


# -- alternating determinant sums --------------------------------------------------------


def alt_det_sum(point: Point, n: int, j: int, sign_from_n: bool) -> int:
    x0, y0 = point
    total = 0
    for k in range(n + 1):
        d = det2(specialized(n, k, x0, y0), specialized(n, k + 1, x0, y0),
                 specialized(n + j, k, x0, y0), specialized(n + j, k + 1, x0, y0))
        sign = (-1) ** (n - k) if sign_from_n else (-1) ** k
        total += sign * d
    return total


ALT_DETS = {
    "eq4.1": ((0, 0), True, lambda n, j: catalan(n + 1), (1,)),
    "thm4.5": ((2, 2), False, lambda n, j: 4 ** (j - 1) * catalan(n + 1), (1, 2)),
    "remark4.6": ((1, 1), True, lambda n, j: 2 ** (j - 1) * motzkin_number(n), (1, 2)),
}
_ALIASES = {"remark46": "remark4.6", "thm45": "thm4.5"}


def verify_alt_det(tag: str, n: int, j: int = 1) -> VerificationReport:
    tag = _ALIASES.get(tag, tag)
    try:
        point, from_n, rhs, allowed = ALT_DETS[tag]
    except KeyError:
        raise UnknownIdentity(tag) from None
    if n < 0 or j not in allowed:
        raise OutOfDomain(f"{tag}: need n >= 0 and j in {allowed}")
    rep = VerificationReport(tag)
    _record(rep, (n, j), alt_det_sum(point, n, j, from_n), rhs(n, j))
    return rep


# -- registry ---------------------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    tag: str
    params: tuple[str, ...]
    statement: str
    check: Callable[..., tuple]          # (*params, point=None) -> (lhs, rhs)
    domain: Callable[[int], Iterable[tuple]]
    valid: Callable[..., bool]
    symbolic: bool = False
    expected_pass: bool = True


NEG_ELL = 3  # how far below zero the level parameter is swept


def _nml_domain(N: int):
    return [(n, m, l) for n in range(N + 1) for m in range(N + 1) for l in range(-NEG_ELL, m + 1)]


def _nl_domain(N: int):
    return [(n, l) for n in range(N + 1) for l in range(-NEG_ELL, n + 1)]


def _n_domain(N: int):
    return [(n,) for n in range(N + 1)]


R_CAP = 3  # r is swept up to min(max, R_CAP) for the shifted minor sums


def _build_registry() -> dict[str, Identity]:
    reg: dict[str, Identity] = {}

    def add(ident: Identity) -> None:
        reg[ident.tag] = ident

    add(Identity(
        "eq3.1.1", ("n", "m", "r", "l"),
        "sum_k det[[M(n,k),M(m,k+l+1)],[M(n+r+1,k),M(m+r+1,k+l+1)]] = sum_i M(n+i,0) M(m+r-i,l)(y,y)",
        lambda n, m, r, l, point=None: (minor_sum_lhs(n, m, r, l, point), thm32_rhs(n, m, r, l, point)),
        lambda N: [(n, m, r, l) for n in range(N + 1) for m in range(N + 1)
                   for r in range(min(N, R_CAP) + 1) for l in range(m + 1)],
        lambda n, m, r, l: n >= 0 and r >= 0 and 0 <= l <= m,
        symbolic=True,
    ))
    add(Identity(
        "eq3.1.2", ("n", "m", "r"),
        "the shifted minor sum over all levels l = 0..m+r equals sum_i M(n+i,0) M(m+r-i,0)(y+1,y)",
        lambda n, m, r, point=None: (thm32_sum_lhs(n, m, r, point), thm32_sum_rhs(n, m, r, point)),
        lambda N: [(n, m, r) for n in range(N + 1) for m in range(N + 1) for r in range(min(N, R_CAP) + 1)],
        lambda n, m, r: n >= 0 and m >= 0 and r >= 0,
        symbolic=True,
    ))
    add(Identity(
        "eq3.2.1", ("n", "m", "l"),
        "sum_k det[[M(n,k),M(m,k+l+1)],[M(n+1,k),M(m+1,k+l+1)]] = M(n,0) M(m,l)(y,y)",
        lambda n, m, l, point=None: (minor_sum_lhs(n, m, 0, l, point), thm32_rhs(n, m, 0, l, point)),
        lambda N: [(n, m, l) for n in range(N + 1) for m in range(N + 1) for l in range(m + 1)],
        lambda n, m, l: n >= 0 and 0 <= l <= m,
        symbolic=True,
    ))
    add(Identity(
        "eq3.10", ("n",),
        "sum_k det over rows n, n+2 of M(y,y) = 2 M(n,0)(y,y) M(n+1,0)(y,y)",
        lambda n, point=None: (thm39_lhs(n, None if point is None else point[1]),
                               thm39_rhs(n, None if point is None else point[1])),
        _n_domain,
        lambda n: n >= 0,
        symbolic=True,
    ))

    families = [
        ("eq3.3.3", eq333_lhs, eq333_rhs, "minor sum at (x,y)=(1,2) with coefficient alpha"),
        ("eq3.4.2", eq342_lhs, eq342_rhs, "minor sum at (x,y)=(2,2) with coefficient beta"),
        ("eq3.5.2", eq352_lhs, eq352_rhs, "minor sum at (x,y)=(3,2) with coefficient gamma"),
        ("eq3.6.2", eq362_lhs, eq362_rhs, "minor sum at (x,y)=(0,0), even indices, coefficient lambda"),
    ]
    for tag, lhs, rhs, text in families:
        add(Identity(
            tag, ("n", "m", "l"), text,
            (lambda lhs, rhs: lambda n, m, l, point=None: (lhs(n, m, l), rhs(n, m, l)))(lhs, rhs),
            _nml_domain,
            lambda n, m, l: n >= 0 and m >= 0 and l <= m,
        ))
    add(Identity(
        "eq3.3.3-false", ("n", "m", "l"), "factor (2k+2l+1) in place of (2k+2l+3)",
        lambda n, m, l, point=None: (eq333_lhs(n, m, l), eq333_rhs(n, m, l, shift=1)),
        _nml_domain,
        lambda n, m, l: n >= 0 and m >= 0 and l <= m,
        expected_pass=False,
    ))

    for tag, lhs, rhs in (("eq3.7.1", eq371_lhs, eq371_rhs), ("eq3.7.2", eq372_lhs, eq372_rhs),
                          ("eq3.7.3", eq373_lhs, eq373_rhs)):
        add(Identity(
            tag, ("n", "l"), "m = n case of the minor sums, valid for negative l too",
            (lambda lhs, rhs: lambda n, l, point=None: (lhs(n, l), rhs(n, l)))(lhs, rhs),
            _nl_domain,
            lambda n, l: n >= 0 and l <= n,
        ))

    for table, expected in ((SINGLE, True), (FALSE_VARIANTS, False)):
        for tag, (lhs, rhs, text) in table.items():
            add(Identity(
                tag, ("n",), text,
                (lambda lhs, rhs: lambda n, point=None: (lhs(n), rhs(n)))(lhs, rhs),
                _n_domain,
                lambda n: n >= 0,
                expected_pass=expected,
            ))

    for tag, (point, from_n, rhs, allowed) in ALT_DETS.items():
        add(Identity(
            tag, ("n", "j"),
            f"signed sum of 2x2 minors of M{point} over rows n, n+j",
            (lambda point, from_n, rhs: lambda n, j, point_=None, **kw: (
                alt_det_sum(point, n, j, from_n), rhs(n, j)))(point, from_n, rhs),
            (lambda allowed: lambda N: [(n, j) for n in range(N + 1) for j in allowed])(allowed),
            (lambda allowed: lambda n, j: n >= 0 and j in allowed)(allowed),
        ))
    return reg


REGISTRY: dict[str, Identity] = _build_registry()


def identity_tags(include_false: bool = False) -> list[str]:
    return [t for t, ident in REGISTRY.items() if include_false or ident.expected_pass]


def get_identity(tag: str) -> Identity:
    tag = _ALIASES.get(tag, tag)
    try:
        return REGISTRY[tag]
    except KeyError:
        raise UnknownIdentity(tag) from None


def verify_sum_identity(tag: str, params: Sequence[int], point: Point | None = None) -> VerificationReport:
    """Evaluate one instance of a registered identity."""
    ident = get_identity(tag)
    params = tuple(params)
    if len(params) != len(ident.params) or not ident.valid(*params):
        raise OutOfDomain(f"{ident.tag}: parameters {params} outside domain {ident.params}")
    if point is not None and ident.symbolic:
        lhs, rhs = ident.check(*params, point=_check_point(point))
    else:
        lhs, rhs = ident.check(*params)
    rep = VerificationReport(ident.tag)
    _record(rep, params, lhs, rhs)
    return rep


def sweep(tag: str, max_param: int, point: Point | None = None,
          on_instance: Callable[[tuple, bool], None] | None = None) -> VerificationReport:
    """Check every instance of an identity with free parameters <= max_param."""
    ident = get_identity(tag)
    rep = VerificationReport(ident.tag)
    for params in ident.domain(max_param):
        one = verify_sum_identity(ident.tag, params, point)
        rep.merge(one)
        if on_instance is not None:
            on_instance(params, one.passed)
    return rep


# -- minor-sum transform -----------------------------------------------------------------


def pascal(n: int, k: int) -> int:
    return binomial(n, k) if n >= 0 else 0


def shapiro(n: int, k: int) -> int:
    return shapiro_entry(n, k) if 0 <= k <= n else 0


def motzkin_source(point: Point | None = None) -> Callable[[int, int], object]:
    if point is None:
        return lambda n, k: M(n, k) if n >= 0 else BiPoly()
    x0, y0 = point
    return lambda n, k: specialized(n, k, x0, y0) if n >= 0 else 0


SOURCES: dict[str, Callable[[int, int], int]] = {
    "pascal": pascal,
    "shapiro": shapiro,
}


def transform_entry(A: Callable[[int, int], object], m: int, r: int, ell: int, p: int,
                    n: int, k: int):
    """det(A[n + i*m + j*r][k + j*l]) for 0 <= i, j <= p."""
    matrix = [[A(n + i * m + j * r, k + j * ell) for j in range(p + 1)] for i in range(p + 1)]
    return det(matrix)


def minor_sum_transform(A: Callable[[int, int], object], m: int, r: int, ell: int, p: int,
                        n: int) -> tuple[list, object]:
    """Row n of the transformed triangle and its row sum."""
    if p < 1 or m < 0 or ell < 0:
        raise ValueError("need p >= 1 and m, l >= 0")
    row = [transform_entry(A, m, r, ell, p, n, k) for k in range(n + 1)]
    total = 0
    for v in row:
        total = total + v
    return row, total


__all__ = [
    "det2",
    "det",
    "VerificationReport",
    "verify_thm32",
    "verify_thm33",
    "verify_thm39",
    "verify_sum_identity",
    "verify_alt_det",
    "sweep",
    "REGISTRY",
    "identity_tags",
    "get_identity",
    "minor_sum_transform",
    "transform_entry",
    "SOURCES",
    "motzkin_source",
    "ALPHA",
    "BETA",
    "GAMMA",
    "LAMBDA",
    "CoeffPoly",
    "SPECIALIZATIONS",
    "check_specializations",
    "motzkin_number",
    "UnknownIdentity",
    "OutOfDomain",
]
