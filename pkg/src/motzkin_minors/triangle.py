"""The weight triangle M[n][k](x, y) and its integer specialisations."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import ONE, ZERO, X, Y, BiPoly, as_integer, binomial, catalan

# (x, y) points with a classical column-0 sequence.
SPECIALIZATIONS: dict[tuple[int, int], str] = {
    (0, 0): "aerated_catalan",
    (0, 1): "riordan",
    (0, 2): "fine",
    (1, 0): "central_binomial",
    (1, 1): "motzkin",
    (1, 2): "catalan",
    (2, 2): "catalan_shift",
    (3, 2): "gould",
}
SEQUENCE_POINTS = {name: point for point, name in SPECIALIZATIONS.items()}

OEIS_TAGS = {
    "aerated_catalan": "A126120",
    "riordan": "A005043",
    "fine": "A000957",
    "central_binomial": "A001405",
    "motzkin": "A001006",
    "catalan": "A000108",
    "catalan_shift": "A000108",
    "gould": "A001700",
}

# Leading terms as listed in OEIS, reindexed so term 0 is M[0][0] = 1.
KNOWN_TERMS = {
    "riordan": (1, 0, 1, 1, 3, 6, 15, 36, 91, 232),
    "fine": (1, 0, 1, 2, 6, 18, 57, 186, 622, 2120),
}


class WeightTriangle:
    """Rows 0..n_max of M[n][k](x, y), built from the last-step recurrence."""

    def __init__(self, rows: Sequence[Sequence[BiPoly]]):
        self._rows = tuple(tuple(r) for r in rows)

    @property
    def n_max(self) -> int:
        return len(self._rows) - 1

    def row(self, n: int) -> tuple[BiPoly, ...]:
        return self._rows[n]

    def __getitem__(self, nk: tuple[int, int]) -> BiPoly:
        n, k = nk
        return self.entry(n, k)

    def entry(self, n: int, k: int) -> BiPoly:
        if k < 0 or n < 0 or k > n:
            return ZERO
        if n > self.n_max:
            raise IndexError(f"row {n} not built (n_max={self.n_max})")
        return self._rows[n][k]

    def rows(self):
        return self._rows

    def at(self, x0: int, y0: int) -> list[list[int]]:
        return [[p.eval(x0, y0) for p in row] for row in self._rows]

    def substitute(self, x=None, y=None) -> "WeightTriangle":
        return WeightTriangle([[p.substitute(x, y) for p in r] for r in self._rows])


def _next_row(prev: Sequence[BiPoly]) -> list[BiPoly]:
    n = len(prev)

    def get(k: int) -> BiPoly:
        return prev[k] if 0 <= k < n else ZERO

    row = [X * get(0) + get(1)]
    for k in range(1, n + 1):
        row.append(get(k - 1) + Y * get(k) + get(k + 1))
    return row


@lru_cache(maxsize=8)
def _build(n_max: int) -> WeightTriangle:
    rows = [[ONE]]
    for _ in range(n_max):
        rows.append(_next_row(rows[-1]))
    return WeightTriangle(rows)


_largest: WeightTriangle | None = None


def build_triangle(n_max: int) -> WeightTriangle:
    """Triangle through row n_max, reusing the largest one built so far."""
    global _largest
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if _largest is not None and _largest.n_max >= n_max:
        return WeightTriangle(_largest.rows()[: n_max + 1])
    tri = _build(n_max)
    _largest = tri
    return tri


def entry(n: int, k: int) -> BiPoly:
    if k < 0 or k > n:
        return ZERO
    return build_triangle(n).entry(n, k)


_INT_ROWS: dict[tuple[int, int], list[tuple[int, ...]]] = {}


def specialized(n: int, k: int, x0: int, y0: int) -> int:
    """M[n][k](x0, y0) as an integer, computed by the integer recurrence."""
    if k < 0 or k > n:
        return 0
    return _int_rows(n, x0, y0)[n][k]


def _int_rows(n_max: int, x0: int, y0: int) -> list[tuple[int, ...]]:
    rows = _INT_ROWS.setdefault((x0, y0), [(1,)])
    while len(rows) <= n_max:
        prev = rows[-1]
        n = len(prev)
        get = lambda k: prev[k] if 0 <= k < n else 0  # noqa: E731
        row = [x0 * get(0) + get(1)]
        row += [get(k - 1) + y0 * get(k) + get(k + 1) for k in range(1, n + 1)]
        rows.append(tuple(row))
    return rows


def specialized_rows(n_max: int, x0: int, y0: int) -> list[list[int]]:
    return [list(r) for r in _int_rows(n_max, x0, y0)[: n_max + 1]]


CLOSED_FORM_POINTS = ((1, 2), (2, 2), (3, 2), (0, 0))


def closed_form(n: int, k: int, point: tuple[int, int]) -> int:
    """Binomial closed form of M[n][k] at one of the four special points."""
    if not 0 <= k <= n:
        raise ValueError(f"closed_form needs 0 <= k <= n, got ({n}, {k})")
    point = tuple(point)
    if point == (1, 2):
        value = Fraction(2 * k + 1, 2 * n + 1) * binomial(2 * n + 1, n - k)
    elif point == (2, 2):
        value = Fraction(2 * k + 2, 2 * n + 2) * binomial(2 * n + 2, n - k)
    elif point == (3, 2):
        value = Fraction(binomial(2 * n + 1, n - k))
    elif point == (0, 0):
        if (n - k) % 2:
            return 0
        value = Fraction(k + 1, n + 1) * binomial(n + 1, (n - k) // 2)
    else:
        raise ValueError(f"no closed form for (x, y) = {point}")
    return as_integer(value, f"closed form at {point} for ({n}, {k})")


def shapiro_entry(n: int, k: int) -> int:
    """Shapiro's Catalan triangle B[n][k] = (k+1)/(n+1) * C(2n+2, n-k)."""
    if not 0 <= k <= n:
        raise ValueError(f"shapiro_entry needs 0 <= k <= n, got ({n}, {k})")
    return as_integer(Fraction(k + 1, n + 1) * binomial(2 * n + 2, n - k))


def narayana(n: int, k: int) -> int:
    if k < 1 or k > n:
        return 0
    return as_integer(Fraction(binomial(n, k) * binomial(n, k - 1), n))


def sequence(name: str, n: int) -> int:
    """n-th term of a column-0 sequence, read off the specialised triangle."""
    try:
        x0, y0 = SEQUENCE_POINTS[name]
    except KeyError:
        raise ValueError(
            f"unknown sequence {name!r}; choose from {sorted(SEQUENCE_POINTS)}"
        ) from None
    if n < 0:
        raise ValueError("sequence index must be nonnegative")
    value = specialized(n, 0, x0, y0)
    if name == "catalan" and value != catalan(n):
        raise ArithmeticError(f"catalan({n}) disagrees with C(2n, n)/(n+1)")
    return value


__all__ = [
    "WeightTriangle",
    "build_triangle",
    "entry",
    "specialized",
    "specialized_rows",
    "closed_form",
    "shapiro_entry",
    "narayana",
    "sequence",
    "SPECIALIZATIONS",
    "OEIS_TAGS",
    "KNOWN_TERMS",
]
