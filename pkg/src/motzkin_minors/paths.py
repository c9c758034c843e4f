"""Weighted partial Motzkin paths.

A path is a word over ``U`` (+1), ``D`` (-1) and ``H`` (0) whose running
height never drops below zero.  Up and down steps weigh 1; a horizontal
step weighs ``x`` when it lies on the axis and ``y`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .algebra import ONE, ZERO, BiPoly

STEPS = "UDH"
DELTA = {"U": 1, "D": -1, "H": 0}
MIRROR = {"U": "D", "D": "U", "H": "H"}


class PathError(ValueError):
    pass


def heights(steps: str) -> list[int]:
    """Height profile h_0 = 0, h_1, ..., h_n."""
    h = [0]
    for s in steps:
        try:
            h.append(h[-1] + DELTA[s])
        except KeyError:
            raise PathError(f"unknown step {s!r}") from None
    return h


@dataclass(frozen=True, order=True)
class PartialMotzkinPath:
    steps: str = ""

    def __post_init__(self):
        if min(heights(self.steps)) < 0:
            raise PathError(f"path {self.steps!r} goes below the axis")

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def end_height(self) -> int:
        return sum(DELTA[s] for s in self.steps)

    def heights(self) -> list[int]:
        return heights(self.steps)

    def weight(self) -> BiPoly:
        return path_weight(self)

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other) -> "PartialMotzkinPath":
        tail = other.steps if isinstance(other, PartialMotzkinPath) else other
        return PartialMotzkinPath(self.steps + tail)


def as_steps(p) -> str:
    return p.steps if isinstance(p, PartialMotzkinPath) else p


def weight_exponents(steps: str, start: int = 0) -> tuple[int, int]:
    """(number of H steps on the axis, number of H steps above it)."""
    h = start
    base = high = 0
    for s in steps:
        if s == "H":
            if h == 0:
                base += 1
            else:
                high += 1
        else:
            h += DELTA[s]
    return base, high


def path_weight(p) -> BiPoly:
    base, high = weight_exponents(as_steps(p))
    return BiPoly._raw({(base, high): 1})


def enumerate_paths(n: int, k: int) -> list[PartialMotzkinPath]:
    """All partial Motzkin paths of length n ending at height k, in lex order."""
    return [PartialMotzkinPath(s) for s in _words(n, k)]


@lru_cache(maxsize=None)
def _words(n: int, k: int) -> tuple[str, ...]:
    if n < 0:
        raise ValueError("path length must be nonnegative")
    if k < 0 or k > n:
        return ()
    out: list[str] = []
    buf: list[str] = []

    def walk(h: int, left: int) -> None:
        if left == 0:
            if h == k:
                out.append("".join(buf))
            return
        for s in "DHU":
            nh = h + DELTA[s]
            # prune: must stay nonnegative and still reach k
            if nh < 0 or abs(k - nh) > left - 1:
                continue
            buf.append(s)
            walk(nh, left - 1)
            buf.pop()

    walk(0, n)
    return tuple(out)


def iter_all_paths(n: int) -> Iterator[PartialMotzkinPath]:
    for k in range(n + 1):
        yield from enumerate_paths(n, k)


def set_weight(n: int, k: int) -> BiPoly:
    """Total weight of all paths from (0, 0) to (n, k), by brute force."""
    counts: dict[tuple[int, int], int] = {}
    for w in _words(n, k):
        key = weight_exponents(w)
        counts[key] = counts.get(key, 0) + 1
    return BiPoly(counts) if counts else ZERO


def reverse_path(p) -> str:
    """Read right to left, swapping U and D."""
    return "".join(MIRROR[s] for s in reversed(as_steps(p)))


def r_visible_ups(p) -> list[int]:
    """Indices of the R-visible up steps, in path order.

    Scanning from the right, the first up step seen ending at level i is
    the rightmost one there; it is R-visible when no later step goes below
    level i again, i.e. i does not exceed the running minimum of the
    suffix heights.
    """
    steps = as_steps(p)
    h = heights(steps)
    found = []
    suffix_min = h[-1]
    for t in range(len(steps) - 1, -1, -1):
        suffix_min = min(suffix_min, h[t + 1])
        if steps[t] == "U" and h[t + 1] == suffix_min:
            found.append(t)
    found.reverse()
    return found


def r_visible_ups_naive(p) -> list[int]:
    """Definitional O(n^2) version of :func:`r_visible_ups`.

    An up step qualifies when no later up step ends at its level and the
    path never drops below that level afterwards.
    """
    steps = as_steps(p)
    h = heights(steps)
    n = len(steps)
    out = []
    for t in range(n):
        if steps[t] != "U":
            continue
        level = h[t + 1]
        later_up_same_level = any(
            steps[s] == "U" and h[s + 1] == level for s in range(t + 1, n)
        )
        # the path must never come back down through this level afterwards
        dips_below = any(h[s] < level for s in range(t + 1, n + 1))
        if not later_up_same_level and not dips_below:
            out.append(t)
    return out


def decompose(p) -> tuple[str, ...]:
    """Split P = P0 U P1 U ... U Pk at its k R-visible up steps."""
    steps = as_steps(p)
    marks = r_visible_ups(steps)
    if not marks:
        raise PathError("decompose needs a path ending at height >= 1")
    pieces = []
    prev = 0
    for t in marks:
        pieces.append(steps[prev:t])
        prev = t + 1
    pieces.append(steps[prev:])
    return tuple(pieces)


def recompose(pieces: Sequence[str]) -> str:
    return "U".join(pieces)


@dataclass(frozen=True)
class MarkedPath:
    """A path ending on the axis whose marked axis-level H steps weigh 1.

    Unmarked axis-level H steps weigh y, so summing over all markings
    realises the weight y + 1 on the axis.
    """

    path: PartialMotzkinPath
    unit_marks: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "unit_marks", frozenset(self.unit_marks))
        steps = self.path.steps
        h = heights(steps)
        for t in self.unit_marks:
            if not (0 <= t < len(steps)) or steps[t] != "H" or h[t] != 0:
                raise PathError(f"mark {t} is not an axis-level H step of {steps}")

    def weight(self) -> BiPoly:
        """y-weight: every unmarked H step contributes y."""
        n_h = self.path.steps.count("H")
        return BiPoly._raw({(0, n_h - len(self.unit_marks)): 1})

    def __str__(self) -> str:
        marks = ",".join(str(t) for t in sorted(self.unit_marks))
        return f"{self.path.steps}|marks={marks}"

    @classmethod
    def parse(cls, text: str) -> "MarkedPath":
        steps, _, rest = text.partition("|")
        marks: frozenset = frozenset()
        if rest:
            if not rest.startswith("marks="):
                raise PathError(f"bad marked path {text!r}")
            body = rest[len("marks=") :]
            marks = frozenset(int(t) for t in body.split(",") if t)
        return cls(PartialMotzkinPath(steps), marks)


def all_marked_paths(n: int) -> Iterator[MarkedPath]:
    """Every marking of every path of length n ending at height 0."""
    for p in enumerate_paths(n, 0):
        h = p.heights()
        slots = [t for t, s in enumerate(p.steps) if s == "H" and h[t] == 0]
        for mask in range(1 << len(slots)):
            yield MarkedPath(p, frozenset(t for b, t in enumerate(slots) if mask >> b & 1))


def parse_path(text: str) -> PartialMotzkinPath:
    return PartialMotzkinPath(text.strip())


__all__ = [
    "PartialMotzkinPath",
    "MarkedPath",
    "PathError",
    "path_weight",
    "enumerate_paths",
    "set_weight",
    "reverse_path",
    "r_visible_ups",
    "r_visible_ups_naive",
    "decompose",
    "recompose",
    "all_marked_paths",
    "heights",
    "weight_exponents",
]
