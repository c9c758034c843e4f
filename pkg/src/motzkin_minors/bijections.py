"""Weight-preserving bijections on weighted partial Motzkin paths.

Three maps are implemented with their inverses:

* ``lemma31_*``: axis-level H steps of weight 1 (out of the split y + 1)
  trade places with R-visible up steps.
* ``phi_*``: moves the r + 1 steps in front of a distinguished R-visible
  up step of Q, reversed, onto the end of P.
* ``thm41_*``: concatenates P with the reverse of Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .algebra import Y, BiPoly
from .paths import (
    MarkedPath,
    PartialMotzkinPath,
    PathError,
    all_marked_paths,
    as_steps,
    enumerate_paths,
    heights,
    path_weight,
    r_visible_ups,
    reverse_path,
)
from .triangle import build_triangle


class DomainError(ValueError):
    """Input lies outside the domain on which a map is defined."""


# -- marked H steps <-> R-visible up steps ---------------------------------


def lemma31_forward(mp: MarkedPath) -> PartialMotzkinPath:
    """Turn every unit-marked axis H step into an up step."""
    if mp.path.end_height != 0:
        raise DomainError("marked path must end on the axis")
    steps = list(mp.path.steps)
    for t in mp.unit_marks:
        steps[t] = "U"
    return PartialMotzkinPath("".join(steps))


def lemma31_backward(p) -> MarkedPath:
    """Turn every R-visible up step into a unit-marked H step."""
    steps = list(as_steps(p))
    marks = r_visible_ups(steps)
    for t in marks:
        steps[t] = "H"
    return MarkedPath(PartialMotzkinPath("".join(steps)), frozenset(marks))


# -- phi --------------------------------------------------------------------


@dataclass(frozen=True)
class PathPair:
    P: str
    Q: str
    n: int
    m: int
    r: int
    ell: int

    @property
    def k(self) -> int:
        return heights(self.P)[-1]

    def weight(self) -> BiPoly:
        return path_weight(self.P) * path_weight(self.Q)

    def __str__(self) -> str:
        return f"({self.P or 'ε'}, {self.Q or 'ε'})"


def n_r(n: int, m: int, r: int, ell: int) -> int:
    return min(n + r + 1, m + r - ell)


def u_star(Q: str, k: int) -> int:
    """Index of the (k+1)-th R-visible up step of Q, counted along the path."""
    ups = r_visible_ups(Q)
    if k >= len(ups):
        raise DomainError(f"{Q} has only {len(ups)} R-visible up steps")
    return ups[k]


def in_A(pair: PathPair) -> bool:
    k = pair.k
    return (
        len(pair.P) == pair.n
        and len(pair.Q) == pair.m + pair.r + 1
        and 0 <= k <= n_r(pair.n, pair.m, pair.r, pair.ell)
        and heights(pair.Q)[-1] == k + pair.ell + 1
    )


def in_C(pair: PathPair) -> bool:
    """Pairs of A where fewer than r + 1 steps precede U*."""
    return in_A(pair) and u_star(pair.Q, pair.k) <= pair.r


def in_B(pair: PathPair) -> bool:
    k = pair.k
    return (
        len(pair.P) == pair.n + pair.r + 1
        and len(pair.Q) == pair.m
        and 0 <= k <= n_r(pair.n, pair.m, pair.r, pair.ell)
        and heights(pair.Q)[-1] == k + pair.ell + 1
    )


def phi_forward(pair: PathPair) -> PathPair:
    if not in_A(pair):
        raise DomainError(f"{pair} is not in A")
    r = pair.r
    u = u_star(pair.Q, pair.k)
    if u <= r:
        raise DomainError(f"{pair} lies in C: only {u} steps precede U*")
    Q = pair.Q
    q1, q_prime, rest = Q[: u - r - 1], Q[u - r - 1 : u], Q[u:]
    p_star = pair.P + reverse_path(q_prime)
    q_star = q1 + rest
    return PathPair(p_star, q_star, pair.n, pair.m, r, pair.ell)


def phi_backward(pair: PathPair) -> PathPair:
    if not in_B(pair):
        raise DomainError(f"{pair} is not in B")
    n, r = pair.n, pair.r
    P, p_prime = pair.P[:n], pair.P[n:]
    ups = r_visible_ups(pair.Q)
    u = ups[len(ups) - pair.ell - 1]
    Q = pair.Q[:u] + reverse_path(p_prime) + pair.Q[u:]
    if min(heights(Q)) < 0:
        raise PathError(f"phi_backward produced an invalid path {Q}")
    return PathPair(P, Q, n, pair.m, r, pair.ell)


def set_A(n: int, m: int, r: int, ell: int) -> Iterator[PathPair]:
    for k in range(n_r(n, m, r, ell) + 1):
        Qs = [q.steps for q in enumerate_paths(m + r + 1, k + ell + 1)]
        for P in enumerate_paths(n, k):
            for Q in Qs:
                yield PathPair(P.steps, Q, n, m, r, ell)


def set_B(n: int, m: int, r: int, ell: int) -> Iterator[PathPair]:
    for k in range(n_r(n, m, r, ell) + 1):
        Qs = [q.steps for q in enumerate_paths(m, k + ell + 1)]
        for P in enumerate_paths(n + r + 1, k):
            for Q in Qs:
                yield PathPair(P.steps, Q, n, m, r, ell)


# -- pairing ----------------------------------------------------------------


def thm41_pairing(P, Q) -> PartialMotzkinPath:
    """P followed by the reverse of Q; both must share length and end height."""
    P, Q = as_steps(P), as_steps(Q)
    if len(P) != len(Q):
        raise DomainError("paths must have equal length")
    if heights(P)[-1] != heights(Q)[-1]:
        raise DomainError("paths must end at the same height")
    return PartialMotzkinPath(P + reverse_path(Q))


def thm41_unpair(path) -> tuple[PartialMotzkinPath, PartialMotzkinPath]:
    steps = as_steps(path)
    if len(steps) % 2 or heights(steps)[-1] != 0:
        raise DomainError("need an even-length path ending on the axis")
    half = len(steps) // 2
    return PartialMotzkinPath(steps[:half]), PartialMotzkinPath(reverse_path(steps[half:]))


# -- exhaustive sweeps --------------------------------------------------------


@dataclass
class BijectionReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def to_dict(self) -> dict:
        return {
            "map": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "failures": self.failures[:20],
            "notes": self.notes,
        }


def check_lemma31(max_n: int) -> BijectionReport:
    rep = BijectionReport("lemma31")
    for n in range(max_n + 1):
        images = set()
        total = BiPoly()
        for mp in all_marked_paths(n):
            rep.checked += 1
            img = lemma31_forward(mp)
            images.add(img.steps)
            total = total + mp.weight()
            if lemma31_backward(img) != mp:
                rep.fail(f"backward(forward({mp})) != {mp}")
            if path_weight(img).substitute(x=Y) != mp.weight():
                rep.fail(f"weight changed on {mp}")
        for ell in range(n + 1):
            for p in enumerate_paths(n, ell):
                rep.checked += 1
                back = lemma31_backward(p)
                if len(back.unit_marks) != ell or lemma31_forward(back) != p:
                    rep.fail(f"forward(backward({p})) != {p}")
                if p.steps not in images:
                    rep.fail(f"{p} has no preimage")
        if len(images) != sum(len(enumerate_paths(n, l)) for l in range(n + 1)):
            rep.fail(f"n={n}: image size mismatch")
        tri = build_triangle(n)
        if total != tri.entry(n, 0).substitute(x=Y + 1):
            rep.fail(f"n={n}: marked weight {total} != M[n][0](y+1, y)")
        image_weight = BiPoly()
        for ell in range(n + 1):
            image_weight = image_weight + tri.entry(n, ell).substitute(x=Y)
        if total != image_weight:
            rep.fail(f"n={n}: marked weight {total} != sum of M[n][l](y, y)")
    return rep


def check_phi(max_n: int, max_m: int | None = None, max_r: int = 2, max_ell: int = 2) -> BijectionReport:
    """Round-trip phi on A minus C and on B for every parameter tuple in range."""
    max_m = max_n if max_m is None else max_m
    rep = BijectionReport("phi")
    for n in range(max_n + 1):
        for m in range(max_m + 1):
            for r in range(max_r + 1):
                for ell in range(min(max_ell, m) + 1):
                    _check_phi_instance(rep, n, m, r, ell)
    return rep


def _check_phi_instance(rep: BijectionReport, n: int, m: int, r: int, ell: int) -> None:
    tag = f"(n,m,r,l)=({n},{m},{r},{ell})"
    image = set()
    c_weight = BiPoly()
    for pair in set_A(n, m, r, ell):
        rep.checked += 1
        if in_C(pair):
            c_weight = c_weight + pair.weight()
            continue
        out = phi_forward(pair)
        if not in_B(out):
            rep.fail(f"{tag}: phi{pair} = {out} not in B")
            continue
        if out.weight() != pair.weight():
            rep.fail(f"{tag}: weight changed {pair} -> {out}")
        if phi_backward(out) != pair:
            rep.fail(f"{tag}: backward(phi{pair}) != {pair}")
        if u_star(out.Q, out.k) != r_visible_ups(out.Q)[-ell - 1]:
            rep.fail(f"{tag}: U* moved in {out}")
        image.add((out.P, out.Q))
    b_count = 0
    for pair in set_B(n, m, r, ell):
        rep.checked += 1
        b_count += 1
        back = phi_backward(pair)
        if not in_A(back) or in_C(back):
            rep.fail(f"{tag}: phi^-1{pair} = {back} not in A minus C")
            continue
        if phi_forward(back) != pair:
            rep.fail(f"{tag}: phi(phi^-1{pair}) != {pair}")
    if len(image) != b_count:
        rep.fail(f"{tag}: image has {len(image)} pairs, B has {b_count}")
    # the pairs left over in C must carry the right-hand side weight
    tri = build_triangle(n + m + r + 1)
    expected = BiPoly()
    for i in range(r + 1):
        expected = expected + tri.entry(n + i, 0) * tri.entry(m + r - i, ell).substitute(x=Y)
    if c_weight != expected:
        rep.fail(f"{tag}: weight of C is {c_weight}, expected {expected}")


def check_thm41(max_m: int) -> BijectionReport:
    rep = BijectionReport("thm41")
    for m in range(max_m + 1):
        image = {}
        for j in range(m + 1):
            paths = enumerate_paths(m, j)
            for P in paths:
                for Q in paths:
                    rep.checked += 1
                    w = thm41_pairing(P, Q)
                    if w.steps in image:
                        rep.fail(f"m={m}: {P},{Q} and {image[w.steps]} collide")
                    image[w.steps] = (P, Q)
                    if thm41_unpair(w) != (P, Q):
                        rep.fail(f"m={m}: unpair(pair({P},{Q})) != ({P},{Q})")
                    if w.weight() != P.weight() * Q.weight():
                        rep.fail(f"m={m}: weight changed for ({P},{Q})")
        target = {p.steps for p in enumerate_paths(2 * m, 0)}
        if set(image) != target:
            rep.fail(f"m={m}: image misses {len(target - set(image))} paths")
    return rep


__all__ = [
    "DomainError",
    "PathPair",
    "lemma31_forward",
    "lemma31_backward",
    "phi_forward",
    "phi_backward",
    "in_A",
    "in_B",
    "in_C",
    "set_A",
    "set_B",
    "u_star",
    "n_r",
    "thm41_pairing",
    "thm41_unpair",
    "BijectionReport",
    "check_lemma31",
    "check_phi",
    "check_thm41",
]
