"""Exit criteria, one test each.  Every test records a PASS/FAIL line that
is printed in the terminal summary (and to stdout with ``-s``)."""

import csv
import json
import time

import pytest

from conftest import ACCEPTANCE_LINES
from motzkin_minors import bijections, identities, series, telescope
from motzkin_minors.algebra import BiPoly, catalan
from motzkin_minors.cli import main
from motzkin_minors.paths import set_weight
from motzkin_minors.triangle import CLOSED_FORM_POINTS, build_triangle, closed_form, specialized

SHAPIRO_ROWS = [
    [1],
    [2, 1],
    [5, 4, 1],
    [14, 14, 6, 1],
    [42, 48, 27, 8, 1],
    [132, 165, 110, 44, 10, 1],
]

# entry (4, 2) carries 3*y^2; enumeration agrees
SYMBOLIC_ROWS = [
    ["1"],
    ["x", "1"],
    ["x^2+1", "x+y", "1"],
    ["x^3+2*x+y", "x^2+x*y+y^2+2", "x+2*y", "1"],
    ["x^4+3*x^2+2*x*y+y^2+2", "x^3+x^2*y+x*y^2+3*x+y^3+5*y", "x^2+2*x*y+3*y^2+3", "x+3*y", "1"],
]

ADJACENT_MINORS = [
    ([1], 1),
    ([3, 1], 4),
    ([14, 10, 1], 25),
    ([84, 90, 21, 1], 196),
    ([594, 825, 308, 36, 1], 1764),
]


class Criterion:
    def __init__(self, number, name, limit):
        self.number, self.name, self.limit = number, name, limit
        self.ok = True
        self.notes = []

    def check(self, cond, note):
        if not cond:
            self.ok = False
            self.notes.append(note)

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is not None:
            self.ok = False
            self.notes.append(f"{exc_type.__name__}: {exc}")
        if elapsed >= self.limit:
            self.ok = False
            self.notes.append(f"took {elapsed:.1f}s, limit {self.limit}s")
        verdict = "PASS" if self.ok else "FAIL"
        line = f"[{self.number}] {verdict} {self.name} ({elapsed:.2f}s < {self.limit}s)"
        if self.notes:
            line += " -- " + "; ".join(self.notes[:3])
        ACCEPTANCE_LINES.append(line)
        print(line)
        return False


def _cli(capsys, *argv):
    code = main(list(argv))
    out, _ = capsys.readouterr()
    return code, out


def test_1_table_reproduction(capsys):
    with Criterion(1, "table reproduction", 1.0) as c:
        code, out = _cli(capsys, "triangle", "--rows", "5", "--at", "2,2")
        rows = [[int(v) for v in r] for r in csv.reader(out.splitlines())]
        c.check(code == 0 and rows == SHAPIRO_ROWS, f"shapiro rows {rows}")
        code, out = _cli(capsys, "triangle", "--rows", "4")
        got = [[BiPoly.from_json_obj(p) for p in row] for row in json.loads(out)["rows"]]
        want = [[BiPoly.parse(p) for p in row] for row in SYMBOLIC_ROWS]
        c.check(code == 0 and got == want, "symbolic rows differ")
        c.check(set_weight(4, 2) == BiPoly.parse("x^2+2*x*y+3*y^2+3"), "enumeration of (4, 2)")
    assert c.ok, c.notes


def test_2_oracle_equivalence():
    with Criterion(2, "recurrence vs enumeration, n <= 12", 60.0) as c:
        tri = build_triangle(12)
        for n in range(13):
            for k in range(n + 1):
                c.check(tri[n, k] == set_weight(n, k), f"({n}, {k})")
    assert c.ok, c.notes


def test_3_closed_forms():
    with Criterion(3, "closed forms at four points, n <= 50", 10.0) as c:
        for point in CLOSED_FORM_POINTS:
            for n in range(51):
                for k in range(n + 1):
                    c.check(closed_form(n, k, point) == specialized(n, k, *point), f"{point} ({n}, {k})")
    assert c.ok, c.notes


def test_4_minor_sum_transform():
    with Criterion(4, "minor-sum transform", 5.0) as c:
        shapiro, pascal = identities.SOURCES["shapiro"], identities.SOURCES["pascal"]
        for n, expected in enumerate(ADJACENT_MINORS):
            got = identities.minor_sum_transform(shapiro, 1, 0, 1, 1, n)
            c.check(got == expected, f"shapiro row {n}: {got}")
        for n in range(16):
            c.check(identities.minor_sum_transform(shapiro, 1, 0, 1, 1, n)[1] == catalan(n + 1) ** 2,
                    f"shapiro sum {n}")
            for r in (0, 1):
                c.check(identities.minor_sum_transform(pascal, 1, r, 1, 1, n)[1] == catalan(n + 1),
                        f"pascal r={r} sum {n}")
    assert c.ok, c.notes


def test_5_theorem_sweeps():
    with Criterion(5, "symbolic theorem sweeps", 300.0) as c:
        for n in range(9):
            for m in range(9):
                for r in range(4):
                    c.check(identities.verify_thm32(n, m, r, 0, summed=True).passed, f"summed {(n, m, r)}")
                    for ell in range(m + 1):
                        c.check(identities.verify_thm32(n, m, r, ell).passed, f"{(n, m, r, ell)}")
        for n in range(11):
            for m in range(11):
                for ell in range(m + 1):
                    c.check(identities.verify_thm33(n, m, ell).passed, f"r=0 {(n, m, ell)}")
        for n in range(11):
            c.check(identities.verify_thm39(n).passed, f"rows n, n+2 at {n}")
    assert c.ok, c.notes


SCALAR_TAGS = [t for t in identities.identity_tags() if not identities.get_identity(t).symbolic]


def test_6_identity_registry():
    with Criterion(6, f"identity registry ({len(SCALAR_TAGS)} identities), params <= 20", 120.0) as c:
        required = {"eq3.3.3", "cor3.4a", "eq3.3.4", "cor3.4c", "eq3.4.2", "cor3.5a", "eq3.4.3", "cor3.5c",
                    "eq3.5.2", "cor3.6a", "eq3.5.3", "cor3.6c", "eq3.6.2", "eq3.6.3", "eq3.7.1", "eq3.7.2",
                    "eq3.7.3", "eq3.9E", "eq3.9F", "eq3.9G", "deng-yan", "eq4.2", "eq4.3", "eq4.4", "eq4.5",
                    "eq4.6", "eq4.7", "eq4.8", "eq4.2B", "eq4.2C", "cameron-nkwanta", "remark4.6"}
        c.check(required <= set(SCALAR_TAGS), f"missing {required - set(SCALAR_TAGS)}")
        for tag in SCALAR_TAGS:
            rep = identities.sweep(tag, 20)
            c.check(rep.passed and rep.instances > 0, f"{tag}: {rep.failures[:1]}")
        levels = {p[1] for p in identities.get_identity("eq3.7.1").domain(20)}
        c.check({-1, -2, -3} <= levels, "negative levels not swept")
        js = {p[1] for p in identities.get_identity("remark4.6").domain(20)}
        c.check(js == {1, 2}, "remark4.6 j range")
    assert c.ok, c.notes


def test_7_bijection_round_trips():
    with Criterion(7, "bijection round trips", 300.0) as c:
        for rep in (bijections.check_lemma31(10),
                    bijections.check_phi(5, 5, max_r=2, max_ell=2),
                    bijections.check_thm41(6)):
            c.check(rep.passed and rep.checked > 0, f"{rep.name}: {rep.failures[:1]}")
    assert c.ok, c.notes


def test_8_series_checks():
    with Criterion(8, "series checks through t^24", 30.0) as c:
        for rep in (series.verify_functional_equation(24),
                    series.verify_riordan(24, 24),
                    series.verify_catalan_powers(12, 12)):
            c.check(rep.passed, rep.line())
    assert c.ok, c.notes


def test_9_telescoping():
    with Criterion(9, "telescoping certificates, m <= 200", 60.0) as c:
        for i in range(1, 6):
            F, R = telescope.SUMMANDS[f"F{i}"], telescope.CERTIFICATES[f"R{i}"]
            wz = telescope.wz_check(F, R, 200)
            const = telescope.constant_sum_check(F, 200)
            c.check(wz.passed, wz.line())
            c.check(const.passed, const.line())
        control = telescope.wz_check(telescope.SUMMANDS["F4"], telescope.CERTIFICATES["R5"], 200)
        c.check(not control.passed, "mismatched certificate passed")
    assert c.ok, c.notes
