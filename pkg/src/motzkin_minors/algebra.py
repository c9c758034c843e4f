"""Exact integer, rational and bivariate polynomial arithmetic.

Integers are plain Python ``int`` (unbounded) and rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.  :class:`BiPoly` is a sparse polynomial in the two
symbols ``x`` and ``y`` with integer coefficients.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Union

Rational = Fraction

__all__ = [
    "BiPoly",
    "Rational",
    "X",
    "Y",
    "ONE",
    "ZERO",
    "binomial",
    "rising_factorial",
    "catalan",
    "as_integer",
    "bipoly_add",
    "bipoly_mul",
    "bipoly_eval",
]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with ``binomial(n, k) == 0`` for k outside [0, n].

    Negative ``n`` is a domain error.
    """
    if n < 0:
        raise ValueError(f"binomial: negative upper index {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def rising_factorial(x: int, k: int) -> int:
    """Pochhammer symbol x(x+1)...(x+k-1); equals 1 for k = 0."""
    if k < 0:
        raise ValueError(f"rising_factorial: negative length {k}")
    out = 1
    for i in range(k):
        out *= x + i
    return out


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"catalan: negative index {n}")
    return comb(2 * n, n) // (n + 1)


def as_integer(value: Fraction | int, what: str = "value") -> int:
    """Return ``value`` as an int, raising if it is not integral."""
    if isinstance(value, int):
        return value
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not integral: {value}")
    return value.numerator


Scalar = Union[int, Fraction]


class BiPoly:
    """Immutable sparse polynomial in x, y with integer coefficients.

    Terms are kept in a dict ``{(i, j): c}`` meaning ``c * x**i * y**j``;
    zero coefficients are never stored, so equality of term maps is
    equality of polynomials.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent ({i}, {j})")
                if not isinstance(c, int):
                    c = as_integer(c, "BiPoly coefficient")
                if c:
                    clean[(i, j)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "BiPoly":
        # caller guarantees canonical form
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def coerce(cls, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return cls.const(other)
        if isinstance(other, Fraction):
            return cls.const(as_integer(other, "BiPoly constant"))
        raise TypeError(f"cannot coerce {type(other).__name__} to BiPoly")

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def degree_x(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            try:
                other = BiPoly.coerce(other)
            except ArithmeticError:
                return False
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "BiPoly":
        try:
            other = BiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "BiPoly":
        try:
            other = BiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        return BiPoly.coerce(other) - self

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return BiPoly._raw({k: c * other for k, c in self._terms.items()})
        try:
            other = BiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[tuple[int, int], int] = {}
        get = out.get
        b_items = list(b.items())
        for (i1, j1), c1 in a.items():
            for (i2, j2), c2 in b_items:
                key = (i1 + i2, j1 + j2)
                out[key] = get(key, 0) + c1 * c2
        return BiPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BiPoly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("BiPoly exponent must be a nonnegative int")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- evaluation / substitution -------------------------------------

    def __call__(self, x0: Scalar, y0: Scalar) -> Scalar:
        return self.eval(x0, y0)

    def eval(self, x0: Scalar, y0: Scalar) -> Scalar:
        """Exact value at (x0, y0); int in, int out."""
        xp: dict[int, Scalar] = {}
        yp: dict[int, Scalar] = {}
        total: Scalar = 0
        for (i, j), c in self._terms.items():
            if i not in xp:
                xp[i] = x0**i
            if j not in yp:
                yp[j] = y0**j
            total += c * xp[i] * yp[j]
        return total

    def substitute(self, x=None, y=None) -> "BiPoly":
        """Compose: replace x and/or y by BiPoly (or int) expressions."""
        px = X if x is None else BiPoly.coerce(x)
        py = Y if y is None else BiPoly.coerce(y)
        xpow = [ONE]
        ypow = [ONE]
        out = ZERO
        for (i, j), c in sorted(self._terms.items()):
            while len(xpow) <= i:
                xpow.append(xpow[-1] * px)
            while len(ypow) <= j:
                ypow.append(ypow[-1] * py)
            out = out + (xpow[i] * ypow[j]) * c
        return out

    def univariate_y(self, x0: int) -> list[int]:
        """Coefficient list in y after fixing x = x0 (index = power of y)."""
        coeffs = [0] * (self.degree_y() + 1)
        for (i, j), c in self._terms.items():
            coeffs[j] += c * x0**i
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs

    # -- serialization -------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        """Graded lexicographic order: total degree descending, then x power."""
        return sorted(
            self._terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])
        )

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = "*".join(mono)
            else:
                body = "*".join([str(mag)] + mono)
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    __str__ = to_text

    def __repr__(self) -> str:
        return f"BiPoly({self.to_text()!r})"

    def to_json_obj(self) -> list[dict]:
        return [{"i": i, "j": j, "c": str(c)} for (i, j), c in self.sorted_terms()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Iterable[Mapping]) -> "BiPoly":
        terms: dict[tuple[int, int], int] = {}
        for t in obj:
            key = (int(t["i"]), int(t["j"]))
            terms[key] = terms.get(key, 0) + int(t["c"])
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "BiPoly":
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def parse(cls, text: str) -> "BiPoly":
        """Parse the text form produced by :meth:`to_text`."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[tuple[int, int], int] = {}
        pos = 0
        while pos < len(s):
            sign = -1 if s[pos] == "-" else 1
            end = pos + 1
            while end < len(s) and s[end] not in "+-":
                end += 1
            chunk = s[pos + 1 : end]
            if not chunk:
                raise ValueError(f"malformed polynomial text: {text!r}")
            c, i, j = 1, 0, 0
            for factor in chunk.split("*"):
                if factor.isdigit():
                    c *= int(factor)
                elif factor[0] in "xy":
                    e = int(factor[2:]) if factor[1:2] == "^" else 1
                    if factor[1:] and factor[1] != "^":
                        raise ValueError(f"bad factor {factor!r}")
                    if factor[0] == "x":
                        i += e
                    else:
                        j += e
                else:
                    raise ValueError(f"bad factor {factor!r}")
            key = (i, j)
            terms[key] = terms.get(key, 0) + sign * c
            pos = end
        return cls(terms)


ZERO = BiPoly._raw({})
ONE = BiPoly._raw({(0, 0): 1})
X = BiPoly._raw({(1, 0): 1})
Y = BiPoly._raw({(0, 1): 1})


def bipoly_add(*polys: BiPoly) -> BiPoly:
    out = ZERO
    for p in polys:
        out = out + p
    return out


def bipoly_mul(a: BiPoly, b: BiPoly) -> BiPoly:
    return BiPoly.coerce(a) * BiPoly.coerce(b)


def bipoly_eval(p: BiPoly, x0: int, y0: int) -> int:
    return p.eval(x0, y0)
