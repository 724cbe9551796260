"""Exact arithmetic substrate.

Integers are plain Python ``int`` (unbounded) and rationals are
``fractions.Fraction`` (always in lowest terms, positive denominator).
The only type defined here is :class:`PolyR`, a univariate polynomial in
the parameter ``r`` with integer coefficients.

Text form of a polynomial: terms ``c*r^e``, ``c*r`` or ``c`` joined by
``+``/``-``, exponents strictly descending, e.g. ``10*r^2+120*r+273``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "PolyR",
    "PolyParseError",
    "R",
    "binomial",
    "format_rational",
    "poly_add",
    "poly_eval",
    "poly_format",
    "poly_mul",
    "poly_parse",
]


class PolyParseError(ValueError):
    """Malformed polynomial text; ``pos`` is the offending character index."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class PolyR:
    """Immutable polynomial in ``r`` with ``int`` coefficients, ascending by power.

    The zero polynomial has an empty coefficient tuple. Plain ints mix
    freely with ``PolyR`` in ``+``, ``-``, ``*`` and ``==``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(coeffs)
        for x in c:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"PolyR coefficients must be int, got {type(x).__name__}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("PolyR is immutable")

    @classmethod
    def const(cls, c: int) -> "PolyR":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, e: int) -> "PolyR":
        if e < 0:
            raise ValueError("negative exponent")
        return cls((0,) * e + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> int:
        """The value of a constant polynomial; raises if ``r`` actually occurs."""
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return self.coeffs[0] if self.coeffs else 0

    def __call__(self, x: int) -> int:
        return self.eval(x)

    def eval(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, q: "PolyR") -> "PolyR":
        """``self(q(r))``."""
        acc = PolyR()
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    # arithmetic

    @staticmethod
    def _coerce(other) -> "PolyR | None":
        if isinstance(other, PolyR):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return PolyR((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return PolyR(res)

    __radd__ = __add__

    def __neg__(self):
        return PolyR(-c for c in self.coeffs)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return PolyR()
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return PolyR(res)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        result, base = PolyR((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant())
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"PolyR({poly_format(self)!r})"

    def __str__(self):
        return poly_format(self)

    @classmethod
    def parse(cls, text: str) -> "PolyR":
        return poly_parse(text)


R = PolyR((0, 1))
"""The indeterminate ``r`` itself."""


def poly_add(a: PolyR, b: PolyR) -> PolyR:
    return a + b


def poly_mul(a: PolyR, b: PolyR) -> PolyR:
    return a * b


def poly_eval(p: PolyR, x: int) -> int:
    return p.eval(x)


def poly_format(p: PolyR) -> str:
    """Canonical text, highest power first; unit coefficients are kept (``1*r``)."""
    if not p.coeffs:
        return "0"
    parts = []
    for e in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        if e == 0:
            term = str(abs(c))
        elif e == 1:
            term = f"{abs(c)}*r"
        else:
            term = f"{abs(c)}*r^{e}"
        parts.append(sign + term)
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


_TERM = re.compile(r"\s*(?:(\d+)\s*(\*\s*r(?:\s*\^\s*(\d+))?)?|(r)(?:\s*\^\s*(\d+))?)")


def poly_parse(text: str) -> PolyR:
    """Parse the text form produced by :func:`poly_format`.

    Bare ``r`` / ``r^e`` (implicit unit coefficient) is accepted as well.
    """
    pos, n = 0, len(text)
    terms: dict[int, int] = {}
    last_exp = None
    first = True
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            if first:
                raise PolyParseError("empty polynomial", text, pos)
            break
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
        elif not first:
            raise PolyParseError("expected '+' or '-'", text, pos)
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos or not (m.group(1) or m.group(4)):
            raise PolyParseError("expected a term", text, pos)
        if m.group(1) is not None:
            coeff = int(m.group(1))
            if m.group(2) is None:
                exp = 0
            else:
                exp = int(m.group(3)) if m.group(3) is not None else 1
        else:
            coeff = 1
            exp = int(m.group(5)) if m.group(5) is not None else 1
        if last_exp is not None and exp >= last_exp:
            raise PolyParseError("exponents must be strictly descending", text, pos)
        last_exp = exp
        terms[exp] = sign * coeff
        pos = m.end()
        first = False
    if not terms:
        return PolyR()
    coeffs = [0] * (max(terms) + 1)
    for e, c in terms.items():
        coeffs[e] = c
    return PolyR(coeffs)


def binomial(n: int, k: int) -> int:
    """C(n, k) for ``n >= 0``; zero when ``k`` lies outside ``[0, n]``."""
    if n < 0:
        raise ValueError(f"binomial: negative n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def format_rational(q: Union[Fraction, int]) -> str:
    """``p/q`` in lowest terms, or a bare integer when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
