"""The even-index central factorial triangles u, U and their r-shifted forms u_r, U_r.

Every entry is a :class:`~rcentral.algebra.PolyR` in ``r``; the plain
(r = 0) kinds hold constant polynomials. The two-term recurrences are the
source of truth, and each alternative route below is checked against them
in the test-suite.

First kind::

    u_r(n,k) = u_r(n-1,k-1) - ((n-1)^2 + r) u_r(n-1,k)
    u_r(n,0) = (-1)^n prod_{i<n} (i^2 + r)

Second kind::

    U_r(n,k) = U_r(n-1,k-1) + (k^2 + r) U_r(n-1,k)
    U_r(n,0) = r^n
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra import PolyR, R, binomial

__all__ = [
    "Kind",
    "Special",
    "Triangle",
    "build_triangle",
    "convert_U_from_Ur",
    "convert_Ur_from_U",
    "convert_u_from_ur",
    "convert_ur_from_u",
    "egf_second_kind_check",
    "egf_second_kind_coefficients",
    "entry",
    "explicit_second_kind",
    "explicit_second_kind_literal",
    "geometric_recurrence_second",
    "iter_entries",
    "ogf_first_kind_check",
    "ogf_first_kind_coefficients",
    "ogf_second_kind_matches",
    "ogf_second_kind_series",
    "row_recurrence_first",
    "special_value",
    "stirling_first",
    "unsigned_first_kind",
    "ur_via_stirling",
    "verify_connection_identity",
]


class Kind(enum.Enum):
    FIRST_KIND_R = "u_r"
    SECOND_KIND_R = "U_r"
    FIRST_KIND = "u"
    SECOND_KIND = "U"

    @property
    def is_first(self) -> bool:
        return self in (Kind.FIRST_KIND_R, Kind.FIRST_KIND)

    @property
    def has_r(self) -> bool:
        return self in (Kind.FIRST_KIND_R, Kind.SECOND_KIND_R)

    @property
    def shifted(self) -> "Kind":
        """The r-carrying kind of the same family."""
        return Kind.FIRST_KIND_R if self.is_first else Kind.SECOND_KIND_R


@dataclass(frozen=True)
class Triangle:
    kind: Kind
    max_n: int
    rows: tuple[tuple[PolyR, ...], ...]

    def __call__(self, n: int, k: int) -> PolyR:
        if k < 0 or k > n or n < 0:
            return PolyR()
        if n > self.max_n:
            raise IndexError(f"row {n} beyond max_n={self.max_n}")
        return self.rows[n][k]

    entry = __call__

    def row(self, n: int) -> tuple[PolyR, ...]:
        return self.rows[n]

    def evaluated(self, r: int) -> list[list[int]]:
        return [[p.eval(r) for p in row] for row in self.rows]


def _weight(i: int, kind: Kind) -> PolyR:
    """``i^2 + r`` (or ``i^2`` for the r = 0 kinds)."""
    w = PolyR.const(i * i)
    return w + R if kind.has_r else w


def _build(kind: Kind, max_n: int) -> tuple[tuple[PolyR, ...], ...]:
    rows: list[tuple[PolyR, ...]] = [(PolyR.const(1),)]
    for n in range(1, max_n + 1):
        prev = rows[-1]

        def at(k):
            return prev[k] if 0 <= k < len(prev) else PolyR()

        row = []
        for k in range(n + 1):
            if kind.is_first:
                row.append(at(k - 1) - _weight(n - 1, kind) * at(k))
            else:
                row.append(at(k - 1) + _weight(k, kind) * at(k))
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def _cached_rows(kind: Kind, max_n: int):
    return _build(kind, max_n)


def build_triangle(kind: Kind, max_n: int) -> Triangle:
    """All entries ``0 <= k <= n <= max_n`` from the two-term recurrence."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    # grow in blocks of 16 so neighbouring sizes share one cache entry
    size = max(16, -(-max_n // 16) * 16)
    rows = _cached_rows(kind, size)
    return Triangle(kind, max_n, rows[: max_n + 1])


def entry(kind: Kind, n: int, k: int) -> PolyR:
    """Single recurrence value; zero outside the triangle."""
    if n < 0 or k < 0 or k > n:
        return PolyR()
    return build_triangle(kind, n)(n, k)


def unsigned_first_kind(n: int, k: int) -> PolyR:
    """``(-1)^(n-k) u_r(n,k)``; all coefficients are nonnegative."""
    p = entry(Kind.FIRST_KIND_R, n, k)
    return -p if (n - k) % 2 else p


def _check_indices(n: int, k: int) -> None:
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")


# explicit formula and EGF for the second kind


def _explicit_weights(k: int) -> list[Fraction]:
    """Weights ``w_j`` with ``U_r(n,k) = sum_j w_j (j^2+r)^n`` for j = 0..k.

    Derived from the symmetric sum over j = -k..k, so the j = 0 term
    carries half the weight of the others.
    """
    f = math.factorial(2 * k)
    w = [Fraction((-1) ** k * binomial(2 * k, k), f)]
    for j in range(1, k + 1):
        w.append(Fraction(2 * (-1) ** (k + j) * binomial(2 * k, k - j), f))
    return w


def explicit_second_kind(n: int, k: int, r_val: int) -> int:
    """Closed form ``U_r(n,k)`` at integer ``r``.

    ``(1/(2k)!) * sum_{j=-k..k} (-1)^(k+j) C(2k, k-j) (j^2 + r)^n``
    """
    _check_indices(n, k)
    if r_val < 0:
        raise ValueError("r must be >= 0")
    total = (-1) ** k * binomial(2 * k, k) * r_val**n
    for j in range(1, k + 1):
        total += 2 * (-1) ** (k + j) * binomial(2 * k, k - j) * (j * j + r_val) ** n
    q, rem = divmod(total, math.factorial(2 * k))
    if rem:
        raise ArithmeticError(f"explicit sum not divisible at n={n}, k={k}, r={r_val}")
    return q


def explicit_second_kind_literal(n: int, k: int, r_val: int) -> Fraction:
    """The same sum with every j in 0..k weighted ``2/(2k)!``, j = 0 included.

    Kept only to document that this weighting is wrong once ``r > 0``,
    e.g. it yields 13 instead of 11 at (n, k, r) = (3, 2, 2).
    """
    _check_indices(n, k)
    total = sum(
        (-1) ** (k + j) * binomial(2 * k, k - j) * (j * j + r_val) ** n for j in range(k + 1)
    )
    return Fraction(2 * total, math.factorial(2 * k))


def egf_second_kind_coefficients(k: int, n_max: int, r_val: int) -> list[Fraction]:
    """``n! [t^n]`` of ``sum_j w_j exp((j^2 + r) t)`` for n = 0..n_max.

    Each exponential is expanded as a truncated series and the weighted
    sum is taken coefficientwise before rescaling by ``n!``.
    """
    weights = _explicit_weights(k)
    series = [Fraction(0)] * (n_max + 1)
    for j, w in enumerate(weights):
        b = j * j + r_val
        term = Fraction(1)
        for n in range(n_max + 1):
            series[n] += w * term
            term = term * b / (n + 1)
    return [c * math.factorial(n) for n, c in enumerate(series)]


def egf_second_kind_check(k: int, n_max: int, r_val: int) -> bool:
    """EGF coefficients equal ``U_r(n,k)`` for ``k <= n <= n_max`` and vanish below ``k``."""
    coeffs = egf_second_kind_coefficients(k, n_max, r_val)
    for n, c in enumerate(coeffs):
        expected = entry(Kind.SECOND_KIND_R, n, k).eval(r_val)
        if c != expected:
            return False
    return True


# single-sum recurrences


def _prod_weights(lo: int, hi: int, kind: Kind = Kind.FIRST_KIND_R) -> PolyR:
    """``prod_{i=lo}^{hi-1} (i^2 + r)``."""
    p = PolyR.const(1)
    for i in range(lo, hi):
        p = p * _weight(i, kind)
    return p


def row_recurrence_first(n: int, k: int) -> PolyR:
    """``u_r(n,k) = sum_{l=k}^{n} (-1)^(n-l) u_r(l-1,k-1) prod_{i=l}^{n-1} (i^2+r)``."""
    _check_indices(n, k)
    if k == 0:
        raise ValueError("row recurrence needs k >= 1")
    total = PolyR()
    for l in range(k, n + 1):
        term = entry(Kind.FIRST_KIND_R, l - 1, k - 1) * _prod_weights(l, n)
        total = total - term if (n - l) % 2 else total + term
    return total


def geometric_recurrence_second(n: int, k: int) -> PolyR:
    """``U_r(n,k) = sum_{l=k}^{n} U_r(l-1,k-1) (k^2+r)^(n-l)``."""
    _check_indices(n, k)
    if k == 0:
        raise ValueError("geometric recurrence needs k >= 1")
    w = _weight(k, Kind.SECOND_KIND_R)
    total = PolyR()
    for l in range(k, n + 1):
        total = total + entry(Kind.SECOND_KIND_R, l - 1, k - 1) * w ** (n - l)
    return total


class Special(enum.Enum):
    FIRST_COLUMN_ONE = "u_r(n,1)"
    FIRST_SUBDIAGONAL = "u_r(n,n-1)"
    SECOND_COLUMN_ONE = "U_r(n,1)"
    SECOND_SUBDIAGONAL = "U_r(n,n-1)"


def special_value(which: Special, n: int) -> PolyR:
    """Closed forms for column 1 and the subdiagonal of both kinds."""
    if n < 1:
        raise ValueError("special values need n >= 1")
    if which is Special.FIRST_COLUMN_ONE:
        # division-free: sum over i of the product omitting factor i
        total = PolyR()
        for i in range(n):
            total = total + _prod_weights(0, i) * _prod_weights(i + 1, n)
        return total if (n - 1) % 2 == 0 else -total
    if which is Special.SECOND_COLUMN_ONE:
        return (R + 1) ** n - R**n
    s = PolyR()
    for l in range(n):
        s = s + _weight(l, Kind.FIRST_KIND_R)
    if which is Special.FIRST_SUBDIAGONAL:
        return -s
    if which is Special.SECOND_SUBDIAGONAL:
        return s
    raise ValueError(f"unknown special value {which!r}")


# conversions between r = 0 and shifted arrays


def convert_Ur_from_U(n: int, k: int) -> PolyR:
    """``U_r(n,k) = sum_{l=k}^{n} C(n,l) U(l,k) r^(n-l)``."""
    _check_indices(n, k)
    total = PolyR()
    for l in range(k, n + 1):
        total = total + binomial(n, l) * entry(Kind.SECOND_KIND, l, k) * R ** (n - l)
    return total


def convert_U_from_Ur(n: int, k: int) -> PolyR:
    """``U(n,k) = sum_{i=k}^{n} C(n,i) (-r)^(n-i) U_r(i,k)``; the r-dependence cancels."""
    _check_indices(n, k)
    total = PolyR()
    for i in range(k, n + 1):
        total = total + binomial(n, i) * (-R) ** (n - i) * entry(Kind.SECOND_KIND_R, i, k)
    if not total.is_constant():
        raise ArithmeticError(f"U({n},{k}) conversion left r-dependence: {total}")
    return total


def convert_ur_from_u(n: int, k: int) -> PolyR:
    """``u_r(n,k) = sum_{i=k}^{n} C(i,k) (-r)^(i-k) u(n,i)``."""
    _check_indices(n, k)
    total = PolyR()
    for i in range(k, n + 1):
        total = total + binomial(i, k) * (-R) ** (i - k) * entry(Kind.FIRST_KIND, n, i)
    return total


def convert_u_from_ur(n: int, k: int) -> PolyR:
    """``u(n,k) = sum_{i=k}^{n} C(i,k) r^(i-k) u_r(n,i)``; the r-dependence cancels."""
    _check_indices(n, k)
    total = PolyR()
    for i in range(k, n + 1):
        total = total + binomial(i, k) * R ** (i - k) * entry(Kind.FIRST_KIND_R, n, i)
    if not total.is_constant():
        raise ArithmeticError(f"u({n},{k}) conversion left r-dependence: {total}")
    return total


# Stirling route


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(n + 1):
        left = prev[k - 1] if k >= 1 else 0
        right = prev[k] if k < n else 0
        row[k] = left - (n - 1) * right
    return tuple(row)


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind ``s(n,k)``; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return _stirling_row(n)[k]


def ur_via_stirling(n: int, k: int) -> PolyR:
    """``u_r(n,k)`` from products of Stirling numbers of the first kind.

    With ``m = n - k``::

        u_r(n, n-m) = sum_{i=0}^{m} sum_{j=-i}^{i} (-1)^(m+j) C(n-i, m-i)
                      s(n, n-i+j) s(n, n-i-j) r^(m-i)
    """
    _check_indices(n, k)
    m = n - k
    total = PolyR()
    for i in range(m + 1):
        inner = 0
        for j in range(-i, i + 1):
            inner += (-1) ** (m + j) * stirling_first(n, n - i + j) * stirling_first(n, n - i - j)
        total = total + binomial(n - i, m - i) * inner * R ** (m - i)
    return total


# connection coefficients and generating functions


def verify_connection_identity(
    kind: Kind, n: int, r_val: int, x_samples: Sequence[int]
) -> bool:
    """Check the change-of-basis identities at integer points ``x``.

    First kind: ``prod_{i<n} (x - i^2) = sum_k u_r(n,k) (x + r)^k``.
    Second kind: ``(x + r)^n = sum_k U_r(n,k) prod_{i<k} (x - i^2)``.
    Both sides are polynomials of degree ``n`` in ``x``, so ``n + 1``
    distinct points settle equality.
    """
    xs = set(x_samples)
    if len(xs) < n + 1:
        raise ValueError(f"need at least {n + 1} distinct sample points, got {len(xs)}")
    shifted = kind.shifted
    row = [entry(shifted, n, k).eval(r_val) for k in range(n + 1)]
    for x in sorted(xs):
        falling = [1]
        for i in range(n):
            falling.append(falling[-1] * (x - i * i))
        if shifted is Kind.FIRST_KIND_R:
            lhs = falling[n]
            rhs = sum(c * (x + r_val) ** k for k, c in enumerate(row))
        else:
            lhs = (x + r_val) ** n
            rhs = sum(c * falling[k] for k, c in enumerate(row))
        if lhs != rhs:
            return False
    return True


def ogf_first_kind_coefficients(n: int) -> list[PolyR]:
    """t-coefficients of ``prod_{j<n} (1 + (j^2 + r) t)``."""
    coeffs = [PolyR.const(1)]
    for j in range(n):
        w = _weight(j, Kind.FIRST_KIND_R)
        nxt = coeffs + [PolyR()]
        for m in range(1, len(nxt)):
            nxt[m] = nxt[m] + w * coeffs[m - 1]
        coeffs = nxt
    return coeffs


def ogf_first_kind_check(n: int, order: int) -> bool:
    """Row ``n`` against ``sum_k (-1)^k u_r(n,n-k) t^k = prod_{j<n} (1 + (j^2+r) t)``."""
    if order < n:
        raise ValueError("order must be >= n")
    coeffs = ogf_first_kind_coefficients(n)
    coeffs += [PolyR()] * (order + 1 - len(coeffs))
    for k in range(order + 1):
        expected = entry(Kind.FIRST_KIND_R, n, n - k) if k <= n else PolyR()
        if k % 2:
            expected = -expected
        if coeffs[k] != expected:
            return False
    return True


def ogf_second_kind_series(k: int, order: int) -> list[PolyR]:
    """Coefficients of ``t^k / prod_{j=0}^{k} (1 - (j^2 + r) t)`` up to ``t^order``."""
    if k < 0 or order < k:
        raise ValueError("need 0 <= k <= order")
    series = [PolyR()] * (order + 1)
    series[k] = PolyR.const(1)
    for j in range(k + 1):
        w = _weight(j, Kind.SECOND_KIND_R)
        # divide by (1 - w t) in place
        for m in range(1, order + 1):
            series[m] = series[m] + w * series[m - 1]
    return series


def ogf_second_kind_matches(k: int, order: int) -> bool:
    series = ogf_second_kind_series(k, order)
    return all(series[n] == entry(Kind.SECOND_KIND_R, n, k) for n in range(order + 1))


def iter_entries(kind: Kind, max_n: int) -> Iterable[tuple[int, int, PolyR]]:
    tri = build_triangle(kind, max_n)
    for n in range(max_n + 1):
        for k in range(n + 1):
            yield n, k, tri(n, k)
