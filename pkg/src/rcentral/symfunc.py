"""Elementary and complete homogeneous symmetric functions over PolyR values.

Both are computed by folding in one variable at a time through their
generating products ``prod (1 + z t)`` and ``prod 1/(1 - z t)``; subset
enumeration is only used as a test oracle.
"""

from __future__ import annotations

from typing import Iterable, Literal, Sequence, Union

from .algebra import PolyR, R, binomial

__all__ = [
    "SymInput",
    "elementary",
    "elementary_all",
    "homogeneous",
    "homogeneous_all",
    "shift_identity_check",
    "shifted_squares",
    "square_identity_check",
    "triangle_as_h",
    "triangle_as_sigma",
]

SymInput = Sequence[Union[PolyR, int]]


def _as_polys(values: Iterable[Union[PolyR, int]]) -> list[PolyR]:
    return [v if isinstance(v, PolyR) else PolyR.const(v) for v in values]


def elementary_all(values: SymInput) -> list[PolyR]:
    """``[sigma_0, ..., sigma_n]`` of the given variables."""
    coeffs = [PolyR.const(1)]
    for z in _as_polys(values):
        nxt = coeffs + [PolyR()]
        for m in range(len(coeffs), 0, -1):
            nxt[m] = nxt[m] + z * coeffs[m - 1]
        coeffs = nxt
    return coeffs


def elementary(k: int, values: SymInput) -> PolyR:
    if k < 0 or k > len(values):
        return PolyR()
    return elementary_all(values)[k]


def homogeneous_all(values: SymInput, order: int) -> list[PolyR]:
    """``[h_0, ..., h_order]``; defined for every ``order`` regardless of ``len(values)``."""
    series = [PolyR.const(1)] + [PolyR()] * order
    for z in _as_polys(values):
        for m in range(1, order + 1):
            series[m] = series[m] + z * series[m - 1]
    return series


def homogeneous(k: int, values: SymInput) -> PolyR:
    # h_k stays nonzero for k > n; only negative k is zero.
    if k < 0:
        return PolyR()
    return homogeneous_all(values, k)[k]


def shifted_squares(count: int) -> list[PolyR]:
    """``[r, 1 + r, 4 + r, ..., (count-1)^2 + r]``."""
    return [R + i * i for i in range(count)]


def triangle_as_sigma(n: int, k: int) -> PolyR:
    """``u_r(n, n-k)`` as ``(-1)^k sigma_k(r, 1+r, ..., (n-1)^2+r)``."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    s = elementary(k, shifted_squares(n))
    return -s if k % 2 else s


def triangle_as_h(n: int, k: int) -> PolyR:
    """``U_r(n+k, n)`` as ``h_k(r, 1+r, ..., n^2+r)``."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    return homogeneous(k, shifted_squares(n + 1))


def square_identity_check(i: int, values: SymInput) -> bool:
    """``sigma_i(z^2) == sum_{j=-i}^{i} (-1)^j sigma_{i+j}(z) sigma_{i-j}(z)``."""
    zs = _as_polys(values)
    lhs = elementary(i, [z * z for z in zs])
    sig = elementary_all(zs)

    def s(m):
        return sig[m] if 0 <= m < len(sig) else PolyR()

    rhs = PolyR()
    for j in range(-i, i + 1):
        term = s(i + j) * s(i - j)
        rhs = rhs - term if j % 2 else rhs + term
    return lhs == rhs


def shift_identity_check(
    which: Literal["sigma", "h"], k: int, shift: Union[PolyR, int], values: SymInput
) -> bool:
    """Translation rule ``g_k(z + t) == sum_i C(n - c_i, k - i) g_i(z) t^(k-i)``.

    ``c_i = i`` for ``sigma`` and ``c_i = 1 - k`` for ``h``.
    """
    zs = _as_polys(values)
    n = len(zs)
    t = shift if isinstance(shift, PolyR) else PolyR.const(shift)
    moved = [z + t for z in zs]
    if which == "sigma":
        if k > n:
            raise ValueError("sigma shift identity needs k <= n")
        lhs = elementary(k, moved)
        g = elementary_all(zs)
        rhs = sum((binomial(n - i, k - i) * g[i] * t ** (k - i) for i in range(k + 1)), PolyR())
    elif which == "h":
        lhs = homogeneous(k, moved)
        g = homogeneous_all(zs, k)
        top = n + k - 1
        if top < 0:
            # no variables and k = 0: both sides are 1
            return lhs == g[0]
        rhs = sum((binomial(top, k - i) * g[i] * t ** (k - i) for i in range(k + 1)), PolyR())
    else:
        raise ValueError(f"which must be 'sigma' or 'h', got {which!r}")
    return lhs == rhs
