"""Poisson-binomial law carried by the unsigned first-kind numbers.

For fixed ``n`` and integer ``r >= 0`` the row ``|u_r(n, 0..n)|`` divided by
``prod_{i<n} (1 + r + i^2)`` is the law of a sum of independent Bernoulli
trials with success probabilities ``p_i = 1 / (1 + r + i^2)``. Everything
here is exact (``Fraction``); only the sampler's tolerance band is a float.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .triangles import unsigned_first_kind

__all__ = [
    "LogConcavity",
    "PBDist",
    "build_dist",
    "check_log_concavity",
    "check_newton_inequality",
    "mean_band",
    "moments_from_pmf",
    "pgf_product",
    "sample",
    "unsigned_row",
]


@dataclass(frozen=True)
class PBDist:
    n: int
    r: int
    probs: tuple[Fraction, ...]
    pmf: tuple[Fraction, ...]
    mean: Fraction
    variance: Fraction


def unsigned_row(n: int, r: int) -> list[int]:
    """``[|u_r(n,0)|, ..., |u_r(n,n)|]`` at the given integer ``r``."""
    return [unsigned_first_kind(n, k).eval(r) for k in range(n + 1)]


def build_dist(n: int, r: int) -> PBDist:
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
    probs = tuple(Fraction(1, 1 + r + i * i) for i in range(n))
    norm = math.prod(1 + r + i * i for i in range(n))
    pmf = tuple(Fraction(c, norm) for c in unsigned_row(n, r))
    mean = sum(probs, Fraction(0))
    variance = sum((p * (1 - p) for p in probs), Fraction(0))
    return PBDist(n, r, probs, pmf, mean, variance)


def moments_from_pmf(d: PBDist) -> tuple[Fraction, Fraction]:
    mean = sum((k * f for k, f in enumerate(d.pmf)), Fraction(0))
    second = sum((k * k * f for k, f in enumerate(d.pmf)), Fraction(0))
    return mean, second - mean * mean


def pgf_product(probs: Sequence[Fraction]) -> list[Fraction]:
    """s-coefficients of ``prod (1 - p + p s)``."""
    coeffs = [Fraction(1)]
    for p in probs:
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for m, c in enumerate(coeffs):
            nxt[m] += c * (1 - p)
            nxt[m + 1] += c * p
        coeffs = nxt
    return coeffs


def sample(d: PBDist, count: int, seed: int) -> list[int]:
    """Histogram over ``0..n`` of ``count`` draws of the Bernoulli sum.

    Each trial succeeds when a uniform integer in ``[0, den)`` falls below
    ``num`` for ``p_i = num/den``, so the success probability is exact.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = random.Random(seed)
    trials = [(p.numerator, p.denominator) for p in d.probs]
    hist = [0] * (d.n + 1)
    randrange = rng.randrange
    for _ in range(count):
        y = 0
        for num, den in trials:
            if randrange(den) < num:
                y += 1
        hist[y] += 1
    return hist


def mean_band(d: PBDist, count: int, sigmas: float = 4.0) -> float:
    """Half-width ``sigmas * sqrt(Var / count)`` around the exact mean."""
    return sigmas * math.sqrt(d.variance / count)


@dataclass(frozen=True)
class LogConcavity:
    ok: bool
    witness: Optional[int] = None

    def __bool__(self):
        return self.ok


def check_log_concavity(seq: Sequence[int], strict: bool = True, start: int = 0) -> LogConcavity:
    """Test ``c_k^2 > c_{k-1} c_{k+1}`` (``>=`` if not strict) on ``seq[start:]``.

    Every entry in the window must be positive. ``witness`` is the first
    violating index, counted in the original sequence.
    """
    for i in range(start, len(seq)):
        if seq[i] <= 0:
            raise ValueError(f"entry {i} is not positive: {seq[i]}")
    for k in range(start + 1, len(seq) - 1):
        lhs = seq[k] * seq[k]
        rhs = seq[k - 1] * seq[k + 1]
        if lhs < rhs or (strict and lhs == rhs):
            return LogConcavity(False, k)
    return LogConcavity(True)


def check_newton_inequality(n: int, r: int) -> bool:
    """``c_k^2 >= ((k+1)/k) ((n-k+1)/(n-k)) c_{k-1} c_{k+1}`` over the row ``|u_r(n, .)|``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    c = unsigned_row(n, r)
    for k in range(1, n):
        bound = Fraction((k + 1) * (n - k + 1), k * (n - k)) * c[k - 1] * c[k + 1]
        if c[k] * c[k] < bound:
            return False
    return True
