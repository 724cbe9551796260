"""Identity suites run by ``rcentral verify``.

Each suite yields :class:`Check` records; a suite passes when none of its
records has status ``fail``. ``note`` records carry facts worth reporting
that are not pass/fail checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from . import distribution as dist
from . import matrices as mat
from . import symfunc as sf
from . import triangles as tri
from .algebra import PolyR, R
from .triangles import Kind

SUITES = (
    "routes",
    "orthogonality",
    "factorization",
    "ogf",
    "symfunc",
    "logconcavity",
    "distribution",
)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    status: str  # "pass", "fail" or "note"
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == "fail"


def _check(suite: str, name: str, ok: bool, detail: str = "") -> Check:
    return Check(suite, name, "pass" if ok else "fail", detail)


def first_kind_routes(n: int, k: int) -> dict[str, PolyR]:
    """Every implemented route to ``u_r(n,k)``."""
    routes = {
        "recurrence": tri.entry(Kind.FIRST_KIND_R, n, k),
        "from-r0": tri.convert_ur_from_u(n, k),
        "stirling": tri.ur_via_stirling(n, k),
        "sigma": sf.triangle_as_sigma(n, n - k),
    }
    if k >= 1:
        routes["row-rec"] = tri.row_recurrence_first(n, k)
    return routes


def second_kind_routes(n: int, k: int) -> dict[str, PolyR]:
    """Every symbolic route to ``U_r(n,k)``; the explicit sum is numeric-only."""
    routes = {
        "recurrence": tri.entry(Kind.SECOND_KIND_R, n, k),
        "from-r0": tri.convert_Ur_from_U(n, k),
        "h": sf.triangle_as_h(k, n - k),
    }
    if k >= 1:
        routes["geom-rec"] = tri.geometric_recurrence_second(n, k)
    return routes


def _routes(max_n: int, r_values: Sequence[int]) -> Iterator[Check]:
    s = "routes"
    for n in range(max_n + 1):
        for k in range(n + 1):
            first = first_kind_routes(n, k)
            ref = first["recurrence"]
            bad = sorted(name for name, v in first.items() if v != ref)
            yield _check(s, f"u_r({n},{k})", not bad, "disagree: " + ",".join(bad) if bad else str(ref))

            second = second_kind_routes(n, k)
            ref = second["recurrence"]
            bad = sorted(name for name, v in second.items() if v != ref)
            bad += [
                f"explicit@r={r}"
                for r in r_values
                if tri.explicit_second_kind(n, k, r) != ref.eval(r)
            ]
            yield _check(s, f"U_r({n},{k})", not bad, "disagree: " + ",".join(bad) if bad else str(ref))

            try:
                u0 = tri.convert_u_from_ur(n, k)
                U0 = tri.convert_U_from_Ur(n, k)
                ok = (
                    u0 == tri.entry(Kind.FIRST_KIND, n, k)
                    and U0 == tri.entry(Kind.SECOND_KIND, n, k)
                    and tri.entry(Kind.FIRST_KIND_R, n, k).eval(0) == u0
                    and tri.entry(Kind.SECOND_KIND_R, n, k).eval(0) == U0
                )
                detail = f"u={u0} U={U0}"
            except ArithmeticError as exc:
                ok, detail = False, str(exc)
            yield _check(s, f"r0-collapse({n},{k})", ok, detail)
    for r in r_values:
        for k in range(max_n + 1):
            yield _check(s, f"egf(k={k},n<={max_n},r={r})", tri.egf_second_kind_check(k, max_n, r))
    lit = tri.explicit_second_kind_literal(3, 2, 2)
    rec = tri.entry(Kind.SECOND_KIND_R, 3, 2).eval(2)
    yield Check(
        s,
        "explicit-unhalved-j0-weight",
        "note",
        f"weighting j=0 like j>0 gives U_r(3,2)={lit} at r=2; recurrence gives {rec}",
    )


def _orthogonality(max_n: int, r_values: Sequence[int]) -> Iterator[Check]:
    s = "orthogonality"
    for n in range(1, max_n + 2):
        yield _check(s, f"U1({n})*U2({n})=I", mat.verify_orthogonality(n))
    rng = random.Random(0)
    for t in range(10):
        length = rng.randint(1, max(1, min(10, max_n + 1)))
        b = [rng.randint(-10**6, 10**6) for _ in range(length)]
        yield _check(s, f"inverse-relation#{t}(len={length})", mat.inverse_relation_roundtrip(b))


def _factorization(max_n: int, r_values: Sequence[int]) -> Iterator[Check]:
    s = "factorization"
    for n in range(1, max_n + 2):
        yield _check(s, f"U1=A1*P[-r],U2=P[r]*A2(n={n})", mat.verify_factorizations(n))
        yield _check(
            s, f"P[r]*P[-r]=I(n={n})", mat.mat_is_identity(mat.build_pascal(n, R) @ mat.build_pascal(n, -R))
        )


def _ogf(max_n: int, r_values: Sequence[int]) -> Iterator[Check]:
    s = "ogf"
    for n in range(max_n + 1):
        yield _check(s, f"first-kind-row({n})", tri.ogf_first_kind_check(n, max_n))
    for k in range(min(max_n, 6) + 1):
        yield _check(s, f"second-kind-column({k})", tri.ogf_second_kind_matches(k, max(max_n, k)))
    for n in range(max_n + 1):
        for r in r_values:
            xs = list(range(-(n // 2) - 1, n + 1))
            for kind in (Kind.FIRST_KIND_R, Kind.SECOND_KIND_R):
                yield _check(
                    s,
                    f"connection-{kind.value}(n={n},r={r})",
                    tri.verify_connection_identity(kind, n, r, xs),
                )


def _symfunc(max_n: int, r_values: Sequence[int]) -> Iterator[Check]:
    s = "symfunc"
    for n in range(max_n + 1):
        for k in range(max_n + 1 - n):
            if k <= n:
                ok = sf.triangle_as_sigma(n, k) == tri.entry(Kind.FIRST_KIND_R, n, n - k)
                yield _check(s, f"sigma-form({n},{k})", ok)
            ok = sf.triangle_as_h(n, k) == tri.entry(Kind.SECOND_KIND_R, n + k, n)
            yield _check(s, f"h-form({n},{k})", ok)
    rng = random.Random(1)
    for length in range(min(max_n, 8) + 1):
        zs = [rng.randint(-5, 5) for _ in range(length)]
        for i in range(length + 1):
            yield _check(s, f"square-identity(i={i},{zs})", sf.square_identity_check(i, zs))
        for k in range(length + 1):
            yield _check(s, f"shift-sigma(k={k},{zs})", sf.shift_identity_check("sigma", k, R, zs))
        for k in range(min(max_n, 8) + 1):
            yield _check(s, f"shift-h(k={k},{zs})", sf.shift_identity_check("h", k, R, zs))


def _logconcavity(max_n: int, r_values: Sequence[int]) -> Iterator[Check]:
    s = "logconcavity"
    for n in range(2, max_n + 1):
        for r in r_values:
            row = dist.unsigned_row(n, r)
            start = 0 if r > 0 else 1
            lc = dist.check_log_concavity(row, strict=True, start=start)
            yield _check(
                s,
                f"strict(n={n},r={r})",
                lc.ok,
                "" if lc.ok else f"violation at k={lc.witness}",
            )
            yield _check(s, f"newton(n={n},r={r})", dist.check_newton_inequality(n, r))


def _distribution(max_n: int, r_values: Sequence[int]) -> Iterator[Check]:
    s = "distribution"
    for n in range(1, max_n + 1):
        for r in r_values:
            d = dist.build_dist(n, r)
            ok = sum(d.pmf) == 1 and dist.moments_from_pmf(d) == (d.mean, d.variance)
            ok = ok and list(d.pmf) == dist.pgf_product(d.probs)
            yield _check(s, f"pmf-moments-pgf(n={n},r={r})", ok)


_RUNNERS: dict[str, Callable[[int, Sequence[int]], Iterator[Check]]] = {
    "routes": _routes,
    "orthogonality": _orthogonality,
    "factorization": _factorization,
    "ogf": _ogf,
    "symfunc": _symfunc,
    "logconcavity": _logconcavity,
    "distribution": _distribution,
}


def run_suite(suite: str, max_n: int, r_values: Sequence[int]) -> list[Check]:
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    names = SUITES if suite == "all" else (suite,)
    out: list[Check] = []
    for name in names:
        if name not in _RUNNERS:
            raise ValueError(f"unknown suite {suite!r}")
        out.extend(_RUNNERS[name](max_n, r_values))
    return out
