"""Square matrices over PolyR: the central factorial matrices and Pascal matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .algebra import PolyR, R, binomial
from .triangles import Kind, build_triangle

__all__ = [
    "SquareMatrix",
    "build_A1",
    "build_A2",
    "build_U1",
    "build_U2",
    "build_pascal",
    "identity",
    "inverse_relation_roundtrip",
    "mat_is_identity",
    "mat_mul",
    "verify_factorizations",
    "verify_orthogonality",
]


@dataclass(frozen=True)
class SquareMatrix:
    rows: tuple[tuple[PolyR, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(row) != n for row in self.rows):
            raise ValueError("matrix is not square")

    @classmethod
    def from_fn(cls, n: int, fn) -> "SquareMatrix":
        return cls(tuple(tuple(fn(i, j) for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> PolyR:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        return mat_mul(self, other)

    def apply(self, vec: Sequence[Union[PolyR, int]]) -> list[PolyR]:
        if len(vec) != self.dim:
            raise ValueError("dimension mismatch")
        return [sum((a * b for a, b in zip(row, vec)), PolyR()) for row in self.rows]

    def is_unit_lower_triangular(self) -> bool:
        n = self.dim
        return all(
            self.rows[i][j] == (1 if i == j else 0)
            for i in range(n)
            for j in range(i, n)
        )

    def evaluated(self, r: int) -> list[list[int]]:
        return [[p.eval(r) for p in row] for row in self.rows]


def identity(n: int) -> SquareMatrix:
    return SquareMatrix.from_fn(n, lambda i, j: PolyR.const(1 if i == j else 0))


def mat_mul(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    n = a.dim
    cols = [[b.rows[k][j] for k in range(n)] for j in range(n)]
    return SquareMatrix(
        tuple(
            tuple(sum((x * y for x, y in zip(row, col) if x and y), PolyR()) for col in cols)
            for row in a.rows
        )
    )


def mat_is_identity(a: SquareMatrix) -> bool:
    return a == identity(a.dim)


def _from_triangle(kind: Kind, n: int) -> SquareMatrix:
    if n < 1:
        raise ValueError("matrix dimension must be >= 1")
    tri = build_triangle(kind, n - 1)
    return SquareMatrix.from_fn(n, tri)


def build_U1(n: int) -> SquareMatrix:
    """``[u_r(i,j)]`` for ``0 <= i, j < n``."""
    return _from_triangle(Kind.FIRST_KIND_R, n)


def build_U2(n: int) -> SquareMatrix:
    """``[U_r(i,j)]`` for ``0 <= i, j < n``."""
    return _from_triangle(Kind.SECOND_KIND_R, n)


def build_A1(n: int) -> SquareMatrix:
    return _from_triangle(Kind.FIRST_KIND, n)


def build_A2(n: int) -> SquareMatrix:
    return _from_triangle(Kind.SECOND_KIND, n)


def build_pascal(n: int, z: Union[PolyR, int]) -> SquareMatrix:
    """Generalized Pascal matrix with entries ``C(i,j) z^(i-j)``."""
    if n < 1:
        raise ValueError("matrix dimension must be >= 1")
    z = z if isinstance(z, PolyR) else PolyR.const(z)
    powers = [PolyR.const(1)]
    for _ in range(n):
        powers.append(powers[-1] * z)
    return SquareMatrix.from_fn(
        n, lambda i, j: binomial(i, j) * powers[i - j] if j <= i else PolyR()
    )


def verify_orthogonality(n: int) -> bool:
    u1, u2 = build_U1(n), build_U2(n)
    return mat_is_identity(u1 @ u2) and mat_is_identity(u2 @ u1)


def verify_factorizations(n: int) -> bool:
    """``U1 = A1 P[-r]`` and ``U2 = P[r] A2``."""
    ok1 = build_U1(n) == build_A1(n) @ build_pascal(n, -R)
    ok2 = build_U2(n) == build_pascal(n, R) @ build_A2(n)
    return ok1 and ok2


def inverse_relation_roundtrip(b: Sequence[int]) -> bool:
    """``a = U2 b`` then ``U1 a`` gives back ``b``, symbolically in ``r``."""
    n = len(b)
    a = build_U2(n).apply(b)
    back = build_U1(n).apply(a)
    return back == [PolyR.const(x) for x in b]
