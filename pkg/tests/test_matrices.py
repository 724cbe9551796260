import random

import pytest
from hypothesis import given, settings, strategies as st

from rcentral import matrices as mat
from rcentral.algebra import PolyR, R, poly_parse as P
from rcentral.matrices import SquareMatrix


def test_u1_entries():
    m = mat.build_U1(5)
    assert m[4, 1] == P("-4*r^3-42*r^2-98*r-36")
    assert m[3, 0] == -(R * (R + 1) * (R + 4))
    assert m[0, 3] == 0


def test_u2_entries():
    assert mat.build_U2(5)[4, 2] == P("6*r^2+20*r+21")
    assert mat.build_A1(1) == SquareMatrix(((PolyR.const(1),),))


def test_pascal():
    p = mat.build_pascal(5, R)
    assert list(p.rows[4]) == [R**4, 4 * R**3, 6 * R**2, 4 * R, 1]
    assert all(mat.mat_is_identity(mat.build_pascal(n, 0)) for n in range(1, 6))
    assert mat.build_pascal(3, -R)[2, 1] == -2 * R
    assert mat.build_pascal(4, 1)[3, 1] == 3


def test_mul_and_identity():
    assert mat.mat_is_identity(mat.build_pascal(5, R) @ mat.build_pascal(5, -R))
    a = mat.build_U2(4)
    assert a @ mat.identity(4) == a
    assert mat.mat_is_identity(mat.build_U1(5) @ mat.build_U2(5))
    with pytest.raises(ValueError):
        mat.mat_mul(mat.identity(2), mat.identity(3))
    with pytest.raises(ValueError):
        SquareMatrix(((PolyR(),), (PolyR(), PolyR())))


@pytest.mark.parametrize("n", [1, 5, 10])
def test_orthogonality(n):
    assert mat.verify_orthogonality(n)


@pytest.mark.parametrize("n", [1, 5, 8])
def test_factorizations(n):
    assert mat.verify_factorizations(n)


def test_unit_lower_triangular():
    for n in range(1, 11):
        for build in (mat.build_U1, mat.build_U2, mat.build_A1, mat.build_A2):
            assert build(n).is_unit_lower_triangular()
        assert mat.build_pascal(n, 3 * R - 2).is_unit_lower_triangular()


def test_inverse_relations():
    rng = random.Random(3)
    for _ in range(10):
        b = [rng.randint(-1000, 1000) for _ in range(rng.randint(1, 10))]
        assert mat.inverse_relation_roundtrip(b)


@settings(max_examples=30)
@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(1, 6))
def test_pascal_translation(y, z, n):
    assert mat.build_pascal(n, y) @ mat.build_pascal(n, z) == mat.build_pascal(n, y + z)


def test_pascal_translation_symbolic():
    assert mat.build_pascal(6, R) @ mat.build_pascal(6, 2 * R + 1) == mat.build_pascal(6, 3 * R + 1)
