import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import leibniz_det
from torsionvol.errors import Singular
from torsionvol.exact_algebra import (
    T,
    Matrix,
    Poly,
    RationalFunction,
    determinant,
    format_field_element,
    image_basis,
    inverse,
    kernel_basis,
    parse_field_element,
    poly_gcd,
    rank,
    smith_normal_form,
    solve,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def rect(r, c):
    return st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_determinant_matches_leibniz(rows):
    assert determinant(Matrix.from_rows(rows)) == leibniz_det(rows)


@settings(max_examples=60, deadline=None)
@given(st.tuples(st.integers(1, 4), st.integers(1, 4)).flatmap(lambda rc: rect(*rc)))
def test_rank_nullity_and_kernel(rows):
    m = Matrix.from_rows(rows)
    k = kernel_basis(m)
    assert rank(m) + k.cols == m.cols
    assert (m @ k).is_zero()
    img, _ = image_basis(m)
    assert img.cols == rank(m)


sparse = st.sampled_from([0, 0, 0, 1, -1, 2])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 3), st.integers(1, 5), st.data())
def test_rank_of_sparse_products(r, k, c, data):
    a = data.draw(st.lists(st.lists(sparse, min_size=k, max_size=k), min_size=r, max_size=r))
    b = data.draw(st.lists(st.lists(sparse, min_size=c, max_size=c), min_size=k, max_size=k))
    m = Matrix.from_rows(a, k) @ Matrix.from_rows(b, c)
    assert rank(m) <= k
    assert rank(m) + kernel_basis(m).cols == c
    assert rank(m) == rank(m.T)


def test_rank_over_qt():
    m = Matrix.from_rows([[T, 1, 0], [1, T, 0], [T * T, 2 * T, 0]])
    assert rank(m) == 2
    assert rank(m.T) == 2


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_inverse_roundtrip(rows):
    m = Matrix.from_rows(rows)
    if determinant(m) == 0:
        with pytest.raises(Singular):
            inverse(m)
    else:
        assert m @ inverse(m) == Matrix.identity(m.rows)


def test_solve_returns_none_when_inconsistent():
    a = Matrix.from_rows([[1, 0], [0, 0]])
    assert solve(a, Matrix.from_rows([[1], [1]])) is None
    x = solve(a, Matrix.from_rows([[3], [0]]))
    assert a @ x == Matrix.from_rows([[3], [0]])


def test_rational_functions_normalize():
    f = (T - 1) / (T * T - 1)
    assert f == RationalFunction.coerce(1) / (T + 1)
    assert poly_gcd(Poly((-1, 0, 1)), Poly((1, 1))) == Poly((1, 1))
    assert (T / T) == RationalFunction.coerce(1)


@pytest.mark.parametrize("text", ["3/4", "-2/1", "0/1", "(1 - 1*t)/(1 + 1*t^2)", "(1*t)/(1)"])
def test_field_element_roundtrip(text):
    assert format_field_element(parse_field_element(text)) == text


def test_parse_field_element_rejects_garbage():
    with pytest.raises(ValueError):
        parse_field_element("one")


@settings(max_examples=40, deadline=None)
@given(st.tuples(st.integers(1, 3), st.integers(1, 3)).flatmap(
    lambda rc: st.lists(st.lists(st.integers(-6, 6), min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])))
def test_smith_normal_form(rows):
    d, u, v = smith_normal_form(rows)
    U, A, V, D = (Matrix.from_rows(x) for x in (u, rows, v, d))
    assert U @ A @ V == D
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) or (a != 0 and b % a == 0)
    assert all(d[i][j] == 0 for i in range(len(d)) for j in range(len(d[0])) if i != j)


def test_matrices_over_qt():
    m = Matrix.from_rows([[T, 1], [1, T]])
    assert determinant(m) == T * T - 1
    assert inverse(m) @ m == Matrix.identity(2, RationalFunction.coerce(1))
