from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bernoulli, j_coefficients, j_matrix_oracle, jordan_block, long_division, todd_matrix_oracle
from torsionvol.errors import NonUnit, NonzeroConstantTerm, NotNilpotent
from torsionvol.exact_algebra import Matrix
from torsionvol.todd_series import (
    TruncatedSeries,
    compose,
    duflo_determinant_check,
    exp,
    exp_series,
    invert,
    j_of_matrix,
    j_series,
    log,
    todd_of_nilpotent,
)

coeff = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def series(order, const=None):
    head = st.just(Fraction(const)) if const is not None else coeff
    return st.tuples(head, st.lists(coeff, min_size=order, max_size=order)).map(
        lambda t: TruncatedSeries((t[0], *t[1]), order))


@pytest.mark.parametrize("n", [1, 2, 6, 12])
def test_j_series_two_routes(n):
    # Bernoulli recursion vs long division of x by e^x - 1 (after cancelling x)
    expected = j_coefficients(n)
    den = [Fraction(1, factorial(k + 1)) for k in range(n + 1)]
    assert list(j_series(n).coeffs) == expected
    assert long_division([1], den, n) == expected


def test_bernoulli_recursion_values():
    b = bernoulli(12)
    assert b[:5] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]
    assert all(b[k] == 0 for k in range(3, 13, 2))
    assert b[12] == Fraction(-691, 2730)


@pytest.mark.parametrize("n", range(1, 13))
def test_duflo_determinant(n):
    rep = duflo_determinant_check(n)
    assert rep.ok
    assert rep.det == j_series(n)


@pytest.mark.parametrize("n", range(0, 6))
def test_jordan_block_todd(n):
    a = jordan_block(n)
    m = Matrix.from_rows(a, n)
    assert todd_of_nilpotent(m) == todd_matrix_oracle(a)
    if n:
        assert j_of_matrix(m) == Matrix.from_rows(j_matrix_oracle(a), n)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(coeff, min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2)
                                 .map(lambda v: (n, v))))
def test_strictly_triangular_j_matrix(data):
    n, vals = data
    it = iter(vals)
    rows = [[next(it) if j > i else Fraction(0) for j in range(n)] for i in range(n)]
    m = Matrix.from_rows(rows, n)
    assert j_of_matrix(m) == Matrix.from_rows(j_matrix_oracle(rows), n)
    assert todd_of_nilpotent(m) == todd_matrix_oracle(rows)


@settings(max_examples=60, deadline=None)
@given(series(6, 0))
def test_log_inverts_exp(f):
    assert log(exp(f)) == f


@settings(max_examples=60, deadline=None)
@given(series(6, 0), series(6, 0))
def test_exp_is_a_homomorphism(f, g):
    assert exp(f + g) == exp(f) * exp(g)


@settings(max_examples=60, deadline=None)
@given(series(6).filter(lambda u: u[0] != 0))
def test_invert(u):
    assert u * invert(u) == TruncatedSeries.const(1, 6)


@settings(max_examples=40, deadline=None)
@given(series(5), series(5, 0), series(5, 0))
def test_compose_associative(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


def test_exp_matches_closed_form():
    assert exp(TruncatedSeries.x(8)) == exp_series(8)
    assert compose(exp_series(8), TruncatedSeries.x(8)) == exp_series(8)


def test_errors():
    x = TruncatedSeries.x(4)
    with pytest.raises(NonUnit):
        invert(x)
    with pytest.raises(NonUnit):
        log(x + 2)
    with pytest.raises(NonzeroConstantTerm):
        exp(x + 1)
    with pytest.raises(NonzeroConstantTerm):
        compose(x, x + 1)
    with pytest.raises(NotNilpotent):
        j_of_matrix(Matrix.identity(2))
    with pytest.raises(NotNilpotent):
        j_of_matrix(Matrix.from_rows([[0, 1]]))
    with pytest.raises(ValueError):
        j_series(0)
    with pytest.raises(ValueError):
        x + TruncatedSeries.x(3)
