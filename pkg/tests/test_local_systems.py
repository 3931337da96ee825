from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import perm_sign
from torsionvol.cw_complex import circle_complex, torus_complex, wedge_complex
from torsionvol.errors import NotInvariantSubspace, NotOrthogonal, RepresentationInvalid
from torsionvol.exact_algebra import T, Matrix, inverse
from torsionvol.local_systems import (
    LocalSystem,
    adjoint,
    direct_sum_systems,
    dual,
    interleave_permutation,
    mu2_system,
    permutation_sign,
    specialize,
    trivial_system,
)

SL2 = [
    Matrix.from_rows([[1, 0], [0, -1]]),
    Matrix.from_rows([[0, 1], [0, 0]]),
    Matrix.from_rows([[0, 0], [1, 0]]),
]


def test_relators_are_enforced():
    p = torus_complex().presentation
    x = Matrix.from_rows([[1, 1], [0, 1]])
    y = Matrix.from_rows([[1, 0], [1, 1]])
    with pytest.raises(RepresentationInvalid, match="relator"):
        LocalSystem(p, (x, y), 2)


def test_singular_monodromy_names_generator():
    p = torus_complex().presentation
    with pytest.raises(RepresentationInvalid, match="monodromy of y"):
        LocalSystem(p, (Matrix.identity(2), Matrix.from_rows([[1, 2], [2, 4]])), 2)


def test_gram_must_be_preserved():
    p = circle_complex().presentation
    with pytest.raises(NotOrthogonal):
        LocalSystem(p, (Matrix.from_rows([[2]]),), 1, "Q", Matrix.identity(1))


def test_mu2_validation():
    p = torus_complex().presentation
    with pytest.raises(RepresentationInvalid):
        mu2_system(p, (1,))
    with pytest.raises(RepresentationInvalid):
        mu2_system(p, (1, 2))


def test_specialize_circle_block():
    rho = LocalSystem(circle_complex().presentation, (Matrix.from_rows([[T]]),), 1, "Q(t)")
    b = specialize(circle_complex(), rho)
    assert b.ranks == (1, 1)
    assert b.d(1) == Matrix.from_rows([[T - 1]])


def test_specialize_uses_transposed_blocks():
    a = Matrix.from_rows([[2, 1], [1, 1]])
    rho = LocalSystem(circle_complex().presentation, (a,), 2)
    assert specialize(circle_complex(), rho).d(1) == a.T - Matrix.identity(2)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 3), st.integers(0, 3))
def test_interleave_permutation_is_a_permutation(cells, n1, n2):
    perm = interleave_permutation(cells, n1, n2)
    assert sorted(perm) == list(range(cells * (n1 + n2)))
    assert permutation_sign(perm) == perm_sign(perm)


def test_dual_and_sum():
    p = circle_complex().presentation
    a = LocalSystem(p, (Matrix.from_rows([[2, 1], [1, 1]]),), 2)
    d = dual(a)
    assert d.monodromy[0] == inverse(a.monodromy[0]).T
    s = direct_sum_systems(a, trivial_system(p))
    assert s.dimension == 3
    assert s.monodromy[0] == Matrix.block_diag([a.monodromy[0], Matrix.identity(1)])


def test_adjoint_of_diagonal_point():
    p = torus_complex().presentation
    g = Matrix.from_rows([[2, 0], [0, Fraction(1, 2)]])
    rho = LocalSystem(p, (g, Matrix.identity(2)), 2)
    ad = adjoint(rho, SL2)
    assert ad.monodromy[0] == Matrix.diag([1, 4, Fraction(1, 4)])
    assert ad.monodromy[1] == Matrix.identity(3)


def test_adjoint_needs_invariant_span():
    p = wedge_complex(1).presentation
    rho = LocalSystem(p, (Matrix.from_rows([[2, 1], [1, 1]]),), 2)
    with pytest.raises(NotInvariantSubspace):
        adjoint(rho, SL2[1:2])
    with pytest.raises(NotInvariantSubspace):
        adjoint(rho, [SL2[0], SL2[0]])
