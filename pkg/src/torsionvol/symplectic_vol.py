"""Divided-power volumes of symplectic spaces.

The volume omega^n / n! of a 2n-dimensional symplectic space equals the
Pfaffian of its Gram matrix, computed here by expansion along the first row.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import Degenerate, NotAlternating, NonSquare, Singular
from .exact_algebra import Matrix, determinant, to_field
from .graded_det import gl_star_braid


@dataclass(frozen=True)
class SymplecticSpace:
    omega: Matrix

    def __post_init__(self):
        check_alternating(self.omega)
        if determinant(self.omega) == 0:
            raise Degenerate("symplectic form is degenerate")

    @property
    def dim(self) -> int:
        return self.omega.rows


def check_alternating(m: Matrix):
    if m.rows != m.cols:
        raise NonSquare("form must be square")
    n = m.rows
    for i in range(n):
        if m[i, i] != 0:
            raise NotAlternating(f"diagonal entry {i} is nonzero")
        for j in range(i + 1, n):
            if m[i, j] != -m[j, i]:
                raise NotAlternating(f"entries ({i},{j}) and ({j},{i}) are not opposite")


def pfaffian(m: Matrix):
    """Pfaffian of an alternating matrix (0 for odd size, 1 for 0 x 0)."""
    check_alternating(m)
    n = m.rows
    one = to_field(1, m.field())
    if n % 2:
        return 0 * one
    data = m.data

    @lru_cache(maxsize=None)
    def pf(idx: tuple):
        if not idx:
            return one
        i = idx[0]
        total = 0 * one
        for k in range(1, len(idx)):
            a = data[i * n + idx[k]]
            if a == 0:
                continue
            rest = idx[1:k] + idx[k + 1:]
            term = a * pf(rest)
            total = total + term if k % 2 == 1 else total - term
        return total

    return pf(tuple(range(n)))


def symplectic_volume(s: SymplecticSpace):
    return pfaffian(s.omega)


def volume_squares_canonically(s: SymplecticSpace) -> bool:
    return symplectic_volume(s) ** 2 == determinant(s.omega)


def volume_additivity(s1: SymplecticSpace, s2: SymplecticSpace) -> bool:
    total = SymplecticSpace(Matrix.block_diag([s1.omega, s2.omega]))
    return symplectic_volume(total) == symplectic_volume(s1) * symplectic_volume(s2)


def kron(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    for i in range(a.rows):
        for p in range(b.rows):
            rows.append([a[i, j] * b[p, q] for j in range(a.cols) for q in range(b.cols)])
    return Matrix.from_rows(rows, a.cols * b.cols)


def transpose_permutation(m: int, n: int) -> list:
    """Reindexing from w-major order (w_j (x) v_i) to v-major order (v_i (x) w_j)."""
    return [i * n + j for j in range(n) for i in range(m)]


def ortho_symp_tensor_volume(gram: Matrix, omega: Matrix, order: str = "v-major") -> bool:
    """Check Pf(gram (x) omega) = det(gram)^(dim W/2) Pf(omega)^(dim V) * sign.

    In v-major order (basis v_i (x) w_j, i outer) the sign is +1.  In
    w-major order the basis is reshuffled by the transposition of an
    m x 2n grid, whose sign is the (x)* braiding sign of degrees m and 2n.
    """
    if gram != gram.T or determinant(gram) == 0:
        raise Singular("gram must be symmetric and invertible")
    SymplecticSpace(omega)
    m, w = gram.rows, omega.rows
    form = kron(gram, omega)
    expected = determinant(gram) ** (w // 2) * pfaffian(omega) ** m
    if order == "w-major":
        p = transpose_permutation(m, w)
        form = form.submatrix(p, p)
        expected = expected * gl_star_braid(m, w)
    elif order != "v-major":
        raise ValueError("order must be 'v-major' or 'w-major'")
    return pfaffian(form) == expected


def dual_pairing_det(b: Matrix):
    """Induced map on determinant lines for a pairing with matrix ``b``."""
    if b.rows != b.cols:
        raise NonSquare("pairing matrix must be square")
    d = determinant(b)
    if d == 0:
        raise Singular("pairing is degenerate")
    return d


def standard_symplectic(n: int) -> Matrix:
    blk = Matrix.from_rows([[0, 1], [-1, 0]])
    return Matrix.block_diag([blk] * n) if n else Matrix.zeros(0, 0)
