"""Truncated power series over Q and the J(x) = x/(exp(x)-1) determinant."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import NonUnit, NonzeroConstantTerm, NotNilpotent
from .exact_algebra import Matrix, determinant


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of x^0 .. x^N; arithmetic keeps N fixed."""

    coeffs: tuple
    order: int

    def __post_init__(self):
        c = [Fraction(x) for x in self.coeffs][: self.order + 1]
        c += [Fraction(0)] * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def const(cls, a, order: int) -> "TruncatedSeries":
        return cls((a,), order)

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        return cls((0, 1), order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else Fraction(0)

    def _same(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries.const(other, self.order)
        if other.order != self.order:
            raise ValueError(f"truncation orders differ ({self.order} vs {other.order})")
        return other

    def __add__(self, other):
        o = self._same(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)), self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-a for a in self.coeffs), self.order)

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        o = self._same(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * o.coeffs[j]
        return TruncatedSeries(tuple(out), n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return invert(self) ** (-k)
        out = TruncatedSeries.const(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other):
        return self * invert(self._same(other))

    def derivative(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(k * self[k] for k in range(1, self.order + 1)), self.order)

    def integral(self) -> "TruncatedSeries":
        return TruncatedSeries((0,) + tuple(self[k] / (k + 1) for k in range(self.order)), self.order)

    def format(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


def invert(u: TruncatedSeries) -> TruncatedSeries:
    if u[0] == 0:
        raise NonUnit("series with zero constant term is not invertible")
    n = u.order
    out = [Fraction(0)] * (n + 1)
    out[0] = 1 / u[0]
    for k in range(1, n + 1):
        out[k] = -sum(u[j] * out[k - j] for j in range(1, k + 1)) / u[0]
    return TruncatedSeries(tuple(out), n)


def exp(f: TruncatedSeries) -> TruncatedSeries:
    """exp of a series with zero constant term (e' = f' e, solved term by term)."""
    if f[0] != 0:
        raise NonzeroConstantTerm("exp needs a vanishing constant term")
    n = f.order
    out = [Fraction(0)] * (n + 1)
    out[0] = Fraction(1)
    for k in range(1, n + 1):
        out[k] = sum(j * f[j] * out[k - j] for j in range(1, k + 1)) / k
    return TruncatedSeries(tuple(out), n)


def log(u: TruncatedSeries) -> TruncatedSeries:
    """log of a series with constant term 1, as the integral of u'/u."""
    if u[0] != 1:
        raise NonUnit("log needs constant term 1")
    return (u.derivative() * invert(u)).integral()


def compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """f(g(x)) for g with zero constant term (Horner)."""
    if g[0] != 0:
        raise NonzeroConstantTerm("inner series must have zero constant term")
    out = TruncatedSeries.const(0, g.order)
    for k in range(f.order, -1, -1):
        out = out * g + f[k]
    return out


def exp_series(order: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(Fraction(1, factorial(k)) for k in range(order + 1)), order)


def j_series(order: int) -> TruncatedSeries:
    """x / (exp(x) - 1) as the inverse of (exp(x) - 1)/x = sum x^k/(k+1)!."""
    if order < 1:
        raise ValueError("order must be at least 1")
    q = TruncatedSeries(tuple(Fraction(1, factorial(k + 1)) for k in range(order + 1)), order)
    return invert(q)


@dataclass
class DufloReport:
    det: TruncatedSeries
    j: TruncatedSeries
    equals_j: bool
    dd_zero: bool
    homotopy_ok: bool
    hh_zero: bool
    inverse_ok: bool

    @property
    def ok(self) -> bool:
        return self.equals_j and self.dd_zero and self.homotopy_ok and self.hh_zero and self.inverse_ok


def _mat_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), start=0 * a[0][0]) for j in range(len(b[0]))]
            for i in range(len(a))]


def _mat_add(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def _is_identity(a, order: int) -> bool:
    one, zero = TruncatedSeries.const(1, order), TruncatedSeries.const(0, order)
    return all(a[i][j] == (one if i == j else zero) for i in range(len(a)) for j in range(len(a[0])))


def duflo_determinant_check(order: int) -> DufloReport:
    """Contractible complex A -d1-> B -d2-> C of rank 1, 2, 1 over k[[x]].

    d1 = (e^x - 1, J^-1)^T, d2 = (-1, x); the nullhomotopy has
    h1 = (1, J(2 - e^x)) on B and h2 = (e^x - 2, J^-1)^T on C.  The odd-to-even
    map d + h : B -> A + C has matrix [[1, J(2 - e^x)], [-1, x]].
    """
    j = j_series(order)
    e = exp_series(order)
    x = TruncatedSeries.x(order)
    one = TruncatedSeries.const(1, order)
    zero = TruncatedSeries.const(0, order)
    jinv = invert(j)
    d1 = [[e - 1], [jinv]]
    d2 = [[-one, x]]
    h1 = [[one, j * (2 - e)]]
    h2 = [[e - 2], [jinv]]
    dd_zero = _mat_mul(d2, d1) == [[zero]]
    homotopy_ok = (
        _is_identity(_mat_mul(h1, d1), order)
        and _is_identity(_mat_add(_mat_mul(d1, h1), _mat_mul(h2, d2)), order)
        and _is_identity(_mat_mul(d2, h2), order)
    )
    hh_zero = _mat_mul(h1, h2) == [[zero]]
    m = [h1[0], d2[0]]
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    dinv = invert(det)
    minv = [[m[1][1] * dinv, -m[0][1] * dinv], [-m[1][0] * dinv, m[0][0] * dinv]]
    inverse_ok = _is_identity(_mat_mul(m, minv), order) and _is_identity(_mat_mul(minv, m), order)
    return DufloReport(det, j, det == j, dd_zero, homotopy_ok, hh_zero, inverse_ok)


def _check_nilpotent(a: Matrix) -> None:
    if a.rows != a.cols:
        raise NotNilpotent("matrix must be square")
    p = a
    for _ in range(a.rows):
        if p.is_zero():
            return
        p = p @ a
    if not p.is_zero():
        raise NotNilpotent("matrix is not nilpotent")


def j_of_matrix(a: Matrix) -> Matrix:
    """J(A) = sum_k j_k A^k, a finite sum for nilpotent A."""
    _check_nilpotent(a)
    n = a.rows
    j = j_series(max(n, 1))
    out = Matrix.zeros(n, n)
    p = Matrix.identity(n)
    for k in range(n + 1):
        out = out + p.scale(j[k])
        p = p @ a
    return out


def todd_of_nilpotent(a: Matrix):
    """det J(A) for nilpotent A."""
    return determinant(j_of_matrix(a)) if a.rows else Fraction(1)
