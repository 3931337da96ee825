"""Exact field arithmetic and dense linear algebra.

Two fields are supported: the rationals (``fractions.Fraction``) and the field
of univariate rational functions Q(t) (:class:`RationalFunction`).  Matrices
hold entries from one of them and every routine is exact; there is no
floating point anywhere.

Pivoting is deterministic: leftmost column first, topmost nonzero row within
a column.  Torsion signs and golden test values depend on it.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import FieldMismatch, NonSquare, Singular

__all__ = [
    "Fraction",
    "Poly",
    "RationalFunction",
    "FieldElement",
    "Matrix",
    "T",
    "field_tag",
    "to_field",
    "determinant",
    "row_reduce",
    "rank",
    "kernel_basis",
    "image_basis",
    "solve",
    "inverse",
    "parse_field_element",
    "format_field_element",
    "smith_normal_form",
]


# ---------------------------------------------------------------------------
# univariate polynomials over Q, coefficients stored low degree first


def _trim(coeffs: Iterable[Fraction]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Dense polynomial in ``t`` with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(Fraction(c) for c in coeffs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial has degree -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly(out)

    def scale(self, c) -> "Poly":
        return Poly(x * c for x in self.coeffs)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lead()
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        while len(rem) - 1 >= dq and rem:
            shift = len(rem) - 1 - dq
            factor = rem[-1] / lead
            quot[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            rem = list(_trim(rem))
        return Poly(quot), Poly(rem)

    def monic(self) -> "Poly":
        return self.scale(1 / self.lead()) if self.coeffs else self

    def evaluate(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def format(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("*t" if k == 1 else f"*t^{k}")
            if not out:
                out = f"{c}{mono}"
            elif c < 0:
                out += f" - {-c}{mono}"
            else:
                out += f" + {c}{mono}"
        return out


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (Euclid); gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


# ---------------------------------------------------------------------------
# rational functions


class RationalFunction:
    """Element of Q(t) kept as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly(num)
        den = Poly((1,)) if den is None else (den if isinstance(den, Poly) else Poly(den))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly((1,))
            return
        g = poly_gcd(num, den) if den.degree > 0 else den
        if g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.lead()
        self.num = num.scale(1 / lead)
        self.den = den.scale(1 / lead)

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(Poly.const(x))
        raise FieldMismatch(f"cannot coerce {type(x).__name__} into Q(t)")

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant(self) -> Fraction:
        return self.num.coeffs[0] if self.num.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash((self.num, self.den))

    def __add__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except FieldMismatch:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) + (-self)

    def __mul__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except FieldMismatch:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * RationalFunction.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = RationalFunction(Poly((1,)))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def evaluate(self, x) -> Fraction:
        d = self.den.evaluate(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at t = {x}")
        return self.num.evaluate(x) / d

    def substitute_inverse(self) -> "RationalFunction":
        """The rational function f(1/t)."""
        n = max(self.num.degree, self.den.degree, 0)
        # f(1/t) = (t^n num(1/t)) / (t^n den(1/t))
        num = Poly(reversed(self.num.coeffs + (Fraction(0),) * (n - self.num.degree)))
        den = Poly(reversed(self.den.coeffs + (Fraction(0),) * (n - self.den.degree)))
        return RationalFunction(num, den)

    def __repr__(self):
        return f"RationalFunction({format_field_element(self)!r})"

    __str__ = lambda self: format_field_element(self)  # noqa: E731


T = RationalFunction(Poly((0, 1)))
FieldElement = Union[Fraction, RationalFunction]


def field_tag(x) -> str:
    return "Q(t)" if isinstance(x, RationalFunction) else "Q"


def to_field(x, tag: str = "Q") -> FieldElement:
    if tag == "Q(t)":
        return RationalFunction.coerce(x if not isinstance(x, float) else Fraction(x))
    if isinstance(x, RationalFunction):
        if not x.is_constant():
            raise FieldMismatch(f"{x} is not a rational number")
        return x.constant()
    if isinstance(x, float):
        raise FieldMismatch("floating point values are not accepted")
    return Fraction(x)


def _inv(x):
    if isinstance(x, RationalFunction):
        return x.inverse()
    return 1 / Fraction(x)


# ---------------------------------------------------------------------------
# serialization of scalars


_TERM = re.compile(r"^\s*([+-]?\s*[0-9/]*)\s*(\*?\s*t(\s*\^\s*(\d+))?)?\s*$")


def _parse_poly(text: str) -> Poly:
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    text = re.sub(r"(?<=[^\s^*(])\s*-\s*", " + -", text)
    coeffs: dict[int, Fraction] = {}
    for raw in text.split("+"):
        raw = raw.strip()
        if not raw:
            continue
        m = _TERM.match(raw)
        if not m:
            raise ValueError(f"bad polynomial term {raw!r}")
        coef_s = m.group(1).replace(" ", "")
        has_t = m.group(2) is not None
        if coef_s in ("", "+"):
            coef = Fraction(1)
        elif coef_s == "-":
            coef = Fraction(-1)
        else:
            coef = Fraction(coef_s)
        if not has_t and coef_s in ("", "+", "-"):
            raise ValueError(f"bad polynomial term {raw!r}")
        power = int(m.group(4)) if m.group(4) else (1 if has_t else 0)
        coeffs[power] = coeffs.get(power, Fraction(0)) + coef
    top = max(coeffs) if coeffs else -1
    return Poly(coeffs.get(k, 0) for k in range(top + 1))


def parse_field_element(text: str, tag: str | None = None) -> FieldElement:
    """Parse ``"p/q"`` or ``"(poly)/(poly)"``/``"poly"`` in ``t``."""
    if not isinstance(text, str):
        if isinstance(text, bool) or not isinstance(text, int):
            raise ValueError(f"expected an integer or string, got {text!r}")
        return to_field(text, tag or "Q")
    s = text.strip()
    if "t" not in s:
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", s.replace(" ", "")):
            raise ValueError(f"bad rational {text!r}")
        return to_field(Fraction(s.replace(" ", "")), tag or "Q")
    m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", s)
    if m:
        return RationalFunction(_parse_poly(m.group(1)), _parse_poly(m.group(2)))
    return RationalFunction(_parse_poly(s))


def format_field_element(x: FieldElement) -> str:
    if isinstance(x, RationalFunction):
        return f"({x.num.format()})/({x.den.format()})"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable dense matrix with exact entries, stored row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.data = tuple(
            e if isinstance(e, RationalFunction) else Fraction(e) for e in entries
        )

    # constructors -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int, one=1) -> "Matrix":
        return cls(n, n, [one if i == j else 0 * one for i in range(n) for j in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        r = sum(b.rows for b in blocks)
        c = sum(b.cols for b in blocks)
        out = [[0] * c for _ in range(r)]
        i0 = j0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[i0 + i][j0 + j] = b[i, j]
            i0 += b.rows
            j0 += b.cols
        return cls(r, c, [x for row in out for x in row])

    # access -----------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.data[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.data[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def select_columns(self, cols: Sequence[int]) -> "Matrix":
        return self.submatrix(range(self.rows), cols)

    def hstack(self, *others: "Matrix") -> "Matrix":
        mats = (self,) + others
        rows = self.rows
        if any(m.rows != rows for m in mats):
            raise ValueError("hstack needs equal row counts")
        return Matrix.from_rows(
            [[x for m in mats for x in m.row(i)] for i in range(rows)],
            sum(m.cols for m in mats),
        )

    def vstack(self, *others: "Matrix") -> "Matrix":
        mats = (self,) + others
        cols = self.cols
        if any(m.cols != cols for m in mats):
            raise ValueError("vstack needs equal column counts")
        return Matrix(sum(m.rows for m in mats), cols, [x for m in mats for x in m.data])

    # arithmetic -------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and all(a == b for a, b in zip(self.data, other.data))
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.data])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        return Matrix(self.rows, self.cols, [c * a for a in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        out = []
        for i in range(n):
            row = self.data[i * m:(i + 1) * m]
            for j in range(p):
                acc = 0
                for k in range(m):
                    a = row[k]
                    if a != 0:
                        b = other.data[k * p + j]
                        if b != 0:
                            acc = acc + a * b
                out.append(acc)
        return Matrix(n, p, out)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.data)

    def map(self, f) -> "Matrix":
        return Matrix(self.rows, self.cols, [f(a) for a in self.data])

    def field(self) -> str:
        return "Q(t)" if any(isinstance(a, RationalFunction) for a in self.data) else "Q"

    def __repr__(self):
        return f"Matrix({[[format_field_element(x) for x in r] for r in self.to_rows()]})"


# ---------------------------------------------------------------------------
# elimination


def _one_like(m: Matrix):
    return RationalFunction.coerce(1) if m.field() == "Q(t)" else Fraction(1)


def row_reduce(m: Matrix, column_order: Sequence[int] | None = None):
    """Gauss-Jordan elimination.

    Returns ``(rref, transform, pivots)`` with ``transform @ m == rref``.
    Columns are scanned in ``column_order`` (default left to right); within a
    column the topmost usable row becomes the pivot row.
    """
    rows, cols = m.rows, m.cols
    a = m.to_rows()
    one = _one_like(m)
    t = [[one if i == j else 0 for j in range(rows)] for i in range(rows)]
    pivots: list[int] = []
    r = 0
    order = range(cols) if column_order is None else column_order
    for c in order:
        if r >= rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
            t[p], t[r] = t[r], t[p]
        inv = _inv(a[r][c])
        a[r] = _scaled(a[r], inv)
        t[r] = _scaled(t[r], inv)
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = _axpy(a[i], f, a[r])
                t[i] = _axpy(t[i], f, t[r])
        pivots.append(c)
        r += 1
    return Matrix.from_rows(a, cols), Matrix.from_rows(t, rows), pivots


def _scaled(row, k):
    return [x * k if x != 0 else x for x in row]


def _axpy(row, f, pivot_row):
    # row - f * pivot_row, skipping zero entries of the pivot row
    return [x - f * y if y != 0 else x for x, y in zip(row, pivot_row)]


def rank(m: Matrix) -> int:
    """Rank by forward elimination (no transform is tracked)."""
    a = m.to_rows()
    rows, r = m.rows, 0
    for c in range(m.cols):
        if r >= rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[p], a[r] = a[r], a[p]
        inv = _inv(a[r][c])
        for i in range(r + 1, rows):
            if a[i][c] != 0:
                a[i] = _axpy(a[i], a[i][c] * inv, a[r])
        r += 1
    return r


def determinant(m: Matrix):
    """Exact determinant; the empty matrix has determinant 1."""
    if m.rows != m.cols:
        raise NonSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    one = _one_like(m)
    if n == 0:
        return one
    a = m.to_rows()
    det = one
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return 0 * one
        if p != c:
            a[p], a[c] = a[c], a[p]
            det = -det
        piv = a[c][c]
        det = det * piv
        inv = _inv(piv)
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def kernel_basis(m: Matrix) -> Matrix:
    """Columns spanning the null space, one per free column (value 1 there)."""
    rref, _, pivots = row_reduce(m)
    one = _one_like(m)
    free = [c for c in range(m.cols) if c not in pivots]
    vecs = []
    for f in free:
        v = [0 * one] * m.cols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -rref[i, f]
        vecs.append(v)
    return Matrix.from_columns(vecs, m.cols) if vecs else Matrix.zeros(m.cols, 0)


def image_basis(m: Matrix, rightmost_first: bool = False) -> tuple[Matrix, Matrix]:
    """Basis of the column space made of pivot columns, with preimages.

    The basis columns are columns of ``m`` itself and the preimages are the
    matching unit vectors, so ``m @ preimages == basis``.  With
    ``rightmost_first`` the pivot search runs from the last column instead.
    """
    order = list(range(m.cols))
    if rightmost_first:
        order.reverse()
    _, _, pivots = row_reduce(m, order)
    pivots = sorted(pivots) if not rightmost_first else pivots
    one = _one_like(m)
    basis = m.select_columns(pivots)
    pre = Matrix.from_columns(
        [[one if k == p else 0 * one for k in range(m.cols)] for p in pivots], m.cols
    ) if pivots else Matrix.zeros(m.cols, 0)
    return basis, pre


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """One solution ``x`` of ``a @ x == b`` or ``None`` when inconsistent."""
    aug = a.hstack(b)
    rref, _, pivots = row_reduce(aug, list(range(a.cols)))
    one = _one_like(aug)
    # inconsistent if a zero row of the coefficient part has a nonzero rhs
    r = len(pivots)
    for i in range(r, a.rows):
        if any(rref[i, a.cols + j] != 0 for j in range(b.cols)):
            return None
    x = [[0 * one] * b.cols for _ in range(a.cols)]
    for i, p in enumerate(pivots):
        for j in range(b.cols):
            x[p][j] = rref[i, a.cols + j]
    return Matrix.from_rows(x, b.cols)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise NonSquare(f"inverse of a {m.rows}x{m.cols} matrix")
    rref, t, pivots = row_reduce(m)
    if len(pivots) != m.rows:
        raise Singular("matrix is not invertible")
    return t


# ---------------------------------------------------------------------------
# Smith normal form over the integers


def smith_normal_form(a: Sequence[Sequence[int]]):
    """Return ``(D, U, V)`` with ``U @ A @ V == D`` over Z.

    ``D`` is diagonal with nonnegative entries, each dividing the next;
    ``U`` and ``V`` are unimodular.  Matrices are plain lists of int lists.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = [list(map(int, row)) for row in a]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row dst += k * row src
        d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):
        for row in d:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for s in range(min(m, n)):
        while True:
            nz = [(abs(d[i][j]), i, j) for i in range(s, m) for j in range(s, n) if d[i][j]]
            if not nz:
                break
            _, pi, pj = min(nz)
            swap_rows(s, pi)
            swap_cols(s, pj)
            done = True
            for i in range(s + 1, m):
                q = d[i][s] // d[s][s]
                if q:
                    add_row(s, i, -q)
                if d[i][s]:
                    done = False
            for j in range(s + 1, n):
                q = d[s][j] // d[s][s]
                if q:
                    add_col(s, j, -q)
                if d[s][j]:
                    done = False
            if not done:
                continue
            # divisibility of the remaining block
            bad = next(
                ((i, j) for i in range(s + 1, m) for j in range(s + 1, n) if d[i][j] % d[s][s]),
                None,
            )
            if bad is None:
                break
            add_row(bad[0], s, 1)
        if s < m and s < n and d[s][s] < 0:
            d[s] = [-x for x in d[s]]
            u[s] = [-x for x in u[s]]
    return d, u, v
