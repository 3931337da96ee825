"""Graded determinant lines and the Euler isomorphism of based complexes.

Lines are always trivialized, so an element of a graded line is just a
nonzero scalar together with an integer degree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate

from .errors import FieldMismatch, NotAHomologyBasis
from .exact_algebra import (
    FieldElement,
    Fraction,
    Matrix,
    RationalFunction,
    determinant,
    field_tag,
    image_basis,
    kernel_basis,
    rank,
)


# ---------------------------------------------------------------------------
# the semiring of graded lines


@dataclass(frozen=True)
class GradedLineElement:
    scalar: FieldElement
    degree: int

    def __post_init__(self):
        if self.scalar == 0:
            raise ValueError("graded line element needs a nonzero scalar")
        if not isinstance(self.scalar, RationalFunction):
            object.__setattr__(self, "scalar", Fraction(self.scalar))

    @property
    def tag(self) -> str:
        return field_tag(self.scalar)


def _same_field(a: GradedLineElement, b: GradedLineElement):
    if a.tag != b.tag:
        raise FieldMismatch(f"cannot combine {a.tag} with {b.tag}")


def sign(parity: int) -> int:
    return -1 if parity % 2 else 1


def gl_unit() -> GradedLineElement:
    return GradedLineElement(Fraction(1), 0)


def gl_star_unit() -> GradedLineElement:
    return GradedLineElement(Fraction(1), 1)


def gl_tensor(a: GradedLineElement, b: GradedLineElement) -> GradedLineElement:
    _same_field(a, b)
    return GradedLineElement(a.scalar * b.scalar, a.degree + b.degree)


def gl_braid(a, b) -> int:
    """Sign of the symmetry a (x) b -> b (x) a.  Accepts elements or degrees."""
    n1 = a.degree if isinstance(a, GradedLineElement) else a
    n2 = b.degree if isinstance(b, GradedLineElement) else b
    return sign(n1 * n2)


def gl_star_tensor(a: GradedLineElement, b: GradedLineElement) -> GradedLineElement:
    _same_field(a, b)
    return GradedLineElement(a.scalar ** b.degree * b.scalar ** a.degree, a.degree * b.degree)


def gl_star_braid(a, b) -> int:
    n1 = a.degree if isinstance(a, GradedLineElement) else a
    n2 = b.degree if isinstance(b, GradedLineElement) else b
    return sign((n1 * (n1 - 1) // 2) * (n2 * (n2 - 1) // 2))


def left_dist_sign(n1: int, n2: int, n3: int) -> int:
    """Sign attached to a (x)* (b (x) c) -> (a (x)* b) (x) (a (x)* c)."""
    return sign(n2 * n3 * (n1 * (n1 - 1) // 2))


def right_dist_sign(n1: int, n2: int, n3: int) -> int:
    return 1


# ---------------------------------------------------------------------------
# based complexes


@dataclass(frozen=True)
class BasedComplex:
    """Chain complex of based vector spaces C_lo, ..., C_hi.

    ``diffs[k]`` is the differential C_{lo+k+1} -> C_{lo+k}.
    """

    ranks: tuple
    diffs: tuple
    lo: int = 0

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(self.ranks))
        object.__setattr__(self, "diffs", tuple(self.diffs))
        if len(self.diffs) != max(len(self.ranks) - 1, 0):
            raise ValueError("need one differential between each pair of adjacent degrees")
        for k, d in enumerate(self.diffs):
            if d.shape != (self.ranks[k], self.ranks[k + 1]):
                raise ValueError(
                    f"differential out of degree {self.lo + k + 1} has shape {d.shape}, "
                    f"expected {(self.ranks[k], self.ranks[k + 1])}"
                )
        for k in range(len(self.diffs) - 1):
            if not (self.diffs[k] @ self.diffs[k + 1]).is_zero():
                raise ValueError(f"d o d != 0 at degree {self.lo + k + 2}")

    @property
    def hi(self) -> int:
        return self.lo + len(self.ranks) - 1

    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def rank(self, i: int) -> int:
        if self.lo <= i <= self.hi:
            return self.ranks[i - self.lo]
        return 0

    def d(self, i: int) -> Matrix:
        """The differential out of degree i (C_i -> C_{i-1})."""
        if self.lo < i <= self.hi:
            return self.diffs[i - self.lo - 1]
        return Matrix.zeros(self.rank(i - 1), self.rank(i))

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * self.rank(i) for i in self.degrees())

    def field(self) -> str:
        return "Q(t)" if any(d.field() == "Q(t)" for d in self.diffs) else "Q"


def direct_sum(c1: BasedComplex, c2: BasedComplex) -> BasedComplex:
    """Block direct sum; in each degree the basis of c1 comes first."""
    lo = min(c1.lo, c2.lo)
    hi = max(c1.hi, c2.hi)
    ranks = [c1.rank(i) + c2.rank(i) for i in range(lo, hi + 1)]
    diffs = [Matrix.block_diag([c1.d(i), c2.d(i)]) for i in range(lo + 1, hi + 1)]
    return BasedComplex(ranks, diffs, lo)


def permute_complex(c: BasedComplex, perms: dict) -> BasedComplex:
    """Reorder bases: new basis vector k of degree i is old vector perms[i][k]."""
    def p(i):
        return perms.get(i, list(range(c.rank(i))))
    diffs = [c.d(i).submatrix(p(i - 1), p(i)) for i in range(c.lo + 1, c.hi + 1)]
    return BasedComplex(c.ranks, diffs, c.lo)


@dataclass(frozen=True)
class GradedBasis:
    """Per-degree homology representatives, stored as column matrices."""

    vectors: dict = field(default_factory=dict)

    def get(self, c: BasedComplex, i: int) -> Matrix:
        m = self.vectors.get(i)
        return m if m is not None else Matrix.zeros(c.rank(i), 0)

    def dims(self) -> dict:
        return {i: m.cols for i, m in sorted(self.vectors.items()) if m.cols}

    def is_empty(self) -> bool:
        return all(m.cols == 0 for m in self.vectors.values())

    def transform(self, i: int, m: Matrix) -> "GradedBasis":
        v = dict(self.vectors)
        if i in v:
            v[i] = m @ v[i]
        return GradedBasis(v)


def homology_dims(c: BasedComplex) -> dict:
    dims = {}
    for i in c.degrees():
        dims[i] = c.rank(i) - rank(c.d(i)) - rank(c.d(i + 1))
    return dims


def homology(c: BasedComplex) -> GradedBasis:
    """Deterministic homology basis.

    Cycle representatives are kernel basis vectors (free-column rule), kept
    greedily whenever they are independent of the boundaries and of the
    vectors already kept.
    """
    out = {}
    for i in c.degrees():
        z = kernel_basis(c.d(i))
        bnd, _ = image_basis(c.d(i + 1))
        picked: list = []
        current = rank(bnd)
        for k in range(z.cols):
            trial = bnd.hstack(Matrix.from_columns(picked + [z.column(k)], c.rank(i)))
            r = rank(trial)
            if r > current:
                picked.append(z.column(k))
                current = r
        out[i] = Matrix.from_columns(picked, c.rank(i)) if picked else Matrix.zeros(c.rank(i), 0)
    return GradedBasis(out)


def check_homology_basis(c: BasedComplex, h: GradedBasis):
    dims = homology_dims(c)
    for i in set(h.vectors) - set(c.degrees()):
        if h.vectors[i].cols:
            raise NotAHomologyBasis(f"vectors given in degree {i} outside the complex")
    for i in c.degrees():
        v = h.get(c, i)
        if v.rows != c.rank(i):
            raise NotAHomologyBasis(f"degree {i}: vectors have length {v.rows}, expected {c.rank(i)}")
        if v.cols != dims[i]:
            raise NotAHomologyBasis(f"degree {i}: {v.cols} vectors given, homology has dimension {dims[i]}")
        if not (c.d(i) @ v).is_zero():
            raise NotAHomologyBasis(f"degree {i}: a basis vector is not a cycle")


# ---------------------------------------------------------------------------
# determinants


def det_gr(c: BasedComplex) -> GradedLineElement:
    one = RationalFunction.coerce(1) if c.field() == "Q(t)" else Fraction(1)
    return GradedLineElement(one, c.euler_characteristic())


def euler_iso_blocks(c: BasedComplex, h: GradedBasis, rightmost_first: bool = False) -> dict:
    """Per degree, the matrix [d(b_{i+1}) | h_i | b_i] used by :func:`euler_iso`."""
    check_homology_basis(c, h)
    pre = {}
    for i in c.degrees():
        _, p = image_basis(c.d(i), rightmost_first=rightmost_first)
        pre[i] = p
    blocks = {}
    for i in c.degrees():
        parts = []
        if i + 1 in pre:
            parts.append(c.d(i + 1) @ pre[i + 1])
        parts.append(h.get(c, i))
        parts.append(pre[i])
        blocks[i] = parts[0].hstack(*parts[1:]) if len(parts) > 1 else parts[0]
    return blocks


def euler_iso(c: BasedComplex, h: GradedBasis, rightmost_first: bool = False) -> FieldElement:
    """Scalar of the Euler isomorphism det C -> det H relative to ``h``.

    Product over degrees of det[d(b_{i+1}) | h_i | b_i] ** (-1)**(i+1), with
    b_i the preimages from :func:`image_basis`.
    """
    one = RationalFunction.coerce(1) if c.field() == "Q(t)" else Fraction(1)
    value = one
    for i, m in euler_iso_blocks(c, h, rightmost_first).items():
        if m.cols != m.rows:
            raise NotAHomologyBasis(f"degree {i}: {m.cols} vectors for a {m.rows}-dimensional space")
        dt = determinant(m)
        if dt == 0:
            raise NotAHomologyBasis(f"degree {i}: vectors are dependent modulo boundaries")
        value = value * dt if (i + 1) % 2 == 0 else value / dt
    return value


def sign_refinement_exponent(c: BasedComplex, dims: dict) -> int:
    """N(C) = sum_i alpha_i beta_i with cumulative chain/homology dimensions."""
    alpha = list(accumulate(c.rank(i) for i in c.degrees()))
    beta = list(accumulate(dims.get(i, 0) for i in c.degrees()))
    return sum(a * b for a, b in zip(alpha, beta))


def direct_sum_basis(c1: BasedComplex, h1: GradedBasis, c2: BasedComplex, h2: GradedBasis) -> GradedBasis:
    out = {}
    for i in range(min(c1.lo, c2.lo), max(c1.hi, c2.hi) + 1):
        out[i] = Matrix.block_diag([h1.get(c1, i), h2.get(c2, i)])
    return GradedBasis(out)


def direct_sum_sign(c1: BasedComplex, h1: GradedBasis, c2: BasedComplex, h2: GradedBasis) -> int:
    """Koszul sign comparing euler_iso of a block sum with the product.

    In degree i the columns [A A' | B B' | C C'] (boundary lifts, homology,
    preimages of both summands) are shuffled into [A B C | A' B' C'].
    """
    s = 1
    for i in range(min(c1.lo, c2.lo), max(c1.hi, c2.hi) + 1):
        a2 = rank(c2.d(i + 1))
        b1, b2 = h1.get(c1, i).cols, h2.get(c2, i).cols
        c1_ = rank(c1.d(i))
        s *= gl_braid(a2, b1 + c1_) * gl_braid(b2, c1_)
    return s
