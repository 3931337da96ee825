"""Matrix representations of presentation groups and specialized complexes."""
from __future__ import annotations

from dataclasses import dataclass

from .cw_complex import (
    IDENTITY_FAMILY,
    EquivariantCellComplex,
    FundamentalFamily,
    GroupPresentation,
    GroupRingElement,
    Word,
    apply_family,
)
from .errors import NotInvariantSubspace, NotOrthogonal, RepresentationInvalid
from .exact_algebra import Matrix, determinant, inverse, rank, solve, to_field
from .graded_det import BasedComplex, GradedBasis, homology, homology_dims  # noqa: F401

__all__ = [
    "LocalSystem",
    "trivial_system",
    "mu2_system",
    "specialize",
    "homology",
    "homology_dims",
    "adjoint",
    "dual",
    "direct_sum_systems",
    "interleave_permutation",
]


@dataclass(frozen=True)
class LocalSystem:
    """Invertible n x n matrices, one per generator, over Q or Q(t).

    ``gram`` (optional) is a symmetric form preserved by every monodromy.
    """

    presentation: GroupPresentation
    monodromy: tuple
    dimension: int
    field: str = "Q"
    gram: Matrix | None = None

    def __post_init__(self):
        mats = tuple(
            m.map(lambda x: to_field(x, self.field)) if isinstance(m, Matrix) else
            Matrix.from_rows([[to_field(x, self.field) for x in row] for row in m], self.dimension)
            for m in self.monodromy
        )
        object.__setattr__(self, "monodromy", mats)
        names = self.presentation.generators
        if len(mats) != len(names):
            raise RepresentationInvalid(f"expected {len(names)} monodromy matrices, got {len(mats)}")
        invs = []
        for name, m in zip(names, mats):
            if m.shape != (self.dimension, self.dimension):
                raise RepresentationInvalid(f"monodromy of {name} has shape {m.shape}")
            if determinant(m) == 0:
                raise RepresentationInvalid(f"monodromy of {name} is not invertible")
            invs.append(inverse(m))
        object.__setattr__(self, "_inv", tuple(invs))
        ident = Matrix.identity(self.dimension, to_field(1, self.field))
        for r in self.presentation.relators:
            if self.of_word(r) != ident:
                raise RepresentationInvalid(
                    f"relator {self.presentation.format(r)} does not evaluate to the identity"
                )
        if self.gram is not None:
            g = self.gram.map(lambda x: to_field(x, self.field))
            object.__setattr__(self, "gram", g)
            if g.shape != (self.dimension, self.dimension) or g != g.T or determinant(g) == 0:
                raise NotOrthogonal("gram matrix must be symmetric and invertible")
            for name, m in zip(names, mats):
                if m.T @ g @ m != g:
                    raise NotOrthogonal(f"monodromy of {name} does not preserve the form")

    def of_word(self, w: Word) -> Matrix:
        out = Matrix.identity(self.dimension, to_field(1, self.field))
        for x in w:
            out = out @ (self.monodromy[x - 1] if x > 0 else self._inv[-x - 1])
        return out

    def det_of_word(self, w: Word):
        one = to_field(1, self.field)
        out = one
        for x in w:
            d = determinant(self.monodromy[abs(x) - 1])
            out = out * d if x > 0 else out / d
        return out

    def psi(self, a: GroupRingElement) -> Matrix:
        """Block of a group ring element: sum of coefficient times rho(word)^T."""
        n = self.dimension
        acc = Matrix.zeros(n, n)
        for w, c in a.terms:
            acc = acc + self.of_word(w).T.scale(c)
        return acc.map(lambda x: to_field(x, self.field))

    def with_gram(self, gram: Matrix) -> "LocalSystem":
        return LocalSystem(self.presentation, self.monodromy, self.dimension, self.field, gram)

    def is_orthogonal(self) -> bool:
        return self.gram is not None


def trivial_system(p: GroupPresentation, n: int = 1, field: str = "Q") -> LocalSystem:
    one = Matrix.identity(n)
    return LocalSystem(p, tuple(one for _ in p.generators), n, field, Matrix.identity(n))


def mu2_system(p: GroupPresentation, signs) -> LocalSystem:
    """Rank one system with monodromy +-1 per generator, orthogonal for <1>."""
    if len(signs) != p.generator_count:
        raise RepresentationInvalid("one sign per generator required")
    if any(s not in (1, -1) for s in signs):
        raise RepresentationInvalid("signs must be +1 or -1")
    mats = tuple(Matrix.from_rows([[s]]) for s in signs)
    return LocalSystem(p, mats, 1, "Q", Matrix.identity(1))


def specialize(
    c: EquivariantCellComplex, rho: LocalSystem, family: FundamentalFamily = IDENTITY_FAMILY
) -> BasedComplex:
    """Cellular complex with coefficients in ``rho``.

    The basis is cell-major (cells in declared order), fiber-minor.  The
    block in row tau, column sigma is psi(a) where a is the coefficient of tau
    in the boundary of sigma, so that composition matches the group ring.
    """
    if rho.presentation.generator_count != c.presentation.generator_count:
        raise RepresentationInvalid("local system and complex use different presentations")
    c = apply_family(c, family)
    n = rho.dimension
    zero = to_field(0, rho.field)
    ranks = [n * len(ids) for ids in c.cells]
    diffs = []
    for d in range(1, len(c.cells)):
        rows = [[zero] * ranks[d] for _ in range(ranks[d - 1])]
        index = {t: k for k, t in enumerate(c.cells[d - 1])}
        for j, s in enumerate(c.cells[d]):
            for t, a in c.boundary_terms(s):
                blk = rho.psi(a)
                i = index[t]
                for p in range(n):
                    for q in range(n):
                        rows[i * n + p][j * n + q] = rows[i * n + p][j * n + q] + blk[p, q]
        diffs.append(Matrix.from_rows(rows, ranks[d]))
    if not ranks:
        return BasedComplex([], [], 0)
    return BasedComplex(ranks, diffs, 0)


def dual(rho: LocalSystem) -> LocalSystem:
    mats = tuple(inverse(m).T for m in rho.monodromy)
    gram = inverse(rho.gram) if rho.gram is not None else None
    return LocalSystem(rho.presentation, mats, rho.dimension, rho.field, gram)


def direct_sum_systems(r1: LocalSystem, r2: LocalSystem) -> LocalSystem:
    if r1.presentation != r2.presentation:
        raise RepresentationInvalid("direct sum needs a common presentation")
    field = "Q(t)" if "Q(t)" in (r1.field, r2.field) else "Q"
    mats = tuple(Matrix.block_diag([a, b]) for a, b in zip(r1.monodromy, r2.monodromy))
    gram = None
    if r1.gram is not None and r2.gram is not None:
        gram = Matrix.block_diag([r1.gram, r2.gram])
    return LocalSystem(r1.presentation, mats, r1.dimension + r2.dimension, field, gram)


def interleave_permutation(cells: int, n1: int, n2: int) -> list:
    """Index map from the cell-major basis of a sum system to the block order.

    Entry k is the position, in [summand-1 basis | summand-2 basis], of the
    k-th cell-major basis vector.
    """
    out = []
    for cell in range(cells):
        out += [cell * n1 + p for p in range(n1)]
        out += [cells * n1 + cell * n2 + q for q in range(n2)]
    return out


def permutation_sign(perm) -> int:
    perm = list(perm)
    s = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def adjoint(rho: LocalSystem, lie_basis) -> LocalSystem:
    """Conjugation action g.xi = rho(g) xi rho(g)^-1 in ``lie_basis`` coordinates."""
    n = rho.dimension
    basis = [b if isinstance(b, Matrix) else Matrix.from_rows(b, n) for b in lie_basis]
    basis = [b.map(lambda x: to_field(x, rho.field)) for b in basis]
    if any(b.shape != (n, n) for b in basis):
        raise NotInvariantSubspace("Lie basis elements must be n x n matrices")
    B = Matrix.from_columns([list(b.data) for b in basis], n * n) if basis else Matrix.zeros(n * n, 0)
    if rank(B) != len(basis):
        raise NotInvariantSubspace("Lie basis elements are linearly dependent")
    mats = []
    for name, g, gi in zip(rho.presentation.generators, rho.monodromy, rho._inv):
        cols = []
        for b in basis:
            conj = g @ b @ gi
            x = solve(B, Matrix(n * n, 1, conj.data))
            if x is None:
                raise NotInvariantSubspace(f"conjugation by the monodromy of {name} leaves the span")
            cols.append(x.column(0))
        m = Matrix.from_columns(cols, len(basis)) if basis else Matrix.zeros(0, 0)
        mats.append(m)
    return LocalSystem(rho.presentation, tuple(mats), len(basis), rho.field)
