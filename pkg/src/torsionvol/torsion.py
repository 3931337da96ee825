"""Refined torsion of an equivariant complex with local coefficients.

For a specialized complex C with homology basis h the value is

    (-1)**N(C) * euler_iso(C, h) * sign(tau_0)**n * o**n

where n is the rank of the local system, o = +-1 the homology orientation
and tau_0 the same expression for trivial rational coefficients measured
against the deterministic real homology basis.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

from .cw_complex import (
    IDENTITY_FAMILY,
    EquivariantCellComplex,
    FundamentalFamily,
    H1Class,
    h1,
    word_mul,
)
from .errors import NotAcyclic, NotAcyclicAndNoBasis
from .exact_algebra import Fraction, Matrix, inverse
from .graded_det import (
    BasedComplex,
    GradedBasis,
    direct_sum,
    direct_sum_basis,
    direct_sum_sign,
    euler_iso,
    homology,
    homology_dims,
    sign,
    sign_refinement_exponent,
)
from .local_systems import (
    LocalSystem,
    direct_sum_systems,
    dual,
    interleave_permutation,
    permutation_sign,
    specialize,
    trivial_system,
)

SIGN_CONVENTION = "det[d(b_i+1)|h_i|b_i]^(-1)^(i+1); (-1)^N(C) with N=sum alpha_i*beta_i; sign(tau_0)^rank"
BASIS_ORDER = "cell-major, fiber-minor; blocks psi(a)=sum m_w rho(w)^T"


@dataclass(frozen=True)
class RefinedTorsion:
    value: object
    homology_basis: GradedBasis
    euler: FundamentalFamily
    orientation: int
    rank: int = 1
    conventions: str = SIGN_CONVENTION

    def __post_init__(self):
        if self.value == 0:
            raise ValueError("torsion is never zero")
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")


def is_acyclic(b: BasedComplex) -> bool:
    return not any(homology_dims(b).values())


def real_reference_sign(c: EquivariantCellComplex) -> int:
    """sign(tau_0): refined torsion of trivial rational coefficients, deterministic basis."""
    triv = specialize(c, trivial_system(c.presentation))
    h = homology(triv)
    v = euler_iso(triv, h) * sign(sign_refinement_exponent(triv, homology_dims(triv)))
    return 1 if v > 0 else -1


def refined_torsion(
    c: EquivariantCellComplex,
    rho: LocalSystem,
    euler: FundamentalFamily = IDENTITY_FAMILY,
    orientation: int = 1,
    h: GradedBasis | str | None = None,
) -> RefinedTorsion:
    """Torsion value relative to ``h``.

    ``h`` may be a GradedBasis, ``"deterministic"`` (use :func:`homology`),
    or None, in which case the complex must be acyclic.
    """
    b = specialize(c, rho, euler)
    if h is None:
        if not is_acyclic(b):
            raise NotAcyclicAndNoBasis("complex has homology; pass a homology basis")
        h = GradedBasis({})
    elif h == "deterministic":
        h = homology(b)
    raw = euler_iso(b, h)
    n = rho.dimension
    s = sign(sign_refinement_exponent(b, homology_dims(b)))
    s *= (real_reference_sign(c) * orientation) ** n
    return RefinedTorsion(raw * s, h, euler, orientation, n)


def shift_matrices(c: EquivariantCellComplex, rho: LocalSystem, fam: FundamentalFamily) -> dict:
    """P_d = blockdiag(rho(g_s)^T) over the d-cells; specialize(fam) = P^-1 D P."""
    out = {}
    for d, ids in enumerate(c.cells):
        out[d] = Matrix.block_diag([rho.of_word(fam.of(s)).T for s in ids]) if ids else Matrix.zeros(0, 0)
    return out


def transport_basis(
    c: EquivariantCellComplex, rho: LocalSystem, e1: FundamentalFamily, e2: FundamentalFamily, h: GradedBasis
) -> GradedBasis:
    """Homology basis for family e2 corresponding to ``h`` for family e1."""
    p1 = shift_matrices(c, rho, e1)
    p2 = shift_matrices(c, rho, e2)
    out = {}
    for i, m in h.vectors.items():
        if m.cols == 0 or i not in p1:
            out[i] = m
        else:
            out[i] = inverse(p2[i]) @ p1[i] @ m
    return GradedBasis(out)


def holonomy(c: EquivariantCellComplex, rho: LocalSystem, delta: H1Class):
    """<det rho, delta> evaluated on a word representative of ``delta``."""
    w = delta.group.representative_word(delta)
    return rho.det_of_word(w)


def change_euler(
    c: EquivariantCellComplex, tau: RefinedTorsion, delta: H1Class, rho: LocalSystem
) -> RefinedTorsion:
    """Move the Euler structure by ``delta``; value scales by the holonomy.

    The new structure shifts the basepoint lift by a representative word of
    ``delta`` on top of the old family, so family_diff(old, new) = delta.
    """
    w = delta.group.representative_word(delta)
    shift = dict(tau.euler.shift)
    shift[c.basepoint] = word_mul(w, tau.euler.of(c.basepoint))
    new = FundamentalFamily(shift)
    basis = transport_basis(c, rho, tau.euler, new, tau.homology_basis)
    return replace(tau, value=tau.value * holonomy(c, rho, delta), euler=new, homology_basis=basis)


def change_orientation(tau: RefinedTorsion) -> RefinedTorsion:
    """Flip the homology orientation; the value changes by (-1)**rank."""
    return replace(tau, value=tau.value * sign(tau.rank), orientation=-tau.orientation)


@dataclass
class DualityReport:
    tau: RefinedTorsion
    tau_dual: RefinedTorsion
    equal: bool
    ratio: object


def duality_check(c, rho: LocalSystem, euler=IDENTITY_FAMILY, orientation: int = 1) -> DualityReport:
    b = specialize(c, rho, euler)
    if not is_acyclic(b):
        raise NotAcyclic("duality check needs acyclic coefficients")
    t1 = refined_torsion(c, rho, euler, orientation)
    t2 = refined_torsion(c, dual(rho), euler, orientation)
    return DualityReport(t1, t2, t1.value == t2.value, t2.value / t1.value)


@dataclass
class MultiplicativityReport:
    tau_sum: object
    product: object
    observed_sign: int | None
    predicted_sign: int
    parts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.observed_sign == self.predicted_sign


def _interleave_basis(bsum: BasedComplex, perms: dict, h: GradedBasis) -> GradedBasis:
    out = {}
    for i, m in h.vectors.items():
        p = perms.get(i)
        out[i] = m.submatrix(p, range(m.cols)) if p is not None else m
    return GradedBasis(out)


def multiplicativity_check(
    c: EquivariantCellComplex,
    rho1: LocalSystem,
    rho2: LocalSystem,
    euler=IDENTITY_FAMILY,
    orientation: int = 1,
    h1: GradedBasis | None = None,
    h2: GradedBasis | None = None,
) -> MultiplicativityReport:
    """Compare tau(rho1 + rho2) with tau(rho1) * tau(rho2).

    The predicted ratio is the product of three signs: the interleaving of
    the two fiber bases per cell, the Koszul shuffle of the torsion blocks,
    and the change of the sign-refinement exponent N.
    """
    b1, b2 = specialize(c, rho1, euler), specialize(c, rho2, euler)
    h1 = h1 if h1 is not None else (GradedBasis({}) if is_acyclic(b1) else homology(b1))
    h2 = h2 if h2 is not None else (GradedBasis({}) if is_acyclic(b2) else homology(b2))
    rs = direct_sum_systems(rho1, rho2)
    bs = specialize(c, rs, euler)
    block = direct_sum(b1, b2)
    perms = {
        d: interleave_permutation(len(ids), rho1.dimension, rho2.dimension) for d, ids in enumerate(c.cells)
    }
    hs = _interleave_basis(bs, perms, direct_sum_basis(b1, h1, b2, h2))
    t = refined_torsion(c, rs, euler, orientation, hs if not hs.is_empty() else None)
    t1 = refined_torsion(c, rho1, euler, orientation, h1 if not h1.is_empty() else None)
    t2 = refined_torsion(c, rho2, euler, orientation, h2 if not h2.is_empty() else None)
    product = t1.value * t2.value
    ratio = t.value / product
    observed = 1 if ratio == 1 else (-1 if ratio == -1 else None)

    s_perm = 1
    for d in perms:
        s_perm *= permutation_sign(perms[d])
    s_koszul = direct_sum_sign(b1, h1, b2, h2)
    dims = homology_dims(bs)
    s_n = sign(
        sign_refinement_exponent(bs, dims)
        + sign_refinement_exponent(b1, homology_dims(b1))
        + sign_refinement_exponent(b2, homology_dims(b2))
    )
    # block sum and interleaved sum differ only by the basis permutation
    assert block.ranks == bs.ranks
    predicted = s_perm * s_koszul * s_n
    return MultiplicativityReport(
        t.value, product, observed, predicted,
        {"interleave": s_perm, "koszul": s_koszul, "refinement": s_n},
    )


def frac_sign(x) -> int:
    x = Fraction(x)
    return (x > 0) - (x < 0)


def euler_change_law(c, rho: LocalSystem, e1: FundamentalFamily, e2: FundamentalFamily, orientation=1, h=None):
    """(tau(e2), tau(e1) * <det rho, family_diff(e1, e2)>) for comparison."""
    b = specialize(c, rho, e1)
    if h is None and not is_acyclic(b):
        h = homology(b)
    t1 = refined_torsion(c, rho, e1, orientation, h)
    h2 = transport_basis(c, rho, e1, e2, h) if h is not None else None
    t2 = refined_torsion(c, rho, e2, orientation, h2)
    from .cw_complex import family_diff

    return t2.value, t1.value * holonomy(c, rho, family_diff(c, e1, e2))


__all__ = [
    "RefinedTorsion",
    "refined_torsion",
    "change_euler",
    "change_orientation",
    "duality_check",
    "multiplicativity_check",
    "transport_basis",
    "holonomy",
    "real_reference_sign",
    "is_acyclic",
    "euler_change_law",
    "SIGN_CONVENTION",
    "BASIS_ORDER",
    "h1",
]
