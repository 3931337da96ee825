from collections import Counter
from fractions import Fraction
from itertools import product

import pytest

from oracles import quadratic_refinement_arfs
from torsionvol.cw_complex import word_mul
from torsionvol.errors import NotADimer, NotKasteleyn, NotOrthogonal
from torsionvol.exact_algebra import Matrix
from torsionvol.graded_det import homology
from torsionvol.local_systems import LocalSystem, direct_sum_systems, mu2_system, specialize, trivial_system
from torsionvol.surface_spin import (
    SpinStructure,
    all_spin_structures,
    arf,
    check_spin,
    grid_torus,
    half_euler_from_kasteleyn,
    johnson_q,
    kasteleyn_orientations,
    mod2_intersection,
    pair_mod2,
    point_face_pairing,
    product_sign,
    reference_spin,
    sigma_s,
    sign_vectors,
    spin_diff,
    spin_torsion,
    surface_model,
    symplectic_homology_volume,
)

ROT = Matrix.from_rows([[Fraction(3, 5), Fraction(-4, 5)], [Fraction(4, 5), Fraction(3, 5)]])


@pytest.fixture(scope="module")
def torus():
    return surface_model(1)


@pytest.fixture(scope="module")
def genus2():
    return surface_model(2)


def q_table(model):
    return {s: {a: johnson_q(model, s, a) for a in sign_vectors(model)} for s in all_spin_structures(model)}


@pytest.fixture(scope="module")
def tables(torus, genus2):
    return {1: (torus, q_table(torus)), 2: (genus2, q_table(genus2))}


def test_sigma_table_for_reference_structure(torus):
    s = reference_spin(torus)
    got = [sigma_s(torus, s, mu2_system(torus.presentation, a)) for a in [(1, 1), (1, -1), (-1, 1), (-1, -1)]]
    assert got == [1, -1, -1, -1]
    assert arf(torus, s) == -1


@pytest.mark.parametrize("g", [1, 2])
def test_odd_count_matches_quadratic_form_enumeration(g, tables):
    model, table = tables[g]
    arfs = Counter(int(Fraction(sum(q.values()), 2 ** g)) for q in table.values())
    assert arfs == Counter(quadratic_refinement_arfs(g))


def _bits(a):
    return [(1 - x) // 2 for x in a]


def standard_intersection(a, b):
    x, y = _bits(a), _bits(b)
    return sum(x[2 * i] * y[2 * i + 1] + x[2 * i + 1] * y[2 * i] for i in range(len(x) // 2)) % 2


@pytest.mark.parametrize("g", [1, 2])
def test_quadratic_refinement_identity_all_pairs(g, tables):
    model, table = tables[g]
    alphas = sign_vectors(model)
    for q in table.values():
        for a, b in product(alphas, alphas):
            ab = product_sign(a, b)
            assert Fraction(q[ab], q[a] * q[b]) == (-1) ** standard_intersection(a, b)
            assert mod2_intersection(model, a, b) == standard_intersection(a, b)


@pytest.mark.parametrize("g", [1, 2])
def test_spin_change_law_all_pairs(g, tables):
    model, table = tables[g]
    for s1, s2 in product(table, table):
        h = spin_diff(model, s1, s2)
        for a, v in table[s2].items():
            assert v == pair_mod2(a, h) * table[s1][a]


def test_arf_invariant_under_handle_swap(genus2):
    by_label = {s.label: arf(genus2, s) for s in all_spin_structures(genus2)}
    for label, value in by_label.items():
        assert by_label[label[2:] + label[:2]] == value


def test_rank_two_rotation_has_trivial_sigma(torus):
    for s in all_spin_structures(torus):
        V = LocalSystem(torus.presentation, (ROT, Matrix.identity(2)), 2, "Q", Matrix.identity(2))
        assert sigma_s(torus, s, V) == 1


@pytest.mark.parametrize("signs", [(1, -1), (-1, -1), (1, 1)])
def test_sigma_multiplicative_with_trivial_summand(torus, signs):
    triv = trivial_system(torus.presentation)
    V = mu2_system(torus.presentation, signs)
    for s in all_spin_structures(torus):
        lhs = sigma_s(torus, s, direct_sum_systems(V, triv))
        assert lhs == sigma_s(torus, s, V) * sigma_s(torus, s, triv)


def test_sigma_multiplicative_genus2_sample(genus2):
    p = genus2.presentation
    pairs = [((1, -1, 1, 1), (-1, 1, 1, -1)), ((1, 1, 1, 1), (1, 1, -1, 1))]
    for s in all_spin_structures(genus2)[::5]:
        for a, b in pairs:
            V, W = mu2_system(p, a), mu2_system(p, b)
            assert sigma_s(genus2, s, direct_sum_systems(V, W)) == sigma_s(genus2, s, V) * sigma_s(genus2, s, W)


def test_spin_torsion_multiplicative_on_acyclic_sum(torus):
    V = mu2_system(torus.presentation, (-1, 1))
    W = mu2_system(torus.presentation, (1, -1))
    for s in all_spin_structures(torus):
        assert spin_torsion(torus, s, direct_sum_systems(V, W)) == spin_torsion(torus, s, V) * spin_torsion(torus, s, W)


def _all_corners(model):
    out = {}
    for f, steps in model.walks.items():
        for st in steps:
            (s, g0), (t, g1) = model.endpoints(st.edge)
            v, w = (s, word_mul(st.position, g0)) if st.sign == 1 else (t, word_mul(st.position, g1))
            out.setdefault(v, []).append((f, w))
    return out


@pytest.mark.parametrize("which", ["standard1", "standard2", "grid"])
def test_point_face_pairing_independent_of_corner(which):
    model = {"standard1": lambda: surface_model(1), "standard2": lambda: surface_model(2),
             "grid": lambda: grid_torus(2, 2)}[which]()
    V = trivial_system(model.presentation, 2)
    data = symplectic_homology_volume(model, V)
    b = specialize(model.complex, V)
    h = homology(b)
    corners = _all_corners(model)
    seen = set()
    for choice in product(*corners.values()):
        pick = dict(zip(corners, choice))
        seen.add(repr(point_face_pairing(model, V, h.get(b, 0), h.get(b, 2), pick)))
    assert len(seen) == 1
    assert repr(data.p02) in seen


def test_volume_needs_orthogonal_system(torus):
    V = LocalSystem(torus.presentation, (Matrix.from_rows([[2]]), Matrix.from_rows([[1]])), 1)
    with pytest.raises(NotOrthogonal):
        symplectic_homology_volume(torus, V)


def test_kasteleyn_spin_structures_on_grid():
    model = grid_torus(2, 2)
    orients = kasteleyn_orientations(model)
    assert orients
    dimer = ["h00", "h01"]
    first = half_euler_from_kasteleyn(model, dimer, orients[0])
    classes = {}
    for k in orients:
        s = half_euler_from_kasteleyn(model, dimer, k)
        check_spin(model, s)
        classes.setdefault(spin_diff(model, first, s), set()).add(arf(model, s))
    assert len(classes) == 4
    assert all(len(v) == 1 for v in classes.values())
    assert sorted(next(iter(v)) for v in classes.values()) == sorted(quadratic_refinement_arfs(1))


def test_kasteleyn_errors():
    model = grid_torus(2, 2)
    k = kasteleyn_orientations(model)[0]
    with pytest.raises(NotADimer):
        half_euler_from_kasteleyn(model, ["h00"], k)
    with pytest.raises(NotADimer):
        half_euler_from_kasteleyn(model, ["h00", "nope"], k)
    bad = {e: 1 for e in model.complex.cells_of(1)}
    with pytest.raises(NotKasteleyn):
        half_euler_from_kasteleyn(model, ["h00", "h01"], bad)


def test_spin_chain_validation(torus):
    ref = reference_spin(torus)
    with pytest.raises(ValueError):
        check_spin(torus, SpinStructure(ref.half_euler, {}, "broken"))
