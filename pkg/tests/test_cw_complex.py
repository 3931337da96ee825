import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torsionvol.cw_complex import (
    BUDGET_ENV,
    EquivariantCellComplex,
    FundamentalFamily,
    GlueMaps,
    GroupPresentation,
    GroupRingElement,
    WordProblem,
    check_complex,
    circle_complex,
    cellular_integral_homology,
    disjoint_union,
    euler_characteristic,
    family_diff,
    format_word,
    fox_complex,
    free_reduce,
    glue,
    h1,
    parse_word,
    subdivide_edge,
    surface_complex,
    torus_complex,
    wedge_complex,
    word_inverse,
    word_mul,
)
from torsionvol.errors import NotASubcomplex, PresentationMismatch, RelatorRewriteBudgetExceeded
from torsionvol.formats import parse_group_ring

NAMES = ("x", "y", "z")
letters = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=12)


def pres(gens, rels):
    return GroupPresentation(tuple(gens), [parse_word(r, gens) for r in rels])


@settings(max_examples=80, deadline=None)
@given(letters)
def test_word_format_roundtrip(w):
    r = free_reduce(w)
    assert parse_word(format_word(r, NAMES), NAMES) == r
    assert word_mul(r, word_inverse(r)) == ()


@settings(max_examples=80, deadline=None)
@given(letters, letters)
def test_free_reduction_is_a_group_law(a, b):
    ab = word_mul(free_reduce(a), free_reduce(b))
    assert word_inverse(ab) == word_mul(word_inverse(free_reduce(b)), word_inverse(free_reduce(a)))


def test_parse_word_rejects_unknown_generator():
    with pytest.raises(ValueError):
        parse_word("x q", NAMES)


COMPLEXES = {
    "circle": circle_complex,
    "torus": torus_complex,
    "wedge3": lambda: wedge_complex(3),
    "genus2": lambda: surface_complex(2),
    "genus3": lambda: surface_complex(3),
    "trefoil": lambda: fox_complex(pres("xy", ["x y x y^-1 x^-1 y^-1"])),
    "rp2": lambda: fox_complex(pres("x", ["x^2"])),
}


@pytest.mark.parametrize("name", sorted(COMPLEXES))
def test_shipped_constructions_satisfy_dd_zero(name):
    c = COMPLEXES[name]()
    assert check_complex(c).ok


@pytest.mark.parametrize("name", sorted(COMPLEXES))
def test_first_homology_two_routes(name):
    # abelianized presentation vs Smith form of the augmented cellular chain complex
    c = COMPLEXES[name]()
    g = h1(c)
    rank, tors = cellular_integral_homology(c)[1]
    assert (g.rank, g.divisors) == (rank, tors)


def test_dd_violation_is_reported():
    g = ("x", "y")
    c = EquivariantCellComplex(
        pres(g, ["x y x^-1 y^-1"]), [["v"], ["a", "b"], ["f"]],
        {"a": (("v", parse_group_ring("x - 1", g)),), "b": (("v", parse_group_ring("y - 1", g)),),
         "f": (("a", parse_group_ring("1 - y", g)), ("b", parse_group_ring("1 - x", g)))}, "v")
    rep = check_complex(c)
    assert not rep.ok
    assert rep.failures[0][:2] == ("f", "v")


def _bs12(second):
    g = ("a", "b")
    return EquivariantCellComplex(
        pres(g, ["b a b^-1 a^-2"]), [["v"], ["e"], ["f"]],
        {"e": (("v", parse_group_ring("a - 1", g)),), "f": (("e", parse_group_ring(second, g)),)}, "v")


def test_rewrite_budget_and_environment_override(monkeypatch):
    c = _bs12("b a^2 b^-1 - a^4")
    assert check_complex(c).ok
    with pytest.raises(RelatorRewriteBudgetExceeded):
        check_complex(c, budget=1)
    monkeypatch.setenv(BUDGET_ENV, "1")
    with pytest.raises(RelatorRewriteBudgetExceeded):
        check_complex(c)


def test_word_problem_answers():
    wp = WordProblem(pres("xy", ["x y x^-1 y^-1"]))
    assert wp.equal(parse_word("x y", "xy"), parse_word("y x", "xy"))
    assert wp.equal(parse_word("x", "xy"), parse_word("y", "xy")) is False


def test_group_ring_arithmetic():
    g = ("x",)
    a = parse_group_ring("x - 1", g)
    b = parse_group_ring("x + 1", g)
    assert a * b == parse_group_ring("x^2 - 1", g)
    assert a.augmentation() == 0 and b.augmentation() == 2
    assert (a - a).is_zero()
    assert GroupRingElement.one().augmentation() == 1


def test_family_difference_signs():
    c = torus_complex()
    x = h1(c).of_word((1,))
    base = FundamentalFamily()
    assert family_diff(c, base, FundamentalFamily({"v": (1,)})) == x
    assert family_diff(c, base, FundamentalFamily({"a": (1,)})) == -x
    assert family_diff(c, base, FundamentalFamily({"f": (1,)})) == x


@pytest.mark.parametrize("k", range(1, 6))
def test_subdivision_keeps_complex_valid(k):
    c = circle_complex()
    for _ in range(k):
        c = subdivide_edge(c, c.cells_of(1)[-1])
    assert check_complex(c).ok
    assert euler_characteristic(c) == 0
    assert len(c.cells_of(1)) == k + 1


def test_subdivide_torus_edge():
    c = subdivide_edge(torus_complex(), "a")
    assert check_complex(c).ok
    assert euler_characteristic(c) == 0
    with pytest.raises(KeyError):
        subdivide_edge(c, "f")


def test_disjoint_union():
    c = disjoint_union(torus_complex(), circle_complex())
    assert euler_characteristic(c) == 0
    assert c.presentation.generators == ("x", "y", "z")
    assert check_complex(c).ok


def _glue_args(cells_to_c1):
    c1 = fox_complex(pres("abc", ["a b a^-1 b^-1 c^-1"]))
    c2 = fox_complex(pres("c", ["c"]))
    c0 = fox_complex(pres("c", []))
    maps = GlueMaps(pres("abc", ["a b a^-1 b^-1 c^-1", "c"]), ((1,), (2,), (3,)), ((3,),), ((3,),), ((1,),),
                    cells_to_c1, {"v": ("v", ()), "e_c": ("e_c", ())})
    return c1, c2, c0, maps


def test_glue_torus_from_pieces():
    x = glue(*_glue_args({"v": ("v", ()), "e_c": ("e_c", ())}))
    assert check_complex(x).ok
    assert euler_characteristic(x) == 0
    assert (h1(x).rank, h1(x).divisors) == (2, ())


def test_glue_rejects_bad_maps():
    with pytest.raises(NotASubcomplex):
        glue(*_glue_args({"v": ("v", ()), "e_c": ("e_a", ())}))
    c1, c2, c0, maps = _glue_args({"v": ("v", ()), "e_c": ("e_c", ())})
    bad = GlueMaps(pres("abc", ["a b a^-1 b^-1 c^-1"]), maps.gens1, maps.gens2, maps.c0_in_1, maps.c0_in_2,
                   maps.cells_to_c1, maps.cells_to_c2)
    with pytest.raises(PresentationMismatch):
        glue(c1, c2, c0, bad)


def test_complex_validation():
    with pytest.raises(ValueError):
        EquivariantCellComplex(pres("x", []), [["v"], ["v"]], {})
