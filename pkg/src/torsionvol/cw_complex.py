"""Equivariant cellular chain complexes over group rings.

A complex is given by a group presentation and, for each cell, the boundary
of one chosen lift to the universal cover, written as a combination of lifts
of lower cells with coefficients in the integral group ring.  The group ring
acts on the left: if a lift of ``s`` has coefficient ``a`` on ``t`` and ``t``
has coefficient ``b`` on ``u``, then ``s`` picks up ``a*b`` on ``u``.

Words are tuples of nonzero ints: ``k`` is the k-th generator (1-based) and
``-k`` its inverse.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import (
    NotASubcomplex,
    PresentationMismatch,
    RelatorRewriteBudgetExceeded,
)
from .exact_algebra import smith_normal_form

Word = tuple

DEFAULT_BUDGET = 10_000
BUDGET_ENV = "TORSIONVOL_REWRITE_BUDGET"


def rewrite_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            return max(int(raw), 1)
        except ValueError:
            pass
    return DEFAULT_BUDGET


# ---------------------------------------------------------------------------
# words


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        if x == 0:
            raise ValueError("0 is not a generator index")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def word_inverse(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


def word_mul(*ws: Word) -> Word:
    return free_reduce(x for w in ws for x in w)


def word_power(w: Word, n: int) -> Word:
    base = w if n >= 0 else word_inverse(w)
    return free_reduce(base * abs(n))


def cyclic_reduce(w: Word) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def abelianize(w: Word, n: int) -> tuple:
    v = [0] * n
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(v)


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse ``"x y^-1 x^2"``; ``"1"`` or ``""`` is the empty word."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    index = {n: i + 1 for i, n in enumerate(names)}
    out = []
    for tok in text.replace("*", " ").split():
        base, _, exp = tok.partition("^")
        if base not in index:
            raise ValueError(f"unknown generator {base!r}")
        k = int(exp) if exp else 1
        g = index[base]
        out.extend([g if k > 0 else -g] * abs(k))
    return free_reduce(out)


def format_word(w: Word, names: Sequence[str]) -> str:
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        k = j - i
        name = names[abs(w[i]) - 1]
        e = k if w[i] > 0 else -k
        parts.append(name if e == 1 else f"{name}^{e}")
        i = j
    return " ".join(parts)


# ---------------------------------------------------------------------------
# presentations and the word problem


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        rels = tuple(free_reduce(r) for r in self.relators)
        n = len(self.generators)
        for r in rels:
            if any(abs(x) > n for x in r):
                raise ValueError(f"relator {r} uses a generator out of range")
        object.__setattr__(self, "relators", rels)

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    def word(self, text: str) -> Word:
        return parse_word(text, self.generators)

    def format(self, w: Word) -> str:
        return format_word(w, self.generators)

    def abelian_relator_matrix(self) -> list:
        return [list(abelianize(r, self.generator_count)) for r in self.relators]


def _commutator_pairs(p: GroupPresentation) -> set:
    """Generator pairs {i, j} for which some relator is a conjugate of [g_i, g_j]^{+-1}."""
    pairs = set()
    for r in p.relators:
        r = cyclic_reduce(r)
        if len(r) != 4:
            continue
        for k in range(4):
            s = r[k:] + r[:k]
            a, b, c, d = s
            if c == -a and d == -b and abs(a) != abs(b):
                pairs.add(frozenset((abs(a), abs(b))))
    return pairs


class WordProblem:
    """Bounded decision procedure for equality of words in a presentation.

    ``equal`` answers True, False or None (could not decide within budget).
    """

    def __init__(self, presentation: GroupPresentation, budget: int | None = None):
        self.p = presentation
        self.budget = rewrite_budget() if budget is None else budget
        n = presentation.generator_count
        self.n = n
        rel = presentation.abelian_relator_matrix()
        if rel:
            d, _, v = smith_normal_form(rel)
            self._snf_diag = [d[i][i] for i in range(min(len(d), n))]
            self._v = v
        else:
            self._snf_diag = []
            self._v = [[int(i == j) for j in range(n)] for i in range(n)]
        pairs = _commutator_pairs(presentation)
        self.abelian = all(frozenset((i, j)) in pairs for i, j in combinations(range(1, n + 1), 2))
        self._pieces = self._symmetrized()
        self.dehn_complete = bool(self._pieces) and self._small_cancellation()
        self._cache: dict = {}

    # abelian image ----------------------------------------------------
    def in_relation_lattice(self, vec: Sequence[int]) -> bool:
        y = [sum(vec[k] * self._v[k][j] for k in range(self.n)) for j in range(self.n)]
        for j, yj in enumerate(y):
            dj = self._snf_diag[j] if j < len(self._snf_diag) else 0
            if dj == 0:
                if yj != 0:
                    return False
            elif yj % dj:
                return False
        return True

    # rewriting --------------------------------------------------------
    def _symmetrized(self) -> list:
        out = set()
        for r in self.p.relators:
            r = cyclic_reduce(r)
            if not r:
                continue
            for s in (r, word_inverse(r)):
                for k in range(len(s)):
                    out.add(s[k:] + s[:k])
        return sorted(out)

    def _small_cancellation(self) -> bool:
        rels = self._pieces
        for r1, r2 in combinations(rels, 2):
            k = 0
            while k < min(len(r1), len(r2)) and r1[k] == r2[k]:
                k += 1
            if 6 * k >= min(len(r1), len(r2)):
                return False
        return True

    def _moves(self, w: Word):
        m = len(w)
        for rot in range(m):
            s = w[rot:] + w[:rot]
            for r in self._pieces:
                L = len(r)
                k = 0
                while k < min(L, m) and s[k] == r[k]:
                    k += 1
                # replace a prefix of length >= L/2 by the inverse of the rest
                for length in range(k, 0, -1):
                    if 2 * length < L:
                        break
                    yield cyclic_reduce(word_inverse(r[length:]) + s[length:])

    def is_trivial(self, w: Word):
        w = cyclic_reduce(w)
        if not w:
            return True
        if w in self._cache:
            return self._cache[w]
        if not self.in_relation_lattice(abelianize(w, self.n)):
            result = False
        elif not self.p.relators:
            result = False
        elif self.abelian:
            result = True
        else:
            result = self._search(w)
        self._cache[w] = result
        return result

    def _search(self, w: Word):
        seen = {w}
        queue = deque([w])
        steps = 0
        while queue:
            u = queue.popleft()
            for v in self._moves(u):
                steps += 1
                if not v:
                    return True
                if steps > self.budget:
                    return None
                if v not in seen and len(v) <= len(w):
                    seen.add(v)
                    queue.append(v)
        # every shortening path explored; Dehn's algorithm is complete under C'(1/6)
        return False if self.dehn_complete else None

    def equal(self, u: Word, v: Word):
        return self.is_trivial(word_mul(u, word_inverse(v)))


# ---------------------------------------------------------------------------
# group ring


class GroupRingElement:
    """Finite Z-combination of freely reduced words (not reduced by relators)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            w = free_reduce(w)
            acc[w] = acc.get(w, 0) + int(c)
        self.terms = tuple(sorted(((w, c) for w, c in acc.items() if c), key=lambda t: (len(t[0]), t[0])))

    @classmethod
    def word(cls, w: Word, coef: int = 1) -> "GroupRingElement":
        return cls([(w, coef)])

    @classmethod
    def one(cls) -> "GroupRingElement":
        return cls([((), 1)])

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return GroupRingElement(list(self.terms) + list(other.terms))

    def __neg__(self):
        return GroupRingElement([(w, -c) for w, c in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        return GroupRingElement(
            [(word_mul(u, v), a * b) for u, a in self.terms for v, b in other.terms]
        )

    def left(self, g: Word) -> "GroupRingElement":
        return GroupRingElement([(word_mul(g, w), c) for w, c in self.terms])

    def right(self, g: Word) -> "GroupRingElement":
        return GroupRingElement([(word_mul(w, g), c) for w, c in self.terms])

    def map_words(self, f) -> "GroupRingElement":
        return GroupRingElement([(f(w), c) for w, c in self.terms])

    def augmentation(self) -> int:
        return sum(c for _, c in self.terms)

    def __repr__(self):
        return f"GroupRingElement({list(self.terms)})"

    def format(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{format_word(w, names)}]" for w, c in self.terms)


def group_ring_equal(wp: WordProblem, a: GroupRingElement, b: GroupRingElement):
    """Equality in Z[G]; True, False or None when undecided."""
    return group_ring_is_zero(wp, a - b)


def group_ring_is_zero(wp: WordProblem, a: GroupRingElement):
    classes: list = []  # [representative word, total coefficient]
    undecided = False
    for w, c in a.terms:
        placed = False
        for cl in classes:
            verdict = wp.equal(w, cl[0])
            if verdict:
                cl[1] += c
                placed = True
                break
            if verdict is None:
                undecided = True
        if not placed:
            classes.append([w, c])
    nonzero = [cl for cl in classes if cl[1]]
    if not nonzero:
        return True
    if undecided:
        # a nonzero class might still cancel against a class it was not compared with
        for cl in nonzero:
            for other in classes:
                if other is not cl and wp.equal(cl[0], other[0]) is None:
                    return None
    return False


# ---------------------------------------------------------------------------
# complexes


@dataclass(frozen=True)
class EquivariantCellComplex:
    """Cells per dimension plus the boundary of each cell's chosen lift.

    ``boundary`` maps a cell id to a tuple of ``(lower_cell_id, GroupRingElement)``.
    """

    presentation: GroupPresentation
    cells: tuple
    boundary: Mapping
    basepoint: str | None = None
    name: str = ""

    def __post_init__(self):
        cells = tuple(tuple(c) for c in self.cells)
        object.__setattr__(self, "cells", cells)
        seen = set()
        for d, ids in enumerate(cells):
            for cid in ids:
                if cid in seen:
                    raise ValueError(f"duplicate cell id {cid!r}")
                seen.add(cid)
        bnd = {}
        for cid, terms in dict(self.boundary).items():
            if cid not in seen:
                raise ValueError(f"boundary given for unknown cell {cid!r}")
            d = self.dim(cid)
            clean = []
            for tau, a in terms:
                if tau not in seen or self.dim(tau) != d - 1:
                    raise ValueError(f"boundary of {cid!r} refers to {tau!r}, not a {d - 1}-cell")
                if not a.is_zero():
                    clean.append((tau, a))
            bnd[cid] = tuple(clean)
        object.__setattr__(self, "boundary", bnd)
        if self.basepoint is None:
            object.__setattr__(self, "basepoint", cells[0][0] if cells and cells[0] else None)
        elif cells and self.basepoint not in cells[0]:
            raise ValueError(f"basepoint {self.basepoint!r} is not a 0-cell")

    @property
    def top_dim(self) -> int:
        return len(self.cells) - 1

    def dim(self, cid: str) -> int:
        for d, ids in enumerate(self.cells):
            if cid in ids:
                return d
        raise KeyError(cid)

    def cells_of(self, d: int) -> tuple:
        return self.cells[d] if 0 <= d < len(self.cells) else ()

    def all_cells(self) -> list:
        return [c for ids in self.cells for c in ids]

    def entry(self, sigma: str, tau: str) -> GroupRingElement:
        acc = GroupRingElement()
        for t, a in self.boundary.get(sigma, ()):
            if t == tau:
                acc = acc + a
        return acc

    def boundary_terms(self, sigma: str) -> tuple:
        return self.boundary.get(sigma, ())


def euler_characteristic(c: EquivariantCellComplex) -> int:
    return sum((-1) ** d * len(ids) for d, ids in enumerate(c.cells))


@dataclass
class CheckReport:
    ok: bool
    failures: list = field(default_factory=list)  # (cell, lower cell, residual)

    def lines(self, names=()) -> list:
        if self.ok:
            return ["d o d = 0: pass"]
        return [f"d o d != 0 on {s} -> {u}: {r.format(names)}" for s, u, r in self.failures]


def double_boundary(c: EquivariantCellComplex, sigma: str) -> dict:
    out: dict = {}
    for tau, a in c.boundary_terms(sigma):
        for ups, b in c.boundary_terms(tau):
            out[ups] = out.get(ups, GroupRingElement()) + a * b
    return out


def check_complex(c: EquivariantCellComplex, budget: int | None = None) -> CheckReport:
    """Certify d o d = 0 modulo the relators.

    Raises RelatorRewriteBudgetExceeded when some coefficient could be
    neither shown to vanish nor shown to be nonzero.
    """
    wp = WordProblem(c.presentation, budget)
    failures = []
    for d in range(2, len(c.cells)):
        for sigma in c.cells[d]:
            for ups, r in double_boundary(c, sigma).items():
                verdict = group_ring_is_zero(wp, r)
                if verdict is None:
                    raise RelatorRewriteBudgetExceeded(
                        f"could not decide d o d on {sigma} -> {ups} within {wp.budget} rewrites"
                    )
                if not verdict:
                    failures.append((sigma, ups, r))
    return CheckReport(not failures, failures)


# ---------------------------------------------------------------------------
# first homology


@dataclass(frozen=True)
class H1Group:
    """H_1 = Z^rank + sum Z/d_i, from the Smith form of the abelianized relators."""

    n: int
    rank: int
    divisors: tuple
    _v: tuple
    _vinv: tuple
    _slots: tuple  # (column of V, modulus or 0) per coordinate, torsion first

    def classify(self, vec: Sequence[int]) -> "H1Class":
        y = [sum(vec[k] * self._v[k][j] for k in range(self.n)) for j in range(self.n)]
        tors = tuple(y[j] % m for j, m in self._slots if m)
        free = tuple(y[j] for j, m in self._slots if not m)
        return H1Class(self, free, tors)

    def of_word(self, w: Word) -> "H1Class":
        return self.classify(abelianize(w, self.n))

    def zero(self) -> "H1Class":
        return H1Class(self, (0,) * self.rank, (0,) * len(self.divisors))

    def basis_class(self, k: int, torsion: bool = False) -> "H1Class":
        free = [0] * self.rank
        tors = [0] * len(self.divisors)
        (tors if torsion else free)[k] = 1
        return H1Class(self, tuple(free), tuple(tors))

    def representative(self, cls: "H1Class") -> tuple:
        """An exponent vector on the generators mapping to ``cls``."""
        y = [0] * self.n
        ft = iter(cls.free)
        tt = iter(cls.torsion)
        for j, m in self._slots:
            y[j] = next(tt) if m else next(ft)
        return tuple(sum(y[j] * self._vinv[j][k] for j in range(self.n)) for k in range(self.n))

    def representative_word(self, cls: "H1Class") -> Word:
        vec = self.representative(cls)
        return free_reduce(x for k, e in enumerate(vec) for x in [(k + 1) if e > 0 else -(k + 1)] * abs(e))


@dataclass(frozen=True)
class H1Class:
    group: H1Group = field(compare=False, repr=False)
    free: tuple
    torsion: tuple

    def __add__(self, other: "H1Class") -> "H1Class":
        tors = tuple((a + b) % d for a, b, d in zip(self.torsion, other.torsion, self.group.divisors))
        return H1Class(self.group, tuple(a + b for a, b in zip(self.free, other.free)), tors)

    def __neg__(self):
        tors = tuple((-a) % d for a, d in zip(self.torsion, self.group.divisors))
        return H1Class(self.group, tuple(-a for a in self.free), tors)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "H1Class":
        tors = tuple((k * a) % d for a, d in zip(self.torsion, self.group.divisors))
        return H1Class(self.group, tuple(k * a for a in self.free), tors)

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def coordinates(self) -> tuple:
        return self.free + self.torsion

    def format(self) -> str:
        parts = [str(x) for x in self.free]
        parts += [f"{x} mod {d}" for x, d in zip(self.torsion, self.group.divisors)]
        return "(" + ", ".join(parts) + ")"


def _int_inverse(m: list) -> list:
    """Inverse of a unimodular integer matrix (exact, via fractions)."""
    from .exact_algebra import Matrix, inverse

    n = len(m)
    if n == 0:
        return []
    inv = inverse(Matrix.from_rows(m))
    out = [[inv[i, j] for j in range(n)] for i in range(n)]
    assert all(x.denominator == 1 for row in out for x in row)
    return [[int(x) for x in row] for row in out]


def h1_of_presentation(p: GroupPresentation) -> H1Group:
    n = p.generator_count
    rel = p.abelian_relator_matrix()
    if rel and n:
        d, _, v = smith_normal_form(rel)
        diag = [d[i][i] if i < len(d) else 0 for i in range(n)]
    else:
        v = [[int(i == j) for j in range(n)] for i in range(n)]
        diag = [0] * n
    slots_t = [(j, diag[j]) for j in range(n) if diag[j] > 1]
    slots_f = [(j, 0) for j in range(n) if diag[j] == 0]
    return H1Group(
        n=n,
        rank=len(slots_f),
        divisors=tuple(m for _, m in slots_t),
        _v=tuple(tuple(r) for r in v),
        _vinv=tuple(tuple(r) for r in _int_inverse(v)),
        _slots=tuple(slots_t + slots_f),
    )


def h1(c: EquivariantCellComplex) -> H1Group:
    return h1_of_presentation(c.presentation)


def cellular_integral_homology(c: EquivariantCellComplex) -> dict:
    """Smith invariants (rank, divisors) of H_d of the quotient complex over Z.

    Independent of the presentation: uses only augmented boundary matrices.
    """
    mats = {}
    for d in range(1, len(c.cells)):
        mats[d] = [[c.entry(s, t).augmentation() for s in c.cells[d]] for t in c.cells[d - 1]]

    def snf_diag(m):
        if not m or not m[0]:
            return []
        dd, _, _ = smith_normal_form(m)
        return [dd[i][i] for i in range(min(len(dd), len(dd[0]))) if dd[i][i]]

    out = {}
    for d in range(len(c.cells)):
        n_d = len(c.cells[d])
        r_out = len(snf_diag(mats[d])) if d in mats else 0
        inc = snf_diag(mats[d + 1]) if d + 1 in mats else []
        out[d] = (n_d - r_out - len(inc), tuple(x for x in inc if x > 1))
    return out


# ---------------------------------------------------------------------------
# fundamental families


@dataclass(frozen=True)
class FundamentalFamily:
    """Relative relift: the new lift of cell ``s`` is ``shift[s]`` times the old one."""

    shift: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "shift", {k: free_reduce(v) for k, v in dict(self.shift).items() if free_reduce(v)})

    def of(self, cid: str) -> Word:
        return self.shift.get(cid, ())

    def __hash__(self):
        return hash(tuple(sorted(self.shift.items())))


IDENTITY_FAMILY = FundamentalFamily()
EulerStructure = FundamentalFamily


def apply_family(c: EquivariantCellComplex, fam: FundamentalFamily) -> EquivariantCellComplex:
    """Rewrite boundaries in the shifted lifts: a -> g_s * a * g_t^{-1}."""
    if not fam.shift:
        return c
    bnd = {}
    for s, terms in c.boundary.items():
        gs = fam.of(s)
        bnd[s] = tuple((t, a.left(gs).right(word_inverse(fam.of(t)))) for t, a in terms)
    return EquivariantCellComplex(c.presentation, c.cells, bnd, c.basepoint, c.name)


def family_diff(c: EquivariantCellComplex, e1: FundamentalFamily, e2: FundamentalFamily) -> H1Class:
    g = h1(c)
    total = g.zero()
    for d, ids in enumerate(c.cells):
        for cid in ids:
            w = word_mul(e2.of(cid), word_inverse(e1.of(cid)))
            if w:
                q = g.of_word(w)
                total = total + (q if d % 2 == 0 else -q)
    return total


def validate_family(c: EquivariantCellComplex, fam: FundamentalFamily):
    known = set(c.all_cells())
    for k, w in fam.shift.items():
        if k not in known:
            raise ValueError(f"family shifts unknown cell {k!r}")
        if any(abs(x) > c.presentation.generator_count for x in w):
            raise ValueError(f"shift of {k!r} uses an unknown generator")


# ---------------------------------------------------------------------------
# constructions


def fox_derivative(w: Word, i: int) -> GroupRingElement:
    """Free differential d w / d g_i."""
    terms = []
    for k, x in enumerate(w):
        if x == i:
            terms.append((w[:k], 1))
        elif x == -i:
            terms.append((w[:k + 1], -1))
    return GroupRingElement(terms)


def fox_complex(p: GroupPresentation, name: str = "") -> EquivariantCellComplex:
    gens = p.generators
    edge_ids = [f"e_{g}" for g in gens]
    face_ids = [f"f{j + 1}" for j in range(len(p.relators))]
    bnd = {}
    for i, e in enumerate(edge_ids):
        g = i + 1
        bnd[e] = (("v", GroupRingElement([((g,), 1), ((), -1)])),)
    for j, r in enumerate(p.relators):
        bnd[face_ids[j]] = tuple((edge_ids[i], fox_derivative(r, i + 1)) for i in range(len(gens)))
    cells = [["v"], edge_ids]
    if face_ids:
        cells.append(face_ids)
    return EquivariantCellComplex(p, cells, bnd, "v", name)


def circle_complex() -> EquivariantCellComplex:
    p = GroupPresentation(("z",))
    return EquivariantCellComplex(
        p, [["p"], ["gamma"]], {"gamma": (("p", GroupRingElement([((1,), 1), ((), -1)])),)}, "p", "circle"
    )


def torus_complex() -> EquivariantCellComplex:
    """One vertex v, edges a (along x) and b (along y), face f."""
    p = GroupPresentation(("x", "y"), [(1, 2, -1, -2)])
    x, y = (1,), (2,)
    one = ()
    bnd = {
        "a": (("v", GroupRingElement([(x, 1), (one, -1)])),),
        "b": (("v", GroupRingElement([(y, 1), (one, -1)])),),
        "f": (
            ("a", GroupRingElement([(one, 1), (y, -1)])),
            ("b", GroupRingElement([(x, 1), (one, -1)])),
        ),
    }
    return EquivariantCellComplex(p, [["v"], ["a", "b"], ["f"]], bnd, "v", "torus")


def wedge_complex(n: int) -> EquivariantCellComplex:
    p = GroupPresentation(tuple(f"g{i + 1}" for i in range(n)))
    return fox_complex(p, f"wedge{n}")


def surface_presentation(genus: int) -> GroupPresentation:
    gens = []
    rel = []
    for i in range(genus):
        gens += [f"a{i + 1}", f"b{i + 1}"]
        a, b = 2 * i + 1, 2 * i + 2
        rel += [a, b, -a, -b]
    return GroupPresentation(tuple(gens), [tuple(rel)] if genus else [])


def surface_complex(genus: int) -> EquivariantCellComplex:
    return fox_complex(surface_presentation(genus), f"surface{genus}")


def disjoint_union(c1: EquivariantCellComplex, c2: EquivariantCellComplex) -> EquivariantCellComplex:
    return glue(c1, c2, EquivariantCellComplex(GroupPresentation(()), [], {}), None)


# ---------------------------------------------------------------------------
# subdivision


def subdivide_edge(c: EquivariantCellComplex, edge: str) -> EquivariantCellComplex:
    """Split ``edge`` at a new midpoint vertex ``<edge>.m``.

    The boundary of the edge must have the form g1*t - g0*s.  The halves are
    ``<edge>.0`` (from g0*s to the midpoint) and ``<edge>.1`` (midpoint to
    g1*t); every higher cell meeting the edge meets both halves with the same
    coefficient.
    """
    if edge not in c.cells_of(1):
        raise KeyError(f"{edge!r} is not a 1-cell")
    plus, minus = [], []
    for t, a in c.boundary_terms(edge):
        for w, k in a.terms:
            (plus if k > 0 else minus).extend([(t, w)] * abs(k))
    if len(plus) != 1 or len(minus) != 1:
        raise ValueError(f"boundary of {edge!r} is not of the form g1*t - g0*s")
    (t, g1), (s, g0) = plus[0], minus[0]
    m, e0, e1 = f"{edge}.m", f"{edge}.0", f"{edge}.1"
    for new in (m, e0, e1):
        if new in c.all_cells():
            raise ValueError(f"cell id {new!r} already in use")
    cells = [list(ids) for ids in c.cells]
    cells[0].append(m)
    k = cells[1].index(edge)
    cells[1][k:k + 1] = [e0, e1]
    bnd = {}
    for sid, terms in c.boundary.items():
        if sid == edge:
            continue
        new_terms = []
        for tau, a in terms:
            if tau == edge:
                new_terms += [(e0, a), (e1, a)]
            else:
                new_terms.append((tau, a))
        bnd[sid] = tuple(new_terms)
    bnd[e0] = ((m, GroupRingElement.one()), (s, GroupRingElement.word(g0, -1)))
    bnd[e1] = ((t, GroupRingElement.word(g1)), (m, -GroupRingElement.one()))
    return EquivariantCellComplex(c.presentation, cells, bnd, c.basepoint, c.name)


def subdivide_family(fam: FundamentalFamily, edge: str) -> FundamentalFamily:
    """Carry a family across :func:`subdivide_edge`: new cells inherit the edge's shift."""
    g = fam.of(edge)
    shift = {k: v for k, v in fam.shift.items() if k != edge}
    if g:
        for new in (f"{edge}.m", f"{edge}.0", f"{edge}.1"):
            shift[new] = g
    return FundamentalFamily(shift)


# ---------------------------------------------------------------------------
# gluing


@dataclass(frozen=True)
class GlueMaps:
    """Data for a pushout c1 <- c0 -> c2.

    ``gens1`` / ``gens2``: pushout words for the generators of c1 / c2.
    ``c0_in_1`` / ``c0_in_2``: words in c1 / c2 for the generators of c0.
    ``cells_to_c1`` / ``cells_to_c2``: c0 cell -> (cell, word) meaning the
    lift of the c0 cell is ``word`` times the lift of that cell.
    """

    presentation: GroupPresentation
    gens1: tuple
    gens2: tuple
    c0_in_1: tuple
    c0_in_2: tuple
    cells_to_c1: Mapping
    cells_to_c2: Mapping


def _check_embedding(c0, c, gen_map, cells_map, side: str):
    if set(cells_map) != set(c0.all_cells()):
        raise NotASubcomplex(f"every cell of the common subcomplex needs an image in {side}")
    images = [v[0] for v in cells_map.values()]
    if len(set(images)) != len(images):
        raise NotASubcomplex(f"two cells map to the same cell of {side}")
    inv = {v[0]: (k, v[1]) for k, v in cells_map.items()}
    wp = WordProblem(c.presentation)

    def push(w):
        return free_reduce(x for g in w for x in (gen_map[abs(g) - 1] if g > 0 else word_inverse(gen_map[abs(g) - 1])))

    for k, (img, g) in cells_map.items():
        if img not in c.all_cells() or c.dim(img) != c0.dim(k):
            raise NotASubcomplex(f"{k!r} must map to a cell of the same dimension in {side}")
        # the image of the boundary of k, expressed on the image cells
        expect: dict = {}
        for tau, a in c0.boundary_terms(k):
            timg, gt = cells_map[tau]
            expect[timg] = expect.get(timg, GroupRingElement()) + a.map_words(push).right(gt)
        actual: dict = {}
        for t, a in c.boundary_terms(img):
            if t not in inv:
                raise NotASubcomplex(f"boundary of {img!r} leaves the image of the subcomplex in {side}")
            actual[t] = actual.get(t, GroupRingElement()) + a.left(g)
        for t in set(expect) | set(actual):
            verdict = group_ring_equal(wp, expect.get(t, GroupRingElement()), actual.get(t, GroupRingElement()))
            if verdict is None:
                raise RelatorRewriteBudgetExceeded(f"cannot compare boundaries of {k!r} and {img!r}")
            if not verdict:
                raise NotASubcomplex(f"boundary of {k!r} does not match that of {img!r} in {side}")


def glue(c1, c2, c0, maps: GlueMaps | None) -> EquivariantCellComplex:
    """Pushout of c1 and c2 along the common subcomplex c0."""
    if maps is None:
        if c0.all_cells():
            raise NotASubcomplex("gluing data required for a nonempty subcomplex")
        n1 = c1.presentation.generator_count
        gens = c1.presentation.generators + c2.presentation.generators
        rels = list(c1.presentation.relators) + [
            tuple(x + n1 if x > 0 else x - n1 for x in r) for r in c2.presentation.relators
        ]
        maps = GlueMaps(
            GroupPresentation(gens, rels),
            tuple((i + 1,) for i in range(n1)),
            tuple((n1 + i + 1,) for i in range(c2.presentation.generator_count)),
            (), (), {}, {},
        )
    P = maps.presentation
    if len(maps.gens1) != c1.presentation.generator_count or len(maps.gens2) != c2.presentation.generator_count:
        raise PresentationMismatch("need one pushout word per generator of each piece")
    if len(maps.c0_in_1) != c0.presentation.generator_count or len(maps.c0_in_2) != c0.presentation.generator_count:
        raise PresentationMismatch("need one word per generator of the common subcomplex")
    for w in list(maps.gens1) + list(maps.gens2):
        if any(abs(x) > P.generator_count for x in w):
            raise PresentationMismatch("pushout word uses an unknown generator")

    def pusher(gen_words):
        def push(w):
            return free_reduce(
                x for g in w for x in (gen_words[abs(g) - 1] if g > 0 else word_inverse(gen_words[abs(g) - 1]))
            )
        return push

    push1, push2 = pusher(maps.gens1), pusher(maps.gens2)
    wp = WordProblem(P)
    for side, pres, push in (("c1", c1.presentation, push1), ("c2", c2.presentation, push2)):
        for r in pres.relators:
            v = wp.is_trivial(push(r))
            if not v:
                raise PresentationMismatch(f"a relator of {side} is not trivial in the pushout" + (
                    "" if v is False else " (undecided)"))
    for i in range(c0.presentation.generator_count):
        v = wp.equal(push1(maps.c0_in_1[i]), push2(maps.c0_in_2[i]))
        if not v:
            raise PresentationMismatch(f"generator {i + 1} of the subcomplex has different images")

    if c0.all_cells():
        _check_embedding(c0, c1, maps.c0_in_1, maps.cells_to_c1, "c1")
        _check_embedding(c0, c2, maps.c0_in_2, maps.cells_to_c2, "c2")

    # c2 cell -> (c1 cell, pushout word h) with lift(c2 cell) = h * lift(c1 cell)
    ident = {}
    for k, (cell2, g2) in maps.cells_to_c2.items():
        cell1, g1 = maps.cells_to_c1[k]
        ident[cell2] = (cell1, word_mul(word_inverse(push2(g2)), push1(g1)))
    used = set(c1.all_cells())
    rename = {}
    for cid in c2.all_cells():
        if cid in ident:
            continue
        new = cid
        while new in used:
            new = new + "'"
        used.add(new)
        rename[cid] = new

    depth = max(len(c1.cells), len(c2.cells))
    cells = [list(c1.cells_of(d)) + [rename[x] for x in c2.cells_of(d) if x in rename] for d in range(depth)]
    bnd = {}
    for s, terms in c1.boundary.items():
        bnd[s] = tuple((t, a.map_words(push1)) for t, a in terms)
    for s, terms in c2.boundary.items():
        if s in ident:
            continue
        new_terms = []
        for t, a in terms:
            a = a.map_words(push2)
            if t in ident:
                t1, h = ident[t]
                new_terms.append((t1, a.right(h)))
            else:
                new_terms.append((rename[t], a))
        bnd[rename[s]] = tuple(new_terms)
    base = c1.basepoint if c1.basepoint is not None else (rename.get(c2.basepoint) if c2.basepoint else None)
    return EquivariantCellComplex(P, cells, bnd, base, f"{c1.name}+{c2.name}".strip("+"))
