"""Brute-force reference computations, independent of the library code paths."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, factorial


def perm_sign(perm) -> int:
    """Sign by inversion count."""
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def leibniz_det(rows):
    n = len(rows)
    if n == 0:
        return Fraction(1)
    total = 0
    for p in permutations(range(n)):
        term = perm_sign(p)
        for i in range(n):
            term *= rows[i][p[i]]
            if term == 0:
                break
        total += term
    return total


def _matchings(idx):
    if not idx:
        yield []
        return
    a = idx[0]
    for k in range(1, len(idx)):
        b = idx[k]
        rest = idx[1:k] + idx[k + 1:]
        for m in _matchings(rest):
            yield [(a, b)] + m


def matching_pfaffian(rows):
    """Sum over perfect matchings, sign from the flattened pair permutation."""
    n = len(rows)
    if n % 2:
        return Fraction(0)
    total = Fraction(0)
    for m in _matchings(list(range(n))):
        flat = [x for pair in m for x in pair]
        term = Fraction(perm_sign(flat))
        for a, b in m:
            term *= rows[a][b]
        total += term
    return total


# ---------------------------------------------------------------------------
# basis-permutation signs for graded lines


def braid_perm(n: int, m: int) -> list:
    """v1..vn w1..wm  ->  w1..wm v1..vn."""
    return list(range(n, n + m)) + list(range(n))


def tensor_transpose_perm(n: int, m: int) -> list:
    """Basis of V (x) W listed v-major, reordered w-major."""
    return [i * m + j for j in range(m) for i in range(n)]


def left_dist_perm(n1: int, n2: int, n3: int) -> list:
    """V (x) (W + U) in v-major order, reordered as (V (x) W) + (V (x) U)."""
    k = n2 + n3
    src = [i * k + j for i in range(n1) for j in range(k)]
    target = [i * k + j for i in range(n1) for j in range(n2)] + [i * k + n2 + j for i in range(n1) for j in range(n3)]
    pos = {x: t for t, x in enumerate(src)}
    return [pos[x] for x in target]


def right_dist_perm(n1: int, n2: int, n3: int) -> list:
    """(V + W) (x) U in row-major order, reordered as (V (x) U) + (W (x) U)."""
    k = n1 + n2
    src = [i * n3 + j for i in range(k) for j in range(n3)]
    target = [i * n3 + j for i in range(n1) for j in range(n3)] + [(n1 + i) * n3 + j for i in range(n2) for j in range(n3)]
    pos = {x: t for t, x in enumerate(src)}
    return [pos[x] for x in target]


# ---------------------------------------------------------------------------
# series


def bernoulli(n: int) -> list:
    """B_0..B_n from sum_{k<=m} C(m+1, k) B_k = 0 (B_1 = -1/2)."""
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return b


def j_coefficients(n: int) -> list:
    return [bk / factorial(k) for k, bk in enumerate(bernoulli(n))]


def long_division(num, den, n: int) -> list:
    """Coefficients of num/den by schoolbook division of power series."""
    num = list(num) + [Fraction(0)] * (n + 1)
    out = []
    for k in range(n + 1):
        q = Fraction(num[k]) / den[0]
        out.append(q)
        for j in range(len(den)):
            if k + j <= n:
                num[k + j] -= q * den[j]
    return out


def _mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _gauss_inverse(a):
    n = len(a)
    m = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [r[n:] for r in m]


def j_matrix_oracle(a) -> list:
    """(sum_k A^k/(k+1)!)^-1 for nilpotent A (the sum terminates)."""
    n = len(a)
    acc = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        p = _mat_mul(p, a)
        acc = [[x + y / factorial(k + 1) for x, y in zip(r, s)] for r, s in zip(acc, p)]
    return _gauss_inverse(acc)


def todd_matrix_oracle(a) -> Fraction:
    return leibniz_det(j_matrix_oracle(a)) if a else Fraction(1)


def jordan_block(n: int) -> list:
    return [[Fraction(1) if j == i + 1 else Fraction(0) for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# acyclic torsion via nonsingular minors


def cayley_torsion(ds, ranks):
    """Torsion of an acyclic complex C_k -> ... -> C_0 from a chain of minors.

    ``ds[i]`` is d_{i+1}: C_{i+1} -> C_i as a list of rows.  Searches column
    sets S_i with |S_i| = rank d_i such that the minor of d_{i+1} on the rows
    outside S_i and the columns S_{i+1} is nonsingular.  Returns
    prod det(minor_i)^((-1)^(i+1)) up to sign, as its absolute value.
    """
    top = len(ranks) - 1

    def search(i, s_i):
        # s_i: chosen columns of C_i that d_i is injective on (rows of C_i not free)
        rows_free = [r for r in range(ranks[i]) if r not in s_i]
        if i == top:
            return [] if not rows_free else None
        need = len(rows_free)
        d = ds[i]
        for cols in combinations(range(ranks[i + 1]), need):
            minor = [[d[r][c] for c in cols] for r in rows_free]
            det = leibniz_det(minor)
            if det != 0:
                rest = search(i + 1, set(cols))
                if rest is not None:
                    return [det] + rest
        return None

    dets = search(0, set())
    if dets is None:
        raise ValueError("complex is not acyclic")
    out = Fraction(1)
    for i, det in enumerate(dets):
        out *= 1 / det if i % 2 == 0 else det
    return abs(out)


def quadratic_refinement_arfs(g: int) -> list:
    """Arf invariants (+-1) of all quadratic refinements of the standard form on F_2^(2g)."""
    n = 2 * g

    def form(x, y):
        return sum(x[2 * i] * y[2 * i + 1] + x[2 * i + 1] * y[2 * i] for i in range(g)) % 2

    vecs = list(product((0, 1), repeat=n))
    basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    out = []
    for vals in product((0, 1), repeat=n):
        q = {}
        for v in vecs:
            # q(sum e_i) = sum q(e_i) + sum_{i<j} <e_i, e_j>
            idx = [i for i in range(n) if v[i]]
            q[v] = (sum(vals[i] for i in idx) + sum(form(basis[i], basis[j]) for i, j in combinations(idx, 2))) % 2
        total = sum((-1) ** q[v] for v in vecs)
        out.append(1 if total > 0 else -1)
    return out
