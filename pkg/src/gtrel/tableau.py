"""Gelfand-Tsetlin tableaux, integer shift vectors, basis membership and
the explicit seed-tableau constructors.

A tableau of height n+1 stores rows of lengths 1..n+1; shift vectors are
integer arrays over rows 1..n (the top row is pinned).  Weights are
H-eigenvalue coordinate tuples of length n.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from . import classify
from .core import format_rational, parse_rational
from .errors import (
    NotCaseA,
    NotCaseB,
    PreconditionViolated,
    SeedViolatesRelations,
)
from .relations import (
    RMINUS,
    RZERO,
    RelationSet,
    is_admissible,
    is_noncritical_for,
    is_realization,
    reduce_relations,
    satisfied_relations,
    satisfies,
)


@dataclass(frozen=True)
class Tableau:
    n: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.n + 1:
            raise ValueError("expected %d rows" % (self.n + 1))
        for k, row in enumerate(self.rows, start=1):
            if len(row) != k:
                raise ValueError("row %d must have %d entries" % (k, k))

    def entry(self, k, i):
        return self.rows[k - 1][i - 1]


def tableau(n, rows):
    return Tableau(n, tuple(tuple(Fraction(x) for x in row) for row in rows))


def zero_shift(n):
    return tuple(tuple(0 for _ in range(k)) for k in range(1, n + 1))


def unit_shift(n, k, i):
    """The shift delta^{ki} (one box in row k, column i)."""
    if not 1 <= i <= k <= n:
        raise ValueError("delta^{%d,%d} out of range for n=%d" % (k, i, n))
    return tuple(
        tuple(1 if (r == k and c == i) else 0 for c in range(1, r + 1))
        for r in range(1, n + 1)
    )


def shift_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def shift_neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def apply_shift(T, z):
    """Entrywise sum on rows 1..n; the top row is unchanged."""
    if len(z) != T.n:
        raise ValueError("shift must cover rows 1..%d" % T.n)
    rows = [
        tuple(e + d for e, d in zip(row, zrow)) for row, zrow in zip(T.rows, z)
    ] + [T.rows[T.n]]
    return Tableau(T.n, tuple(rows))


def apply_rational_shift(T, k, i, x):
    """Add the scalar x to the single entry (k, i)."""
    rows = [
        tuple(
            e + (Fraction(x) if (r == k and c == i) else 0)
            for c, e in enumerate(row, start=1)
        )
        for r, row in enumerate(T.rows, start=1)
    ]
    return Tableau(T.n, tuple(rows))


def weight_of(T):
    """H-eigenvalue coordinates of T."""
    sums = [sum(row) for row in T.rows]
    coords = []
    for k in range(1, T.n + 1):
        below = sums[k - 2] if k >= 2 else 0
        coords.append(2 * sums[k - 1] - below - sums[k] - 1)
    return tuple(Fraction(c) for c in coords)


def weight_delta(n, z):
    """weight_of(T + z) - weight_of(T); depends on z only."""
    sums = [sum(row) for row in z] + [0]
    out = []
    for k in range(1, n + 1):
        below = sums[k - 2] if k >= 2 else 0
        out.append(Fraction(2 * sums[k - 1] - below - sums[k]))
    return tuple(out)


class BasisChecker:
    """Integer-constraint form of "T(seed+z) satisfies C" for fast scans.

    Each relation reduces to z_a - z_b >= t with a fixed integer t, where
    z of a top-row position is 0.
    """

    def __init__(self, C, seed):
        if not satisfies(seed, C):
            raise SeedViolatesRelations("seed does not satisfy the relation set")
        self.C = C
        self.seed = seed
        self.n = C.n
        self.constraints = []
        for rel in C.sorted():
            (i, j), (r, s) = rel
            base = Fraction(seed.entry(i, j)) - Fraction(seed.entry(r, s))
            assert base.denominator == 1
            need = 1 if C.kind(rel) == RMINUS else 0
            self.constraints.append(((i, j), (r, s), need - base.numerator))

    @staticmethod
    def _z(z, pos, n):
        k, i = pos
        return 0 if k == n + 1 else z[k - 1][i - 1]

    def check(self, z):
        for a, b, t in self.constraints:
            if self._z(z, a, self.n) - self._z(z, b, self.n) < t:
                return False
        return True


def in_basis(C, seed, z):
    """True iff T(seed+z) still satisfies C."""
    return BasisChecker(C, seed).check(z)


def enumerate_basis_box(C, seed, box):
    """All shifts z with |z_{ki}| <= box whose tableau satisfies C."""
    checker = BasisChecker(C, seed)
    n = C.n
    coords = [(k, i) for k in range(1, n + 1) for i in range(1, k + 1)]
    out = []
    rng = range(-box, box + 1)
    for flat in product(rng, repeat=len(coords)):
        z = []
        idx = 0
        for k in range(1, n + 1):
            z.append(tuple(flat[idx : idx + k]))
            idx += k
        z = tuple(z)
        if checker.check(z):
            out.append(z)
    return out


def basis_is_box_complete(C):
    """Conservative test that C confines every shiftable entry.

    Each row-k entry (k <= n) must be bounded above and below through
    relation chains anchored at the fixed top row: reachable from a
    top-row vertex (upper bound) and reaching one (lower bound).
    """
    from .relations import _adjacency, _reachable_from

    adj = _adjacency(C)
    n = C.n
    top = [(n + 1, j) for j in range(1, n + 2)]
    down = set()
    for t in top:
        down |= _reachable_from(adj, t)
    for k in range(1, n + 1):
        for i in range(1, k + 1):
            p = (k, i)
            if p not in down:
                return False
            if not any(t in _reachable_from(adj, p) for t in top):
                return False
    return True


def enumerate_weight_space(C, seed, w, box):
    """Shifts in the box realizing weight w, plus a completeness flag."""
    shifts = enumerate_basis_box(C, seed, box)
    base = weight_of(seed)
    target = tuple(Fraction(x) for x in w)
    hits = [
        z
        for z in shifts
        if tuple(b + d for b, d in zip(base, weight_delta(C.n, z))) == target
    ]
    return hits, basis_is_box_complete(C)


# ---------------------------------------------------------------------------
# seed constructors


def _hw_top_values(lam, n, normalization):
    """Column values v_1..v_{n+1} with v_s - v_{s+1} = <lam+rho, alpha_s>
    and the chosen top-row sum normalization."""
    lam = tuple(Fraction(x) for x in lam)
    diffs = [lam[s - 1] + 1 for s in range(1, n + 1)]
    total = Fraction(-(n + 1)) if normalization == "sl2" else Fraction(-comb(n + 1, 2))
    tails = []
    for s in range(1, n + 2):
        tails.append(sum(diffs[s - 1 : n], Fraction(0)))
    last = (total - sum(tails, Fraction(0))) / (n + 1)
    return [last + t for t in tails]


def _validated(T, C):
    if not is_realization(C, T):
        raise PreconditionViolated("constructed tableau is not a C-realization")
    if not is_noncritical_for(C, T):
        raise PreconditionViolated("constructed tableau is critical")
    if not is_admissible(C):
        raise PreconditionViolated("constructed relation set is not admissible")
    return T, C


def hw_tableau_case_a(lam, normalization="hw"):
    """Constant-column highest weight seed plus its maximal relation set."""
    n = len(lam)
    case = classify.hw_relation_case(lam)
    if case.tag != "CaseA":
        raise NotCaseA("weight is not in case a: %r" % (case,))
    v = _hw_top_values(lam, n, normalization)
    T = tableau(n, [[v[s - 1] for s in range(1, r + 1)] for r in range(1, n + 2)])
    C = reduce_relations(satisfied_relations(T))
    return _validated(T, C)


def hw_tableau_case_b(lam, i, j, normalization="hw"):
    """Case-b highest weight seed (shuffled columns) and its maximal set."""
    n = len(lam)
    case = classify.hw_relation_case(lam)
    if case.tag != "CaseB" or (case.i, case.j) != (i, j):
        raise NotCaseB("weight is not in case b with (i,j)=(%d,%d): %r" % (i, j, case))
    v = _hw_top_values(lam, n, normalization)

    def ent(r, s):
        if s < i or (i <= r <= j):
            return v[s - 1]
        if i <= s < r + i - j:
            return v[s + j - i]
        if s >= r + i - j:
            return v[s - r + j - 1]
        raise AssertionError("uncovered entry (%d,%d)" % (r, s))

    T = tableau(n, [[ent(r, s) for s in range(1, r + 1)] for r in range(1, n + 2)])
    C = reduce_relations(satisfied_relations(T))
    return _validated(T, C)


def family_tableau(u, v, m=None):
    """Dense-family seed: first column u_i, interior columns v_{j-1}.

    Returns (T, Q) without m, (T^m, C^m) with it.
    """
    n = len(v)
    if len(u) != n + 1:
        raise PreconditionViolated("u must have n+1 entries, v must have n")
    u = [Fraction(x) for x in u]
    v = [Fraction(x) for x in v]
    for idx in range(n):
        if (u[idx] - v[0]).denominator == 1:
            raise PreconditionViolated("u_%d - v_1 in Z" % (idx + 1))
    for j in range(n - 1):
        d = v[j] - v[j + 1]
        if not (d.denominator == 1 and d > 0):
            raise PreconditionViolated("v_%d - v_%d not in Z_{>0}" % (j + 1, j + 2))
    if m is not None:
        if not 2 <= m <= n:
            raise PreconditionViolated("m must satisfy 2 <= m <= n")
        for idx in range(m, n + 1):
            if u[idx] != u[m - 1]:
                raise PreconditionViolated("u_%d != u_%d" % (idx + 1, m))
        for idx in range(m - 1):
            if (u[idx] - u[idx + 1]).denominator == 1:
                raise PreconditionViolated("u_%d - u_%d in Z" % (idx + 1, idx + 2))

    def ent(r, s):
        return u[r - 1] if s == 1 else v[s - 2]

    T = tableau(n, [[ent(r, s) for s in range(1, r + 1)] for r in range(1, n + 2)])
    rels = set()
    for i in range(2, n + 1):
        for j in range(2, i + 1):
            rels.add(((i + 1, j), (i, j)))
            rels.add(((i, j), (i + 1, j + 1)))
    if m is not None:
        for i in range(m, n + 1):
            rels.add(((i + 1, 1), (i, 1)))
    C = RelationSet(n, frozenset(rels))
    return _validated(T, C)


def lem_key_tableau(lam, i, normalization="hw"):
    """Seed and relation set realizing a highest weight module over the
    Borel subalgebra twisted by the word s_{i-1} s_i ... s_1 s_2."""
    n = len(lam)
    if not 1 < i <= n:
        raise PreconditionViolated("need 1 < i <= n")
    case = classify.bounded_case(lam)
    if not (case == "a" or (isinstance(case, tuple) and case[0] == "e")):
        raise PreconditionViolated("weight not in bounded cases a/e: %r" % (case,))
    lam = tuple(Fraction(x) for x in lam)
    p = [None] + [lam[k - 1] + 1 for k in range(1, n + 1)]

    # offsets of v_t relative to v_1
    off = [None] * (n + 2)
    off[1] = Fraction(0)
    off[2] = -p[i]
    off[i + 1] = p[i - 1]
    if i > 2:
        off[3] = sum(p[1:i], Fraction(0))
        for k in range(1, i - 2 + 1):
            off[k + 3] = off[k + 2] - p[k]
    if i + 2 <= n + 1:
        off[i + 2] = off[2] - p[i + 1]
        for k in range(i + 2, n + 1):
            off[k + 1] = off[k] - p[k]
    total = Fraction(-(n + 1)) if normalization == "sl2" else Fraction(-comb(n + 1, 2))
    v1 = (total - sum(off[1 : n + 2], Fraction(0))) / (n + 1)
    v = [None] + [v1 + off[t] for t in range(1, n + 2)]

    def ent(r, s):
        if r == s == 1:
            return v[1] + i - 1
        if 1 < r <= i and s == r - 1:
            return v[1] + i + 1 - r
        if r > i and s == i:
            return v[1]
        if 1 < r <= i and s == r:
            return v[2] + i + 1 - r
        if r > i and s == r:
            return v[2]
        if r >= 3 and s == 1:
            return v[3]
        if r >= 4 and 2 <= s < i:
            return v[s + 2]
        # index s+1, not s: the descending arrows ((r,s);(r+1,s+1)) force
        # consecutive v-values down this diagonal and the top row must
        # exhaust v_1..v_{n+1}
        if r > s >= i + 1:
            return v[s + 1]
        raise AssertionError("uncovered entry (%d,%d)" % (r, s))

    T = tableau(n, [[ent(r, s) for s in range(1, r + 1)] for r in range(1, n + 2)])
    rels = set()
    for r in range(1, n + 1):
        for s in range(1, r):
            rels.add(((r + 1, s), (r, s)))
            rels.add(((r, s), (r + 1, s + 1)))
    rels.add(((2, 1), (1, 1)))
    for r in range(i + 1, n + 1):
        rels.add(((r + 1, r + 1), (r, r)))
    for r in range(2, i + 1):
        rels.add(((r, r), (r + 1, r + 1)))
    C = RelationSet(n, frozenset(rels))
    return _validated(T, C)


# ---------------------------------------------------------------------------
# JSON


def tableau_to_json(T):
    return {"n": T.n, "rows": [[format_rational(e) for e in row] for row in T.rows]}


def tableau_from_json(obj):
    return tableau(int(obj["n"]), [[parse_rational(e) for e in row] for row in obj["rows"]])


def shift_to_json(z):
    return [list(row) for row in z]


def shift_from_json(obj):
    return tuple(tuple(int(x) for x in row) for row in obj)
