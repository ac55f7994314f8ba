"""Eulerian vectors, presentation switching and the Tutte-Martin polynomial.

The Tutte-Martin polynomial is kept in the shifted variable ``s = t - q``:
``M = sum_d N_d * s**d`` where ``N_d`` counts complete vectors ``C`` with
``dim(L ∩ Ĉ) = d``.  ``N_0`` is the number of Eulerian vectors.
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded, InvalidArgument, InvalidOperation
from .graph import (
    DEFAULT_BUDGET,
    LabeledGraph,
    canonical_key,
    decode_key,
    delete_vertex,
    scale_vertex,
    star,
)
from .isotropic import (
    BlockDiagMatrix,
    KVector,
    check_presentation,
    intersect_dim,
    kstar_reps,
)
from .linalg import Echelon, inverse

__all__ = [
    "TutteMartinPoly",
    "is_eulerian",
    "count_eulerian",
    "tutte_martin_direct",
    "tutte_martin_recursive",
    "switch_presentation",
    "scale_presentation",
    "eulerian_to_presentation",
    "switching_classes",
    "complete_vectors",
]


@dataclass(frozen=True)
class TutteMartinPoly:
    q: int
    coeffs: tuple  # coeffs[d] = N_d, trailing zeros stripped

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def one(cls, q):
        return cls(q, (1,))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return TutteMartinPoly(
            self.q, tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m))
        )

    def times_int(self, k):
        return TutteMartinPoly(self.q, tuple(k * c for c in self.coeffs))

    def times_t(self):
        """Multiply by ``t = s + q``."""
        c = self.coeffs
        out = [0] * (len(c) + 1)
        for d, a in enumerate(c):
            out[d] += self.q * a
            out[d + 1] += a
        return TutteMartinPoly(self.q, tuple(out))

    def evaluate(self, t):
        s = t - self.q
        return sum(a * s**d for d, a in enumerate(self.coeffs))

    @property
    def epsilon(self):
        return self.coeffs[0] if self.coeffs else 0

    def total(self):
        return sum(self.coeffs)

    def as_dict(self):
        return {str(d): a for d, a in enumerate(self.coeffs)}


def complete_vectors(q, n):
    """Every complete vector of K^V, coordinates ranging over K \\ {0} in lexicographic order."""
    points = [(x, y) for x in range(q) for y in range(q) if x or y]
    for combo in itertools.product(points, repeat=n):
        yield KVector.from_pairs(q, combo)


def is_eulerian(L, A):
    return intersect_dim(L, A) == 0


def _coordinate_rows(L):
    """``rows[v]`` lists ``(point, r)`` for every nonzero point of K.

    ``r`` is row v of ``diag(X) Qᵀ - diag(Y) Pᵀ`` when ``C(v) = point``; the
    left kernel of that n x n matrix is ``L ∩ Ĉ``, so its corank is the
    intersection dimension.
    """
    f = L.field
    n = L.n
    P, Q = L.block_columns()
    points = [(x, y) for x in range(f.q) for y in range(f.q) if x or y]
    out = []
    for v in range(n):
        pcol = [P[u][v] for u in range(n)]
        qcol = [Q[u][v] for u in range(n)]
        opts = []
        for x, y in points:
            mx, my = f.mul[x], f.mul[y]
            opts.append(((x, y), [f.sub[mx[b]][my[a]] for a, b in zip(pcol, qcol)]))
        out.append(opts)
    return out


def _check_budget(q, n, budget):
    total = (q * q - 1) ** n
    if total > budget:
        raise BudgetExceeded(f"{total} complete vectors exceed budget {budget}")


def _histogram(f, rows, start, prefix=()):
    n = len(rows)
    hist = [0] * (n + 1)
    ech = Echelon(f)
    deficit = 0
    for r in prefix:
        if not ech.push(r):
            deficit += 1

    def dfs(v, deficit):
        if v == n:
            hist[deficit] += 1
            return
        last = v == n - 1
        for _, r in rows[v]:
            if last:
                hist[deficit + (not ech.independent(r))] += 1
            elif ech.push(r):
                dfs(v + 1, deficit)
                ech.pop()
            else:
                dfs(v + 1, deficit + 1)

    dfs(start, deficit)
    return hist


def _histogram_job(args):
    L, first = args
    rows = _coordinate_rows(L)
    return _histogram(L.field, rows, 1, prefix=(rows[0][first][1],))


def tutte_martin_direct(L, budget=DEFAULT_BUDGET, jobs=1):
    """Histogram of ``dim(L ∩ Ĉ)`` over all ``(q²-1)^n`` complete vectors.

    ``jobs > 1`` splits the sum over the first coordinate across processes.
    """
    _check_budget(L.q, L.n, budget)
    f = L.field
    if L.n == 0:
        return TutteMartinPoly.one(L.q)
    rows = _coordinate_rows(L)
    if jobs > 1:
        hist = [0] * (L.n + 1)
        with ProcessPoolExecutor(jobs) as pool:
            for h in pool.map(_histogram_job, [(L, i) for i in range(len(rows[0]))]):
                hist = [a + b for a, b in zip(hist, h)]
    else:
        hist = _histogram(f, rows, 0)
    return TutteMartinPoly(L.q, tuple(hist))


def count_eulerian(L, budget=DEFAULT_BUDGET):
    """Number of complete ``A`` with ``Â ∩ L = 0``; dependent prefixes are pruned."""
    _check_budget(L.q, L.n, budget)
    f = L.field
    n = L.n
    rows = _coordinate_rows(L)
    ech = Echelon(f)

    def dfs(v):
        if v == n:
            return 1
        total = 0
        for _, r in rows[v]:
            if ech.push(r):
                total += dfs(v + 1)
                ech.pop()
        return total

    return dfs(0)


# -- recursion on graphs ---------------------------------------------------------


@lru_cache(maxsize=None)
def _tm_by_key(key):
    G = decode_key(key)
    q, n = G.q, G.n
    if n == 0:
        return TutteMartinPoly.one(q)
    f = G.field
    for v in range(n):
        if not any(G.row(v)):
            return _tm_by_key(canonical_key(delete_vertex(G, v))).times_t().times_int(q - 1)
    v = 0
    w = G.neighbors(v)[0]
    s = f.neg[f.inv[f.mul[G.label(v, w)][G.label(v, w)]]]
    switched = star(star(G, w, s), v, 1)
    acc = _tm_by_key(canonical_key(delete_vertex(switched, v)))
    for r in range(q):
        acc = acc + _tm_by_key(canonical_key(delete_vertex(star(G, v, r), v)))
    return acc.times_int(q - 1)


def tutte_martin_recursive(G):
    """Tutte-Martin polynomial of ``G`` by vertex recursion, memoised on canonical keys.

    An isolated vertex contributes a factor ``(q-1) t``.  Otherwise, for the
    first vertex ``v`` and its first neighbour ``w``, the q+1 minors at ``v``
    have fundamental graphs ``G *_r v - v`` (r in GF(q)) and
    ``G *_{-g_vw^-2} w *_1 v - v``.
    """
    return _tm_by_key(canonical_key(G))


# -- presentations ---------------------------------------------------------------


def switch_presentation(G, D, v, r):
    """``(G *_r v, A + r B_v, B + r g(v)^2 × A)`` for ``D = D(A, B)``."""
    check_presentation(D)
    f = G.field
    add, mul = f.add, f.mul
    g = G.row(v)
    X, Y, Z, T = list(D.X), list(D.Y), list(D.Z), list(D.T)
    X[v] = add[X[v]][mul[r][D.Z[v]]]
    Y[v] = add[Y[v]][mul[r][D.T[v]]]
    for w in range(G.n):
        c = mul[r][mul[g[w]][g[w]]]
        if c:
            Z[w] = add[Z[w]][mul[c][D.X[w]]]
            T[w] = add[T[w]][mul[c][D.Y[w]]]
    D2 = BlockDiagMatrix(G.q, Z, T, X, Y)
    check_presentation(D2)
    return star(G, v, r), D2


def scale_presentation(G, D, v, s):
    """``(G o_s v, A + (s^-1 - 1) A_v, B + (s - 1) B_v)``."""
    if s == 0:
        raise InvalidOperation("vertex scaling by zero")
    check_presentation(D)
    f = G.field
    si = f.inv[s]
    X, Y, Z, T = list(D.X), list(D.Y), list(D.Z), list(D.T)
    X[v], Y[v] = f.mul[si][X[v]], f.mul[si][Y[v]]
    Z[v], T[v] = f.mul[s][Z[v]], f.mul[s][T[v]]
    D2 = BlockDiagMatrix(G.q, Z, T, X, Y)
    check_presentation(D2)
    return scale_vertex(G, v, s), D2


def eulerian_to_presentation(L, A):
    """Graphic presentation ``(G, B)`` with Eulerian vector ``A`` and ``det D(A, B) = I``.

    Row v of the presentation is the unique element of L whose coordinates
    off v are multiples of A and whose v-th coordinate pairs to 1 with A(v).
    Those n conditions form the linear system ``U M = I`` with
    ``M[u][w] = <basis_u(w), A(w)>``, and M is invertible exactly when A is
    Eulerian.
    """
    if not A.is_complete():
        raise InvalidArgument("vector is not complete")
    f = L.field
    n = L.n
    M = [
        [f.sub[f.mul[r[w]][A.Y[w]]][f.mul[A.X[w]][r[n + w]]] for w in range(n)] for r in L.basis
    ]
    U = inverse(f, M) if n else []
    if U is None:
        raise InvalidArgument("vector is not Eulerian for this system")
    rows = []
    for v in range(n):
        row = [0] * (2 * n)
        for cu, b in zip(U[v], L.basis):
            if cu:
                mc = f.mul[cu]
                row = [f.add[a][mc[x]] for a, x in zip(row, b)]
        rows.append(row)
    matrix = [[0] * n for _ in range(n)]
    Z, T = [0] * n, [0] * n
    for v, row in enumerate(rows):
        Z[v], T[v] = row[v], row[n + v]
        for w in range(n):
            if w == v:
                continue
            x, y = row[w], row[n + w]
            matrix[v][w] = f.div(x, A.X[w]) if A.X[w] else f.div(y, A.Y[w])
    G = LabeledGraph.from_matrix(L.q, matrix)
    return G, KVector(L.q, Z, T)


def switching_classes(L, A, v):
    """Classes ``x`` of K* for which replacing ``A(v)`` by ``x`` keeps A Eulerian."""
    if not is_eulerian(L, A):
        raise InvalidArgument("vector is not Eulerian for this system")
    return {x for x in kstar_reps(L.q) if is_eulerian(L, A.replace(v, x))}
