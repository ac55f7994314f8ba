"""The index λ(G) and the bineighborhood space ν(G).

λ(G) counts block-diagonal matrices ``D(A, B)`` with nonzero constant
determinant satisfying ``(I | G) D(A, B) [G; -I] = 0``.  Expanded, the
constraint is linear in ``(X, Y, Z, T)``::

    (diag Z + G diag X) G - diag T - G diag Y = 0

so the solution set is a nullspace, enumerated before the quadratic
determinant filter is applied.

Eliminating Y, Z and T leaves conditions on X alone: ``<g(v) × g(w), X> = 0``
for every non-adjacent pair, and for every edge ``g_vw^-1 <g(v) × g(w), X>``
must equal ``Y(v) + Y(w) - s`` for some Y and a constant s.  The latter is
solvable iff every alternating sum over an even closed walk vanishes, so
ν(G) is spanned by those walk sums together with the non-adjacent products.
"""

import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded, InvalidArgument
from .gf import field
from .graph import DEFAULT_BUDGET
from .isotropic import BlockDiagMatrix
from .linalg import nullspace, rank

__all__ = [
    "SolutionSet",
    "intsol_equations",
    "intsol_solutions",
    "lambda_index",
    "bineighborhood",
    "even_cycles",
    "cycle_vector",
    "walk_space",
    "nu_perp_dim",
    "nu_perp_from_solutions",
    "has_odd_cycle",
    "satisfies_intsol",
]


def intsol_equations(G):
    """Coefficient rows of the n² linear equations in unknowns ``X | Y | Z | T`` (4n columns)."""
    f = G.field
    n = G.n
    g = G.matrix()
    rows = []
    for u in range(n):
        for w in range(n):
            row = [0] * (4 * n)
            for k in range(n):
                row[k] = f.mul[g[u][k]][g[k][w]]  # X(k)
            row[n + w] = f.add[row[n + w]][f.neg[g[u][w]]]  # -g_uw Y(w)
            row[2 * n + u] = f.add[row[2 * n + u]][g[u][w]]  # g_uw Z(u)
            if u == w:
                row[3 * n + u] = f.add[row[3 * n + u]][f.neg[1]]  # -T(u)
            rows.append(row)
    return rows


def _split(vec, n):
    return vec[:n], vec[n:2 * n], vec[2 * n:3 * n], vec[3 * n:]


def _to_matrix(q, vec, n):
    X, Y, Z, T = _split(vec, n)
    return BlockDiagMatrix(q, Z, T, X, Y)


def satisfies_intsol(G, D):
    f = G.field
    vec = list(D.X) + list(D.Y) + list(D.Z) + list(D.T)
    return all(f.dot(row, vec) == 0 for row in intsol_equations(G))


def _const_nonzero(dets):
    d0 = dets[0] if dets else 1
    return d0 != 0 and all(d == d0 for d in dets)


@dataclass(frozen=True)
class SolutionSet:
    q: int
    n: int
    basis: tuple  # nullspace basis, each a 4n-vector X|Y|Z|T
    solutions: tuple  # BlockDiagMatrix values with constant nonzero det

    @property
    def dim(self):
        return len(self.basis)

    def iter_all(self):
        """Every element of the nullspace as a :class:`BlockDiagMatrix`."""
        f = field(self.q)
        for coeffs in itertools.product(range(self.q), repeat=len(self.basis)):
            vec = [0] * (4 * self.n)
            for c, b in zip(coeffs, self.basis):
                if c:
                    mc = f.mul[c]
                    vec = [f.add[a][mc[x]] for a, x in zip(vec, b)]
            yield _to_matrix(self.q, vec, self.n)


def intsol_solutions(G, budget=DEFAULT_BUDGET):
    f = G.field
    n = G.n
    basis = nullspace(f, intsol_equations(G), 4 * n)
    if G.q ** len(basis) > budget:
        raise BudgetExceeded(f"nullspace of dimension {len(basis)} exceeds budget {budget}")
    partial = SolutionSet(G.q, n, tuple(tuple(b) for b in basis), ())
    good = tuple(D for D in partial.iter_all() if _const_nonzero(D.det_diag()))
    return SolutionSet(G.q, n, partial.basis, good)


def lambda_index(G, budget=DEFAULT_BUDGET):
    """λ(G): the number of filtered solutions."""
    return len(intsol_solutions(G, budget).solutions)


def nu_perp_from_solutions(G):
    """Dimension of the projection of the solution space onto the X coordinates."""
    n = G.n
    basis = nullspace(G.field, intsol_equations(G), 4 * n)
    return rank(G.field, [b[:n] for b in basis])


# -- bineighborhood --------------------------------------------------------------


def even_cycles(G, max_cycles=1_000_000):
    """Simple cycles of even length >= 4 in the support graph.

    Each cycle is listed once, starting at its smallest vertex and oriented so
    that the second vertex is smaller than the last.
    """
    n = G.n
    adj = [G.neighbors(v) for v in range(n)]
    out = []
    for s in range(n):
        path = [s]
        on_path = {s}

        def dfs(v):
            for w in adj[v]:
                if w == s and len(path) >= 4 and len(path) % 2 == 0 and path[1] < path[-1]:
                    out.append(tuple(path))
                    if len(out) > max_cycles:
                        raise BudgetExceeded("too many cycles")
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    dfs(w)
                    path.pop()
                    on_path.discard(w)

        dfs(s)
    return out


def _hadamard(f, a, b):
    return [f.mul[x][y] for x, y in zip(a, b)]


def _weighted_sum(G, terms):
    """``Σ c * g_uw^-1 * g(u) × g(w)`` over ``(c, u, w)`` with ``g_uw != 0``."""
    f = G.field
    total = [0] * G.n
    for c, u, w in terms:
        k = f.mul[c][f.inv[G.label(u, w)]]
        if k:
            vec = _hadamard(f, G.row(u), G.row(w))
            total = [f.add[x][f.mul[k][y]] for x, y in zip(total, vec)]
    return total


def cycle_vector(G, cycle, literal=False):
    """Alternating sum ``Σ_i (-1)^i g(v_i) × g(v_{i+1})`` around an even closed walk.

    Each term is weighted by ``g_{v_i v_{i+1}}^-1``; that is the weight the
    solution equations produce when Y and Z are eliminated.  ``literal=True``
    weights by ``g_{v_i v_{i+1}}`` instead, which agrees only when every
    label is ±1.
    """
    f = G.field
    m = len(cycle)
    if m % 2:
        raise InvalidArgument("closed walk must have even length")
    total = [0] * G.n
    for i in range(m):
        a, b = cycle[i], cycle[(i + 1) % m]
        lab = G.label(a, b)
        if not lab:
            raise InvalidArgument(f"({a}, {b}) is not an edge")
        w = lab if literal else f.inv[lab]
        # 1-based index i+1: odd positions carry the minus sign
        coef = f.neg[w] if i % 2 == 0 else w
        vec = _hadamard(f, G.row(a), G.row(b))
        total = [f.add[x][f.mul[coef][y]] for x, y in zip(total, vec)]
    return total


def walk_space(G):
    """Basis of edge weightings ``c`` with zero sum at every vertex and zero total.

    These are exactly the linear combinations of alternating ±1 signings of
    even closed walks (in odd characteristic; the definition is used as is
    for q even).  Returns ``(edges, basis)``.
    """
    edges = [(u, w) for u, w, _ in G.edges()]
    if not edges:
        return edges, []
    rows = [[1 if v in e else 0 for e in edges] for v in range(G.n)]
    rows.append([1] * len(edges))
    return edges, nullspace(G.field, rows, len(edges))


def bineighborhood(G, literal=False):
    """Generators of ν(G), not reduced to a basis.

    By default: one vector per basis element of :func:`walk_space`, plus
    ``g(v) × g(w)`` over non-adjacent pairs.  ``literal=True`` uses simple
    even cycles with label weights instead of closed walks with inverse
    weights; that span can be too small (two odd cycles sharing a vertex)
    or wrong (labels other than ±1).
    """
    f = G.field
    if literal:
        gens = [cycle_vector(G, c, literal=True) for c in even_cycles(G)]
    else:
        edges, basis = walk_space(G)
        gens = [_weighted_sum(G, [(c, u, w) for c, (u, w) in zip(vec, edges) if c]) for vec in basis]
    for v in range(G.n):
        for w in range(v + 1, G.n):
            if G.label(v, w) == 0:
                gens.append(_hadamard(f, G.row(v), G.row(w)))
    return [g for g in gens if any(g)]


def nu_perp_dim(G, literal=False):
    """``n - dim ν(G)``."""
    gens = bineighborhood(G, literal)
    return G.n - (rank(G.field, gens) if gens else 0)


def has_odd_cycle(G):
    """True iff the support graph is not bipartite."""
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in G.neighbors(v):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return True
    return False
