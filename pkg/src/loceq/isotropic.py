"""Vectors of K^V, isotropic systems and graphic presentations.

Layout conventions used throughout:

* A vector of K^V is a pair ``(X, Y)`` of length-n tuples; coordinate ``v`` is
  the point ``(X[v], Y[v])`` of K = GF(q)^2.
* A row of an ``n x 2n`` basis matrix is ``X[0..n-1] + Y[0..n-1]``: the first
  block holds x-coordinates, the second block y-coordinates.
* A :class:`BlockDiagMatrix` acts on row vectors.  At coordinate ``v`` it is
  the 2x2 matrix ``[[Z, T], [X, Y]]``, so ``(x, y) -> (x*Z + y*X, x*T + y*Y)``.
"""

import enum
from dataclasses import dataclass

from .errors import GraphFormatError, InvalidArgument, InvalidPresentation, InvariantViolation
from .gf import field
from .graph import LabeledGraph
from .linalg import Echelon, inverse, nullspace, rank, rref, transpose

__all__ = [
    "KVector",
    "BlockDiagMatrix",
    "IsotropicSystem",
    "ZERO",
    "inner",
    "pair_form",
    "from_graph",
    "standard_system",
    "is_isotropic",
    "extract_presentation",
    "intersect_dim",
    "minor",
    "kstar_reps",
    "kstar_class",
    "check_presentation",
    "format_system",
    "parse_system",
]


class Marker(enum.Enum):
    ZERO = "zero"


#: Selects the minor ``{C in L : C(v) = 0}``; distinct from the zero point of K.
ZERO = Marker.ZERO


def pair_form(f, a, b):
    """``<(x, y), (x', y')> = x*y' - x'*y`` on K."""
    return f.sub[f.mul[a[0]][b[1]]][f.mul[b[0]][a[1]]]


def kstar_reps(q):
    """The q+1 projective classes of K \\ {0}: ``(1, y)`` for each y, then ``(0, 1)``."""
    return tuple((1, y) for y in range(q)) + ((0, 1),)


def kstar_class(f, a):
    """Representative in :func:`kstar_reps` order of the class of a nonzero point."""
    x, y = a
    if x:
        return (1, f.div(y, x))
    if y:
        return (0, 1)
    raise InvalidArgument("zero point has no projective class")


@dataclass(frozen=True)
class KVector:
    q: int
    X: tuple
    Y: tuple

    def __post_init__(self):
        object.__setattr__(self, "X", tuple(self.X))
        object.__setattr__(self, "Y", tuple(self.Y))
        if len(self.X) != len(self.Y):
            raise InvalidArgument("X and Y lengths differ")

    @property
    def n(self):
        return len(self.X)

    @classmethod
    def from_pairs(cls, q, pairs):
        pairs = list(pairs)
        return cls(q, tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    def pairs(self):
        return list(zip(self.X, self.Y))

    def coord(self, v):
        return (self.X[v], self.Y[v])

    def is_complete(self):
        return all(x or y for x, y in zip(self.X, self.Y))

    def replace(self, v, point):
        X, Y = list(self.X), list(self.Y)
        X[v], Y[v] = point
        return KVector(self.q, X, Y)

    def row(self):
        return list(self.X) + list(self.Y)


def inner(A, B):
    if A.n != B.n or A.q != B.q:
        raise InvalidArgument("dimension mismatch")
    f = field(A.q)
    s = 0
    for v in range(A.n):
        s = f.add[s][pair_form(f, A.coord(v), B.coord(v))]
    return s


@dataclass(frozen=True)
class BlockDiagMatrix:
    """``D(A, B) = [[diag Z, diag T], [diag X, diag Y]]`` for ``A = (X, Y)``, ``B = (Z, T)``."""

    q: int
    Z: tuple
    T: tuple
    X: tuple
    Y: tuple

    def __post_init__(self):
        for name in ("Z", "T", "X", "Y"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not len(self.Z) == len(self.T) == len(self.X) == len(self.Y):
            raise InvalidArgument("diagonal lengths differ")

    @property
    def n(self):
        return len(self.Z)

    @classmethod
    def identity(cls, q, n):
        return cls(q, (1,) * n, (0,) * n, (0,) * n, (1,) * n)

    @classmethod
    def from_vectors(cls, A, B):
        """Build ``D(A, B)`` from ``A = (X, Y)`` and ``B = (Z, T)``."""
        return cls(A.q, B.X, B.Y, A.X, A.Y)

    @classmethod
    def from_blocks(cls, q, blocks):
        """From per-coordinate 2x2 matrices ``((Z, T), (X, Y))``."""
        blocks = list(blocks)
        return cls(
            q,
            [b[0][0] for b in blocks],
            [b[0][1] for b in blocks],
            [b[1][0] for b in blocks],
            [b[1][1] for b in blocks],
        )

    @property
    def A(self):
        return KVector(self.q, self.X, self.Y)

    @property
    def B(self):
        return KVector(self.q, self.Z, self.T)

    def block(self, v):
        return ((self.Z[v], self.T[v]), (self.X[v], self.Y[v]))

    def det_diag(self):
        """Per-coordinate determinants ``Z*Y - X*T`` (equal to ``<B(v), A(v)>``)."""
        f = field(self.q)
        return tuple(
            f.sub[f.mul[z][y]][f.mul[x][t]] for z, t, x, y in zip(self.Z, self.T, self.X, self.Y)
        )

    def compose(self, other):
        """Matrix product ``self @ other`` (apply ``self`` first to a row vector)."""
        f = field(self.q)
        add, mul = f.add, f.mul
        blocks = []
        for v in range(self.n):
            (a, b), (c, d) = self.block(v)
            (e, g), (h, k) = other.block(v)
            blocks.append(
                (
                    (add[mul[a][e]][mul[b][h]], add[mul[a][g]][mul[b][k]]),
                    (add[mul[c][e]][mul[d][h]], add[mul[c][g]][mul[d][k]]),
                )
            )
        return BlockDiagMatrix.from_blocks(self.q, blocks)

    def inverse(self):
        f = field(self.q)
        blocks = []
        for v, det in enumerate(self.det_diag()):
            if det == 0:
                raise InvalidArgument(f"block {v} is singular")
            di = f.inv[det]
            (a, b), (c, d) = self.block(v)
            blocks.append(
                ((f.mul[di][d], f.mul[di][f.neg[b]]), (f.mul[di][f.neg[c]], f.mul[di][a]))
            )
        return BlockDiagMatrix.from_blocks(self.q, blocks)

    def apply_row(self, row):
        """``row @ D`` for a length-2n row in block layout."""
        f = field(self.q)
        add, mul = f.add, f.mul
        n = self.n
        x, y = row[:n], row[n:]
        return [add[mul[x[v]][self.Z[v]]][mul[y[v]][self.X[v]]] for v in range(n)] + [
            add[mul[x[v]][self.T[v]]][mul[y[v]][self.Y[v]]] for v in range(n)
        ]


def check_presentation(D):
    """Return the common value ``c`` of ``det_diag(D)``; raise unless constant and nonzero."""
    dets = set(D.det_diag())
    if len(dets) > 1:
        raise InvalidPresentation(f"det D is not constant: {D.det_diag()}")
    c = dets.pop() if dets else 1
    if c == 0:
        raise InvalidPresentation("det D is zero")
    return c


def _gram_is_zero(f, rows, n):
    for i, a in enumerate(rows):
        for b in rows[i:]:
            s = 0
            for v in range(n):
                s = f.add[s][f.sub[f.mul[a[v]][b[n + v]]][f.mul[b[v]][a[n + v]]]]
            if s:
                return False
    return True


def is_isotropic(basis, q):
    """True iff ``basis`` (n rows of length 2n) has rank n and zero symplectic Gram matrix."""
    rows = [list(r) for r in basis]
    n = len(rows)
    if any(len(r) != 2 * n for r in rows):
        return False
    f = field(q)
    return rank(f, rows) == n and _gram_is_zero(f, rows, n)


@dataclass(frozen=True)
class IsotropicSystem:
    """An n-dimensional self-orthogonal subspace of K^V, kept in canonical RREF.

    Two instances are equal iff they are the same subspace.
    """

    q: int
    n: int
    basis: tuple

    @classmethod
    def from_rows(cls, q, rows, n=None):
        f = field(q)
        rows = [list(r) for r in rows]
        if n is None:
            n = len(rows[0]) // 2 if rows else 0
        red, _ = rref(f, rows)
        if len(red) != n or any(len(r) != 2 * n for r in red):
            raise InvariantViolation(f"basis has rank {len(red)}, expected {n}")
        if not _gram_is_zero(f, red, n):
            raise InvariantViolation("basis is not self-orthogonal")
        return cls(q, n, tuple(tuple(r) for r in red))

    @property
    def field(self):
        return field(self.q)

    def block_columns(self):
        """Return ``(P, Q)``: the first and second n-column blocks as lists of rows."""
        n = self.n
        return [list(r[:n]) for r in self.basis], [list(r[n:]) for r in self.basis]

    def contains(self, row):
        """Membership test: a vector of K^V lies in L iff it is orthogonal to L."""
        f = self.field
        n = self.n
        for b in self.basis:
            s = 0
            for v in range(n):
                s = f.add[s][f.sub[f.mul[row[v]][b[n + v]]][f.mul[b[v]][row[n + v]]]]
            if s:
                return False
        return True


def _presentation_rows(G, D):
    f = field(G.q)
    add, mul = f.add, f.mul
    n = G.n
    rows = []
    for v in range(n):
        g = G.row(v)
        xs = [mul[g[w]][D.X[w]] for w in range(n)]
        ys = [mul[g[w]][D.Y[w]] for w in range(n)]
        xs[v] = add[xs[v]][D.Z[v]]
        ys[v] = add[ys[v]][D.T[v]]
        rows.append(xs + ys)
    return rows


def from_graph(G, D):
    """The isotropic system spanned by the rows of ``(I | G) . D``."""
    if D.n != G.n or D.q != G.q:
        raise InvalidArgument("graph and D disagree on n or q")
    check_presentation(D)
    return IsotropicSystem.from_rows(G.q, _presentation_rows(G, D), G.n)


def standard_system(G):
    return from_graph(G, BlockDiagMatrix.identity(G.q, G.n))


def _swap_search(f, P, Q, n):
    """Choose per coordinate the x-column or y-column so the n chosen columns are independent.

    Depth-first, trying "keep" before "swap" at each coordinate, and cutting a
    branch as soon as a chosen column is dependent on earlier ones.
    """
    cols_x = [[P[u][v] for u in range(n)] for v in range(n)]
    cols_y = [[Q[u][v] for u in range(n)] for v in range(n)]
    ech = Echelon(f)
    choice = []

    def dfs(v):
        if v == n:
            return True
        for swap, col in ((False, cols_x[v]), (True, cols_y[v])):
            if ech.push(col):
                choice.append(swap)
                if dfs(v + 1):
                    return True
                choice.pop()
                ech.pop()
        return False

    if not dfs(0):
        raise InvariantViolation("no coordinate swap gives a full-rank first block")
    return choice


def extract_presentation(L):
    """Find ``(G, D)`` with ``(I | G) . D`` spanning ``L`` and ``det D = I``.

    Swapped coordinates use the symplectic swap ``(x, y) -> (-y, x)`` so the
    transformed basis stays isotropic.
    """
    f = L.field
    n = L.n
    if n == 0:
        return LabeledGraph(L.q, 0, ()), BlockDiagMatrix.identity(L.q, 0)
    P, Q = L.block_columns()
    swaps = _swap_search(f, P, Q, n)
    one, mone = 1, f.neg[1]
    D1 = BlockDiagMatrix.from_blocks(
        L.q, [((0, one), (mone, 0)) if s else ((1, 0), (0, 1)) for s in swaps]
    )
    rows = [D1.apply_row(list(r)) for r in L.basis]
    first = [r[:n] for r in rows]
    U = inverse(f, first)
    if U is None:
        raise InvariantViolation("first block not invertible after swap search")
    second = [r[n:] for r in rows]
    Gp = [[f.dot(U[i], [second[k][j] for k in range(n)]) for j in range(n)] for i in range(n)]
    # zero the diagonal: (I | G0 + diag h) = (I | G0) . [[I, diag h], [0, I]]
    h = [Gp[v][v] for v in range(n)]
    for v in range(n):
        Gp[v][v] = 0
    D2 = BlockDiagMatrix(L.q, (1,) * n, h, (0,) * n, (1,) * n)
    Dp = D2.compose(D1.inverse())
    # symmetrize: G = G' det D', then rescale the lower blocks by det D'^{-1}
    dp = Dp.det_diag()
    Gm = [[f.mul[Gp[u][w]][dp[w]] for w in range(n)] for u in range(n)]
    dinv = [f.inv[d] for d in dp]
    D = BlockDiagMatrix(
        L.q,
        Dp.Z,
        Dp.T,
        [f.mul[dinv[v]][Dp.X[v]] for v in range(n)],
        [f.mul[dinv[v]][Dp.Y[v]] for v in range(n)],
    )
    try:
        G = LabeledGraph.from_matrix(L.q, Gm)
    except InvalidArgument as exc:
        raise InvariantViolation(f"extracted matrix is not a graph: {exc}") from None
    if from_graph(G, D) != L:
        raise InvariantViolation("extracted presentation spans a different system")
    return G, D


def intersect_dim(L, C):
    """``dim(L ∩ Ĉ)`` for a complete vector ``C``, via the rank of the stacked bases."""
    if C.n != L.n:
        raise InvalidArgument("dimension mismatch")
    if not C.is_complete():
        raise InvalidArgument("vector is not complete")
    n = L.n
    rows = [list(r) for r in L.basis]
    for v in range(n):
        row = [0] * (2 * n)
        row[v], row[n + v] = C.X[v], C.Y[v]
        rows.append(row)
    return 2 * n - rank(L.field, rows)


def minor(L, v, x):
    """``L|^v_x``: restrict to ``{C : <C(v), x> = 0}`` (or ``C(v) = 0`` for :data:`ZERO`), drop v."""
    n = L.n
    if not (0 <= v < n):
        raise InvalidArgument(f"vertex {v} out of range")
    f = L.field
    basis = [list(r) for r in L.basis]
    if x is ZERO:
        functionals = [[r[v], r[n + v]] for r in basis]
    else:
        if not (x[0] or x[1]):
            raise InvalidArgument("use ZERO, not the zero point, for the C(v)=0 minor")
        functionals = [[pair_form(f, (r[v], r[n + v]), x)] for r in basis]
    # coefficient vectors c with sum_u c_u * functionals[u] == 0
    coeffs = nullspace(f, transpose(functionals), n)
    sub_rows = []
    for c in coeffs:
        row = [0] * (2 * n)
        for cu, r in zip(c, basis):
            if cu:
                mc = f.mul[cu]
                row = [f.add[a][mc[b]] for a, b in zip(row, r)]
        sub_rows.append([a for i, a in enumerate(row) if i != v and i != n + v])
    red, _ = rref(f, sub_rows)
    if len(red) != n - 1:
        raise InvalidArgument(f"minor at {v} has dimension {len(red)}, expected {n - 1}")
    return IsotropicSystem.from_rows(L.q, red, n - 1)


def format_system(L):
    lines = [f"{L.q} {L.n}"]
    lines += [" ".join(str(a) for a in r) for r in L.basis]
    return "\n".join(lines) + "\n"


def parse_system(text):
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    numbered = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
    if not numbered:
        raise GraphFormatError("empty input")
    lineno, head = numbered[0]
    try:
        q, n = (int(t) for t in head.split())
        field(q)
    except Exception:
        raise GraphFormatError("header must be 'q n' with supported q", lineno) from None
    rows = []
    for lineno, ln in numbered[1:]:
        try:
            row = [int(t) for t in ln.split()]
        except ValueError:
            raise GraphFormatError("non-integer entry", lineno) from None
        if len(row) != 2 * n or any(not 0 <= a < q for a in row):
            raise GraphFormatError(f"row must hold {2 * n} elements of GF({q})", lineno)
        rows.append(row)
    if len(rows) != n:
        raise GraphFormatError(f"expected {n} rows, got {len(rows)}")
    if not is_isotropic(rows, q):
        raise GraphFormatError("rows do not span an isotropic system")
    return IsotropicSystem.from_rows(q, rows, n)
