"""Dense linear algebra over GF(q) on plain lists of ints.

Matrices are lists of rows.  Everything is table lookups on a
:class:`~loceq.gf.Field`; nothing here allocates numpy arrays because the
matrices involved are at most a few dozen entries wide.
"""

__all__ = ["rref", "rank", "nullspace", "inverse", "matmul", "transpose", "Echelon"]


def _axpy(f, c, x, y):
    """Return ``y - c*x`` elementwise."""
    sub, mulc = f.sub, f.mul[c]
    return [sub[b][mulc[a]] for a, b in zip(x, y)]


def rref(f, rows):
    """Reduced row-echelon form.

    Returns ``(nonzero_rows, pivots)``; zero rows are dropped so the number of
    rows returned is the rank.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = f.inv[m[r][c]]
        if inv != 1:
            mulinv = f.mul[inv]
            m[r] = [mulinv[a] for a in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                m[i] = _axpy(f, m[i][c], pr, m[i])
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(f, rows):
    return len(Echelon(f, rows))


def nullspace(f, rows, ncols):
    """Basis of ``{x : A x = 0}`` for the matrix ``A`` given by ``rows``."""
    red, pivots = rref(f, rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        x = [0] * ncols
        x[fc] = 1
        for row, pc in zip(red, pivots):
            if row[fc]:
                x[pc] = f.neg[row[fc]]
        basis.append(x)
    return basis


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(f, a, b):
    bt = transpose(b)
    return [[f.dot(row, col) for col in bt] for row in a]


def inverse(f, m):
    """Inverse of a square matrix, or ``None`` when singular."""
    n = len(m)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    red, pivots = rref(f, aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        return None
    return [row[n:] for row in red[:n]]


class Echelon:
    """Incrementally maintained echelon basis supporting push/pop.

    Rows are stored normalised (pivot entry 1) and each new row is reduced
    against all earlier ones, so independence of a candidate costs one pass.
    Used by the depth-first enumerations that grow a matrix one row at a time.
    """

    __slots__ = ("f", "rows")

    def __init__(self, f, rows=()):
        self.f = f
        self.rows = []  # list of (pivot, row)
        for r in rows:
            self.push(r)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        f = self.f
        sub, mul = f.sub, f.mul
        for p, r in self.rows:
            c = v[p]
            if c:
                mc = mul[c]
                v = [sub[a][mc[b]] for a, b in zip(v, r)]
        return v

    def push(self, v):
        """Add ``v``; return True if it was independent (and was stored)."""
        v = self.reduce(v)
        for p, a in enumerate(v):
            if a:
                if a != 1:
                    mi = self.f.mul[self.f.inv[a]]
                    v = [mi[b] for b in v]
                self.rows.append((p, v))
                return True
        return False

    def pop(self):
        self.rows.pop()

    def independent(self, v):
        return any(self.reduce(v))
