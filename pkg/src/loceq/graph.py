"""Labeled graphs over GF(q) and the two local operators.

A graph on ``n`` vertices is stored as the tuple of its ``n(n-1)/2`` upper
triangle labels in row-major order, ``(g01, g02, ..., g0n-1, g12, ...)``.
The diagonal is implicitly zero and ``g[w][v] == g[v][w]``.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded, GraphFormatError, InvalidArgument, InvalidOperation
from .gf import field

__all__ = [
    "LabeledGraph",
    "pair_index",
    "star",
    "scale_vertex",
    "scale_graph",
    "canonical_key",
    "decode_key",
    "is_connected",
    "all_graphs",
    "delete_vertex",
    "parse_graph",
    "format_graph",
    "read_graph",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 2_000_000


@lru_cache(maxsize=None)
def pair_index(n):
    """``idx[u][w]`` is the position of the pair {u, w} in the label tuple (-1 on the diagonal)."""
    idx = [[-1] * n for _ in range(n)]
    k = 0
    for u in range(n):
        for w in range(u + 1, n):
            idx[u][w] = idx[w][u] = k
            k += 1
    return tuple(tuple(row) for row in idx)


@dataclass(frozen=True)
class LabeledGraph:
    q: int
    n: int
    labels: tuple

    def __post_init__(self):
        if self.n < 0:
            raise InvalidArgument("negative vertex count")
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) != self.n * (self.n - 1) // 2:
            raise InvalidArgument(f"expected {self.n * (self.n - 1) // 2} labels, got {len(labels)}")
        f = field(self.q)
        if any(not (0 <= a < f.q) for a in labels):
            raise InvalidArgument(f"label out of range for GF({self.q})")

    @property
    def field(self):
        return field(self.q)

    @classmethod
    def empty(cls, q, n):
        return cls(q, n, (0,) * (n * (n - 1) // 2))

    @classmethod
    def from_edges(cls, q, n, edges):
        """Build from ``(u, v, label)`` triples; unlisted pairs are 0."""
        labels = [0] * (n * (n - 1) // 2)
        idx = pair_index(n)
        for u, v, lab in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"bad pair ({u}, {v}) for n={n}")
            labels[idx[u][v]] = lab
        return cls(q, n, tuple(labels))

    @classmethod
    def from_matrix(cls, q, m):
        n = len(m)
        for u in range(n):
            if m[u][u]:
                raise InvalidArgument("nonzero diagonal")
            for w in range(u + 1, n):
                if m[u][w] != m[w][u]:
                    raise InvalidArgument("matrix is not symmetric")
        return cls(q, n, tuple(m[u][w] for u in range(n) for w in range(u + 1, n)))

    def label(self, u, w):
        if u == w:
            return 0
        return self.labels[pair_index(self.n)[u][w]]

    def row(self, v):
        idx = pair_index(self.n)[v]
        return tuple(0 if w == v else self.labels[idx[w]] for w in range(self.n))

    def matrix(self):
        return [list(self.row(v)) for v in range(self.n)]

    def neighbors(self, v):
        return [w for w, a in enumerate(self.row(v)) if a]

    def edges(self):
        """Nonzero ``(u, w, label)`` with ``u < w`` in lexicographic order."""
        out = []
        for (u, w), a in zip(itertools.combinations(range(self.n), 2), self.labels):
            if a:
                out.append((u, w, a))
        return out

    def _check_vertex(self, v):
        if not (0 <= v < self.n):
            raise InvalidArgument(f"vertex {v} out of range for n={self.n}")


# -- raw label-tuple kernels (shared with the orbit BFS) ----------------------


def _star_labels(labels, n, f, v, r):
    if r == 0:
        return labels
    idx = pair_index(n)
    iv = idx[v]
    nb = [(u, labels[iv[u]]) for u in range(n) if u != v and labels[iv[u]]]
    if len(nb) < 2:
        return labels
    add, mul = f.add, f.mul
    mr = mul[r]
    out = list(labels)
    for i, (u, gu) in enumerate(nb):
        mrg = mul[mr[gu]]
        iu = idx[u]
        for w, gw in nb[i + 1:]:
            k = iu[w]
            out[k] = add[out[k]][mrg[gw]]
    return tuple(out)


def _scale_vertex_labels(labels, n, f, v, s):
    iv = pair_index(n)[v]
    ms = f.mul[s]
    out = list(labels)
    for u in range(n):
        if u != v:
            k = iv[u]
            out[k] = ms[out[k]]
    return tuple(out)


# -- operators -----------------------------------------------------------------


def star(G, v, r):
    """``G *_r v``: add ``r*g[v][u]*g[v][w]`` to every label among v's neighbours."""
    G._check_vertex(v)
    return LabeledGraph(G.q, G.n, _star_labels(G.labels, G.n, G.field, v, r))


def scale_vertex(G, v, s):
    """``G o_s v``: multiply every label incident to ``v`` by ``s != 0``."""
    G._check_vertex(v)
    if s == 0:
        raise InvalidOperation("vertex scaling by zero")
    return LabeledGraph(G.q, G.n, _scale_vertex_labels(G.labels, G.n, G.field, v, s))


def scale_graph(G, c):
    if c == 0:
        raise InvalidOperation("graph scaling by zero")
    mc = G.field.mul[c]
    return LabeledGraph(G.q, G.n, tuple(mc[a] for a in G.labels))


def delete_vertex(G, v):
    G._check_vertex(v)
    keep = [u for u in range(G.n) if u != v]
    idx = pair_index(G.n)
    labels = tuple(G.labels[idx[a][b]] for i, a in enumerate(keep) for b in keep[i + 1:])
    return LabeledGraph(G.q, G.n - 1, labels)


# -- encodings -----------------------------------------------------------------


def canonical_key(G):
    """Injective byte encoding ``q, n, labels...``; compares lexicographically by labels."""
    return bytes((G.q, G.n)) + bytes(G.labels)


def decode_key(key):
    q, n = key[0], key[1]
    return LabeledGraph(q, n, tuple(key[2:]))


def is_connected(G):
    n = G.n
    if n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in G.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _labels_connected(labels, n):
    if n <= 1:
        return True
    idx = pair_index(n)
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        iv = idx[v]
        for w in range(n):
            if w != v and not (seen >> w) & 1 and labels[iv[w]]:
                seen |= 1 << w
                frontier.append(w)
    return seen == (1 << n) - 1


def all_graphs(n, q, connected_only=False, budget=DEFAULT_BUDGET):
    """Yield every labeled graph on ``n`` vertices over GF(q), in increasing key order."""
    field(q)
    m = n * (n - 1) // 2
    total = q**m
    if total > budget:
        raise BudgetExceeded(f"{total} graphs for n={n}, q={q} exceeds budget {budget}")
    return (
        LabeledGraph(q, n, labels)
        for labels in itertools.product(range(q), repeat=m)
        if not connected_only or _labels_connected(labels, n)
    )


# -- text format -----------------------------------------------------------------


def parse_graph(text):
    """Parse the ``q n`` header + ``u v label`` lines format.

    Blank lines and ``#`` comments are ignored.
    """
    header = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 2:
                raise GraphFormatError("header must be 'q n'", lineno)
            q, n = nums
            try:
                field(q)
            except Exception as exc:
                raise GraphFormatError(str(exc), lineno) from None
            if n < 0:
                raise GraphFormatError("negative vertex count", lineno)
            header = (q, n)
            continue
        if len(nums) != 3:
            raise GraphFormatError("edge line must be 'u v label'", lineno)
        u, v, lab = nums
        q, n = header
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"bad vertex pair ({u}, {v})", lineno)
        if not (0 <= lab < q):
            raise GraphFormatError(f"label {lab} not in GF({q})", lineno)
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise GraphFormatError(f"duplicate pair {pair}", lineno)
        seen.add(pair)
        edges.append((u, v, lab))
    if header is None:
        raise GraphFormatError("empty input")
    return LabeledGraph.from_edges(header[0], header[1], edges)


def format_graph(G):
    lines = [f"{G.q} {G.n}"]
    lines += [f"{u} {w} {a}" for u, w, a in G.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path):
    with open(path) as fh:
        return parse_graph(fh.read())
