"""Orbit enumeration under local operations and the counting identities.

The generators are ``star(., v, r)`` for ``r != 0`` and ``scale_vertex(., v, s)``
for ``s`` not in {0, 1}.  Orbits are computed by plain breadth-first closure
over raw label tuples; canonical keys are produced only for the results.
"""

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field as dc_field

from .errors import BudgetExceeded, IdentityViolation, InvalidArgument
from .eulerian import count_eulerian
from .gf import field, is_square
from .graph import (
    DEFAULT_BUDGET,
    LabeledGraph,
    _labels_connected,
    _scale_vertex_labels,
    _star_labels,
    canonical_key,
    decode_key,
    is_connected,
    scale_graph,
)
from .index import lambda_index
from .isotropic import standard_system

__all__ = [
    "Orbit",
    "CensusReport",
    "CountingReport",
    "orbit",
    "scalar_orbit",
    "are_equivalent",
    "census",
    "census_bounds",
    "verify_counting",
    "orbit_bound",
    "neighbors",
]


def label_string(key):
    """Upper-triangle labels of a canonical key as a digit string (q <= 9)."""
    return "".join(str(a) for a in key[2:])


def orbit_bound(q, n):
    """``(q-1)(q²-1)^n``, the largest possible orbit of a connected graph."""
    return (q - 1) * (q * q - 1) ** n


@dataclass(frozen=True)
class Orbit:
    representative: LabeledGraph
    members: frozenset  # canonical keys
    size: int

    def __contains__(self, G):
        return canonical_key(G) in self.members

    def graphs(self):
        return [decode_key(k) for k in sorted(self.members)]


def neighbors(labels, n, f):
    """All graphs one generator step away from ``labels`` (may repeat, may include itself)."""
    out = []
    for v in range(n):
        for r in f.nonzero:
            out.append(_star_labels(labels, n, f, v, r))
        for s in f.nonzero[1:]:
            out.append(_scale_vertex_labels(labels, n, f, v, s))
    return out


def _closure(start, n, f, budget):
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in neighbors(cur, n, f):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > budget:
                    raise BudgetExceeded(f"orbit exceeds {budget} members")
                queue.append(nxt)
    return seen


def _make_orbit(q, n, label_sets):
    keys = frozenset(bytes((q, n)) + bytes(lab) for lab in label_sets)
    rep = min(keys)
    return Orbit(LabeledGraph(q, n, tuple(rep[2:])), keys, len(keys))


def _default_budget(G):
    # disconnected graphs are not covered by the bound; fall back to the global cap
    if is_connected(G):
        return orbit_bound(G.q, G.n)
    return DEFAULT_BUDGET


def orbit(G, budget=None):
    """Breadth-first closure of ``{G}`` under the local operators."""
    if budget is None:
        budget = _default_budget(G)
    return _make_orbit(G.q, G.n, _closure(G.labels, G.n, G.field, budget))


def scalar_orbit(G, budget=None):
    """Union of ``orbit(cG)`` over all nonzero ``c``."""
    if budget is None:
        budget = 2 * _default_budget(G)
    f = G.field
    members = set()
    for c in f.nonzero:
        H = scale_graph(G, c)
        if H.labels in members:
            continue
        members |= _closure(H.labels, G.n, f, budget)
        if len(members) > budget:
            raise BudgetExceeded(f"scalar orbit exceeds {budget} members")
    return _make_orbit(G.q, G.n, members)


def are_equivalent(G, H, budget=None):
    if (G.q, G.n) != (H.q, H.n):
        raise InvalidArgument("graphs differ in q or n")
    return canonical_key(H) in orbit(G, budget).members


# -- census ----------------------------------------------------------------------


@dataclass
class CensusReport:
    n: int
    q: int
    connected_only: bool
    class_count: int
    graph_count: int
    size_histogram: dict  # orbit size -> number of orbits
    representatives: list  # canonical keys, increasing
    orbit_sizes: list  # aligned with representatives
    connected_class_count: int = 0
    all_class_count: int = 0
    bounds: dict = dc_field(default_factory=dict)

    def as_dict(self):
        return {
            "schema": "loceq.census/1",
            "n": self.n,
            "q": self.q,
            "connected_only": self.connected_only,
            "class_count": self.class_count,
            "graph_count": self.graph_count,
            "size_histogram": {str(k): v for k, v in sorted(self.size_histogram.items())},
            "representatives": [label_string(k) for k in self.representatives],
            "orbit_sizes": self.orbit_sizes,
            "connected_class_count": self.connected_class_count,
            "all_class_count": self.all_class_count,
            "bounds": self.bounds,
        }


def census_bounds(n, q, class_count):
    """Check ``q^(n²/2 - 5n/2 - 1) <= C(n) <= q^(n²/2 - n/2)``.

    Exponents are compared exactly as rationals; a lower bound below 1 is
    reported but is trivially satisfied by any nonempty census.
    """
    lo_exp = (n * n - 5 * n - 2) / 2
    hi_exp = (n * n - n) // 2
    hi = q**hi_exp
    # C >= q^lo_exp  <=>  C^2 >= q^(n²-5n-2)
    lo2 = n * n - 5 * n - 2
    lower_ok = class_count * class_count * q ** max(0, -lo2) >= q ** max(0, lo2)
    return {
        "lower_exponent": lo_exp,
        "lower_bound": q**lo_exp,
        "upper_bound": hi,
        "lower_ok": bool(lower_ok),
        "upper_ok": class_count <= hi,
        "lower_trivial": lo2 < 0,
    }


def census(n, q, connected_only=True, budget=DEFAULT_BUDGET):
    """Partition all labeled graphs into local-equivalence classes.

    Every graph is visited, so both the connected and the overall class
    counts are reported; ``connected_only`` selects which classes are listed
    and which count the bounds are checked against.  Connectivity is
    constant on orbits, so testing the first member is enough.
    """
    f = field(q)
    m = n * (n - 1) // 2
    if q**m > budget:
        raise BudgetExceeded(f"{q ** m} graphs exceed budget {budget}")
    visited = set()
    reps, sizes = [], []
    n_all = n_conn = 0
    for labels in itertools.product(range(q), repeat=m):
        if labels in visited:
            continue
        members = _closure(labels, n, f, budget)
        visited |= members
        n_all += 1
        conn = _labels_connected(labels, n)
        n_conn += conn
        if conn or not connected_only:
            reps.append(bytes((q, n)) + bytes(labels))
            sizes.append(len(members))
    return CensusReport(
        n=n,
        q=q,
        connected_only=connected_only,
        class_count=len(reps),
        graph_count=sum(sizes),
        size_histogram=dict(Counter(sizes)),
        representatives=reps,
        orbit_sizes=sizes,
        connected_class_count=n_conn,
        all_class_count=n_all,
        bounds=census_bounds(n, q, n_conn),
    )


# -- counting identities -------------------------------------------------------------


@dataclass
class CountingReport:
    graph: LabeledGraph
    l: int  # noqa: E741 - matches the quantity's usual name
    scalar_orbit_size: int
    epsilon: int
    lam: int
    checks: dict

    @property
    def ok(self):
        return all(self.checks.values())

    def as_dict(self):
        return {
            "graph": label_string(canonical_key(self.graph)),
            "q": self.graph.q,
            "n": self.graph.n,
            "l": self.l,
            "scalar_orbit_size": self.scalar_orbit_size,
            "epsilon": self.epsilon,
            "lambda": self.lam,
            "checks": self.checks,
        }


def counting_checks(q, n, l, s, eps, lam):
    """The identities relating orbit sizes, ε and λ, as named booleans."""
    checks = {"orbit_bound": l <= orbit_bound(q, n)}
    if q == 2:
        checks["binary_identity"] = l * lam == eps
        checks["binary_3n_bound"] = l <= 3**n
    else:
        checks["scalar_orbit_identity"] = s * lam == (q - 1) * eps
        checks["dichotomy"] = s in (l, 2 * l)
        checks["lambda_divides"] = lam > 0 and ((q - 1) * eps) % lam == 0
    return checks


def verify_counting(G, budget=DEFAULT_BUDGET, raise_on_failure=True, cache=None):
    """Compute l(G), the scalar-orbit size, ε and λ by independent routes and check the identities.

    ``cache`` (a dict) lets a sweep reuse orbit sizes: every member of a
    scalar orbit shares ``l`` and ``s``.
    """
    if not is_connected(G):
        raise InvalidArgument("counting identities are checked for connected graphs only")
    if G.q != 2 and G.q % 2 == 0:
        raise InvalidArgument("counting identities need q odd or q = 2")
    key = canonical_key(G)
    if cache is not None and key in cache:
        l, s = cache[key]
    else:
        orb = orbit(G)
        l = orb.size
        if G.q == 2:
            s = l
            members = orb.members
        else:
            sorb = scalar_orbit(G)
            s = sorb.size
            members = sorb.members
        if cache is not None:
            for k in members:
                cache[k] = (l, s)
    eps = count_eulerian(standard_system(G), budget)
    lam = lambda_index(G, budget)
    report = CountingReport(G, l, s, eps, lam, counting_checks(G.q, G.n, l, s, eps, lam))
    if raise_on_failure and not report.ok:
        failed = [k for k, v in report.checks.items() if not v]
        raise IdentityViolation(f"identities failed for {label_string(key)}: {failed}", report)
    return report


def square_classes(q):
    """Nonzero scalars split into squares and non-squares."""
    f = field(q)
    sq = [c for c in f.nonzero if is_square(f, c)]
    return sq, [c for c in f.nonzero if c not in sq]
