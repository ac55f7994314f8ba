from collections import Counter

import pytest

from conftest import random_connected_graph
from loceq.errors import BudgetExceeded, InvalidArgument
from loceq.graph import LabeledGraph, all_graphs
from loceq.index import (
    bineighborhood,
    cycle_vector,
    even_cycles,
    has_odd_cycle,
    intsol_solutions,
    lambda_index,
    nu_perp_dim,
    nu_perp_from_solutions,
    satisfies_intsol,
    walk_space,
)
from loceq.isotropic import BlockDiagMatrix
from loceq.linalg import rank
from loceq.orbits import scalar_orbit
from oracles import brute_lambda

TRIANGLE3 = LabeledGraph.from_edges(3, 3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
C4 = LabeledGraph.from_edges(3, 4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])


def test_single_vertex_golden():
    G = LabeledGraph.empty(3, 1)
    # T forced to 0, Z and Y nonzero, X free
    assert brute_lambda(G) == 12
    assert lambda_index(G) == 12


@pytest.mark.parametrize("q", [3, 5, 7])
def test_single_vertex_formula(q):
    assert lambda_index(LabeledGraph.empty(q, 1)) == (q - 1) ** 2 * q


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("n", [1, 2])
def test_lambda_matches_brute_force(q, n):
    for G in all_graphs(n, q):
        assert lambda_index(G) == brute_lambda(G)


def test_identity_is_a_solution(rng):
    for q in (3, 5):
        G = random_connected_graph(rng, q, 4)
        assert satisfies_intsol(G, BlockDiagMatrix.identity(q, 4))


def _structure_checks(G):
    f = G.field
    S = intsol_solutions(G)
    members = set()
    for D in S.iter_all():
        assert satisfies_intsol(G, D)
        assert len(set(D.det_diag())) == 1
        s = {f.add[y][z] for y, z in zip(D.Y, D.Z)}
        assert len(s) == 1
        members.add(D)
    for D in list(members)[:20]:
        for c in range(G.q):
            shifted = BlockDiagMatrix(
                G.q, [f.add[z][c] for z in D.Z], D.T, D.X, [f.add[y][c] for y in D.Y]
            )
            assert shifted in members
    assert nu_perp_from_solutions(G) == nu_perp_dim(G)
    k = nu_perp_dim(G)
    lam = len(S.solutions)
    q = G.q
    if has_odd_cycle(G):
        assert (q - 2) * q**k <= lam <= q ** (k + 1)
    else:
        assert (q - 2) * q ** (k + 1) <= lam <= q ** (k + 2)
    return S


@pytest.mark.parametrize("q", [3, 5])
def test_structure_exhaustive_small(q):
    for n in (1, 2, 3):
        for G in all_graphs(n, q, connected_only=True):
            _structure_checks(G)


def test_structure_random_larger(rng):
    for q, n in ((3, 4), (3, 5), (5, 4)):
        for _ in range(5):
            _structure_checks(random_connected_graph(rng, q, n))


@pytest.mark.parametrize("q", [3, 5])
def test_fiber_counts(q):
    # per X: q solutions with an odd cycle, q^2 without; the det filter keeps
    # q - (number of roots of d0 + c^2), i.e. q, q-1 or q-2 of the former
    for n in (2, 3):
        for G in all_graphs(n, q, connected_only=True):
            S = intsol_solutions(G)
            total = Counter(D.X for D in S.iter_all())
            kept = Counter(D.X for D in S.solutions)
            for X, c in total.items():
                if has_odd_cycle(G):
                    assert c == q
                    assert kept[X] in (q - 2, q - 1, q)
                else:
                    assert c == q * q
                    assert kept[X] >= q * (q - 2)


def test_lambda_constant_on_scalar_orbit(rng):
    G = random_connected_graph(rng, 3, 3)
    lam = lambda_index(G)
    for H in scalar_orbit(G).graphs():
        assert lambda_index(H) == lam


def test_triangle():
    assert bineighborhood(TRIANGLE3) == []
    assert nu_perp_dim(TRIANGLE3) == 3
    assert nu_perp_from_solutions(TRIANGLE3) == 3
    assert has_odd_cycle(TRIANGLE3)


def test_four_cycle_by_hand():
    assert even_cycles(C4) == [(0, 1, 2, 3)]
    # rows: g0=(0,1,0,1) g1=(1,0,1,0) g2=(0,1,0,1) g3=(1,0,1,0); products of
    # consecutive rows vanish, so only the two diagonal non-edges contribute
    assert cycle_vector(C4, (0, 1, 2, 3)) == [0, 0, 0, 0]
    gens = bineighborhood(C4)
    assert sorted(map(tuple, gens)) == [(0, 1, 0, 1), (1, 0, 1, 0)]
    assert nu_perp_dim(C4) == 2 == nu_perp_from_solutions(C4)
    assert not has_odd_cycle(C4)


def test_chorded_cycle_vector():
    # rows g0=(0,1,1,2) g1=(1,0,1,0) g2=(1,1,0,1) g3=(2,0,1,0); the signed terms are
    # -(0,0,1,0) +(1,0,0,0) -(2,0,0,0) +2*(0,0,1,0)
    G = LabeledGraph.from_edges(3, 4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 2), (0, 2, 1)])
    assert cycle_vector(G, (0, 1, 2, 3)) == [2, 0, 1, 0]
    assert nu_perp_dim(G) == nu_perp_from_solutions(G)


def test_literal_definition_on_bowtie():
    # two triangles sharing vertex 4: no simple even cycle, but the closed
    # walk 0-3-4-1-2-4 still constrains X
    G = LabeledGraph.from_edges(3, 5, [(0, 3, 1), (0, 4, 1), (1, 2, 2), (1, 4, 1), (2, 4, 2), (3, 4, 2)])
    assert even_cycles(G) == []
    assert nu_perp_from_solutions(G) == 3
    assert nu_perp_dim(G) == 3
    assert nu_perp_dim(G, literal=True) == 4
    walk = (0, 3, 4, 1, 2, 4)
    gens = bineighborhood(G)
    assert rank(G.field, gens + [cycle_vector(G, walk)]) == rank(G.field, gens)


def test_literal_weights_fail_beyond_units():
    # a simple 4-cycle with labels other than +-1 over GF(5)
    G = LabeledGraph(5, 4, (1, 4, 2, 2, 3, 0))
    assert even_cycles(G) == [(0, 2, 1, 3)]
    assert nu_perp_dim(G) == nu_perp_from_solutions(G) == 3
    assert nu_perp_dim(G, literal=True) == 2


def test_cycle_vector_errors():
    with pytest.raises(InvalidArgument):
        cycle_vector(TRIANGLE3, (0, 1, 2))
    with pytest.raises(InvalidArgument):
        cycle_vector(C4, (0, 2, 1, 3))


def test_walk_space_dimension(rng):
    # |E| - n + 1 for bipartite connected graphs, |E| - n otherwise (odd q)
    for q in (3, 5):
        for _ in range(20):
            G = random_connected_graph(rng, q, rng.randint(2, 6))
            edges, basis = walk_space(G)
            assert len(basis) == len(edges) - G.n + (0 if has_odd_cycle(G) else 1)


@pytest.mark.parametrize("q", [2, 4, 5, 7])
def test_nu_perp_matches_projection_random(q, rng):
    for _ in range(25):
        G = random_connected_graph(rng, q, rng.randint(2, 6))
        assert nu_perp_dim(G) == nu_perp_from_solutions(G)


def test_path_generator():
    P3 = LabeledGraph.from_edges(3, 3, [(0, 1, 1), (1, 2, 2)])
    gens = bineighborhood(P3)
    assert len(gens) == 1
    assert gens[0] == [0, 2, 0]
    assert not has_odd_cycle(P3)


def test_tree_and_even_cycle_bipartite():
    star_tree = LabeledGraph.from_edges(5, 4, [(0, 1, 1), (0, 2, 3), (0, 3, 4)])
    assert not has_odd_cycle(star_tree)
    assert even_cycles(star_tree) == []


def test_budget():
    with pytest.raises(BudgetExceeded):
        intsol_solutions(LabeledGraph.empty(3, 4), budget=10)
