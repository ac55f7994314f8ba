import itertools

import pytest

from loceq.errors import ConfigurationError
from loceq.gf import REDUCTION_POLYS, SUPPORTED_Q, field, is_square


def test_small_examples():
    f3 = field(3)
    assert f3.add[2][2] == 1
    assert f3.mul[2][2] == 1
    assert field(5).inv[2] == 3
    # x * x = x + 1 under x^2 + x + 1
    assert field(4).mul[2][2] == 3


@pytest.mark.parametrize("q", [0, 1, 6, 10, 11, 16])
def test_unsupported_q(q):
    with pytest.raises(ConfigurationError):
        field(q)


def test_cached_instances():
    assert field(7) is field(7)


def test_field_axioms(any_q):
    f = field(any_q)
    E = range(any_q)
    for a, b in itertools.product(E, E):
        assert f.add[a][b] == f.add[b][a]
        assert f.mul[a][b] == f.mul[b][a]
        assert f.sub[f.add[a][b]][b] == a
    for a, b, c in itertools.product(E, E, E):
        assert f.add[f.add[a][b]][c] == f.add[a][f.add[b][c]]
        assert f.mul[f.mul[a][b]][c] == f.mul[a][f.mul[b][c]]
        assert f.mul[a][f.add[b][c]] == f.add[f.mul[a][b]][f.mul[a][c]]
    for a in E:
        assert f.add[a][0] == a and f.mul[a][1] == a
        assert f.add[a][f.neg[a]] == 0
    for a in f.nonzero:
        assert f.mul[a][f.inv[a]] == 1


def test_multiplicative_group_is_cyclic(any_q):
    f = field(any_q)
    orders = []
    for a in f.nonzero:
        k, x = 1, a
        while x != 1:
            x, k = f.mul[x][a], k + 1
        orders.append(k)
    assert max(orders) == any_q - 1


def test_frobenius(any_q):
    f = field(any_q)
    for a, b in itertools.product(range(any_q), repeat=2):
        assert f.pow(f.add[a][b], f.p) == f.add[f.pow(a, f.p)][f.pow(b, f.p)]


def test_square_counts(any_q):
    f = field(any_q)
    n_sq = sum(is_square(f, a) for a in range(any_q))
    assert n_sq == (any_q if any_q % 2 == 0 else (any_q + 1) // 2)


@pytest.mark.parametrize("q,a,expected", [(5, 4, True), (5, 2, False), (4, 3, True), (3, 2, False)])
def test_is_square_examples(q, a, expected):
    assert is_square(field(q), a) is expected


def test_reduction_polys_fixed():
    assert REDUCTION_POLYS[4] == (1, 1, 1)
    assert REDUCTION_POLYS[8] == (1, 1, 0, 1)
    assert REDUCTION_POLYS[9] == (1, 0, 1)
    assert SUPPORTED_Q == (2, 3, 4, 5, 7, 8, 9)


def test_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        field(3).div(1, 0)
