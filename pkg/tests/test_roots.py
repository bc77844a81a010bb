import random

import pytest

from gqg.nichols import NicholsTables
from gqg.roots import INF, hilbert_cross_check, pbw_counts, root_height, sieve_roots
from conftest import a2_table, rank1_generic, rank1_z3, z3_table


def betas(rs):
    return sorted(r.beta for r in rs.roots)


def test_rank1():
    rs = sieve_roots(rank1_generic(), (5,))
    assert betas(rs) == [(1,)] and rs.roots[0].phi == 1 and rs.roots[0].height == INF
    rs = sieve_roots(rank1_z3(), (6,))
    assert rs.roots[0].height == 3


def test_a2_generic():
    t = a2_table()
    rs = sieve_roots(t, (3, 3))
    assert betas(rs) == [(0, 1), (1, 0), (1, 1)]
    assert [w for r in rs.roots for w in r.words] == [(1,), (1, 2), (2,)]
    assert rs.complete_below_bound


def test_z3_roots():
    t = z3_table()
    rs = sieve_roots(t, (6, 4))
    assert betas(rs) == [(0, 1), (1, 0), (1, 1), (2, 1)]
    assert all(r.phi == 1 for r in rs.roots)
    heights = {r.beta: r.height for r in rs.roots}
    assert heights == {(1, 0): 3, (2, 1): 5, (1, 1): 3, (0, 1): 15}
    assert sum(pbw_counts(rs, (40, 40)).values()) == 3 * 5 * 3 * 15


@pytest.mark.parametrize("make,bound", [(rank1_generic, (6,)), (rank1_z3, (6,)),
                                        (a2_table, (3, 3)), (z3_table, (6, 4))])
def test_hilbert_agrees(make, bound):
    t = make()
    T = NicholsTables(t)
    rs = sieve_roots(t, bound, T)
    chk = hilbert_cross_check(rs, bound, T)
    assert chk, chk


def test_hilbert_detects_wrong_root_system():
    t = a2_table()
    T = NicholsTables(t)
    rs = sieve_roots(t, (3, 3), T)
    rs.roots = rs.roots[:-1]
    chk = hilbert_cross_check(rs, (3, 3), T)
    assert not chk and chk.first_failure is not None


@pytest.mark.parametrize("seed", range(3))
def test_order_independence(seed):
    t = z3_table()
    base = sieve_roots(t, (4, 3))
    shuffled = sieve_roots(t, (4, 3), rng=random.Random(seed))
    assert [(r.beta, r.phi) for r in base.roots] == [(r.beta, r.phi) for r in shuffled.roots]


def test_boundary_root_marks_incomplete():
    rs = sieve_roots(z3_table(), (2, 1))
    assert not rs.complete_below_bound


def test_heights_rule():
    t = z3_table()
    assert root_height(t, (1, 0)) == 3
    assert root_height(rank1_generic(), (1,)) == INF
