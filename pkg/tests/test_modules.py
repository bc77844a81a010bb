import pytest
from hypothesis import given, settings, strategies as st

from gqg import weights as W
from gqg.algebra import QuantumAlgebra
from gqg.modules import (ModuleError, SimpleModule, b_points, character, contravariant_rank,
                         fin_window, in_c, window_pairs, z3_h_profile)
from gqg.nichols import nichols_dim
from gqg.weights import OmegaTable
from conftest import a2_table, rank1_generic, trivial_omega, z3_table


@pytest.mark.parametrize("m", range(5))
def test_rank1_dimension(m):
    # L(Lambda) for lam - mu = -m alpha: weights 0..m, each once
    t = rank1_generic()
    ct = character(t, trivial_omega(t), (0,), (m,), (m + 3,))
    assert ct.complete
    assert ct.mult == {(k,): 1 for k in range(m + 1)}
    assert ct.total_dim == m + 1


def test_rank1_infinite():
    t = rank1_generic()
    ct = character(t, trivial_omega(t), (2,), (0,), (6,))
    assert not ct.complete and ct.total_dim is None


def test_trivial_module():
    t = z3_table()
    ct = character(t, trivial_omega(t), (0, 0), (0, 0), (3, 3))
    assert ct.complete and ct.mult == {(0, 0): 1}
    assert z3_h_profile(ct, t) == (0,) * 8


@pytest.fixture(scope="module")
def z3_module():
    t = z3_table()
    return t, character(t, trivial_omega(t), (1, 0), (1, 0), (14, 22))


def test_z3_module(z3_module):
    t, ct = z3_module
    F = t.field
    assert ct.complete and ct.total_dim == 15
    assert ct.l_values == (F.one, t.q[1][1])
    assert z3_h_profile(ct, t) == (1, 0, 4, 1, 0, 1, 4, 0)


def test_contravariant_rank_matches_multiplicity(z3_module):
    t, ct = z3_module
    w = trivial_omega(t)
    alg = QuantumAlgebra(t)
    for nu in W.box((3, 3)):
        assert contravariant_rank(t, w, (1, 0), (1, 0), nu, alg) == ct.m(nu)
        assert ct.m(nu) <= nichols_dim(nu, t)


@settings(max_examples=15, deadline=None)
@given(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
       st.sampled_from([(1, 1), (2, 1), (0, 2), (2, 2)]))
def test_multiplicity_is_contravariant_rank(lam, mu, nu):
    t = a2_table()
    w = trivial_omega(t)
    mod = SimpleModule(t, w, lam, mu)
    r = contravariant_rank(t, w, lam, mu, nu)
    assert mod.dim(nu) == r <= nichols_dim(nu, t)


def test_nontrivial_omega_shifts_module():
    t = rank1_generic()
    q = t.q[0][0]
    # omega(alpha) = q^m acts like shifting mu by m alpha
    for m in range(4):
        ct = character(t, OmegaTable(t.field, (q ** m,)), (0,), (0,), (6,))
        assert ct.complete and ct.mult == character(t, trivial_omega(t), (0,), (m,), (6,)).mult
    assert not character(t, OmegaTable(t.field, (q ** -1,)), (0,), (0,), (6,)).complete


def test_fin_window():
    t = rank1_generic()
    win = window_pairs((0,), (3,), (0,), (3,))
    assert len(win) == 16
    fins = fin_window(t, trivial_omega(t), win, (8,))
    assert sorted((f.lam, f.mu) for f in fins) == sorted(
        ((a,), (b,)) for a in range(4) for b in range(4) if b >= a)
    assert all(f.dim == f.mu[0] - f.lam[0] + 1 for f in fins)


def test_b_points_and_cone():
    h = (1, 0, 4, 1, 0, 1, 4, 0)
    bp = b_points(h)
    assert (0, 0) in bp and (0, -1) in bp
    assert len(bp) == sum(h)  # a closed broken line
    assert in_c(h, (-1, -1)) and (-1, -1) not in bp
    assert not in_c(h, (5, 5)) and not in_c(h, (0, -1))


def test_support_splits_into_line_and_cone(z3_module):
    t, ct = z3_module
    h = z3_h_profile(ct, t)
    pts = {(-a, -b) for a, b in ct.mult}
    bp = b_points(h)
    inner = {p for p in pts if in_c(h, p)}
    assert bp <= pts and inner == pts - bp and len(inner) == 4


def test_h_profile_errors():
    t = a2_table()
    ct = character(t, trivial_omega(t), (0, 0), (0, 0), (2, 2))
    with pytest.raises(ModuleError):
        z3_h_profile(ct, t)
    t = z3_table()
    ct = character(t, trivial_omega(t), (3, 0), (0, 0), (2, 2))
    with pytest.raises(ModuleError):
        z3_h_profile(ct, t)
