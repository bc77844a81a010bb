import pytest
from hypothesis import given, settings, strategies as st

from gqg import weights as W
from gqg.algebra import QuantumAlgebra, U0Element, sh_project
from gqg.center import (CenterError, check_all_roots, conjecture_probe, e_conditions_check,
                        hc_image, line_key, line_point, reconstruct_central, solve_center_window,
                        verify_skew_central)
from gqg.modules import character, fin_window, window_pairs
from gqg.roots import sieve_roots
from gqg.weights import OmegaTable
from conftest import rank1_generic, trivial_omega, z3_table


@pytest.fixture(scope="module")
def r1():
    t = rank1_generic()
    return t, trivial_omega(t), sieve_roots(t, (4,)), QuantumAlgebra(t)


def casimir_image(t, a, b):
    q = t.q[0][0]
    return U0Element({((a + k,), (b - k,)): q ** k for k in range(b - a + 1)})


def test_line_key_roundtrip():
    for beta in [(1, 0), (2, 1), (1, 1), (0, 1)]:
        for lam in W.box((3, 3), (-3, -3)):
            mu = (1, -2)
            key, k = line_key(lam, mu, beta)
            assert line_point(key, k, beta) == (lam, mu)
            key2, k2 = line_key(*line_point(key, k + 2, beta), beta)
            assert key2 == key and k2 == k + 2


def test_identity_passes(r1):
    t, w, rs, _ = r1
    one = U0Element.monomial((0,), (0,), t.field.one)
    assert all(rep.passed for rep in check_all_roots(one, rs, t, w))
    tz = z3_table()
    one = U0Element.monomial((0, 0), (0, 0), tz.field.one)
    assert all(rep.passed for rep in check_all_roots(one, sieve_roots(tz, (6, 4)), tz, trivial_omega(tz)))


@pytest.mark.parametrize("m", range(4))
def test_casimir_chain(r1, m):
    t, w, rs, _ = r1
    a = casimir_image(t, 1, 1 + m)
    rep = e_conditions_check(a, (1,), t, w)
    assert rep.passed and rep.first_violation is None
    assert {e["branch"] for e in rep.entries} <= {"e1"}


def test_hc_image_examples(r1):
    t, w, _, _ = r1
    q = t.q[0][0]
    ct = character(t, w, (0,), (1,), (4,))
    assert hc_image(t, w, (0,), (1,), ct) == casimir_image(t, 0, 1)
    assert hc_image(t, w, (0,), (1,), ct).terms == {((0,), (1,)): t.field.one, ((1,), (0,)): q}
    triv = character(t, w, (2,), (2,), (4,))
    assert hc_image(t, w, (2,), (2,), triv) == U0Element.monomial((2,), (2,), t.field.one)
    with pytest.raises(CenterError):
        hc_image(t, w, (3,), (0,), character(t, w, (3,), (0,), (4,)))


def test_perturbed_image_fails(r1):
    t, w, _, _ = r1
    a = casimir_image(t, 0, 2)
    # the midpoint (1, 1) is fixed by the involution k -> t0 - k and stays free
    mid = a + U0Element.monomial((1,), (1,), t.field.one)
    assert e_conditions_check(mid, (1,), t, w).passed
    bad = a + U0Element.monomial((0,), (2,), t.field.one)
    rep = e_conditions_check(bad, (1,), t, w)
    assert not rep.passed
    v = rep.first_violation
    assert v["branch"] == "e1" and v["status"] == "fail"


def test_e2_branch(r1):
    t, _, _, _ = r1
    w = OmegaTable(t.field, (3,))
    one = U0Element.monomial((0,), (0,), t.field.one)
    rep = e_conditions_check(one, (1,), t, w)
    assert not rep.passed and rep.first_violation["branch"] == "e2"


def test_root_of_unity_branches():
    t = z3_table()
    w = trivial_omega(t)
    rs = sieve_roots(t, (6, 4))
    ct = character(t, w, (1, 0), (1, 0), (14, 22))
    a = hc_image(t, w, (1, 0), (1, 0), ct)
    reps = check_all_roots(a, rs, t, w)
    assert all(r.passed for r in reps)
    assert {e["branch"] for r in reps for e in r.entries} & {"e3", "e4"}
    b = a + U0Element.monomial((1, 0), (1, 0), t.field.one)
    assert not all(r.passed for r in check_all_roots(b, rs, t, w))


def test_window_solutions(r1):
    t, w, rs, _ = r1
    sol = solve_center_window(t, w, rs, [((0,), (0,))])
    assert sol.dim() == 1 and sol.interior_dim() == 1
    win = window_pairs((0,), (2,), (0,), (2,))
    sol = solve_center_window(t, w, rs, win)
    images = [casimir_image(t, a, b) for a in range(3) for b in range(3) if b >= a]
    for img in images:
        assert sol.contains(img)
    assert sol.interior_dim() == len(images)
    dead = solve_center_window(t, OmegaTable(t.field, (3,)), rs, win)
    assert dead.dim() == 0


def test_window_contains_hc_images():
    t = z3_table()
    w = trivial_omega(t)
    rs = sieve_roots(t, (6, 4))
    win = window_pairs((0, 0), (1, 1), (0, 0), (1, 0))
    sol = solve_center_window(t, w, rs, win)
    for f in fin_window(t, w, win, (14, 22)):
        a = hc_image(t, w, f.lam, f.mu, f.table)
        if all(k in sol.pairs for k in a.terms):
            assert sol.contains(a)
        assert sol.contains(a, interior=False) or any(k not in sol.pairs for k in a.terms)


def test_hypothesis_violation():
    t = rank1_generic(1)
    rs = sieve_roots(t, (3,))
    with pytest.raises(CenterError):
        solve_center_window(t, trivial_omega(t), rs, [((0,), (0,))])


@pytest.mark.parametrize("m", range(4))
def test_reconstruction_rank1(r1, m):
    t, w, _, alg = r1
    hc = casimir_image(t, 0, m)
    z = reconstruct_central(hc, t, w, (m,), alg)
    assert sh_project(z) == hc
    assert verify_skew_central(z, t, w)
    if m >= 1:
        assert any(x and y for (x, _, _, y) in z.terms)


def test_reconstruction_identity(r1):
    t, w, _, alg = r1
    z = reconstruct_central(U0Element.monomial((0,), (0,), t.field.one), t, w, (2,), alg)
    assert z == alg.one()


def test_reconstruction_too_shallow(r1):
    t, w, _, alg = r1
    with pytest.raises(CenterError):
        reconstruct_central(casimir_image(t, 0, 2), t, w, (0,), alg)


def test_verify_rejects(r1):
    t, w, _, alg = r1
    k = alg.K((1,))
    assert not verify_skew_central(k, t, w)
    # K E = q E K and K F = q^-1 F K, so K is skew-central for omega(alpha) = q
    q = t.q[0][0]
    assert verify_skew_central(k, t, OmegaTable(t.field, (q,)))
    assert not verify_skew_central(alg.E(1), t, w)
    assert verify_skew_central(alg.one(), t, w)


def test_probe_rank1(r1):
    t, w, rs, _ = r1
    win = window_pairs((0,), (3,), (0,), (3,))
    rep = conjecture_probe(t, w, rs, win, (8,))
    assert rep.num_fin_pairs == 10 == rep.rank_of_hc_span
    assert rep.solution_space_dim_in_window == 10
    assert rep.hc_in_solution_space and rep.agreement
    empty = conjecture_probe(t, w, rs, [((3,), (0,))], (8,))
    assert empty.num_fin_pairs == 0 and empty.rank_of_hc_span == 0


@settings(max_examples=20, deadline=None)
@given(st.integers(-2, 2), st.integers(0, 3))
def test_hc_images_satisfy_conditions(a, m):
    t = rank1_generic(3)
    w = trivial_omega(t)
    ct = character(t, w, (a,), (a + m,), (m + 2,))
    img = hc_image(t, w, (a,), (a + m,), ct)
    assert e_conditions_check(img, (1,), t, w).passed
