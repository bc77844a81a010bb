from hypothesis import given, settings, strategies as st

from gqg import weights as W
from gqg.scalars import field
from gqg.weights import BicharTable, OmegaTable, chi_eval, lambda_functional, l_values, rho_hat
from conftest import z3_table

weight2 = st.tuples(st.integers(-4, 4), st.integers(-4, 4))


def random_table(seed):
    import random
    rng = random.Random(seed)
    F = field(12)
    return BicharTable(F, tuple(tuple(F.zeta(rng.randrange(12)) * rng.choice([1, 2, -1])
                                      for _ in range(2)) for _ in range(2)))


def test_chi_examples():
    t = z3_table()
    F = t.field
    assert chi_eval(t, (0, 0), (3, -1)) == 1
    assert chi_eval(t, (1, 0), (0, 1)) == t.q[0][1]
    zeta, q = t.q[0][0], t.q[1][1]
    assert chi_eval(t, (2, 1), (2, 1)) == zeta * q.inverse()
    assert rho_hat(t, (0, 0)) == 1
    assert rho_hat(t, (0, 1)) == q
    assert rho_hat(t, (2, 1)) == zeta ** 2 * q


@settings(max_examples=40, deadline=None)
@given(weight2, weight2, weight2, st.integers(0, 20))
def test_biadditive(a, b, c, seed):
    t = random_table(seed)
    assert t.chi(W.add(a, b), c) == t.chi(a, c) * t.chi(b, c)
    assert t.chi(a, W.add(b, c)) == t.chi(a, b) * t.chi(a, c)
    assert t.rho_hat(W.add(a, b)) == t.rho_hat(a) * t.rho_hat(b)


@settings(max_examples=40, deadline=None)
@given(weight2, weight2, weight2, weight2, weight2, weight2)
def test_lambda_multiplicative(lam, mu, a1, b1, a2, b2):
    t = z3_table()
    F = t.field
    w = OmegaTable(F, (F.zeta(3), F(2)))
    lhs = lambda_functional(t, w, lam, mu, W.add(a1, a2), W.add(b1, b2))
    rhs = lambda_functional(t, w, lam, mu, a1, b1) * lambda_functional(t, w, lam, mu, a2, b2)
    assert lhs == rhs
    assert lambda_functional(t, w, lam, mu, (0, 0), (0, 0)) == 1


def test_l_values():
    t = z3_table()
    w = OmegaTable.trivial(t.field, 2)
    assert l_values(t, w, (1, 0), (1, 0)) == (1, t.q[1][1])
    F = field(1)
    r1 = BicharTable(F, ((F(2),),))
    w1 = OmegaTable.trivial(F, 1)
    for a in range(4):
        for b in range(4):
            assert l_values(r1, w1, (a,), (b,))[0] == F(2) ** (b - a)


def test_box_and_helpers():
    assert len(W.box((2, 1))) == 6
    assert W.box((1, 1), (-1, 0))[0] == (-1, 0)
    assert W.unit(3, 2) == (0, 1, 0)
    assert W.leq((1, 2), (1, 3)) and not W.leq((2, 0), (1, 3))
