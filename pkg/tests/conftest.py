import pytest

from gqg.scalars import field
from gqg.weights import BicharTable, OmegaTable


def z3_table():
    """zeta = z^5, q = z^2 with z a primitive 15th root of unity."""
    F = field(15)
    z = F.zeta(1)
    return BicharTable(F, ((z ** 5, z ** 13), (F.one, z ** 2)))


def rank1_generic(q=2):
    F = field(1)
    return BicharTable(F, ((F(q),),))


def rank1_z3():
    F = field(3)
    return BicharTable(F, ((F.zeta(1),),))


def a2_table():
    # Cartan type A2 at q = 2: chi12 chi21 = q^-1
    F = field(1)
    return BicharTable(F, ((F(2), F(1) / 2), (F(1), F(2))))


def trivial_omega(t):
    return OmegaTable.trivial(t.field, t.rank)


@pytest.fixture(scope="session")
def z3():
    return z3_table()


@pytest.fixture(scope="session")
def r1():
    return rank1_generic()


@pytest.fixture(scope="session")
def r1z3():
    return rank1_z3()


@pytest.fixture(scope="session")
def a2():
    return a2_table()
