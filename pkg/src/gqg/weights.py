"""Weight lattice Z^l, bicharacters, omega, rho-hat and highest-weight functionals.

Weights are plain tuples of ints (coordinates in the simple basis).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .scalars import CycScalar, CyclotomicField, ScalarError

Weight = tuple


def zero(l: int) -> Weight:
    return (0,) * l


def unit(l: int, i: int) -> Weight:
    """alpha_i with 1-based index i."""
    return tuple(1 if k == i - 1 else 0 for k in range(l))


def add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, a: Weight) -> Weight:
    return tuple(k * x for x in a)


def neg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def nonneg(a: Weight) -> bool:
    return all(x >= 0 for x in a)


def leq(a: Weight, b: Weight) -> bool:
    return all(x <= y for x, y in zip(a, b))


def height(a: Weight) -> int:
    return sum(a)


def box(upper: Weight, lower: Weight | None = None):
    """All weights w with lower <= w <= upper componentwise, in lexicographic order."""
    lower = lower or zero(len(upper))
    out = [()]
    for lo, hi in zip(lower, upper):
        out = [w + (k,) for w in out for k in range(lo, hi + 1)]
    return out


def by_height(weights):
    return sorted(weights, key=lambda w: (sum(w), w))


def _powers_product(entries, exponents, fld):
    result = fld.one
    for value, exp in zip(entries, exponents):
        if exp:
            result = result * value ** exp
    return result


@dataclass(frozen=True)
class BicharTable:
    """chi(alpha_i, alpha_j) = q[i][j]; extended biadditively."""

    field: CyclotomicField
    q: tuple
    _cache: dict = dc_field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        rows = tuple(tuple(self.field(x) for x in row) for row in self.q)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("bicharacter table must be square")
        if any(x.is_zero() for r in rows for x in r):
            raise ScalarError("bicharacter values must be nonzero")
        object.__setattr__(self, "q", rows)

    @property
    def rank(self) -> int:
        return len(self.q)

    def __hash__(self):
        return hash((self.field.n, self.q))

    def __eq__(self, other):
        return isinstance(other, BicharTable) and self.field == other.field and self.q == other.q

    def transpose(self) -> "BicharTable":
        return BicharTable(self.field, tuple(zip(*self.q)))

    def chi(self, lam: Weight, mu: Weight) -> CycScalar:
        key = (lam, mu)
        val = self._cache.get(key)
        if val is None:
            val = self.field.one
            for i, a in enumerate(lam):
                if a:
                    for j, b in enumerate(mu):
                        if b:
                            val = val * self.q[i][j] ** (a * b)
            self._cache[key] = val
        return val

    def rho_hat(self, nu: Weight) -> CycScalar:
        return _powers_product([self.q[j][j] for j in range(self.rank)], nu, self.field)

    def qbeta(self, beta: Weight) -> CycScalar:
        return self.chi(beta, beta)

    def to_json(self):
        return [[x.to_json() for x in row] for row in self.q]


@dataclass(frozen=True)
class OmegaTable:
    """omega(alpha_i) = w[i]; a group homomorphism Z^l -> K^x."""

    field: CyclotomicField
    w: tuple

    def __post_init__(self):
        vals = tuple(self.field(x) for x in self.w)
        if any(x.is_zero() for x in vals):
            raise ScalarError("omega values must be nonzero")
        object.__setattr__(self, "w", vals)

    @classmethod
    def trivial(cls, fld: CyclotomicField, l: int) -> "OmegaTable":
        return cls(fld, (1,) * l)

    def __call__(self, lam: Weight) -> CycScalar:
        return _powers_product(self.w, lam, self.field)

    def is_trivial(self) -> bool:
        return all(x == 1 for x in self.w)


def chi_eval(t: BicharTable, lam: Weight, mu: Weight) -> CycScalar:
    return t.chi(lam, mu)


def rho_hat(t: BicharTable, nu: Weight) -> CycScalar:
    return t.rho_hat(nu)


def lambda_functional(t: BicharTable, w: OmegaTable, lam: Weight, mu: Weight,
                      lam1: Weight, mu1: Weight) -> CycScalar:
    """Lambda_{lam,mu}(K_{lam1} L_{mu1}) = chi(lam, mu1) chi(lam1, mu) omega(lam1)."""
    return t.chi(lam, mu1) * t.chi(lam1, mu) * w(lam1)


def l_values(t: BicharTable, w: OmegaTable, lam: Weight, mu: Weight) -> tuple:
    """l_i = Lambda(K_{alpha_i} L_{-alpha_i}) for each simple root."""
    l = t.rank
    return tuple(lambda_functional(t, w, lam, mu, unit(l, i), neg(unit(l, i)))
                 for i in range(1, l + 1))
