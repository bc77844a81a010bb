"""U(chi) in triangular normal form  F_x K_a L_b E_y  and the projection Sh.

F_x and E_y range over pivot words of the degree tables of U- and U+.
Products are straightened with the generator relations

    K_a E_i = chi(a, alpha_i) E_i K_a,      L_b E_i = chi(alpha_i, b)^-1 E_i L_b,
    K_a F_i = chi(a, alpha_i)^-1 F_i K_a,   L_b F_i = chi(alpha_i, b) F_i L_b,
    E_i F_j - F_j E_i = delta_ij (L_i - K_i),

and E-E, F-F products are reduced through the tables.
"""
from __future__ import annotations

from . import weights as W
from .linalg import axpy
from .nichols import NicholsTables
from .scalars import CycScalar
from .weights import BicharTable, Weight
from .words import degree, parse_word, word_str


class U0Element:
    """Finite sum  sum a_(lam, mu) K_lam L_mu."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {(tuple(k), tuple(m)): c for (k, m), c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, lam, mu, coeff) -> "U0Element":
        return cls({(tuple(lam), tuple(mu)): coeff})

    def __add__(self, other):
        out = dict(self.terms)
        axpy(out, 1, other.terms)
        return U0Element(out)

    def __sub__(self, other):
        out = dict(self.terms)
        axpy(out, -1, other.terms)
        return U0Element(out)

    def scale(self, s) -> "U0Element":
        return U0Element({k: c * s for k, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, U0Element):
            return self.scale(other)
        out = {}
        for (a, b), c in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                axpy(out, c * c2, {(W.add(a, a2), W.add(b, b2)): 1})
        return U0Element(out)

    def __eq__(self, other):
        return isinstance(other, U0Element) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, lam, mu):
        return self.terms.get((tuple(lam), tuple(mu)))

    def support(self) -> list:
        return sorted(self.terms)

    def evaluate(self, functional) -> CycScalar:
        """Apply a character of the K, L group algebra given as f(lam, mu)."""
        total = None
        for (a, b), c in self.terms.items():
            v = c * functional(a, b)
            total = v if total is None else total + v
        return total if total is not None else 0

    def to_json(self):
        return [{"k": list(a), "l": list(b), "coeff": c.to_json()}
                for (a, b), c in sorted(self.terms.items())]

    def __repr__(self):
        return "U0Element(" + " + ".join(f"({c})K{a}L{b}" for (a, b), c in sorted(self.terms.items())) + ")"


class AlgebraElement:
    """Sum of c * F_x K_a L_b E_y keyed by (x, a, b, y)."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: "QuantumAlgebra", terms=None):
        self.alg = alg
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def _same(self, other):
        if not isinstance(other, AlgebraElement) or other.alg is not self.alg:
            raise TypeError("elements belong to different algebras")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        axpy(out, 1, other.terms)
        return AlgebraElement(self.alg, out)

    def __sub__(self, other):
        self._same(other)
        out = dict(self.terms)
        axpy(out, -1, other.terms)
        return AlgebraElement(self.alg, out)

    def __neg__(self):
        return AlgebraElement(self.alg, {k: -c for k, c in self.terms.items()})

    def scale(self, s) -> "AlgebraElement":
        return AlgebraElement(self.alg, {k: c * s for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.alg.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, s):
        return self.scale(s)

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sh(self) -> U0Element:
        return sh_project(self)

    def degrees(self) -> set:
        l = self.alg.l
        return {W.sub(degree(y, l), degree(x, l)) for (x, _, _, y) in self.terms}

    def to_json(self):
        return [{"fword": word_str(x), "k": list(a), "l": list(b), "eword": word_str(y),
                 "coeff": c.to_json()} for (x, a, b, y), c in sorted(self.terms.items())]

    def __repr__(self):
        parts = []
        for (x, a, b, y), c in sorted(self.terms.items()):
            parts.append(f"({c})F[{word_str(x)}]K{a}L{b}E[{word_str(y)}]")
        return "AlgebraElement(" + (" + ".join(parts) or "0") + ")"


class QuantumAlgebra:
    """Normal-form arithmetic in U(chi) backed by lazy degree tables."""

    def __init__(self, t: BicharTable, max_degree: Weight | None = None):
        self.t = t
        self.l = t.rank
        self.field = t.field
        self.plus = NicholsTables(t, "+", max_degree)
        self.minus = NicholsTables(t, "-", max_degree)
        self._zero = W.zero(self.l)
        self._ef = {}

    # ---- constructors
    def element(self, terms) -> AlgebraElement:
        return AlgebraElement(self, terms)

    def scalar(self, c) -> AlgebraElement:
        z = self._zero
        return AlgebraElement(self, {((), z, z, ()): self.field(c)})

    def one(self) -> AlgebraElement:
        return self.scalar(1)

    def E(self, i: int) -> AlgebraElement:
        z = self._zero
        return AlgebraElement(self, {((), z, z, (i,)): self.field.one})

    def F(self, i: int) -> AlgebraElement:
        z = self._zero
        return AlgebraElement(self, {((i,), z, z, ()): self.field.one})

    def K(self, lam) -> AlgebraElement:
        return AlgebraElement(self, {((), tuple(lam), self._zero, ()): self.field.one})

    def L(self, mu) -> AlgebraElement:
        return AlgebraElement(self, {((), self._zero, tuple(mu), ()): self.field.one})

    def KL(self, lam, mu, coeff=1) -> AlgebraElement:
        return AlgebraElement(self, {((), tuple(lam), tuple(mu), ()): self.field(coeff)})

    def from_u0(self, a: U0Element) -> AlgebraElement:
        return AlgebraElement(self, {((), k, m, ()): c for (k, m), c in a.terms.items()})

    def E_word(self, w) -> AlgebraElement:
        w = parse_word(w)
        z = self._zero
        vec = self.plus.reduce_word(w)
        piv = self.plus.data(degree(w, self.l)).pivots
        return AlgebraElement(self, {((), z, z, piv[k]): c for k, c in vec.items()})

    def F_word(self, w) -> AlgebraElement:
        w = parse_word(w)
        z = self._zero
        vec = self.minus.reduce_word(w)
        piv = self.minus.data(degree(w, self.l)).pivots
        return AlgebraElement(self, {(piv[k], z, z, ()): c for k, c in vec.items()})

    def term(self, x, lam, mu, y, coeff=1) -> AlgebraElement:
        """F_x K_lam L_mu E_y for arbitrary words x, y."""
        return self.F_word(x) * self.KL(lam, mu, coeff) * self.E_word(y)

    # ---- straightening
    def _ei_times(self, i: int, terms: dict) -> dict:
        """E_i * (sum c F_u K_c L_d E_v), words as pivot words."""
        t = self.t
        l = self.l
        ai = W.unit(l, i)
        out = {}
        for (u, c, d, v), coeff in terms.items():
            # pass E_i through F_u
            w_deg = self._zero
            for p in range(len(u) - 1, -1, -1):
                if u[p] == i:
                    rest = u[:p] + u[p + 1:]
                    vec = self.minus.reduce_word(rest)
                    if vec:
                        piv = self.minus.data(degree(rest, l)).pivots
                        fk = coeff * t.chi(ai, w_deg).inverse()
                        fl = coeff * t.chi(w_deg, ai)
                        for k, s in vec.items():
                            axpy(out, -fk * s, {(piv[k], W.add(c, ai), d, v): 1})
                            axpy(out, fl * s, {(piv[k], c, W.add(d, ai), v): 1})
                w_deg = W.add(w_deg, W.unit(l, u[p]))
            # pass E_i through K_c L_d, then multiply into E_v
            f = coeff * t.chi(c, ai).inverse() * t.chi(ai, d)
            dv = degree(v, l)
            vec = self.plus.left_mul(i, self.plus.reduce_word(v), dv)
            if vec:
                piv = self.plus.data(W.add(dv, ai)).pivots
                for k, s in vec.items():
                    axpy(out, f * s, {(u, c, d, piv[k]): 1})
        return out

    def straighten(self, y: tuple, x: tuple) -> dict:
        """E_y F_x in normal form for pivot words y (of U+) and x (of U-)."""
        key = (y, x)
        hit = self._ef.get(key)
        if hit is None:
            z = self._zero
            if not y:
                hit = {(x, z, z, ()): self.field.one}
            else:
                hit = self._ei_times(y[0], self.straighten(y[1:], x))
            self._ef[key] = hit
        return hit

    def multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        t = self.t
        l = self.l
        out = {}
        for (x, ka, lb, y), ca in a.terms.items():
            dx = degree(x, l)
            xv = {self.minus.data(dx).index[x]: self.field.one}
            for (x2, ka2, lb2, y2), cb in b.terms.items():
                dy2 = degree(y2, l)
                y2v = {self.plus.data(dy2).index[y2]: self.field.one}
                for (u, c, d, v), cs in self.straighten(y, x2).items():
                    du, dv = degree(u, l), degree(v, l)
                    f = ca * cb * cs
                    f = f * t.chi(ka, du).inverse() * t.chi(du, lb)
                    f = f * t.chi(ka2, dv).inverse() * t.chi(dv, lb2)
                    fv = self.minus.multiply(xv, dx, {self.minus.data(du).index[u]: self.field.one}, du)
                    ev = self.plus.multiply({self.plus.data(dv).index[v]: self.field.one}, dv, y2v, dy2)
                    if not fv or not ev:
                        continue
                    fd, ed = W.add(dx, du), W.add(dv, dy2)
                    fp = self.minus.data(fd).pivots
                    ep = self.plus.data(ed).pivots
                    kk = W.add(W.add(ka, c), ka2)
                    ll = W.add(W.add(lb, d), lb2)
                    for i1, s1 in fv.items():
                        for i2, s2 in ev.items():
                            axpy(out, f * s1 * s2, {(fp[i1], kk, ll, ep[i2]): 1})
        return AlgebraElement(self, out)

    def commutator(self, z: AlgebraElement, g: AlgebraElement, factor) -> AlgebraElement:
        """z*g - factor * g*z."""
        return z * g - (g * z).scale(factor)


def sh_project(a: AlgebraElement) -> U0Element:
    """Keep the terms with empty F-part and empty E-part."""
    return U0Element({(k, m): c for (x, k, m, y), c in a.terms.items() if not x and not y})
