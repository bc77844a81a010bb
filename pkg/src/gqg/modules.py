"""Simple highest-weight modules L(Lambda) and their weight multiplicities.

Lambda = Lambda_{lam,mu} is the character
    K_a L_b  ->  chi(lam, b) chi(a, mu) omega(a)
of the K, L group algebra.  L(Lambda) is built weight space by weight space:
L_nu is spanned by F_j L_{nu - alpha_j}, and a vector of weight nu != 0 is
zero iff every E_i kills it.  So each L_nu is realised as the image of the
map x -> (E_i x)_i into the direct sum of the L_{nu - alpha_i}.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import weights as W
from .algebra import QuantumAlgebra
from .linalg import IncrementalBasis, axpy, rank_bareiss
from .scalars import char_order
from .weights import BicharTable, OmegaTable, Weight, lambda_functional, l_values


class ModuleError(RuntimeError):
    pass


class _Level:
    __slots__ = ("dim", "e", "f")

    def __init__(self):
        self.dim = 0
        self.e = []   # per basis vector: {i: coords in L_{nu - alpha_i}}
        self.f = {}   # j -> per basis vector of L_{nu - alpha_j}: coords here


class SimpleModule:
    def __init__(self, t: BicharTable, w: OmegaTable, lam: Weight, mu: Weight):
        self.t = t
        self.w = w
        self.lam = tuple(lam)
        self.mu = tuple(mu)
        self.l = t.rank
        top = _Level()
        top.dim = 1
        top.e = [{}]
        self._levels = {W.zero(self.l): top}

    def k_scalar(self, a: Weight, b: Weight, nu: Weight):
        """Eigenvalue of K_a L_b on weight vectors F_y v with deg y = nu."""
        t = self.t
        return t.chi(W.add(self.lam, nu), b) * t.chi(a, W.sub(self.mu, nu)) * self.w(a)

    def _commutator_scalar(self, i: int, nu: Weight):
        """Eigenvalue of -K_i + L_i at depth nu."""
        ai = W.unit(self.l, i)
        z = W.zero(self.l)
        return self.k_scalar(z, ai, nu) - self.k_scalar(ai, z, nu)

    def level(self, nu: Weight) -> _Level:
        nu = tuple(nu)
        lev = self._levels.get(nu)
        if lev is None:
            if not W.nonneg(nu):
                lev = _Level()
            else:
                lev = self._build(nu)
            self._levels[nu] = lev
        return lev

    def dim(self, nu: Weight) -> int:
        return self.level(nu).dim

    def _build(self, nu):
        l = self.l
        fld = self.t.field
        active = [i for i in range(1, l + 1) if nu[i - 1] > 0]
        offsets, pos = {}, 0
        for i in active:
            offsets[i] = pos
            pos += self.dim(W.sub(nu, W.unit(l, i)))
        lev = _Level()
        basis = IncrementalBasis()
        exprs = []
        for j in active:
            lower = W.sub(nu, W.unit(l, j))
            low = self.level(lower)
            for k in range(low.dim):
                images = {}
                for i in active:
                    vec = {}
                    inner = low.e[k].get(i)
                    if inner:
                        # F_j (E_i b) lands in L_{nu - alpha_i}
                        target = self.level(W.sub(nu, W.unit(l, i)))
                        for c, s in inner.items():
                            axpy(vec, s, target.f[j][c])
                    if i == j:
                        axpy(vec, self._commutator_scalar(i, lower), {k: fld.one})
                    if vec:
                        images[i] = vec
                flat = {}
                for i, vec in images.items():
                    for c, s in vec.items():
                        flat[offsets[i] + c] = s
                idx, coords = basis.add(flat)
                if idx is not None:
                    lev.e.append(images)
                exprs.append((j, k, coords))
        lev.dim = len(lev.e)
        for j in active:
            lev.f[j] = [None] * self.dim(W.sub(nu, W.unit(l, j)))
        for j, k, coords in exprs:
            lev.f[j][k] = coords
        return lev

    def compute(self, depth_bound: Weight) -> dict:
        """m_nu for all reachable nu <= depth_bound (zeros omitted)."""
        mult = {}
        for nu in W.by_height(W.box(tuple(depth_bound))):
            if any(nu) and not any(
                    nu[j] > 0 and mult.get(W.sub(nu, W.unit(self.l, j + 1)))
                    for j in range(self.l)):
                continue
            d = self.dim(nu)
            if d:
                mult[nu] = d
        return mult


@dataclass
class CharacterTable:
    lambda_mu: tuple
    mult: dict
    complete: bool
    depth_bound: Weight
    l_values: tuple = dc_field(default=())

    def m(self, nu) -> int:
        return self.mult.get(tuple(nu), 0)

    @property
    def support(self) -> list:
        return sorted(self.mult, key=lambda v: (sum(v), v))

    @property
    def total_dim(self):
        return sum(self.mult.values()) if self.complete else None

    def to_json(self):
        lam, mu = self.lambda_mu
        return {"lambda": list(lam), "mu": list(mu),
                "dims": [{"nu": list(nu), "m": self.mult[nu]} for nu in self.support],
                "complete": self.complete, "total_dim": self.total_dim,
                "depth_bound": list(self.depth_bound)}


def character(t: BicharTable, w: OmegaTable, lam: Weight, mu: Weight,
              depth_bound: Weight) -> CharacterTable:
    """Weight multiplicities of L(Lambda_{lam,mu}) up to depth_bound.

    complete is True when the support is closed inside the box: for every
    nu with m_nu > 0 all nu + alpha_j still lie in the box (and were found
    to vanish or not).  Then no weight outside the box can occur, since
    L_nu is spanned by F_j L_{nu - alpha_j}.
    """
    depth_bound = tuple(depth_bound)
    mod = SimpleModule(t, w, lam, mu)
    mult = mod.compute(depth_bound)
    l = t.rank
    complete = all(W.leq(W.add(nu, W.unit(l, j)), depth_bound)
                   for nu in mult for j in range(1, l + 1))
    return CharacterTable((tuple(lam), tuple(mu)), mult, complete, depth_bound,
                          l_values(t, w, lam, mu))


def contravariant_matrix(t: BicharTable, w: OmegaTable, lam: Weight, mu: Weight, nu: Weight,
                         alg: QuantumAlgebra | None = None) -> list:
    """Lambda(Sh(E_a F_b)) over pivot words a of U+_nu and b of U-_nu."""
    alg = alg or QuantumAlgebra(t)
    nu = tuple(nu)
    rows = alg.plus.basis(nu)
    cols = alg.minus.basis(nu)
    mat = []
    for a in rows:
        row = []
        for b in cols:
            val = t.field.zero
            for (x, c, d, y), s in alg.straighten(a, b).items():
                if not x and not y:
                    val = val + s * lambda_functional(t, w, lam, mu, c, d)
            row.append(val)
        mat.append(row)
    return mat


def contravariant_rank(t, w, lam, mu, nu, alg=None) -> int:
    return rank_bareiss(contravariant_matrix(t, w, lam, mu, nu, alg))


@dataclass
class FinEntry:
    lam: Weight
    mu: Weight
    dim: int
    table: CharacterTable


def window_pairs(lam_lo, lam_hi, mu_lo, mu_hi) -> list:
    """All (lam, mu) in a rectangle of Z^l x Z^l."""
    return [(a, b) for a in W.box(tuple(lam_hi), tuple(lam_lo)) for b in W.box(tuple(mu_hi), tuple(mu_lo))]


def fin_window(t: BicharTable, w: OmegaTable, window, depth_bound: Weight) -> list:
    """Pairs of the window whose simple module is finite dimensional (within depth_bound)."""
    out = []
    for lam, mu in window:
        ct = character(t, w, lam, mu, depth_bound)
        if ct.complete:
            out.append(FinEntry(tuple(lam), tuple(mu), ct.total_dim, ct))
    return out


# --------------------------------------------------------------- h-profile

GAMMA = ((0, -1), (-1, -1), (-2, -1), (-1, 0), (0, 1), (1, 1), (2, 1), (1, 0))


def _partial(h):
    pts = [(0, 0)]
    for ht, g in zip(h, GAMMA):
        x, y = pts[-1]
        pts.append((x + ht * g[0], y + ht * g[1]))
    return pts


def b_points(h) -> set:
    """Lattice points of the broken line B_h."""
    pts = _partial(h)
    out = set()
    for t in range(8):
        x, y = pts[t]
        for u in range(h[t] + 1):
            out.add((x + u * GAMMA[t][0], y + u * GAMMA[t][1]))
    return out


def in_c(h, p, shift: int = -2) -> bool:
    """p lies in every open half-plane base_t + R gamma_t + R_{<0} gamma_{t+shift}."""
    pts = _partial(h)
    for t in range(8):
        g = GAMMA[t]
        gp = GAMMA[(t + shift) % 8]
        bx, by = pts[t]
        dx, dy = p[0] - bx, p[1] - by
        num = g[0] * dy - g[1] * dx
        den = g[0] * gp[1] - g[1] * gp[0]
        if Fraction(num, den) >= 0:
            return False
    return True


def z3_h_profile(ct: CharacterTable, t: BicharTable, cap: int | None = None,
                 shift: int = -2) -> tuple:
    """The unique h with the support inside B_h or C_h and m = 1 on B_h.

    The broken line starts at 0 along -alpha_2, so the support is placed
    at -nu.  Even entries range over 0..2, odd entries over 0..cap.
    """
    if t.rank != 2:
        raise ModuleError("z3_h_profile needs rank 2")
    z = t.q[0][0]
    if z * z + z + 1 != 0:
        raise ModuleError("chi(alpha_1, alpha_1) is not a primitive cube root of unity")
    if not ct.complete:
        raise ModuleError("character table is not complete")
    support = {(-a, -b) for (a, b) in ct.mult}
    mult = {(-a, -b): m for (a, b), m in ct.mult.items()}
    if cap is None:
        cap = max(sum(nu) for nu in ct.mult) + 1
    found = []
    evens = range(3)
    for h2 in evens:
        for h4 in evens:
            for h6 in evens:
                for h8 in evens:
                    for h1 in range(cap + 1):
                        for h3 in range(cap + 1):
                            twice = h2 + 2 * h3 + h4 - h6 - h8
                            if twice < 0 or twice % 2:
                                continue
                            h7 = twice // 2
                            h5 = h1 + h2 + h3 - h6 - h7
                            if h5 < 0 or h7 > cap or h5 > cap:
                                continue
                            h = (h1, h2, h3, h4, h5, h6, h7, h8)
                            bp = b_points(h)
                            if any(mult.get(p, 0) != 1 for p in bp if p[0] <= 0 and p[1] <= 0):
                                continue
                            if all(p in bp or in_c(h, p, shift) for p in support):
                                found.append(h)
    if not found:
        raise ModuleError("no h-profile fits the support")
    if len(found) > 1:
        raise ModuleError(f"h-profile is not unique: {found[:5]}")
    h = found[0]
    q = t.q[1][1]
    cq = char_order(q)
    if cq:
        if any(h[k] > cq - 1 for k in (0, 2, 4, 6)):
            raise ModuleError(f"odd entries of {h} exceed o(q) - 1")
        l2 = ct.l_values[1] if ct.l_values else None
        if l2 is not None and any(l2 == q ** s for s in range(cq)):
            if h[7] != h[1] or h[5] != h[3]:
                raise ModuleError(f"{h} breaks h8 = h2, h6 = h4 although l2 is a power of q")
    return h
