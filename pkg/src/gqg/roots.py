"""Kharchenko roots of U+ by the hard super-letter sieve, with a Hilbert series check."""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from . import weights as W
from .linalg import IncrementalBasis
from .nichols import NicholsTables
from .scalars import char_order
from .weights import BicharTable, Weight
from .words import degree, enumerate_standard, shirshov_factorize, sort_key, word_str

INF = math.inf


class RootSystemError(RuntimeError):
    pass


@dataclass
class Root:
    beta: Weight
    phi: int
    height: float  # int or math.inf
    words: list = dc_field(default_factory=list)

    def to_json(self):
        return {"root": list(self.beta), "phi": self.phi,
                "height": None if self.height == INF else int(self.height),
                "words": [word_str(w) for w in self.words]}


@dataclass
class RootSystem:
    roots: list
    bound: Weight
    complete_below_bound: bool

    def betas(self) -> list:
        return [r.beta for r in self.roots]

    def get(self, beta):
        return next((r for r in self.roots if r.beta == tuple(beta)), None)

    def is_finite_type(self) -> bool:
        return self.complete_below_bound

    def to_json(self):
        return {"roots": [r.to_json() for r in self.roots], "bound": list(self.bound),
                "complete_below_bound": self.complete_below_bound}


def root_height(t: BicharTable, beta: Weight):
    c = char_order(t.chi(beta, beta))
    return c if c else INF


class _SuperCoords:
    """Coordinates of super-letters [u] in the degree tables of U+."""

    def __init__(self, tables: NicholsTables):
        self.T = tables
        self.t = tables.t
        self._cache = {}

    def __call__(self, u: tuple) -> dict:
        hit = self._cache.get(u)
        if hit is not None:
            return hit
        l = self.t.rank
        if len(u) == 1:
            vec = self.T.reduce_word(u)
        else:
            a, b = shirshov_factorize(u)
            da, db = degree(a, l), degree(b, l)
            ca, cb = self(a), self(b)
            vec = self.T.multiply(ca, da, cb, db)
            coeff = self.t.chi(db, da).inverse()
            back = self.T.multiply(cb, db, ca, da)
            for k, v in back.items():
                s = vec.get(k, self.t.field.zero) - coeff * v
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
        self._cache[u] = vec
        return vec


def _span_of_products(tables: NicholsTables, letters: list, coords, lam: Weight) -> IncrementalBasis:
    """Span in U+_lam of all products of the given super-letters (any order)."""
    l = tables.l
    spans = {W.zero(l): [{0: tables.one}]}
    for mu in W.by_height(W.box(lam)):
        if not any(mu):
            continue
        basis = IncrementalBasis()
        vecs = []
        for v in letters:
            dv = degree(v, l)
            rest = W.sub(mu, dv)
            if not W.nonneg(rest) or rest not in spans:
                continue
            cv = coords(v)
            for s in spans[rest]:
                prod = tables.multiply(cv, dv, s, rest)
                if prod and basis.add(prod)[0] is not None:
                    vecs.append(prod)
        if vecs:
            spans[mu] = vecs
    basis = IncrementalBasis()
    for v in spans.get(tuple(lam), []):
        basis.add(v)
    return basis


def sieve_roots(t: BicharTable, bound: Weight, tables: NicholsTables | None = None,
                rng=None) -> RootSystem:
    """Hard standard words of degree <= bound and their degrees.

    [u] is hard when its image in U+ is not a combination of products of
    super-letters [v] with v < u.  Products of several letters only involve
    letters of lower degree, which are already classified; a single letter of
    the same degree may be hard or not, and adding a non-hard one does not
    change the span.  So the test below does not depend on the order in which
    words of one degree are visited (``rng`` shuffles that order).
    """
    bound = tuple(bound)
    l = t.rank
    T = tables or NicholsTables(t, "+")
    coords = _SuperCoords(T)
    by_deg = {}
    for u in enumerate_standard(bound):
        by_deg.setdefault(degree(u, l), []).append(u)
    hard = []
    found = {}
    for lam in W.by_height(by_deg):
        words = sorted(by_deg[lam], key=sort_key)
        if rng is not None:
            rng.shuffle(words)
        level = []
        for u in words:
            cu = coords(u)
            if not cu:
                continue
            ku = sort_key(u)
            smaller = [v for v in hard if sort_key(v) < ku and W.leq(degree(v, l), lam)]
            span = _span_of_products(T, smaller, coords, lam)
            for v in by_deg[lam]:
                if sort_key(v) < ku:
                    span.add(coords(v))
            if span.express(cu) is None:
                level.append(u)
        level.sort(key=sort_key)
        hard.extend(level)
        if level:
            found[lam] = level
    roots = [Root(beta, len(ws), root_height(t, beta), ws) for beta, ws in found.items()]
    roots.sort(key=lambda r: max(sort_key(w) for w in r.words), reverse=True)
    on_boundary = any(any(b[i] == bound[i] for i in range(l)) for b in found)
    rs = RootSystem(roots, bound, not on_boundary)
    if rs.complete_below_bound and any(r.phi != 1 for r in rs.roots):
        raise RootSystemError(
            f"multiplicity > 1 in a complete root system: {[r.to_json() for r in rs.roots]}")
    return rs


@dataclass
class HilbertCheck:
    ok: bool
    first_failure: Weight | None = None
    expected: int | None = None
    found: int | None = None

    def __bool__(self):
        return self.ok


def pbw_counts(rs: RootSystem, bound: Weight) -> dict:
    """Graded count of PBW monomials prod [u_beta]^{n_beta}, n_beta < height."""
    bound = tuple(bound)
    l = len(bound)
    counts = {W.zero(l): 1}
    for r in rs.roots:
        for _ in range(r.phi):
            new = {}
            for lam, c in counts.items():
                n = 0
                while n < r.height:
                    mu = W.add(lam, W.scale(n, r.beta))
                    if not W.leq(mu, bound):
                        break
                    new[mu] = new.get(mu, 0) + c
                    n += 1
            counts = new
    return counts


def hilbert_cross_check(rs: RootSystem, bound: Weight, tables: NicholsTables) -> HilbertCheck:
    counts = pbw_counts(rs, bound)
    for lam in W.by_height(W.box(tuple(bound))):
        want = counts.get(lam, 0)
        got = tables.dim(lam)
        if want != got:
            return HilbertCheck(False, lam, want, got)
    return HilbertCheck(True)


def check_center_hypothesis(t: BicharTable, rs: RootSystem) -> list:
    """Roots beta with chi(beta, beta) = 1 (each one violates the HC hypothesis)."""
    return [r.beta for r in rs.roots if t.chi(r.beta, r.beta) == 1]
