"""Free algebra, the Drinfeld pairing on words, and the Nichols parts U+ and U-.

U+ is the free algebra on E_1..E_l modulo the left radical of the pairing,
U- the free algebra on F_1..F_l modulo the right radical.  Both are handled
degree by degree.  ``NicholsTables`` never forms full word Gram matrices:
an element X of positive degree is zero in U+ iff every skew derivative
r_i(X) is zero, where r_i is defined by

    pairing(X, F_i Y) = pairing(r_i(X), Y),
    r_i(x_j Y) = delta_ij Y + chi(alpha_j, alpha_i) x_j r_i(Y).

So each degree only needs the tables of the degrees directly below it.
U- is the same construction for the transposed bicharacter.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import weights as W
from .linalg import IncrementalBasis, axpy, rank_bareiss
from .weights import BicharTable, Weight
from .words import FreeElement, degree, free_multiply, parse_word, sort_key, word_str, words_of_degree

__all__ = [
    "FreeElement", "free_multiply", "pairing", "pairing_left", "pairing_right",
    "GramBlock", "gram_block", "NicholsTables", "DegreeBoundError",
]


class DegreeBoundError(RuntimeError):
    pass


# ------------------------------------------------------------ word pairing

def _split(w: tuple, p: int):
    return w[:p] + w[p + 1:]


@lru_cache(maxsize=None)
def pairing_left(wp: tuple, wm: tuple, t: BicharTable):
    """pairing(E_wp, F_wm) by peeling the first letter of the F-word.

    pairing(E_w, F_i F_v) = sum over positions p of w holding i of
    chi(deg w[:p], alpha_i) * pairing(E_{w without p}, F_v).
    """
    fld = t.field
    if len(wp) != len(wm):
        return fld.zero
    if not wp:
        return fld.one
    l = t.rank
    i = wm[0]
    ai = W.unit(l, i)
    total = fld.zero
    prefix = W.zero(l)
    for p, letter in enumerate(wp):
        if letter == i:
            inner = pairing_left(_split(wp, p), wm[1:], t)
            if inner:
                total = total + t.chi(prefix, ai) * inner
        prefix = W.add(prefix, W.unit(l, letter))
    return total


@lru_cache(maxsize=None)
def pairing_right(wp: tuple, wm: tuple, t: BicharTable):
    """pairing(E_wp, F_wm) by peeling the first letter of the E-word.

    pairing(E_i E_w, F_v) = sum over positions p of v holding i of
    chi(alpha_i, deg v[:p]) * pairing(E_w, F_{v without p}).
    """
    fld = t.field
    if len(wp) != len(wm):
        return fld.zero
    if not wp:
        return fld.one
    l = t.rank
    i = wp[0]
    ai = W.unit(l, i)
    total = fld.zero
    prefix = W.zero(l)
    for p, letter in enumerate(wm):
        if letter == i:
            inner = pairing_right(wp[1:], _split(wm, p), t)
            if inner:
                total = total + t.chi(ai, prefix) * inner
        prefix = W.add(prefix, W.unit(l, letter))
    return total


def pairing(a, b, t: BicharTable):
    """Drinfeld pairing of E-side and F-side words or FreeElements."""
    if isinstance(a, FreeElement) or isinstance(b, FreeElement):
        a = a if isinstance(a, FreeElement) else FreeElement.word(a, t.field.one)
        b = b if isinstance(b, FreeElement) else FreeElement.word(b, t.field.one)
        total = t.field.zero
        for wa, ca in a.terms.items():
            for wb, cb in b.terms.items():
                total = total + ca * cb * pairing_left(wa, wb, t)
        return total
    wp, wm = parse_word(a), parse_word(b)
    l = t.rank
    if degree(wp, l) != degree(wm, l):
        return t.field.zero
    return pairing_left(wp, wm, t)


@dataclass
class GramBlock:
    degree: Weight
    rows: list
    cols: list
    matrix: list

    def rank(self) -> int:
        return rank_bareiss(self.matrix)

    def to_json(self):
        return {"degree": list(self.degree), "rows": [word_str(w) for w in self.rows],
                "cols": [word_str(w) for w in self.cols]}


def gram_block(lam: Weight, t: BicharTable) -> GramBlock:
    """Full word Gram matrix pairing(E_row, F_col) in degree lam."""
    ws = words_of_degree(tuple(lam))
    mat = [[pairing_left(a, b, t) for b in ws] for a in ws]
    return GramBlock(tuple(lam), ws, ws, mat)


# ---------------------------------------------------------- degree tables

class _Degree:
    __slots__ = ("pivots", "index", "deriv", "left")

    def __init__(self):
        self.pivots = []   # pivot words, greatest first
        self.index = {}    # word -> position
        self.deriv = []    # per pivot: {i: coords in degree - alpha_i}
        self.left = {}     # j -> list over pivots of degree - alpha_j of coords here


class NicholsTables:
    """Degreewise bases of U+ (side '+') or U- (side '-').

    Coordinates are sparse dicts {pivot position: scalar}.  Pivots are the
    greedy choice over all words of the degree taken greatest first; since
    the set of such pivots is closed under dropping the first letter, the
    candidates x_j * (pivot of lower degree) already contain all of them.
    """

    def __init__(self, t: BicharTable, side: str = "+", max_degree: Weight | None = None):
        if side not in "+-":
            raise ValueError("side must be '+' or '-'")
        self.t = t
        self.side = side
        self.l = t.rank
        self.max_degree = tuple(max_degree) if max_degree is not None else None
        self._chi = t if side == "+" else t.transpose()
        self._deg = {}
        self._word_cache = {}
        zero = W.zero(self.l)
        d0 = _Degree()
        d0.pivots = [()]
        d0.index = {(): 0}
        d0.deriv = [{}]
        self._deg[zero] = d0

    @property
    def one(self):
        return self.t.field.one

    def _check(self, lam):
        if not W.nonneg(lam):
            raise ValueError(f"negative degree {lam}")
        if self.max_degree is not None and not W.leq(lam, self.max_degree):
            raise DegreeBoundError(
                f"degree {lam} exceeds the table bound {self.max_degree} (side {self.side})")

    def data(self, lam: Weight) -> _Degree:
        lam = tuple(lam)
        d = self._deg.get(lam)
        if d is None:
            self._check(lam)
            d = self._build(lam)
            self._deg[lam] = d
        return d

    def dim(self, lam: Weight) -> int:
        if not W.nonneg(lam):
            return 0
        return len(self.data(lam).pivots)

    def basis(self, lam: Weight) -> list:
        return list(self.data(lam).pivots)

    def _build(self, lam):
        l = self.l
        chi = self._chi
        fld = self.t.field
        cands = []
        for j in range(1, l + 1):
            if lam[j - 1] > 0:
                lower = W.sub(lam, W.unit(l, j))
                for k, p in enumerate(self.data(lower).pivots):
                    cands.append((j, k, (j,) + p))
        cands.sort(key=lambda c: sort_key(c[2]), reverse=True)
        # offsets for the concatenated derivative coordinates
        offsets = {}
        pos = 0
        for i in range(1, l + 1):
            if lam[i - 1] > 0:
                offsets[i] = pos
                pos += self.dim(W.sub(lam, W.unit(l, i)))
        d = _Degree()
        basis = IncrementalBasis()
        exprs = []
        for j, k, word in cands:
            lower = W.sub(lam, W.unit(l, j))
            parent = self.data(lower)
            derivs = {}
            for i in offsets:
                vec = {}
                if i == j:
                    vec[k] = fld.one
                inner = parent.deriv[k].get(i)
                if inner:
                    # x_j * r_i(p) lives in degree lam - alpha_i
                    moved = self.left_mul(j, inner, W.sub(lower, W.unit(l, i)))
                    axpy(vec, chi.chi(W.unit(l, j), W.unit(l, i)), moved)
                if vec:
                    derivs[i] = vec
            flat = {}
            for i, vec in derivs.items():
                off = offsets[i]
                for c, v in vec.items():
                    flat[off + c] = v
            idx, coords = basis.add(flat)
            if idx is not None:
                d.pivots.append(word)
                d.deriv.append(derivs)
            exprs.append((j, k, coords))
        d.index = {w: n for n, w in enumerate(d.pivots)}
        for j in range(1, l + 1):
            if lam[j - 1] > 0:
                d.left[j] = [None] * self.dim(W.sub(lam, W.unit(l, j)))
        for j, k, coords in exprs:
            d.left[j][k] = coords
        return d

    # ------------------------------------------------------- operations
    def left_mul(self, j: int, vec: dict, lam: Weight) -> dict:
        """x_j * vec with vec given in degree lam."""
        if not vec:
            return {}
        target = self.data(W.add(lam, W.unit(self.l, j)))
        table = target.left[j]
        out = {}
        for k, c in vec.items():
            axpy(out, c, table[k])
        return out

    def apply_word(self, word: tuple, vec: dict, lam: Weight) -> dict:
        """x_word * vec."""
        for j in reversed(word):
            vec = self.left_mul(j, vec, lam)
            lam = W.add(lam, W.unit(self.l, j))
        return vec

    def reduce_word(self, word) -> dict:
        word = parse_word(word)
        hit = self._word_cache.get(word)
        if hit is None:
            if not word:
                hit = {0: self.one}
            else:
                tail = self.reduce_word(word[1:])
                hit = self.left_mul(word[0], tail, degree(word[1:], self.l))
            self._word_cache[word] = hit
        return hit

    def reduce(self, elem: FreeElement, lam: Weight | None = None) -> dict:
        """Coordinates of a homogeneous FreeElement."""
        out = {}
        for w, c in elem.terms.items():
            if lam is not None and degree(w, self.l) != tuple(lam):
                raise ValueError("element is not homogeneous of the stated degree")
            axpy(out, c, self.reduce_word(w))
        return out

    def multiply(self, a: dict, deg_a: Weight, b: dict, deg_b: Weight) -> dict:
        if not a or not b:
            return {}
        pivots = self.data(deg_a).pivots
        out = {}
        for k, c in a.items():
            axpy(out, c, self.apply_word(pivots[k], b, deg_b))
        return out

    def derivation(self, i: int, vec: dict, lam: Weight) -> dict:
        d = self.data(lam)
        out = {}
        for k, c in vec.items():
            inner = d.deriv[k].get(i)
            if inner:
                axpy(out, c, inner)
        return out

    def to_free(self, vec: dict, lam: Weight) -> FreeElement:
        pivots = self.data(lam).pivots
        return FreeElement({pivots[k]: c for k, c in vec.items()})

    def dims_json(self, bound: Weight) -> list:
        return [{"degree": list(lam), "dim": self.dim(lam),
                 "pivot_words": [word_str(w) for w in self.basis(lam)]}
                for lam in W.by_height(W.box(bound))]


class PivotGram:
    """pairing(E_p, F_q) on pivot words of U+ and U-, built recursively."""

    def __init__(self, plus: NicholsTables, minus: NicholsTables):
        self.plus = plus
        self.minus = minus
        self.t = plus.t
        self._cache = {}

    def matrix(self, lam: Weight) -> list:
        lam = tuple(lam)
        hit = self._cache.get(lam)
        if hit is not None:
            return hit
        fld = self.t.field
        P = self.plus.data(lam).pivots
        Q = self.minus.data(lam).pivots
        if not any(lam):
            mat = [[fld.one]]
        else:
            l = self.t.rank
            mat = []
            for pk in range(len(P)):
                row = []
                for q in Q:
                    j = q[0]
                    lower = W.sub(lam, W.unit(l, j))
                    sub = self.matrix(lower)
                    qk = self.minus.data(lower).index[q[1:]]
                    r = self.plus.data(lam).deriv[pk].get(j, {})
                    val = fld.zero
                    for k, c in r.items():
                        val = val + c * sub[k][qk]
                    row.append(val)
                mat.append(row)
        self._cache[lam] = mat
        return mat


def nichols_dim(lam: Weight, t: BicharTable) -> int:
    """dim U+_lam as the rank of the full word Gram matrix."""
    return gram_block(lam, t).rank()


def nichols_basis(lam: Weight, t: BicharTable) -> list:
    return NicholsTables(t).basis(tuple(lam))
